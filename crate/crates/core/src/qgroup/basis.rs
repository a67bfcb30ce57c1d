use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{Echelon, SparseRow};
use crate::rootdata::RootVec;
use crate::scalars::Scalar;

use super::element::{Side, Word};
use super::presentation::Relator;

/// Basis of one graded piece `U^{±ν}` modulo the Serre ideal.
///
/// Columns are all words of content `ν` in decreasing lexicographic order,
/// so row reduction rewrites larger words in terms of smaller ones. The words
/// that are not pivots of the ideal slice are the representatives.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub side: Side,
    pub nu: RootVec,
    words: Vec<Word>,
    index: BTreeMap<Word, usize>,
    ideal: Echelon,
    reps: Vec<Word>,
    rep_index: BTreeMap<Word, usize>,
}

/// All distinct words with the given letter multiplicities.
pub fn words_of_content(nu: &[i32]) -> Vec<Word> {
    fn rec(left: &mut [i32], cur: &mut Word, out: &mut Vec<Word>) {
        if left.iter().all(|x| *x == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as u8);
                rec(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut nu.to_vec(), &mut Word::new(), &mut out);
    out
}

impl GradedBasis {
    /// Builds the piece of degree `nu` from the already built pieces of
    /// degree `nu − α_i` (supplied by `lower`) and the relators.
    pub fn build(
        side: Side,
        nu: &[i32],
        relators: &[Relator],
        lower: impl Fn(usize) -> Option<alloc::rc::Rc<GradedBasis>>,
    ) -> Self {
        let mut words = words_of_content(nu);
        words.sort_unstable_by(|a, b| b.cmp(a));
        let index: BTreeMap<Word, usize> =
            words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let mut ideal = Echelon::new();
        for i in 0..nu.len() {
            let Some(low) = lower(i) else { continue };
            let letter = i as u8;
            for row in low.ideal_rows() {
                let mut left = SparseRow::new();
                let mut right = SparseRow::new();
                for (c, x) in row {
                    let w = &low.words[*c];
                    let mut lw = Word::with_capacity(w.len() + 1);
                    lw.push(letter);
                    lw.extend_from_slice(w);
                    let mut rw = w.clone();
                    rw.push(letter);
                    left.insert(index[&lw], x.clone());
                    right.insert(index[&rw], x.clone());
                }
                ideal.insert(left);
                ideal.insert(right);
            }
        }
        for (deg, terms) in relators {
            if deg.as_slice() == nu {
                let row: SparseRow = terms
                    .iter()
                    .map(|(w, c)| (index[w], c.clone()))
                    .collect();
                ideal.insert(row);
            }
        }
        let mut reps: Vec<Word> = (0..words.len())
            .filter(|c| !ideal.is_pivot(*c))
            .map(|c| words[c].clone())
            .collect();
        reps.sort_unstable();
        let rep_index = reps.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        GradedBasis {
            side,
            nu: nu.to_vec(),
            words,
            index,
            ideal,
            reps,
            rep_index,
        }
    }

    /// Rebuilds a piece from the reduced rows of its ideal slice, as
    /// returned by [`GradedBasis::ideal_export`]. Fails when a row does not
    /// fit the words of content `nu`.
    pub fn from_ideal(side: Side, nu: &[i32], rows: Vec<SparseRow>) -> Result<Self, Error> {
        if nu.iter().any(|x| *x < 0) {
            return Err(Error::NotInPositiveCone);
        }
        let mut words = words_of_content(nu);
        words.sort_unstable_by(|a, b| b.cmp(a));
        let index: BTreeMap<Word, usize> =
            words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let mut ideal = Echelon::new();
        for row in rows {
            if row.keys().any(|c| *c >= words.len()) {
                return Err(Error::IndexOutOfRange {
                    index: *row.keys().last().unwrap(),
                    rank: words.len(),
                });
            }
            ideal.insert(row);
        }
        let mut reps: Vec<Word> = (0..words.len())
            .filter(|c| !ideal.is_pivot(*c))
            .map(|c| words[c].clone())
            .collect();
        reps.sort_unstable();
        let rep_index = reps.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        Ok(GradedBasis {
            side,
            nu: nu.to_vec(),
            words,
            index,
            ideal,
            reps,
            rep_index,
        })
    }

    /// The reduced rows of the ideal slice, columns indexing [`GradedBasis::all_words`].
    pub fn ideal_export(&self) -> Vec<SparseRow> {
        self.ideal_rows().cloned().collect()
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Representative words, in increasing lexicographic order.
    pub fn reps(&self) -> &[Word] {
        &self.reps
    }

    pub fn rep_index(&self, w: &Word) -> Option<usize> {
        self.rep_index.get(w).copied()
    }

    /// Every word of this content.
    pub fn all_words(&self) -> &[Word] {
        &self.words
    }

    fn ideal_rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.ideal.pivots().map(|p| self.ideal.row(p).expect("pivot row"))
    }

    /// Dimension of the ideal slice.
    pub fn ideal_dim(&self) -> usize {
        self.ideal.rank()
    }

    /// Rewrites a word of this content as a combination of representatives.
    pub fn reduce(&self, w: &Word) -> Vec<(Word, Scalar)> {
        let c = self.index[w];
        match self.ideal.row(c) {
            None => alloc::vec![(w.clone(), Scalar::one())],
            Some(row) => row
                .iter()
                .filter(|(k, _)| **k != c)
                .map(|(k, x)| (self.words[*k].clone(), x.neg()))
                .collect(),
        }
    }
}
