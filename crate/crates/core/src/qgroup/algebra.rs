use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::Error;
use crate::rootdata::RootVec;
use crate::scalars::{Exp, Scalar};

use super::basis::GradedBasis;
use super::element::{content, Element, Side, Term, Toral, Word};
use super::presentation::{Presentation, Relator};

type Reduced = Rc<Vec<(Word, Scalar)>>;

/// The algebra `U_{r,s}(so_{2n+1})` at a fixed rank, with its caches.
///
/// All products are returned in triangular normal form `F · ω'_η ω_φ · E`
/// with `F`, `E` graded-basis representatives.
pub struct QuantumGroup {
    pres: Presentation,
    relators_e: Vec<Relator>,
    relators_f: Vec<Relator>,
    inv_diff: Vec<Scalar>,
    bases: RefCell<BTreeMap<(Side, RootVec), Rc<GradedBasis>>>,
    reduced: RefCell<BTreeMap<(Side, Word), Reduced>>,
    ef: RefCell<BTreeMap<(Word, Word), Rc<Element>>>,
    pub(crate) pair_cache: RefCell<BTreeMap<(Word, Word), Scalar>>,
}

fn uv_inv(e: Exp) -> Scalar {
    Scalar::uv(-e.0, -e.1)
}

impl QuantumGroup {
    pub fn new(n: usize) -> Result<Self, Error> {
        let pres = Presentation::new(n)?;
        let inv_diff = (0..n)
            .map(|i| (pres.r_i(i) - pres.s_i(i)).inv().expect("r ≠ s"))
            .collect();
        Ok(QuantumGroup {
            relators_e: pres.relators(Side::E),
            relators_f: pres.relators(Side::F),
            pres,
            inv_diff,
            bases: RefCell::new(BTreeMap::new()),
            reduced: RefCell::new(BTreeMap::new()),
            ef: RefCell::new(BTreeMap::new()),
            pair_cache: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.pres.rank()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn relators(&self, side: Side) -> &[Relator] {
        match side {
            Side::E => &self.relators_e,
            Side::F => &self.relators_f,
        }
    }

    /// `1/(r_i − s_i)`.
    pub fn inv_diff(&self, i: usize) -> &Scalar {
        &self.inv_diff[i]
    }

    /// Graded basis of `U^{+ν}` (side `E`) or `U^{−ν}` (side `F`).
    pub fn basis(&self, side: Side, nu: &[i32]) -> Result<Rc<GradedBasis>, Error> {
        if nu.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: nu.len(),
            });
        }
        if nu.iter().any(|x| *x < 0) {
            return Err(Error::NotInPositiveCone);
        }
        Ok(self.basis_unchecked(side, nu))
    }

    fn basis_unchecked(&self, side: Side, nu: &[i32]) -> Rc<GradedBasis> {
        let key = (side, nu.to_vec());
        if let Some(b) = self.bases.borrow().get(&key) {
            return b.clone();
        }
        let b = Rc::new(GradedBasis::build(
            side,
            nu,
            self.relators(side),
            |i| {
                if nu[i] == 0 {
                    return None;
                }
                let mut lower = nu.to_vec();
                lower[i] -= 1;
                Some(self.basis_unchecked(side, &lower))
            },
        ));
        self.bases.borrow_mut().insert(key, b.clone());
        b
    }

    /// Installs a previously computed piece, e.g. one loaded from disk.
    pub fn preload_basis(&self, b: GradedBasis) -> Result<(), Error> {
        if b.nu.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: b.nu.len(),
            });
        }
        self.bases
            .borrow_mut()
            .insert((b.side, b.nu.clone()), Rc::new(b));
        Ok(())
    }

    /// Every graded piece built so far.
    pub fn built_bases(&self) -> Vec<Rc<GradedBasis>> {
        self.bases.borrow().values().cloned().collect()
    }

    /// Rewrites a word as a combination of representatives.
    pub fn reduce_word(&self, side: Side, w: &[u8]) -> Reduced {
        if w.len() <= 1 {
            return Rc::new(vec![(w.to_vec(), Scalar::one())]);
        }
        let key = (side, w.to_vec());
        if let Some(r) = self.reduced.borrow().get(&key) {
            return r.clone();
        }
        let b = self.basis_unchecked(side, &content(self.rank(), w));
        let r = Rc::new(b.reduce(&key.1));
        self.reduced.borrow_mut().insert(key, r.clone());
        r
    }

    // ---- generators

    pub fn e(&self, i: usize) -> Element {
        self.monomial(&[], Toral::identity(self.rank()), &[i as u8])
    }

    pub fn f(&self, i: usize) -> Element {
        self.monomial(&[i as u8], Toral::identity(self.rank()), &[])
    }

    pub fn omega(&self, i: usize) -> Element {
        Element::toral(Toral::omega(self.rank(), i))
    }

    pub fn omega_prime(&self, i: usize) -> Element {
        Element::toral(Toral::omega_prime(self.rank(), i))
    }

    pub fn toral(&self, eta: &[i32], phi: &[i32]) -> Element {
        Element::toral(Toral::new(eta.to_vec(), phi.to_vec()))
    }

    pub fn one(&self) -> Element {
        Element::one(self.rank())
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        Element::scalar(self.rank(), c)
    }

    /// The element `F · t · E` for arbitrary words, brought to normal form.
    pub fn monomial(&self, f: &[u8], t: Toral, e: &[u8]) -> Element {
        let fr = self.reduce_word(Side::F, f);
        let er = self.reduce_word(Side::E, e);
        let mut out = Element::zero();
        for (fw, a) in fr.iter() {
            for (ew, b) in er.iter() {
                out.add_term(
                    Term {
                        f: fw.clone(),
                        t: t.clone(),
                        e: ew.clone(),
                    },
                    a * b,
                );
            }
        }
        out
    }

    /// Product of a word in the `e_i` (on the left) with a word in the `f_j`.
    pub fn ef_product(&self, e: &[u8], f: &[u8]) -> Rc<Element> {
        let key = (e.to_vec(), f.to_vec());
        if let Some(r) = self.ef.borrow().get(&key) {
            return r.clone();
        }
        let n = self.rank();
        let res = if e.is_empty() || f.is_empty() {
            self.monomial(f, Toral::identity(n), e)
        } else {
            let i = e[0];
            let rest = self.ef_product(&e[1..], f);
            let mut acc = Element::zero();
            for (t, c) in rest.iter() {
                self.left_mul_e(i as usize, t, c, &mut acc);
            }
            acc
        };
        let res = Rc::new(res);
        self.ef.borrow_mut().insert(key, res.clone());
        res
    }

    /// `acc += c · e_i · (F t E)`.
    fn left_mul_e(&self, i: usize, term: &Term, c: &Scalar, acc: &mut Element) {
        let n = self.rank();
        // e_i passes F untouched, then picks up the toral commutation scalar
        let mut alpha = vec![0; n];
        alpha[i] = 1;
        let k = c * &uv_inv(self.pres.conj_exp(&term.t, &alpha));
        let mut ew = Vec::with_capacity(term.e.len() + 1);
        ew.push(i as u8);
        ew.extend_from_slice(&term.e);
        for (w, x) in self.reduce_word(Side::E, &ew).iter() {
            acc.add_term(
                Term {
                    f: term.f.clone(),
                    t: term.t.clone(),
                    e: w.clone(),
                },
                &k * x,
            );
        }
        // commutator contributions [e_i, f_i] = (ω_i − ω'_i)/(r_i − s_i)
        let om = Toral::omega(n, i);
        let omp = Toral::omega_prime(n, i);
        for p in 0..term.f.len() {
            if term.f[p] as usize != i {
                continue;
            }
            let after = content(n, &term.f[p + 1..]);
            let mut fw = term.f[..p].to_vec();
            fw.extend_from_slice(&term.f[p + 1..]);
            let base = c * &self.inv_diff[i];
            let k1 = &base * &uv_inv(self.pres.conj_exp(&om, &after));
            let k2 = -(&base * &uv_inv(self.pres.conj_exp(&omp, &after)));
            let t1 = om.mul(&term.t);
            let t2 = omp.mul(&term.t);
            for (w, x) in self.reduce_word(Side::F, &fw).iter() {
                acc.add_term(
                    Term {
                        f: w.clone(),
                        t: t1.clone(),
                        e: term.e.clone(),
                    },
                    &k1 * x,
                );
                acc.add_term(
                    Term {
                        f: w.clone(),
                        t: t2.clone(),
                        e: term.e.clone(),
                    },
                    &k2 * x,
                );
            }
        }
    }

    /// Product of two normal-form monomials.
    pub fn mul_terms(&self, a: &Term, b: &Term, coeff: &Scalar, acc: &mut Element) {
        let n = self.rank();
        let mid = self.ef_product(&a.e, &b.f);
        for (m, c) in mid.iter() {
            let x = self.pres.conj_exp(&a.t, &content(n, &m.f));
            let y = self.pres.conj_exp(&b.t, &content(n, &m.e));
            let k = &(coeff * c) * &Scalar::uv(-x.0 - y.0, -x.1 - y.1);
            let t = a.t.mul(&m.t).mul(&b.t);
            let mut fw = a.f.clone();
            fw.extend_from_slice(&m.f);
            let mut ew = m.e.clone();
            ew.extend_from_slice(&b.e);
            let fr = self.reduce_word(Side::F, &fw);
            let er = self.reduce_word(Side::E, &ew);
            for (fw, p) in fr.iter() {
                let kp = &k * p;
                for (ew, q) in er.iter() {
                    acc.add_term(
                        Term {
                            f: fw.clone(),
                            t: t.clone(),
                            e: ew.clone(),
                        },
                        &kp * q,
                    );
                }
            }
        }
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut acc = Element::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                self.mul_terms(a, b, &(ca * cb), &mut acc);
            }
        }
        acc
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a>(&self, xs: impl IntoIterator<Item = &'a Element>) -> Element {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Evaluates a linear combination of words in the free algebra on one side.
    pub fn word_combination(&self, side: Side, terms: &[(Word, Scalar)]) -> Element {
        let n = self.rank();
        let mut out = Element::zero();
        for (w, c) in terms {
            let m = match side {
                Side::E => self.monomial(&[], Toral::identity(n), w),
                Side::F => self.monomial(w, Toral::identity(n), &[]),
            };
            out.add_scaled(c, &m);
        }
        out
    }

    /// A word evaluated letter by letter through the product, without
    /// consulting the graded basis for the whole word at once.
    pub fn word_by_products(&self, side: Side, w: &[u8]) -> Element {
        let gens: Vec<Element> = w
            .iter()
            .map(|&i| match side {
                Side::E => self.e(i as usize),
                Side::F => self.f(i as usize),
            })
            .collect();
        self.product(gens.iter())
    }
}
