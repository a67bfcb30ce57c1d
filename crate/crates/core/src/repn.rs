//! Highest-weight modules as explicit matrices: truncated Verma modules,
//! irreducible quotients, the grading operator and trace functionals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{Echelon, Matrix, SparseRow};
use crate::qgroup::{content, Element, QuantumGroup, Side, Term, Toral, Word};
use crate::rootdata::{RootVec, Weight};
use crate::scalars::Scalar;

/// Highest weight `ϱ^{λ,μ} = ϱ^λ · ϱ^{0,μ}` of a Verma module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterPair {
    pub lambda: Weight,
    pub mu: Weight,
}

impl CharacterPair {
    pub fn new(lambda: Weight, mu: Weight) -> Self {
        CharacterPair { lambda, mu }
    }

    pub fn untwisted(lambda: Weight) -> Self {
        let n = lambda.rank();
        CharacterPair {
            lambda,
            mu: Weight::zero(n),
        }
    }
}

/// `⟨ω'_a, ω_b⟩` for weights, with half powers where needed.
pub fn pair_weights(q: &QuantumGroup, a: &Weight, b: &Weight) -> Result<Scalar, Error> {
    let (x, y) = q
        .presentation()
        .pair_exp_doubled(&a.alpha_doubled(), &b.alpha_doubled())?;
    Ok(Scalar::uv(x, y))
}

/// `ϱ^λ(ω'_η ω_φ) = ⟨ω'_λ, ω_φ⟩ / ⟨ω'_η, ω_λ⟩`.
pub fn char_lambda(q: &QuantumGroup, lambda: &Weight, t: &Toral) -> Scalar {
    let p = q.presentation();
    let phi = Weight::from_alpha(&t.phi);
    let eta = Weight::from_alpha(&t.eta);
    // one argument is always in the root lattice, so the exponents are integral
    let a = p
        .pair_exp_doubled(&lambda.alpha_doubled(), &phi.alpha_doubled())
        .expect("integral");
    let b = p
        .pair_exp_doubled(&eta.alpha_doubled(), &lambda.alpha_doubled())
        .expect("integral");
    Scalar::uv(a.0 - b.0, a.1 - b.1)
}

/// `ϱ^{0,μ}(ω'_η ω_φ) = (rs⁻¹)^{(η+φ, μ)}`.
pub fn char_twist(mu: &Weight, t: &Toral) -> Scalar {
    let sum: Vec<i32> = t.eta.iter().zip(&t.phi).map(|(a, b)| a + b).collect();
    // inner4 is four times the form, and (rs⁻¹)^x = u^{2x} v^{−2x}
    let k = Weight::from_alpha(&sum).inner4(mu);
    Scalar::uv((k / 2) as i32, -(k / 2) as i32)
}

/// `ϱ^{λ,μ}(t)`.
pub fn char_pair(q: &QuantumGroup, pair: &CharacterPair, t: &Toral) -> Scalar {
    char_lambda(q, &pair.lambda, t) * char_twist(&pair.mu, t)
}

/// `(rs⁻¹)^{−2(ρ,μ)}`.
pub fn theta_scalar(q: &QuantumGroup, mu: &Weight) -> Scalar {
    let k = q.presentation().roots().rho().inner4(mu) as i32;
    Scalar::uv(-k, k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// Verma module cut off above the given height.
    Verma { depth: u32 },
    /// Irreducible quotient, realised inside the box below twice the highest weight.
    Irreducible,
}

/// One weight space: the Verma representatives of its content and, for
/// quotients, the kernel slice and the surviving words.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub content: RootVec,
    pub weight: Weight,
    pub words: Vec<Word>,
    offset: usize,
    verma_words: Vec<Word>,
    kernel: Echelon,
    /// Position of each surviving word among `verma_words`.
    kept: Vec<usize>,
}

/// A weight module with basis `y · v`, `y` running over `f`-word representatives.
#[derive(Clone, Debug)]
pub struct WeightModule {
    pub n: usize,
    pub pair: CharacterPair,
    pub kind: ModuleKind,
    spaces: Vec<WeightSpace>,
    index: BTreeMap<RootVec, usize>,
    dim: usize,
}

fn contents_up_to_height(n: usize, depth: u32) -> Vec<RootVec> {
    let mut out = vec![vec![0; n]];
    let mut frontier = out.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for v in &frontier {
            // extend only in the last nonzero coordinate or later to avoid repeats
            let start = v.iter().rposition(|x| *x != 0).unwrap_or(0);
            for i in start..n {
                let mut w = v.clone();
                w[i] += 1;
                next.push(w);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out
}

fn contents_in_box(bound: &[i32]) -> Vec<RootVec> {
    let mut out = vec![Vec::new()];
    for b in bound {
        let mut next = Vec::new();
        for v in &out {
            for k in 0..=*b {
                let mut w: Vec<i32> = v.clone();
                w.push(k);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

impl WeightModule {
    fn assemble(n: usize, pair: CharacterPair, kind: ModuleKind, mut spaces: Vec<WeightSpace>) -> Self {
        spaces.retain(|s| !s.words.is_empty());
        spaces.sort_by(|a, b| {
            let ha: i32 = a.content.iter().sum();
            let hb: i32 = b.content.iter().sum();
            (ha, &a.content).cmp(&(hb, &b.content))
        });
        let mut offset = 0;
        for s in spaces.iter_mut() {
            s.offset = offset;
            offset += s.words.len();
        }
        let index = spaces
            .iter()
            .enumerate()
            .map(|(k, s)| (s.content.clone(), k))
            .collect();
        WeightModule {
            n,
            pair,
            kind,
            spaces,
            index,
            dim: offset,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn spaces(&self) -> &[WeightSpace] {
        &self.spaces
    }

    /// Weight of every basis vector, in basis order.
    pub fn weights(&self) -> Vec<Weight> {
        let mut out = Vec::with_capacity(self.dim);
        for s in &self.spaces {
            for _ in &s.words {
                out.push(s.weight.clone());
            }
        }
        out
    }

    /// Basis labels in order, as `(content, word)`.
    pub fn labels(&self) -> Vec<(RootVec, Word)> {
        let mut out = Vec::with_capacity(self.dim);
        for s in &self.spaces {
            for w in &s.words {
                out.push((s.content.clone(), w.clone()));
            }
        }
        out
    }

    pub fn multiplicities(&self) -> BTreeMap<Weight, u64> {
        self.spaces
            .iter()
            .map(|s| (s.weight.clone(), s.words.len() as u64))
            .collect()
    }

    /// Index of the basis vector `y · v`, if `y` survives in this module.
    pub fn position(&self, y: &[u8]) -> Option<usize> {
        let s = &self.spaces[*self.index.get(&content(self.n, y))?];
        s.words.iter().position(|w| w == y).map(|k| s.offset + k)
    }

    /// The highest weight vector as a coordinate vector.
    pub fn highest_vector(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[0] = Scalar::one();
        v
    }

    /// Places a Verma-coordinate combination of words into this basis.
    /// Components outside the module are returned as `false`.
    fn place(&self, combo: &BTreeMap<Word, Scalar>, out: &mut [Scalar]) -> bool {
        let mut by_space: BTreeMap<usize, SparseRow> = BTreeMap::new();
        let mut inside = true;
        for (w, c) in combo {
            let nu = content(self.n, w);
            let Some(&k) = self.index.get(&nu) else {
                // outside the box of a quotient everything lies in the kernel
                if matches!(self.kind, ModuleKind::Verma { .. }) {
                    inside = false;
                }
                continue;
            };
            let s = &self.spaces[k];
            let col = s.verma_words.iter().position(|x| x == w).expect("representative");
            by_space.entry(k).or_default().insert(col, c.clone());
        }
        for (k, row) in by_space {
            let s = &self.spaces[k];
            let red = s.kernel.reduce(&row);
            for (col, c) in red {
                let j = s.kept.iter().position(|x| *x == col).expect("non-pivot");
                out[s.offset + j] = &out[s.offset + j] + &c;
            }
        }
        inside
    }
}

fn space_for(q: &QuantumGroup, lambda: &Weight, nu: &[i32]) -> WeightSpace {
    let words = q.basis(Side::F, nu).expect("content").reps().to_vec();
    let weight = lambda - &Weight::from_alpha(nu);
    WeightSpace {
        content: nu.to_vec(),
        weight,
        kept: (0..words.len()).collect(),
        words: words.clone(),
        offset: 0,
        verma_words: words,
        kernel: Echelon::new(),
    }
}

/// The Verma module `M(ϱ^{λ,μ})`, keeping contents up to height `depth`.
pub fn verma(q: &QuantumGroup, pair: CharacterPair, depth: u32) -> Result<WeightModule, Error> {
    let n = q.rank();
    if pair.lambda.rank() != n || pair.mu.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: pair.lambda.rank(),
        });
    }
    let spaces = contents_up_to_height(n, depth)
        .iter()
        .map(|nu| space_for(q, &pair.lambda, nu))
        .collect();
    Ok(WeightModule::assemble(n, pair, ModuleKind::Verma { depth }, spaces))
}

/// The irreducible module `L(λ)`: the Verma module modulo the submodule
/// generated by `f_i^{(λ,α_i^∨)+1} v`, computed inside the box of contents
/// `ν ≤ 2λ`, which holds every weight of `L(λ)`.
pub fn irreducible(q: &QuantumGroup, lambda: &Weight) -> Result<WeightModule, Error> {
    let n = q.rank();
    if lambda.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: lambda.rank(),
        });
    }
    let roots = q.presentation().roots();
    if !lambda.in_weight_lattice() || !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    let bound = lambda.scale(2).to_root().ok_or(Error::NotInRootLattice)?;
    let marks: Vec<i32> = (0..n).map(|i| roots.coroot_int(lambda, i)).collect();
    let mut spaces = Vec::new();
    for nu in contents_in_box(&bound) {
        let mut s = space_for(q, lambda, &nu);
        let col: BTreeMap<&Word, usize> =
            s.verma_words.iter().enumerate().map(|(k, w)| (w, k)).collect();
        for i in 0..n {
            let m = marks[i] + 1;
            if nu[i] < m {
                continue;
            }
            let mut low = nu.clone();
            low[i] -= m;
            for y in q.basis(Side::F, &low)?.reps() {
                let mut w = y.clone();
                w.extend(core::iter::repeat(i as u8).take(m as usize));
                let row: SparseRow = q
                    .reduce_word(Side::F, &w)
                    .iter()
                    .map(|(x, c)| (col[x], c.clone()))
                    .collect();
                s.kernel.insert(row);
            }
        }
        s.kept = (0..s.verma_words.len()).filter(|c| !s.kernel.is_pivot(*c)).collect();
        s.words = s.kept.iter().map(|c| s.verma_words[*c].clone()).collect();
        spaces.push(s);
    }
    Ok(WeightModule::assemble(
        n,
        CharacterPair::untwisted(lambda.clone()),
        ModuleKind::Irreducible,
        spaces,
    ))
}

/// `(F t E) · (y v)` in the Verma module, as a combination of representatives.
fn term_on_vector(
    q: &QuantumGroup,
    m: &WeightModule,
    term: &Term,
    y: &Word,
    out: &mut BTreeMap<Word, Scalar>,
    c: &Scalar,
) {
    let n = q.rank();
    let mut add = |w: &Word, x: Scalar| {
        if x.is_zero() {
            return;
        }
        let e = out.entry(w.clone()).or_insert_with(Scalar::zero);
        *e = &*e + &x;
    };
    let mut push_front = |fw: &[u8], x: Scalar| {
        let wt = &m.pair.lambda - &Weight::from_alpha(&content(n, fw));
        let k = x * char_lambda(q, &wt, &term.t) * char_twist(&m.pair.mu, &term.t);
        let mut w = term.f.clone();
        w.extend_from_slice(fw);
        if !m.index.contains_key(&content(n, &w)) {
            // zero in a quotient; left unreduced so `place` can flag a Verma overflow
            if matches!(m.kind, ModuleKind::Verma { .. }) {
                add(&w, k);
            }
            return;
        }
        for (r, a) in q.reduce_word(Side::F, &w).iter() {
            add(r, &k * a);
        }
    };
    if term.e.is_empty() {
        push_front(y, c.clone());
        return;
    }
    // E · y v: only the E-free part of the normal form survives on v
    for (t, x) in q.ef_product(&term.e, y).iter() {
        if !t.e.is_empty() {
            continue;
        }
        let k = c * x * char_pair(q, &m.pair, &t.t);
        push_front(&t.f, k);
    }
}

fn act_inner(q: &QuantumGroup, x: &Element, m: &WeightModule, strict: bool) -> Result<Matrix, Error> {
    if x.iter().any(|(t, _)| t.rank() != m.n) || q.rank() != m.n {
        return Err(Error::RankMismatch {
            expected: m.n,
            found: q.rank(),
        });
    }
    let mut mat = Matrix::zeros(m.dim, m.dim);
    for s in &m.spaces {
        for (j, y) in s.words.iter().enumerate() {
            let mut combo = BTreeMap::new();
            for (t, c) in x.iter() {
                term_on_vector(q, m, t, y, &mut combo, c);
            }
            combo.retain(|_, v: &mut Scalar| !v.is_zero());
            let mut col = vec![Scalar::zero(); m.dim];
            let inside = m.place(&combo, &mut col);
            if strict && !inside {
                return Err(Error::TruncationOverflow);
            }
            for (i, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    mat.set(i, s.offset + j, v);
                }
            }
        }
    }
    Ok(mat)
}

/// `x · m` for a coordinate vector `m`, failing with `TruncationOverflow`
/// when the image leaves a truncated Verma module.
pub fn act_vector(q: &QuantumGroup, x: &Element, module: &WeightModule, m: &[Scalar]) -> Result<Vec<Scalar>, Error> {
    let mut combo = BTreeMap::new();
    for s in &module.spaces {
        for (j, y) in s.words.iter().enumerate() {
            let c = &m[s.offset + j];
            if c.is_zero() {
                continue;
            }
            for (t, a) in x.iter() {
                term_on_vector(q, module, t, y, &mut combo, &(a * c));
            }
        }
    }
    combo.retain(|_, v: &mut Scalar| !v.is_zero());
    let mut out = vec![Scalar::zero(); module.dim];
    if !module.place(&combo, &mut out) {
        return Err(Error::TruncationOverflow);
    }
    Ok(out)
}

/// Matrix of `x` on the module. On a truncated Verma module this fails with
/// `TruncationOverflow` when some image leaves the kept heights.
pub fn act(q: &QuantumGroup, x: &Element, m: &WeightModule) -> Result<Matrix, Error> {
    act_inner(q, x, m, true)
}

/// Like [`act`], silently dropping components above the truncation.
pub fn act_truncated(q: &QuantumGroup, x: &Element, m: &WeightModule) -> Result<Matrix, Error> {
    act_inner(q, x, m, false)
}

/// The diagonal operator scaling the `μ`-weight space by `(rs⁻¹)^{−2(ρ,μ)}`.
pub fn theta(q: &QuantumGroup, m: &WeightModule) -> Matrix {
    let mut out = Matrix::zeros(m.dim, m.dim);
    for (k, w) in m.weights().iter().enumerate() {
        out.set(k, k, theta_scalar(q, w));
    }
    out
}

pub fn trace(a: &Matrix) -> Scalar {
    let mut acc = Scalar::zero();
    for k in 0..a.rows.min(a.cols) {
        acc = acc + a.get(k, k);
    }
    acc
}

/// `f_λ(x) = tr_{L(λ)}(x Θ)`.
pub fn trace_fn(q: &QuantumGroup, lambda: &Weight, x: &Element) -> Result<Scalar, Error> {
    let l = irreducible(q, lambda)?;
    trace_on(q, &l, x)
}

/// `tr_M(x Θ)` on an already built module.
pub fn trace_on(q: &QuantumGroup, m: &WeightModule, x: &Element) -> Result<Scalar, Error> {
    let a = act(q, x, m)?;
    let th = theta(q, m);
    Ok(trace(&a.mul(&th)))
}

/// `C_{f,m}(x) = f(x · m)` for `f` the coordinate functional of basis vector
/// `f_index` and `m` a coordinate vector.
pub fn matrix_coeff(
    q: &QuantumGroup,
    module: &WeightModule,
    f_index: usize,
    m: &[Scalar],
    x: &Element,
) -> Result<Scalar, Error> {
    let a = act(q, x, module)?;
    let mut acc = Scalar::zero();
    for (j, v) in m.iter().enumerate() {
        if !v.is_zero() {
            acc = acc + a.get(f_index, j) * v;
        }
    }
    Ok(acc)
}

pub fn apply(a: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    (0..a.rows)
        .map(|i| {
            let mut acc = Scalar::zero();
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    let y = a.get(i, j);
                    if !y.is_zero() {
                        acc = acc + y * x;
                    }
                }
            }
            acc
        })
        .collect()
}

/// Checks `e_i f_i^{k+1} v = [k+1]_i f_i^k (r_i^{−k} ϱ(ω_i) − s_i^{−k} ϱ(ω'_i))/(r_i − s_i) v`
/// on the highest weight vector of `M(ϱ^{λ,μ})`.
pub fn straightening_holds(q: &QuantumGroup, pair: &CharacterPair, i: usize, k: u32) -> Result<bool, Error> {
    let n = q.rank();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    let m = verma(q, pair.clone(), k + 1)?;
    let p = q.presentation();
    let fk1 = q.monomial(&vec![i as u8; k as usize + 1], Toral::identity(n), &[]);
    let lhs_el = q.mul(&q.e(i), &fk1);
    let v = m.highest_vector();
    let lhs = act_vector(q, &lhs_el, &m, &v)?;
    let fk = q.monomial(&vec![i as u8; k as usize], Toral::identity(n), &[]);
    let base = act_vector(q, &fk, &m, &v)?;
    let kk = k as i64;
    let om = char_pair(q, pair, &Toral::omega(n, i));
    let omp = char_pair(q, pair, &Toral::omega_prime(n, i));
    let coeff = p.qint(k + 1, i)
        * (p.r_i(i).pow(-kk)? * om - p.s_i(i).pow(-kk)? * omp)
        * q.inv_diff(i);
    Ok(lhs
        .iter()
        .zip(&base)
        .all(|(a, b)| *a == &coeff * b))
}
