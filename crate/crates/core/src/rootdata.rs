//! Root datum of type `B_n`: lattices, Weyl group, multiplicities.
//!
//! Weights are stored in doubled `ε`-coordinates so that spin weights stay
//! integral. Root-lattice vectors use coordinates over the simple roots.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_rational::Rational64;

use crate::error::Error;

/// Coefficients over the simple roots `α_1..α_n`.
pub type RootVec = Vec<i32>;

/// A weight in doubled `ε`-coordinates: the actual coordinate is `stored / 2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// From ordinary (undoubled) integer `ε`-coordinates.
    pub fn from_eps(c: &[i32]) -> Self {
        Weight(c.iter().map(|x| 2 * x).collect())
    }

    /// From integer coordinates over the simple roots.
    pub fn from_alpha(c: &[i32]) -> Self {
        Self::from_alpha_doubled(&c.iter().map(|x| 2 * x).collect::<Vec<_>>())
    }

    /// From doubled coordinates over the simple roots.
    pub fn from_alpha_doubled(c: &[i32]) -> Self {
        let mut prev = 0;
        Weight(
            c.iter()
                .map(|&x| {
                    let d = x - prev;
                    prev = x;
                    d
                })
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Doubled coordinates over the simple roots (always integral for weights).
    pub fn alpha_doubled(&self) -> Vec<i32> {
        let mut acc = 0;
        self.0
            .iter()
            .map(|x| {
                acc += x;
                acc
            })
            .collect()
    }

    /// Coordinates over the simple roots.
    pub fn alpha_coords(&self) -> Vec<Rational64> {
        self.alpha_doubled()
            .into_iter()
            .map(|x| Rational64::new(x as i64, 2))
            .collect()
    }

    /// Integral simple-root coordinates, if the weight lies in the root lattice.
    pub fn to_root(&self) -> Option<RootVec> {
        if self.0.iter().all(|x| x % 2 == 0) {
            Some(self.alpha_doubled().into_iter().map(|x| x / 2).collect())
        } else {
            None
        }
    }

    pub fn in_root_lattice(&self) -> bool {
        self.0.iter().all(|x| x % 2 == 0)
    }

    /// Member of the weight lattice: coordinates all integral or all half-odd.
    pub fn in_weight_lattice(&self) -> bool {
        self.0.iter().all(|x| x % 2 == 0) || self.0.iter().all(|x| x % 2 != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| *x == 0)
    }

    /// `λ_1 ≥ … ≥ λ_n ≥ 0`.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().map_or(true, |x| *x >= 0)
    }

    /// The dominant element of the Weyl orbit.
    pub fn dominant_conjugate(&self) -> Weight {
        let mut c: Vec<i32> = self.0.iter().map(|x| x.abs()).collect();
        c.sort_unstable_by(|a, b| b.cmp(a));
        Weight(c)
    }

    pub fn scale(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|x| k * x).collect())
    }

    /// Four times the inner product.
    pub fn inner4(&self, other: &Weight) -> i64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| *a as i64 * *b as i64)
            .sum()
    }

    pub fn inner(&self, other: &Weight) -> Result<Rational64, Error> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(Rational64::new(self.inner4(other), 4))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Signed permutation: sends `ε_k` to `signs[k] · ε_{perm[k]}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// The simple reflection for `α_i` (0-based).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        if i + 1 < n {
            w.perm.swap(i, i + 1);
        } else {
            w.signs[n - 1] = -1;
        }
        w
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let mut out = vec![0; w.rank()];
        for (k, x) in w.0.iter().enumerate() {
            out[self.perm[k]] = self.signs[k] as i32 * x;
        }
        Weight(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for k in 0..n {
            let j = other.perm[k];
            perm[k] = self.perm[j];
            signs[k] = other.signs[k] * self.signs[j];
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for k in 0..n {
            perm[self.perm[k]] = k;
            signs[self.perm[k]] = self.signs[k];
        }
        WeylElement { perm, signs }
    }
}

/// The root system `B_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemB {
    n: usize,
}

impl RootSystemB {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidRank);
        }
        Ok(RootSystemB { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    fn check(&self, w: &Weight) -> Result<(), Error> {
        if w.rank() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                found: w.rank(),
            });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<(), Error> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.n,
            });
        }
        Ok(())
    }

    /// `α_i` for 0-based `i`.
    pub fn simple_root(&self, i: usize) -> Weight {
        let mut e = vec![0; self.n];
        unit_root(&mut e, i);
        Weight(e)
    }

    /// `(α_i, α_i)`: 2 for long roots, 1 for the short simple root.
    pub fn root_length2(&self, i: usize) -> i32 {
        if i + 1 < self.n {
            2
        } else {
            1
        }
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        if i + 1 < self.n {
            Weight((0..self.n).map(|k| if k <= i { 2 } else { 0 }).collect())
        } else {
            Weight(vec![1; self.n])
        }
    }

    /// Weight with the given coordinates over the fundamental weights.
    pub fn from_fundamental(&self, c: &[i32]) -> Result<Weight, Error> {
        if c.len() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                found: c.len(),
            });
        }
        let mut w = Weight::zero(self.n);
        for (i, k) in c.iter().enumerate() {
            w = &w + &self.fundamental(i).scale(*k);
        }
        Ok(w)
    }

    /// `(λ, α_i^∨) = 2(λ, α_i)/(α_i, α_i)`.
    pub fn coroot_pair(&self, w: &Weight, i: usize) -> Result<Rational64, Error> {
        self.check(w)?;
        self.check_index(i)?;
        let a = self.simple_root(i);
        Ok(Rational64::new(
            2 * w.inner4(&a),
            4 * self.root_length2(i) as i64,
        ))
    }

    /// Integer coroot pairing (weights of the weight lattice).
    pub fn coroot_int(&self, w: &Weight, i: usize) -> i32 {
        let a = self.simple_root(i);
        (2 * w.inner4(&a) / (4 * self.root_length2(i) as i64)) as i32
    }

    pub fn rho(&self) -> Weight {
        Weight(
            (0..self.n)
                .map(|k| (2 * (self.n - k) - 1) as i32)
                .collect(),
        )
    }

    /// `σ_i(λ) = λ − (λ, α_i^∨) α_i`.
    pub fn reflect(&self, i: usize, w: &Weight) -> Result<Weight, Error> {
        self.check(w)?;
        self.check_index(i)?;
        Ok(WeylElement::simple(self.n, i).apply(w))
    }

    pub fn weyl_order(&self) -> usize {
        (1..=self.n).product::<usize>() << self.n
    }

    /// All elements of the Weyl group.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let mut out = Vec::with_capacity(self.weyl_order());
        let mut perm: Vec<usize> = (0..self.n).collect();
        permutations(&mut perm, 0, &mut |p| {
            for mask in 0..(1u32 << self.n) {
                let signs = (0..self.n)
                    .map(|k| if mask >> k & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(WeylElement {
                    perm: p.to_vec(),
                    signs,
                });
            }
        });
        out
    }

    /// Orbit closure under the simple reflections.
    pub fn weyl_orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([w.clone()]);
        seen.insert(w.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.n {
                let y = WeylElement::simple(self.n, i).apply(&x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Positive roots as weights.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut a = vec![0; n];
                a[i] = 2;
                a[j] = -2;
                out.push(Weight(a.clone()));
                a[j] = 2;
                out.push(Weight(a));
            }
            let mut a = vec![0; n];
            a[i] = 2;
            out.push(Weight(a));
        }
        out
    }

    /// `μ ≤ λ` in dominance order: `λ − μ ∈ Q⁺`.
    pub fn dominated_by(&self, mu: &Weight, lambda: &Weight) -> bool {
        match (lambda - mu).to_root() {
            Some(c) => c.iter().all(|x| *x >= 0),
            None => false,
        }
    }

    /// Weight multiplicities of the irreducible module via Freudenthal's formula.
    pub fn freudenthal_mults(&self, lambda: &Weight) -> Result<BTreeMap<Weight, u64>, Error> {
        self.check(lambda)?;
        if !lambda.is_dominant() || !lambda.in_weight_lattice() {
            return Err(Error::NotDominant);
        }
        // saturated weight set: everything below λ whose dominant conjugate is below λ
        let mut layers: Vec<Vec<Weight>> = vec![vec![lambda.clone()]];
        let mut seen = BTreeSet::from([lambda.clone()]);
        loop {
            let mut next = Vec::new();
            for w in layers.last().unwrap() {
                for i in 0..self.n {
                    let m = w - &self.simple_root(i);
                    if !seen.contains(&m) && self.dominated_by(&m.dominant_conjugate(), lambda) {
                        seen.insert(m.clone());
                        next.push(m);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }
        let rho = self.rho();
        let pos = self.positive_roots();
        let lr = lambda + &rho;
        let top = lr.inner4(&lr);
        let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
        mult.insert(lambda.clone(), 1);
        for layer in layers.iter().skip(1) {
            for mu in layer {
                let mr = mu + &rho;
                let denom = top - mr.inner4(&mr);
                let mut acc: i64 = 0;
                for a in &pos {
                    let mut k = 1;
                    loop {
                        let w = mu + &a.scale(k);
                        let Some(m) = mult.get(&w) else { break };
                        acc += 2 * (*m as i64) * w.inner4(a);
                        k += 1;
                    }
                }
                debug_assert!(denom > 0 && acc % denom == 0);
                let m = acc / denom;
                if m > 0 {
                    mult.insert(mu.clone(), m as u64);
                }
            }
        }
        Ok(mult)
    }

    /// Weyl dimension formula.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64, Error> {
        self.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant);
        }
        let rho = self.rho();
        let lr = lambda + &rho;
        let mut q = Rational64::from_integer(1);
        for a in self.positive_roots() {
            q *= Rational64::new(lr.inner4(&a), rho.inner4(&a));
        }
        Ok(*q.numer() as u64)
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots_alpha(&self) -> Vec<RootVec> {
        self.positive_roots()
            .iter()
            .map(|w| w.to_root().expect("roots are in the root lattice"))
            .collect()
    }

    /// Number of ways to write `nu` as an unordered sum of positive roots.
    pub fn kostant_count(&self, nu: &[i32]) -> u64 {
        let roots = self.positive_roots_alpha();
        let mut memo = BTreeMap::new();
        kostant_rec(&roots, 0, nu.to_vec(), &mut memo)
    }
}

fn unit_root(e: &mut [i32], i: usize) {
    let n = e.len();
    if i + 1 < n {
        e[i] = 2;
        e[i + 1] = -2;
    } else {
        e[n - 1] = 2;
    }
}

fn permutations(p: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for j in k..p.len() {
        p.swap(k, j);
        permutations(p, k + 1, f);
        p.swap(k, j);
    }
}

fn kostant_rec(
    roots: &[RootVec],
    start: usize,
    nu: Vec<i32>,
    memo: &mut BTreeMap<(usize, Vec<i32>), u64>,
) -> u64 {
    if nu.iter().all(|x| *x == 0) {
        return 1;
    }
    if start == roots.len() {
        return 0;
    }
    if let Some(v) = memo.get(&(start, nu.clone())) {
        return *v;
    }
    let mut total = kostant_rec(roots, start + 1, nu.clone(), memo);
    let mut rest = nu.clone();
    loop {
        for (x, a) in rest.iter_mut().zip(&roots[start]) {
            *x -= a;
        }
        if rest.iter().any(|x| *x < 0) {
            break;
        }
        total += kostant_rec(roots, start + 1, rest.clone(), memo);
    }
    memo.insert((start, nu), total);
    total
}
