use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::rootdata::{RootSystemB, RootVec, Weight};
use crate::scalars::{Exp, Scalar};

use super::element::{Side, Toral, Word};

/// A relator: its degree and the linear combination of words that vanishes.
pub type Relator = (RootVec, Vec<(Word, Scalar)>);

/// Rank-dependent structure constants of the presentation.
#[derive(Clone, Debug)]
pub struct Presentation {
    n: usize,
    roots: RootSystemB,
    /// `(r, s)` exponents of `⟨ω'_i, ω_j⟩`.
    table: Vec<Vec<(i32, i32)>>,
}

impl Presentation {
    pub fn new(n: usize) -> Result<Self, Error> {
        let roots = RootSystemB::new(n)?;
        // (ε_k, α_i) from the doubled coordinates of α_i
        let eps = |k: usize, i: usize| roots.simple_root(i).0[k] / 2;
        let mut table = vec![vec![(0, 0); n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = if j + 1 < n {
                    (2 * eps(j, i), 2 * eps(j + 1, i))
                } else if i + 1 < n {
                    (2 * eps(n - 1, i), 0)
                } else {
                    (1, -1)
                };
            }
        }
        Ok(Presentation { n, roots, table })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &RootSystemB {
        &self.roots
    }

    /// `r_i = r^{(α_i, α_i)}`.
    pub fn r_i(&self, i: usize) -> Scalar {
        Scalar::rs(self.roots.root_length2(i), 0)
    }

    pub fn s_i(&self, i: usize) -> Scalar {
        Scalar::rs(0, self.roots.root_length2(i))
    }

    /// `(u, v)` exponents of `⟨ω'_η, ω_φ⟩` for doubled simple-root coordinates.
    pub fn pair_exp_doubled(&self, eta2: &[i32], phi2: &[i32]) -> Result<Exp, Error> {
        let (mut su, mut sv) = (0i64, 0i64);
        for (i, a) in eta2.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in phi2.iter().enumerate() {
                let (x, y) = self.table[i][j];
                let k = *a as i64 * *b as i64;
                su += k * x as i64;
                sv += k * y as i64;
            }
        }
        if su % 2 != 0 || sv % 2 != 0 {
            return Err(Error::NonIntegralSecondArgument);
        }
        Ok(((su / 2) as i32, (sv / 2) as i32))
    }

    /// `(u, v)` exponents of `⟨ω'_η, ω_φ⟩` for integral arguments.
    pub fn pair_exp(&self, eta: &[i32], phi: &[i32]) -> Exp {
        let (mut a, mut b) = (0i32, 0i32);
        for (i, x) in eta.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in phi.iter().enumerate() {
                let (p, q) = self.table[i][j];
                a += x * y * p;
                b += x * y * q;
            }
        }
        (2 * a, 2 * b)
    }

    /// `⟨ω'_η, ω_φ⟩` for root-lattice arguments.
    pub fn gpair(&self, eta: &[i32], phi: &[i32]) -> Scalar {
        let (a, b) = self.pair_exp(eta, phi);
        Scalar::uv(a, b)
    }

    /// `⟨ω'_η, ω_φ⟩` with `η` any weight and `φ` in the root lattice.
    pub fn gpair_weight(&self, eta: &Weight, phi: &Weight) -> Result<Scalar, Error> {
        if !phi.in_root_lattice() {
            return Err(Error::NonIntegralSecondArgument);
        }
        let (a, b) = self.pair_exp_doubled(&eta.alpha_doubled(), &phi.alpha_doubled())?;
        Ok(Scalar::uv(a, b))
    }

    /// Exponent of the scalar `c` with `t X t⁻¹ = c X` for `X ∈ U^{+ν}`.
    /// For `Y ∈ U^{−ν}` the scalar is `c⁻¹`.
    pub fn conj_exp(&self, t: &Toral, nu: &[i32]) -> Exp {
        let a = self.pair_exp(nu, &t.phi);
        let b = self.pair_exp(&t.eta, nu);
        (a.0 - b.0, a.1 - b.1)
    }

    /// `[m]_i = (r_i^m − s_i^m)/(r_i − s_i)`.
    pub fn qint(&self, m: u32, i: usize) -> Scalar {
        let l = self.roots.root_length2(i);
        let mut acc = Scalar::zero();
        for k in 0..m as i32 {
            acc = acc + Scalar::rs(l * (m as i32 - 1 - k), l * k);
        }
        acc
    }

    /// Serre relators for the given half, as combinations of words.
    pub fn relators(&self, side: Side) -> Vec<Relator> {
        let n = self.n;
        let mut out: Vec<Relator> = Vec::new();
        let mut push = |terms: Vec<(Word, Scalar)>| {
            let deg = super::element::content(n, &terms[0].0);
            let terms = match side {
                Side::E => terms,
                // the F relators are the E relators read backwards
                Side::F => terms
                    .into_iter()
                    .map(|(mut w, c)| {
                        w.reverse();
                        (w, c)
                    })
                    .collect(),
            };
            out.push((deg, terms));
        };
        let one = Scalar::one;
        for i in 0..n {
            for j in i + 2..n {
                let (a, b) = (i as u8, j as u8);
                push(vec![(vec![a, b], one()), (vec![b, a], -one())]);
            }
        }
        for i in 0..n.saturating_sub(1) {
            let (a, b) = (i as u8, i as u8 + 1);
            let (r, s) = (self.r_i(i), self.s_i(i));
            push(vec![
                (vec![a, a, b], one()),
                (vec![a, b, a], -(&r + &s)),
                (vec![b, a, a], &r * &s),
            ]);
        }
        for j in 0..n.saturating_sub(2) {
            let (a, b) = (j as u8 + 1, j as u8);
            let ri = self.r_i(j + 1).inv().expect("monomial");
            let si = self.s_i(j + 1).inv().expect("monomial");
            push(vec![
                (vec![a, a, b], one()),
                (vec![a, b, a], -(&ri + &si)),
                (vec![b, a, a], &ri * &si),
            ]);
        }
        if n >= 2 {
            let (a, b) = (n as u8 - 1, n as u8 - 2);
            let x = Scalar::rs(-2, 0) + Scalar::rs(-1, -1) + Scalar::rs(0, -2);
            push(vec![
                (vec![a, a, a, b], one()),
                (vec![a, a, b, a], -x.clone()),
                (vec![a, b, a, a], Scalar::rs(-1, -1) * &x),
                (vec![b, a, a, a], -Scalar::rs(-3, -3)),
            ]);
        }
        out
    }
}
