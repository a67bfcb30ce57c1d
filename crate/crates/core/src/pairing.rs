//! The skew-dual pairing between the two Borel halves, graded Gram matrices
//! and dual bases, and the invariant (Rosso) form on the whole algebra.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::Matrix;
use crate::qgroup::{content, Element, QuantumGroup, Side, Term, Toral, Word};
use crate::rootdata::{RootVec, Weight};
use crate::scalars::Scalar;

/// Gram matrix of one graded piece: rows are the `U^{−ν}` representatives,
/// columns the `U^{+ν}` representatives.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub nu: RootVec,
    pub rows: Vec<Word>,
    pub cols: Vec<Word>,
    pub matrix: Matrix,
}

/// A basis `u_j` of `U^{+ν}` and the basis `v_i` of `U^{−ν}` with
/// `⟨v_i, u_j⟩ = δ_ij`.
#[derive(Clone, Debug)]
pub struct DualBasisPair {
    pub nu: RootVec,
    pub upper: Vec<Word>,
    pub lower: Vec<Element>,
}

/// `(rs⁻¹)^{2(ρ,ν)}`, the factor by which `S²` scales `U^{±ν}`.
pub fn square_antipode_factor(q: &QuantumGroup, nu: &[i32]) -> Scalar {
    let roots = q.presentation().roots();
    // inner4 is four times the form; 2(ρ,ν) = inner4 / 2
    let k = roots.rho().inner4(&Weight::from_alpha(nu)) / 2;
    Scalar::rs(k as i32, -(k as i32))
}

impl QuantumGroup {
    /// Pairing of an `f`-word with an `e`-word, peeling the last `f` letter.
    pub fn pair_words(&self, y: &[u8], x: &[u8]) -> Scalar {
        if y.len() != x.len() {
            return Scalar::zero();
        }
        if y.is_empty() {
            return Scalar::one();
        }
        let n = self.rank();
        if content(n, y) != content(n, x) {
            return Scalar::zero();
        }
        let key = (y.to_vec(), x.to_vec());
        if let Some(v) = self.pair_cache.borrow().get(&key) {
            return v.clone();
        }
        let i = *y.last().unwrap();
        let head = &y[..y.len() - 1];
        let mut alpha = vec![0; n];
        alpha[i as usize] = 1;
        let mut acc = Scalar::zero();
        for p in 0..x.len() {
            if x[p] != i {
                continue;
            }
            let mut rest = x[..p].to_vec();
            rest.extend_from_slice(&x[p + 1..]);
            let inner = self.pair_words(head, &rest);
            if inner.is_zero() {
                continue;
            }
            let after = content(n, &x[p + 1..]);
            acc = acc + self.presentation().gpair(&after, &alpha) * inner;
        }
        // ⟨f_i, e_i⟩ = 1/(s_i − r_i)
        let v = -(acc * self.inv_diff(i as usize));
        self.pair_cache.borrow_mut().insert(key, v.clone());
        v
    }

    /// `⟨y, x⟩` for `y` in the lower Borel part and `x` in the upper one.
    pub fn skew_pair(&self, y: &Element, x: &Element) -> Result<Scalar, Error> {
        let n = self.rank();
        let mut acc = Scalar::zero();
        for (a, ca) in y.iter() {
            if !a.e.is_empty() || a.t.phi.iter().any(|k| *k != 0) {
                return Err(Error::WrongSide);
            }
            for (b, cb) in x.iter() {
                if !b.f.is_empty() || b.t.eta.iter().any(|k| *k != 0) {
                    return Err(Error::WrongSide);
                }
                let w = self.pair_words(&a.f, &b.e);
                if w.is_zero() {
                    continue;
                }
                // ⟨Y ω'_η, ω_φ X⟩ = ⟨ω'_η, ω_φ⟩ ⟨ω'_{ν_Y}, ω_φ⟩ ⟨Y, X⟩
                let mut eta = content(n, &a.f);
                for (k, e) in eta.iter_mut().zip(&a.t.eta) {
                    *k += e;
                }
                let tor = self.presentation().gpair(&eta, &b.t.phi);
                acc = acc + tor * w * ca * cb;
            }
        }
        Ok(acc)
    }

    fn check_content(&self, nu: &[i32]) -> Result<(), Error> {
        self.basis(Side::E, nu).map(|_| ())
    }

    pub fn gram(&self, nu: &[i32]) -> Result<GramMatrix, Error> {
        self.check_content(nu)?;
        let rows = self.basis(Side::F, nu)?.reps().to_vec();
        let cols = self.basis(Side::E, nu)?.reps().to_vec();
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, y) in rows.iter().enumerate() {
            for (j, x) in cols.iter().enumerate() {
                m.set(i, j, self.pair_words(y, x));
            }
        }
        Ok(GramMatrix {
            nu: nu.to_vec(),
            rows,
            cols,
            matrix: m,
        })
    }

    pub fn dual_basis(&self, nu: &[i32]) -> Result<DualBasisPair, Error> {
        let g = self.gram(nu)?;
        // v_i = Σ_k A_ik y_k with A G = 1
        let a = g.matrix.inverse()?;
        let n = self.rank();
        let lower = (0..g.cols.len())
            .map(|i| {
                let mut v = Element::zero();
                for (k, y) in g.rows.iter().enumerate() {
                    let t = Term {
                        f: y.clone(),
                        t: Toral::identity(n),
                        e: Vec::new(),
                    };
                    v.add_term(t, a.get(i, k).clone());
                }
                v
            })
            .collect();
        Ok(DualBasisPair {
            nu: nu.to_vec(),
            upper: g.cols,
            lower,
        })
    }

    /// The invariant form on normal-form monomials.
    fn rosso_terms(&self, x: &Term, y: &Term, twisted: bool) -> Scalar {
        let n = self.rank();
        let p = self.presentation();
        let a = content(n, &x.f);
        let theta = content(n, &y.f);
        let mixed = self.pair_words(&y.f, &x.e);
        if mixed.is_zero() {
            return Scalar::zero();
        }
        let square = self.pair_words(&x.f, &y.e);
        if square.is_zero() {
            return Scalar::zero();
        }
        let mut v = p.gpair(&y.t.eta, &x.t.phi) * p.gpair(&x.t.eta, &y.t.phi);
        if twisted {
            v = v * p.gpair(&theta, &x.t.phi) * p.gpair(&a, &y.t.phi);
        }
        v * mixed * square * square_antipode_factor(self, &a)
    }

    fn rosso_with(&self, x: &Element, y: &Element, twisted: bool) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let v = self.rosso_terms(a, b, twisted);
                if !v.is_zero() {
                    acc = acc + v * ca * cb;
                }
            }
        }
        acc
    }

    /// The ad-invariant form `⟨x, y⟩_U`.
    ///
    /// For `x = F_a ω'_μ ω_ν E_β` and `y = F_θ ω'_σ ω_δ E_γ` the mixed factors
    /// carry the toral parts `⟨ω'_θ, ω_ν⟩⟨ω'_a, ω_δ⟩` picked up when the
    /// `F` parts are moved past the opposite toral parts.
    pub fn rosso(&self, x: &Element, y: &Element) -> Scalar {
        self.rosso_with(x, y, true)
    }

    /// Whether `⟨ad(a)b, c⟩_U = ⟨b, ad(S(a))c⟩_U` holds exactly.
    pub fn check_ad_invariance(&self, a: &Element, b: &Element, c: &Element) -> bool {
        let lhs = self.rosso(&self.ad(a, b), c);
        let rhs = self.rosso(b, &self.ad(&self.antipode(a), c));
        lhs == rhs
    }
}

/// `χ_{η,φ}(η₁, φ₁) = ⟨ω'_η, ω_{φ₁}⟩⟨ω'_{η₁}, ω_φ⟩`.
pub fn chi(q: &QuantumGroup, eta: &[i32], phi: &[i32], eta1: &[i32], phi1: &[i32]) -> Scalar {
    let p = q.presentation();
    p.gpair(eta, phi1) * p.gpair(eta1, phi)
}
