use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rootdata::RootVec;
use crate::scalars::Scalar;

/// Letters are 0-based generator indices.
pub type Word = Vec<u8>;

/// Which triangular half a word lives in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Side {
    /// `U⁺`, generated by the `e_i`.
    E,
    /// `U⁻`, generated by the `f_i`.
    F,
}

/// The group-like monomial `ω'_η ω_φ`, exponents over the simple roots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Toral {
    pub eta: RootVec,
    pub phi: RootVec,
}

impl Toral {
    pub fn identity(n: usize) -> Self {
        Toral {
            eta: vec![0; n],
            phi: vec![0; n],
        }
    }

    pub fn new(eta: RootVec, phi: RootVec) -> Self {
        Toral { eta, phi }
    }

    /// `ω_i`.
    pub fn omega(n: usize, i: usize) -> Self {
        let mut t = Self::identity(n);
        t.phi[i] = 1;
        t
    }

    /// `ω'_i`.
    pub fn omega_prime(n: usize, i: usize) -> Self {
        let mut t = Self::identity(n);
        t.eta[i] = 1;
        t
    }

    pub fn is_identity(&self) -> bool {
        self.eta.iter().chain(&self.phi).all(|x| *x == 0)
    }

    pub fn mul(&self, other: &Toral) -> Toral {
        Toral {
            eta: self.eta.iter().zip(&other.eta).map(|(a, b)| a + b).collect(),
            phi: self.phi.iter().zip(&other.phi).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> Toral {
        Toral {
            eta: self.eta.iter().map(|a| -a).collect(),
            phi: self.phi.iter().map(|a| -a).collect(),
        }
    }

    /// Balanced monomials `ω'_η ω_{−η}`.
    pub fn is_balanced(&self) -> bool {
        self.eta.iter().zip(&self.phi).all(|(a, b)| *a == -*b)
    }
}

/// A normal-form monomial `F · ω'_η ω_φ · E`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Term {
    pub f: Word,
    pub t: Toral,
    pub e: Word,
}

impl Term {
    pub fn toral(t: Toral) -> Self {
        Term {
            f: Word::new(),
            t,
            e: Word::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.t.eta.len()
    }
}

/// Content `Σ α_letter` of a word.
pub fn content(n: usize, w: &[u8]) -> RootVec {
    let mut c = vec![0; n];
    for &x in w {
        c[x as usize] += 1;
    }
    c
}

/// Finite linear combination of normal-form monomials.
///
/// Words are expected to be graded-basis representatives; the
/// [`QuantumGroup`](super::QuantumGroup) constructors guarantee this.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Term, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(n: usize) -> Self {
        Self::from_term(Term::toral(Toral::identity(n)), Scalar::one())
    }

    pub fn from_term(t: Term, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(t, c);
        e
    }

    pub fn toral(t: Toral) -> Self {
        Self::from_term(Term::toral(t), Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        Self::from_term(Term::toral(Toral::identity(n)), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Term, &Scalar)> {
        self.terms.iter()
    }

    pub fn terms(&self) -> &BTreeMap<Term, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, t: &Term) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, t: Term, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&t) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&t);
                }
            }
            None => {
                self.terms.insert(t, c);
            }
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, k: &Scalar, other: &Element) {
        if k.is_zero() {
            return;
        }
        for (t, c) in &other.terms {
            self.add_term(t.clone(), k * c);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), other);
        out
    }

    pub fn scale(&self, k: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(k, self);
        out
    }

    /// Keeps only the terms without `E` or `F` letters.
    pub fn toral_part(&self) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.f.is_empty() && t.e.is_empty())
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }
}

impl FromIterator<(Term, Scalar)> for Element {
    fn from_iter<I: IntoIterator<Item = (Term, Scalar)>>(it: I) -> Self {
        let mut e = Element::zero();
        for (t, c) in it {
            e.add_term(t, c);
        }
        e
    }
}

fn fmt_list(v: impl IntoIterator<Item = i64>) -> String {
    let parts: Vec<String> = v.into_iter().map(|x| format!("{}", x)).collect();
    format!("[{}]", parts.join(","))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F{} W'{} W{} E{}",
            fmt_list(self.f.iter().map(|x| *x as i64 + 1)),
            fmt_list(self.t.eta.iter().map(|x| *x as i64)),
            fmt_list(self.t.phi.iter().map(|x| *x as i64)),
            fmt_list(self.e.iter().map(|x| *x as i64 + 1)),
        )
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({}) {}", c, t)?;
        }
        Ok(())
    }
}
