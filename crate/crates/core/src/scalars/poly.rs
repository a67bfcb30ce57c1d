//! Dense polynomial arithmetic over `Z[u]` and `Z[u][v]`, used only for gcds.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{Exp, LaurentBi};

/// Dense univariate polynomial over the integers; index is the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly(pub Vec<BigInt>);

impl UPoly {
    fn trim(mut self) -> Self {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len() - 1
    }

    fn lc(&self) -> &BigInt {
        self.0.last().unwrap()
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn scale(&self, k: &BigInt) -> Self {
        UPoly(self.0.iter().map(|c| c * k).collect()).trim()
    }

    fn div_int(&self, k: &BigInt) -> Self {
        UPoly(self.0.iter().map(|c| c / k).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_default();
            let b = other.0.get(i).cloned().unwrap_or_default();
            out.push(a - b);
        }
        UPoly(out).trim()
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly(out).trim()
    }

    fn shift_mul(&self, k: usize, c: &BigInt) -> Self {
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.0.iter().map(|x| x * c));
        UPoly(out).trim()
    }

    /// Primitive part with positive leading coefficient.
    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_int(&c)
    }

    /// Exact division; `None` if `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.0.len() < d.0.len() {
            return None;
        }
        let mut rem = self.clone();
        let mut q = vec![BigInt::zero(); self.0.len() - d.0.len() + 1];
        while !rem.is_zero() && rem.0.len() >= d.0.len() {
            let k = rem.deg() - d.deg();
            let (c, r) = rem.lc().div_rem(d.lc());
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&d.shift_mul(k, &c));
            q[k] = c;
        }
        if rem.is_zero() {
            Some(UPoly(q).trim())
        } else {
            None
        }
    }

    fn prem_step(a: &Self, b: &Self) -> Self {
        // lc(b)^k * a reduced modulo b
        let mut r = a.clone();
        while !r.is_zero() && r.0.len() >= b.0.len() {
            let k = r.deg() - b.deg();
            let lr = r.lc().clone();
            r = r.scale(b.lc()).sub(&b.shift_mul(k, &lr));
        }
        r
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive_signed();
        }
        if b.is_zero() {
            return a.primitive_signed();
        }
        let c = a.content().gcd(&b.content());
        let (mut p, mut q) = (a.primitive(), b.primitive());
        if p.0.len() < q.0.len() {
            core::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            if q.0.len() == 1 {
                return UPoly(vec![c]);
            }
            let r = Self::prem_step(&p, &q);
            p = q;
            q = r.primitive();
        }
        p.scale(&c)
    }

    fn primitive_signed(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if self.lc().is_negative() {
            self.scale(&-BigInt::one())
        } else {
            self.clone()
        }
    }
}

/// Dense polynomial in `v` whose coefficients are dense polynomials in `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BiPoly(pub Vec<UPoly>);

impl BiPoly {
    fn trim(mut self) -> Self {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Converts a polynomial with non-negative exponents.
    pub fn from_laurent(p: &LaurentBi) -> Self {
        let (_, bmax) = p.max_exp();
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); bmax as usize + 1];
        for ((a, b), c) in p.terms() {
            debug_assert!(*a >= 0 && *b >= 0);
            let row = &mut rows[*b as usize];
            if row.len() <= *a as usize {
                row.resize(*a as usize + 1, BigInt::zero());
            }
            row[*a as usize] = c.clone();
        }
        BiPoly(rows.into_iter().map(|r| UPoly(r).trim()).collect()).trim()
    }

    pub fn to_laurent(&self) -> LaurentBi {
        let mut terms: Vec<(Exp, BigInt)> = Vec::new();
        for (b, row) in self.0.iter().enumerate() {
            for (a, c) in row.0.iter().enumerate() {
                if !c.is_zero() {
                    terms.push(((a as i32, b as i32), c.clone()));
                }
            }
        }
        LaurentBi::from_terms(terms)
    }

    fn content_v(&self) -> UPoly {
        let mut g = UPoly(Vec::new());
        for c in &self.0 {
            g = UPoly::gcd(&g, c);
            if g.0.len() == 1 && g.0[0].is_one() {
                break;
            }
        }
        g
    }

    fn div_coeffs(&self, d: &UPoly) -> Self {
        BiPoly(
            self.0
                .iter()
                .map(|c| c.div_exact(d).expect("content divides every coefficient"))
                .collect(),
        )
    }

    fn mul_coeffs(&self, d: &UPoly) -> Self {
        BiPoly(self.0.iter().map(|c| c.mul(d)).collect()).trim()
    }

    fn lc(&self) -> &UPoly {
        self.0.last().unwrap()
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let zero = UPoly(Vec::new());
            let a = self.0.get(i).unwrap_or(&zero);
            let b = other.0.get(i).unwrap_or(&zero);
            out.push(a.sub(b));
        }
        BiPoly(out).trim()
    }

    fn shift_mul(&self, k: usize, c: &UPoly) -> Self {
        let mut out = vec![UPoly(Vec::new()); k];
        out.extend(self.0.iter().map(|x| x.mul(c)));
        BiPoly(out).trim()
    }

    fn prem_step(a: &Self, b: &Self) -> Self {
        let mut r = a.clone();
        while !r.is_zero() && r.0.len() >= b.0.len() {
            let k = r.0.len() - b.0.len();
            let lr = r.lc().clone();
            r = r.mul_coeffs(b.lc()).sub(&b.shift_mul(k, &lr));
        }
        r
    }

    fn primitive(&self) -> Self {
        let c = self.content_v();
        let mut p = self.div_coeffs(&c);
        if p.lc().lc().is_negative() {
            p = p.mul_coeffs(&UPoly(vec![-BigInt::one()]));
        }
        p
    }

    /// Gcd in `Z[u, v]`, normalised so that the leading coefficient is positive.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let c = UPoly::gcd(&a.content_v(), &b.content_v());
        let (mut p, mut q) = (a.primitive(), b.primitive());
        if p.0.len() < q.0.len() {
            core::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            if q.0.len() == 1 {
                return BiPoly(vec![c]);
            }
            let r = Self::prem_step(&p, &q);
            p = q;
            if r.is_zero() {
                break;
            }
            q = r.primitive();
        }
        p.mul_coeffs(&c)
    }
}

/// Gcd of two polynomials given with non-negative exponents.
pub(crate) fn poly_gcd(a: &LaurentBi, b: &LaurentBi) -> LaurentBi {
    if let Some(c) = a.as_constant() {
        return LaurentBi::constant(c.gcd(&b.content()));
    }
    if let Some(c) = b.as_constant() {
        return LaurentBi::constant(c.gcd(&a.content()));
    }
    if a.is_monomial() {
        let c = a.terms()[0].1.gcd(&b.content());
        return LaurentBi::constant(c);
    }
    if b.is_monomial() {
        let c = b.terms()[0].1.gcd(&a.content());
        return LaurentBi::constant(c);
    }
    if a == b {
        let c = a.content();
        let mut g = a.div_int(&c);
        if g.leading_is_negative() {
            g = g.neg();
        }
        return g;
    }
    BiPoly::gcd(&BiPoly::from_laurent(a), &BiPoly::from_laurent(b)).to_laurent()
}
