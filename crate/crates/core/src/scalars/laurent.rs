use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(a, b)` standing for `u^a v^b`, where `u = r^(1/2)` and `v = s^(1/2)`.
pub type Exp = (i32, i32);

/// Graded-lexicographic comparison: total degree first, then the `u` exponent.
#[inline]
pub fn grlex(x: &Exp, y: &Exp) -> Ordering {
    (x.0 + x.1, x.0).cmp(&(y.0 + y.1, y.0))
}

/// Laurent polynomial in `u, v` with integer coefficients.
///
/// Terms are kept sorted ascending in graded-lexicographic order and never
/// carry a zero coefficient, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentBi {
    terms: Vec<(Exp, BigInt)>,
}

impl LaurentBi {
    pub fn zero() -> Self {
        LaurentBi { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), (0, 0))
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: BigInt, e: Exp) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentBi {
                terms: alloc::vec![(e, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, BigInt)>>(it: I) -> Self {
        let mut terms: Vec<(Exp, BigInt)> = it.into_iter().collect();
        terms.sort_by(|a, b| grlex(&a.0, &b.0));
        Self::from_sorted_unmerged(terms)
    }

    fn from_sorted_unmerged(terms: Vec<(Exp, BigInt)>) -> Self {
        let mut out: Vec<(Exp, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentBi { terms: out }
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<&BigInt> {
        match self.terms.as_slice() {
            [((0, 0), c)] => Some(c),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term in graded-lexicographic order.
    pub fn leading(&self) -> Option<&(Exp, BigInt)> {
        self.terms.last()
    }

    /// Componentwise minimum exponent, i.e. the largest monomial dividing `self`.
    pub fn min_exp(&self) -> Exp {
        let mut it = self.terms.iter();
        let Some(((a0, b0), _)) = it.next() else {
            return (0, 0);
        };
        it.fold((*a0, *b0), |(a, b), ((x, y), _)| (a.min(*x), b.min(*y)))
    }

    pub fn max_exp(&self) -> Exp {
        let mut it = self.terms.iter();
        let Some(((a0, b0), _)) = it.next() else {
            return (0, 0);
        };
        it.fold((*a0, *b0), |(a, b), ((x, y), _)| (a.max(*x), b.max(*y)))
    }

    /// Gcd of the integer coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn shift(&self, by: Exp) -> Self {
        if by == (0, 0) {
            return self.clone();
        }
        // a uniform shift preserves graded-lex order
        LaurentBi {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + by.0, b + by.1), c.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentBi {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentBi {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Exact division of every coefficient by `k`.
    pub fn div_int(&self, k: &BigInt) -> Self {
        LaurentBi {
            terms: self.terms.iter().map(|(e, c)| (*e, c / k)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &other.terms);
        while i < x.len() && j < y.len() {
            match grlex(&x[i].0, &y[j].0) {
                Ordering::Less => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&y[j].1 } else { y[j].1.clone() };
                    out.push((y[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &x[i].1 - &y[j].1
                    } else {
                        &x[i].1 + &y[j].1
                    };
                    if !c.is_zero() {
                        out.push((x[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(x[i..].iter().cloned());
        for t in &y[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        LaurentBi { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.shift(*e).scale(c);
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.shift(*e).scale(c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &other.terms {
                prods.push(((a + x, b + y), c * d));
            }
        }
        prods.sort_by(|p, q| grlex(&p.0, &q.0));
        Self::from_sorted_unmerged(prods)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in `Z[u^±1, v^±1]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (e, c) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for ((a, b), x) in &self.terms {
                let (q, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push(((a - e.0, b - e.1), q));
            }
            return Some(LaurentBi { terms: out });
        }
        let (dl, dc) = d.leading().unwrap().clone();
        let lowest_deg = {
            let (le, _) = &self.terms[0];
            let (de, _) = &d.terms[0];
            (le.0 + le.1) - (de.0 + de.1)
        };
        let mut rem = self.clone();
        let mut quot: Vec<(Exp, BigInt)> = Vec::new();
        while let Some((rl, rc)) = rem.leading().cloned() {
            let e = (rl.0 - dl.0, rl.1 - dl.1);
            if e.0 + e.1 < lowest_deg {
                return None;
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&d.shift(e).scale(&q));
            quot.push((e, q));
        }
        quot.reverse();
        Some(LaurentBi { terms: quot })
    }

    /// Sign of the leading coefficient.
    pub fn leading_is_negative(&self) -> bool {
        self.leading().map(|(_, c)| c.is_negative()).unwrap_or(false)
    }
}
