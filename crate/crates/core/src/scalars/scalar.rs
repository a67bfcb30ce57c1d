use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{Exp, LaurentBi};
use super::poly::poly_gcd;
use crate::error::Error;

/// Element of the fraction field of `Z[u^±1, v^±1]`, kept in canonical form.
///
/// Canonical means: numerator and denominator coprime, denominator free of
/// monomial factors and with positive leading coefficient. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: LaurentBi,
    den: LaurentBi,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: LaurentBi::zero(),
            den: LaurentBi::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_poly(LaurentBi::constant(BigInt::from(k)))
    }

    pub fn from_poly(p: LaurentBi) -> Self {
        Scalar {
            num: p,
            den: LaurentBi::one(),
        }
    }

    /// `c * u^a * v^b`.
    pub fn monomial(c: i64, e: Exp) -> Self {
        Self::from_poly(LaurentBi::monomial(BigInt::from(c), e))
    }

    /// `r^a s^b` with integer exponents.
    pub fn rs(a: i32, b: i32) -> Self {
        Self::monomial(1, (2 * a, 2 * b))
    }

    /// `u^a v^b`, i.e. `r^(a/2) s^(b/2)`.
    pub fn uv(a: i32, b: i32) -> Self {
        Self::monomial(1, (a, b))
    }

    pub fn r() -> Self {
        Self::rs(1, 0)
    }

    pub fn s() -> Self {
        Self::rs(0, 1)
    }

    pub fn u() -> Self {
        Self::uv(1, 0)
    }

    pub fn v() -> Self {
        Self::uv(0, 1)
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_parts(num: LaurentBi, den: LaurentBi) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn numer(&self) -> &LaurentBi {
        &self.num
    }

    pub fn denom(&self) -> &LaurentBi {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Z[u^±1, v^±1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Exponent and coefficient if the value is a single monomial.
    pub fn as_monomial(&self) -> Option<(Exp, &BigInt)> {
        if self.den.is_one() && self.num.is_monomial() {
            let (e, c) = &self.num.terms()[0];
            Some((*e, c))
        } else {
            None
        }
    }

    fn canonical(num: LaurentBi, den: LaurentBi) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Scalar { num, den };
        }
        let m = den.min_exp();
        let shift = (-m.0, -m.1);
        let mut num = num.shift(shift);
        let mut den = den.shift(shift);
        if let Some(c) = den.as_constant().cloned() {
            let g = num_integer::Integer::gcd(&num.content(), &c);
            let g = if c.is_negative() { -g } else { g };
            if !g.is_one() {
                num = num.div_int(&g);
            }
            return Scalar {
                num,
                den: LaurentBi::one(),
            }
            .div_const_den(&(c / g));
        }
        let nm = num.min_exp();
        let g = poly_gcd(&num.shift((-nm.0, -nm.1)), &den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        if den.leading_is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    /// Helper for constant denominators: `self.num / d` where `d > 0` is
    /// already coprime to the numerator content.
    fn div_const_den(self, d: &BigInt) -> Self {
        if d.is_one() {
            self
        } else {
            Scalar {
                num: self.num,
                den: LaurentBi::constant(d.clone()),
            }
        }
    }

    pub fn neg(&self) -> Self {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::canonical(self.num.add(&other.num), self.den.clone());
        }
        Self::canonical(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar {
                num: self.num.mul(&other.num),
                den: LaurentBi::one(),
            };
        }
        if let Some((e, c)) = other.as_monomial() {
            if c.is_one() {
                return Scalar {
                    num: self.num.shift(e),
                    den: self.den.clone(),
                };
            }
        }
        if let Some((e, c)) = self.as_monomial() {
            if c.is_one() {
                return Scalar {
                    num: other.num.shift(e),
                    den: other.den.clone(),
                };
            }
        }
        // cross-cancel first so the final gcd works on smaller inputs
        let (a, d) = Self::cancel(&self.num, &other.den);
        let (c, b) = Self::cancel(&other.num, &self.den);
        Self::canonical(a.mul(&c), b.mul(&d))
    }

    fn cancel(x: &LaurentBi, y: &LaurentBi) -> (LaurentBi, LaurentBi) {
        if y.is_one() || x.is_monomial() {
            return (x.clone(), y.clone());
        }
        let xm = x.min_exp();
        let g = poly_gcd(&x.shift((-xm.0, -xm.1)), y);
        if g.is_one() || g.as_constant().is_some() {
            return (x.clone(), y.clone());
        }
        (
            x.div_exact(&g).expect("gcd divides"),
            y.div_exact(&g).expect("gcd divides"),
        )
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some((e, c)) = self.as_monomial() {
            if c.is_one() {
                return Ok(Self::uv(-e.0, -e.1));
            }
            if (-c).is_one() {
                return Ok(Self::monomial(-1, (-e.0, -e.1)));
            }
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Result<Self, Error> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        if let Some((e, c)) = self.as_monomial() {
            if c.is_one() {
                return Ok(Self::uv(e.0 * k as i32, e.1 * k as i32));
            }
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = Self::mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = Self::mul(&base, &base);
            }
        }
        Ok(acc)
    }

    /// Multiplies by `u^a v^b`.
    pub fn shift(&self, e: Exp) -> Self {
        Scalar {
            num: self.num.shift(e),
            den: self.den.clone(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.mul(&Self::from_int(k))
    }

    /// Exact evaluation at `u = u0`, `v = v0`.
    pub fn eval_numeric(&self, u0: &BigRational, v0: &BigRational) -> Result<BigRational, Error> {
        let d = eval_poly(&self.den, u0, v0)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(eval_poly(&self.num, u0, v0)? / d)
    }

    /// Numerator and denominator terms as `(coeff, a, b)` triples in graded-lexicographic order.
    pub fn json_parts(&self) -> (Vec<(BigInt, i32, i32)>, Vec<(BigInt, i32, i32)>) {
        let f = |p: &LaurentBi| {
            p.terms()
                .iter()
                .map(|((a, b), c)| (c.clone(), *a, *b))
                .collect()
        };
        (f(&self.num), f(&self.den))
    }
}

fn pow_rat(x: &BigRational, k: i32) -> Result<BigRational, Error> {
    if k >= 0 {
        Ok(num_traits::pow(x.clone(), k as usize))
    } else if x.is_zero() {
        Err(Error::PoleAtPoint)
    } else {
        Ok(num_traits::pow(x.recip(), (-k) as usize))
    }
}

fn eval_poly(p: &LaurentBi, u0: &BigRational, v0: &BigRational) -> Result<BigRational, Error> {
    let mut acc = BigRational::zero();
    for ((a, b), c) in p.terms() {
        acc += BigRational::from_integer(c.clone()) * pow_rat(u0, *a)? * pow_rat(v0, *b)?;
    }
    Ok(acc)
}

fn fmt_var(out: &mut String, name: char, e: i32) {
    if e == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push(name);
    if e % 2 != 0 {
        out.push_str(&format!("^({}/2)", e));
    } else if e != 2 {
        out.push_str(&format!("^{}", e / 2));
    }
}

fn fmt_poly(p: &LaurentBi) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (k, ((a, b), c)) in p.terms().iter().rev().enumerate() {
        let mut mono = String::new();
        fmt_var(&mut mono, 'r', *a);
        fmt_var(&mut mono, 's', *b);
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&format!("{}", mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{}", mag, mono));
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = fmt_poly(&self.num);
        if self.den.is_one() {
            return f.write_str(&n);
        }
        let d = fmt_poly(&self.den);
        let wrap = |s: String, multi: bool| if multi { format!("({})", s) } else { s };
        write!(
            f,
            "{}/{}",
            wrap(n, self.num.len() > 1),
            wrap(d, self.den.len() > 1)
        )
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Scalar::$m(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Scalar::$m(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Scalar::$m(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}
