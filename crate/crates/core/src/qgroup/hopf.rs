use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::scalars::Scalar;

use super::algebra::QuantumGroup;
use super::element::{Element, Side, Term, Toral};

/// Element of `U^{⊗k}`: combinations of tuples of normal-form monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tensor {
    terms: BTreeMap<Vec<Term>, Scalar>,
}

/// Two-fold tensors, the codomain of the coproduct.
pub type TensorElement = Tensor;

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Term>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, legs: Vec<Term>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&legs) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&legs);
                }
            }
            None => {
                self.terms.insert(legs, c);
            }
        }
    }

    /// Pure tensor of elements.
    pub fn pure(parts: &[&Element]) -> Self {
        let mut acc: Vec<(Vec<Term>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for p in parts {
            let mut next = Vec::new();
            for (legs, c) in &acc {
                for (t, x) in p.iter() {
                    let mut l = legs.clone();
                    l.push(t.clone());
                    next.push((l, c * x));
                }
            }
            acc = next;
        }
        let mut out = Tensor::zero();
        for (l, c) in acc {
            out.add_term(l, c);
        }
        out
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    /// Leg-wise product.
    pub fn mul(&self, q: &QuantumGroup, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut legs: Vec<Vec<(Term, Scalar)>> = Vec::with_capacity(a.len());
                for (x, y) in a.iter().zip(b) {
                    let mut prod = Element::zero();
                    q.mul_terms(x, y, &Scalar::one(), &mut prod);
                    legs.push(prod.iter().map(|(t, c)| (t.clone(), c.clone())).collect());
                }
                let mut acc: Vec<(Vec<Term>, Scalar)> = vec![(Vec::new(), ca * cb)];
                for leg in &legs {
                    let mut next = Vec::with_capacity(acc.len() * leg.len());
                    for (l, c) in &acc {
                        for (t, x) in leg {
                            let mut l2 = l.clone();
                            l2.push(t.clone());
                            next.push((l2, c * x));
                        }
                    }
                    acc = next;
                }
                for (l, c) in acc {
                    out.add_term(l, c);
                }
            }
        }
        out
    }

    /// Replaces leg `k` by the image of a linear map into tensors.
    pub fn expand_leg(&self, k: usize, f: impl Fn(&Term) -> Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (legs, c) in &self.terms {
            for (mid, x) in f(&legs[k]).terms {
                let mut l = legs[..k].to_vec();
                l.extend(mid);
                l.extend_from_slice(&legs[k + 1..]);
                out.add_term(l, c * &x);
            }
        }
        out
    }

    /// Multiplies all legs together.
    pub fn multiply_out(&self, q: &QuantumGroup) -> Element {
        let mut out = Element::zero();
        for (legs, c) in &self.terms {
            let mut acc = Element::scalar(q.rank(), c.clone());
            for t in legs {
                acc = q.mul(&acc, &Element::from_term(t.clone(), Scalar::one()));
            }
            out.add_scaled(&Scalar::one(), &acc);
        }
        out
    }
}

impl QuantumGroup {
    fn gen_coproduct(&self, side: Side, i: usize) -> Tensor {
        let n = self.rank();
        match side {
            // Δ(e_i) = e_i ⊗ 1 + ω_i ⊗ e_i
            Side::E => Tensor::pure(&[&self.e(i), &self.one()])
                .add(&Tensor::pure(&[&self.omega(i), &self.e(i)])),
            // Δ(f_i) = 1 ⊗ f_i + f_i ⊗ ω'_i
            Side::F => Tensor::pure(&[&self.one(), &self.f(i)]).add(&Tensor::pure(&[
                &self.f(i),
                &Element::toral(Toral::omega_prime(n, i)),
            ])),
        }
    }

    fn term_coproduct(&self, t: &Term) -> Tensor {
        let tor = Element::toral(t.t.clone());
        let mut acc = Tensor::pure(&[&self.one(), &self.one()]);
        for &i in &t.f {
            acc = acc.mul(self, &self.gen_coproduct(Side::F, i as usize));
        }
        acc = acc.mul(self, &Tensor::pure(&[&tor, &tor]));
        for &i in &t.e {
            acc = acc.mul(self, &self.gen_coproduct(Side::E, i as usize));
        }
        acc
    }

    /// `Δ(x)`, extended multiplicatively from the generators.
    pub fn comultiply(&self, x: &Element) -> TensorElement {
        let mut out = Tensor::zero();
        for (t, c) in x.iter() {
            for (l, y) in self.term_coproduct(t).iter() {
                out.add_term(l.clone(), c * y);
            }
        }
        out
    }

    /// Applies `Δ` to leg `k` of a tensor.
    pub fn comultiply_leg(&self, x: &Tensor, k: usize) -> Tensor {
        x.expand_leg(k, |t| self.term_coproduct(t))
    }

    pub fn counit(&self, x: &Element) -> Scalar {
        let mut acc = Scalar::zero();
        for (t, c) in x.iter() {
            if t.f.is_empty() && t.e.is_empty() {
                acc = acc + c;
            }
        }
        acc
    }

    fn gen_antipode(&self, side: Side, i: usize) -> Element {
        let n = self.rank();
        let minus = Scalar::from_int(-1);
        match side {
            // S(e_i) = −ω_i⁻¹ e_i
            Side::E => self.mul(
                &Element::toral(Toral::omega(n, i).inverse()),
                &self.e(i),
            )
            .scale(&minus),
            // S(f_i) = −f_i ω'_i⁻¹
            Side::F => self
                .mul(
                    &self.f(i),
                    &Element::toral(Toral::omega_prime(n, i).inverse()),
                )
                .scale(&minus),
        }
    }

    /// `S(F t E) = S(E) S(t) S(F)`, with `S` reversing words.
    pub fn antipode(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (t, c) in x.iter() {
            let mut acc = Element::scalar(self.rank(), c.clone());
            for &i in t.e.iter().rev() {
                acc = self.mul(&acc, &self.gen_antipode(Side::E, i as usize));
            }
            acc = self.mul(&acc, &Element::toral(t.t.inverse()));
            for &i in t.f.iter().rev() {
                acc = self.mul(&acc, &self.gen_antipode(Side::F, i as usize));
            }
            out.add_scaled(&Scalar::one(), &acc);
        }
        out
    }

    /// `t z t⁻¹` for a group-like `t`, computed from the commutation scalars.
    pub fn conjugate_toral(&self, t: &Toral, z: &Element) -> Element {
        let n = self.rank();
        let mut out = Element::zero();
        for (m, c) in z.iter() {
            let fe = super::element::content(n, &m.f);
            let ee = super::element::content(n, &m.e);
            let a = self.presentation().conj_exp(t, &ee);
            let b = self.presentation().conj_exp(t, &fe);
            out.add_term(m.clone(), c * &Scalar::uv(a.0 - b.0, a.1 - b.1));
        }
        out
    }

    /// `ad(e_i) z = e_i z − ω_i z ω_i⁻¹ e_i`.
    pub fn ad_e(&self, i: usize, z: &Element) -> Element {
        let n = self.rank();
        let left = self.mul(&self.e(i), z);
        let conj = self.conjugate_toral(&Toral::omega(n, i), z);
        left.sub(&self.mul(&conj, &self.e(i)))
    }

    /// `ad(f_i) z = (f_i z − z f_i) ω'_i⁻¹`.
    pub fn ad_f(&self, i: usize, z: &Element) -> Element {
        let n = self.rank();
        let comm = self.mul(&self.f(i), z).sub(&self.mul(z, &self.f(i)));
        self.mul(&comm, &Element::toral(Toral::omega_prime(n, i).inverse()))
    }

    /// Left adjoint action, applying generator closed forms letter by letter.
    pub fn ad(&self, x: &Element, z: &Element) -> Element {
        let mut out = Element::zero();
        for (t, c) in x.iter() {
            let mut acc = z.clone();
            for &i in t.e.iter().rev() {
                acc = self.ad_e(i as usize, &acc);
            }
            acc = self.conjugate_toral(&t.t, &acc);
            for &i in t.f.iter().rev() {
                acc = self.ad_f(i as usize, &acc);
            }
            out.add_scaled(c, &acc);
        }
        out
    }

    /// `(Δ ⊗ id) Δ(x) = (id ⊗ Δ) Δ(x)`.
    pub fn coassociativity_holds(&self, x: &Element) -> bool {
        let d = self.comultiply(x);
        self.comultiply_leg(&d, 0) == self.comultiply_leg(&d, 1)
    }

    /// `(ε ⊗ id) Δ(x) = x = (id ⊗ ε) Δ(x)`.
    pub fn counit_holds(&self, x: &Element) -> bool {
        let d = self.comultiply(x);
        let mut left = Element::zero();
        let mut right = Element::zero();
        for (legs, c) in d.iter() {
            if legs[0].f.is_empty() && legs[0].e.is_empty() {
                left.add_term(legs[1].clone(), c.clone());
            }
            if legs[1].f.is_empty() && legs[1].e.is_empty() {
                right.add_term(legs[0].clone(), c.clone());
            }
        }
        &left == x && &right == x
    }

    /// `m(S ⊗ id) Δ(x) = ε(x) 1 = m(id ⊗ S) Δ(x)`.
    pub fn antipode_holds(&self, x: &Element) -> bool {
        let mut left = Element::zero();
        let mut right = Element::zero();
        for (legs, c) in self.comultiply(x).iter() {
            let a = Element::from_term(legs[0].clone(), Scalar::one());
            let b = Element::from_term(legs[1].clone(), Scalar::one());
            left.add_scaled(c, &self.mul(&self.antipode(&a), &b));
            right.add_scaled(c, &self.mul(&a, &self.antipode(&b)));
        }
        let want = self.scalar(self.counit(x));
        left == want && right == want
    }

    /// `Σ x₁ z S(x₂)` computed through the coproduct.
    pub fn ad_via_coproduct(&self, x: &Element, z: &Element) -> Element {
        let mut out = Element::zero();
        for (legs, c) in self.comultiply(x).iter() {
            let a = Element::from_term(legs[0].clone(), Scalar::one());
            let b = Element::from_term(legs[1].clone(), Scalar::one());
            let prod = self.mul(&self.mul(&a, z), &self.antipode(&b));
            out.add_scaled(c, &prod);
        }
        out
    }
}
