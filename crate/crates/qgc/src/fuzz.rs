//! Seeded random elements for the randomised checks.

use qgc_core::qgroup::{Element, QuantumGroup, Side, Toral, Word};
use qgc_core::scalars::Scalar;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Word {
    (0..len).map(|_| rng.gen_range(0..n) as u8).collect()
}

fn small_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<i32> {
    (0..n).map(|_| rng.gen_range(-1..=1)).collect()
}

fn coeff(rng: &mut ChaCha8Rng) -> Scalar {
    let c = Scalar::rs(rng.gen_range(-1..=1), rng.gen_range(-1..=1)) + Scalar::from_int(rng.gen_range(-2..=2));
    if c.is_zero() {
        Scalar::one()
    } else {
        c
    }
}

/// A sum of two normal-form monomials of total height at most `height`.
pub fn element(q: &QuantumGroup, rng: &mut ChaCha8Rng, height: usize) -> Element {
    let n = q.rank();
    let mut acc = Element::zero();
    for _ in 0..2 {
        let lf = rng.gen_range(0..=height);
        let f = word(rng, n, lf);
        let le = rng.gen_range(0..=height - lf);
        let e = word(rng, n, le);
        let t = Toral::new(small_vec(rng, n), small_vec(rng, n));
        let c = coeff(rng);
        acc.add_scaled(&c, &q.monomial(&f, t, &e));
    }
    acc
}

/// A product of generators `e_i`, `f_i`, `ω_i^{±1}`, `ω'_i^{±1}` of the given length.
pub fn product(q: &QuantumGroup, rng: &mut ChaCha8Rng, len: usize) -> Element {
    let n = q.rank();
    let mut acc = q.one();
    for _ in 0..len {
        let i = rng.gen_range(0..n);
        let g = match rng.gen_range(0..4) {
            0 => q.e(i),
            1 => q.f(i),
            2 => {
                let mut t = Toral::omega(n, i);
                if rng.gen_bool(0.5) {
                    t = t.inverse();
                }
                Element::toral(t)
            }
            _ => {
                let mut t = Toral::omega_prime(n, i);
                if rng.gen_bool(0.5) {
                    t = t.inverse();
                }
                Element::toral(t)
            }
        };
        acc = q.mul(&acc, &g);
    }
    acc
}

/// A product of the letters of `w` (as `f_i` or `e_i`) with one random
/// group-like factor from the same Borel part inserted at a random position.
pub fn borel(q: &QuantumGroup, rng: &mut ChaCha8Rng, side: Side, w: &[u8]) -> Element {
    let n = q.rank();
    let mut acc = q.one();
    let k = rng.gen_range(0..=w.len());
    for p in 0..=w.len() {
        if p == k {
            let v = small_vec(rng, n);
            let t = match side {
                Side::F => Toral::new(v, vec![0; n]),
                Side::E => Toral::new(vec![0; n], v),
            };
            acc = q.mul(&acc, &Element::toral(t));
        }
        if let Some(&i) = w.get(p) {
            let g = match side {
                Side::F => q.f(i as usize),
                Side::E => q.e(i as usize),
            };
            acc = q.mul(&acc, &g);
        }
    }
    acc
}

/// All Chevalley generators `e_i`, `f_i`, `ω_i`, `ω'_i`.
pub fn generators(q: &QuantumGroup) -> Vec<Element> {
    let mut out = Vec::new();
    for i in 0..q.rank() {
        out.extend([q.e(i), q.f(i), q.omega(i), q.omega_prime(i)]);
    }
    out
}
