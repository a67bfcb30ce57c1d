//! Central elements, the Harish-Chandra map and the character family on the
//! toral part.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{integer_kernel_in_box, solve_unique, Matrix, SparseRow};
use crate::qgroup::{Element, QuantumGroup, Side, Term, Toral};
use crate::repn::{self, char_lambda, char_pair, theta_scalar, CharacterPair, WeightModule};
use crate::rootdata::{RootVec, Weight, WeylElement};
use crate::scalars::Scalar;

/// A combination of toral monomials `ω'_η ω_φ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ToralPart {
    terms: BTreeMap<Toral, Scalar>,
}

impl ToralPart {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(t: Toral, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(t, c);
        out
    }

    /// `ω'_η ω_{−η}`.
    pub fn balanced(eta: &[i32]) -> Toral {
        Toral::new(eta.to_vec(), eta.iter().map(|x| -x).collect())
    }

    pub fn add_term(&mut self, t: Toral, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(t.clone()).or_insert_with(Scalar::zero);
        *v = &*v + &c;
        if v.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Toral, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &Toral) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    /// Whether every term has the form `ω'_η ω_{−η}`.
    pub fn in_balanced_part(&self) -> bool {
        self.terms.keys().all(|t| t.is_balanced())
    }

    pub fn to_element(&self) -> Element {
        self.terms
            .iter()
            .map(|(t, c)| (Term::toral(t.clone()), c.clone()))
            .collect()
    }
}

/// `ϱ^{λ,μ}` extended linearly to the toral part.
pub fn char_eval(q: &QuantumGroup, pair: &CharacterPair, t: &ToralPart) -> Scalar {
    let mut acc = Scalar::zero();
    for (m, c) in t.iter() {
        acc = acc + char_pair(q, pair, m) * c;
    }
    acc
}

/// `ξ = γ^{−ρ} ∘ π`: keep the toral terms and twist each by `ϱ^{−ρ}`.
pub fn hc_xi(q: &QuantumGroup, x: &Element) -> ToralPart {
    let minus_rho = -&q.presentation().roots().rho();
    let mut out = ToralPart::zero();
    for (t, c) in x.iter() {
        if t.f.is_empty() && t.e.is_empty() {
            out.add_term(t.t.clone(), c * &char_lambda(q, &minus_rho, &t.t));
        }
    }
    out
}

fn act_on_root(w: &WeylElement, eta: &[i32]) -> Result<RootVec, Error> {
    w.apply(&Weight::from_alpha(eta))
        .to_root()
        .ok_or(Error::NotInRootLattice)
}

/// `σ(ω'_η ω_{−η}) = ω'_{σ(η)} ω_{−σ(η)}`.
pub fn weyl_act(w: &WeylElement, t: &ToralPart) -> Result<ToralPart, Error> {
    if !t.in_balanced_part() {
        return Err(Error::NotInUb0);
    }
    let mut out = ToralPart::zero();
    for (m, c) in t.iter() {
        out.add_term(ToralPart::balanced(&act_on_root(w, &m.eta)?), c.clone());
    }
    Ok(out)
}

/// `av(λ) = |W|⁻¹ Σ_σ ω'_{σλ} ω_{−σλ}`.
pub fn av(q: &QuantumGroup, lambda: &Weight) -> Result<ToralPart, Error> {
    let roots = q.presentation().roots();
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    lambda.to_root().ok_or(Error::NotInRootLattice)?;
    let orbit = roots.weyl_orbit(lambda);
    let c = Scalar::from_int(orbit.len() as i64).inv()?;
    let mut out = ToralPart::zero();
    for mu in orbit {
        out.add_term(ToralPart::balanced(&mu.to_root().unwrap()), c.clone());
    }
    Ok(out)
}

/// Coefficients of a `W`-invariant element of the balanced toral part in the
/// basis `av(μ)`, `μ` dominant. Fails with `NotInUb0` when the element is
/// outside the balanced part or not `W`-invariant.
pub fn av_expansion(q: &QuantumGroup, t: &ToralPart) -> Result<BTreeMap<Weight, Scalar>, Error> {
    if !t.in_balanced_part() {
        return Err(Error::NotInUb0);
    }
    let roots = q.presentation().roots();
    let mut out = BTreeMap::new();
    for (m, c) in t.iter() {
        let w = Weight::from_alpha(&m.eta);
        if !w.is_dominant() {
            continue;
        }
        let orbit = roots.weyl_orbit(&w);
        for other in &orbit {
            let o = ToralPart::balanced(&other.to_root().unwrap());
            if &t.coeff(&o) != c {
                return Err(Error::NotInUb0);
            }
        }
        out.insert(w, c.scale_int(orbit.len() as i64));
    }
    // every term must belong to some dominant orbit counted above
    let covered: usize = out.keys().map(|w| roots.weyl_orbit(w).len()).sum();
    if covered != t.len() {
        return Err(Error::NotInUb0);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Trace,
    Solve,
}

#[derive(Clone, Debug)]
pub struct CentralCandidate {
    pub z: Element,
    pub lambda: Weight,
    pub method: Method,
}

/// `ad(g) z = ε(g) z` for every generator `g`.
pub fn is_central(q: &QuantumGroup, z: &Element) -> bool {
    let n = q.rank();
    (0..n).all(|i| {
        q.ad_e(i, z).is_zero()
            && q.ad_f(i, z).is_zero()
            && &q.conjugate_toral(&Toral::omega(n, i), z) == z
            && &q.conjugate_toral(&Toral::omega_prime(n, i), z) == z
    })
}

fn check_lambda(q: &QuantumGroup, lambda: &Weight) -> Result<(), Error> {
    if lambda.rank() != q.rank() {
        return Err(Error::RankMismatch {
            expected: q.rank(),
            found: lambda.rank(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    lambda.to_root().ok_or(Error::NotInRootLattice)?;
    Ok(())
}

/// Contents `ν` such that both `λ'` and `λ' + ν` are weights of the module.
fn blocks(m: &WeightModule) -> Vec<(Weight, RootVec)> {
    let mults = m.multiplicities();
    let mut out = Vec::new();
    for low in mults.keys() {
        for high in mults.keys() {
            if let Some(nu) = (high - low).to_root() {
                if nu.iter().all(|x| *x >= 0) {
                    out.push((low.clone(), nu));
                }
            }
        }
    }
    out
}

fn word_element(q: &QuantumGroup, side: Side, w: &[u8]) -> Element {
    let n = q.rank();
    match side {
        Side::E => q.monomial(&[], Toral::identity(n), w),
        Side::F => q.monomial(w, Toral::identity(n), &[]),
    }
}

/// `tr_{L_{λ'}}(y x)` for every pair of representatives of content `ν`.
fn block_traces(
    m: &WeightModule,
    low: &Weight,
    ys: &[Matrix],
    xs: &[Matrix],
) -> Matrix {
    let rows: Vec<usize> = m
        .weights()
        .iter()
        .enumerate()
        .filter(|(_, w)| *w == low)
        .map(|(k, _)| k)
        .collect();
    let mut t = Matrix::zeros(ys.len(), xs.len());
    for (k, y) in ys.iter().enumerate() {
        for (a, x) in xs.iter().enumerate() {
            let mut acc = Scalar::zero();
            for &j in &rows {
                for l in 0..m.dim() {
                    let p = y.get(j, l);
                    if p.is_zero() {
                        continue;
                    }
                    let r = x.get(l, j);
                    if !r.is_zero() {
                        acc = acc + p * r;
                    }
                }
            }
            t.set(k, a, acc);
        }
    }
    t
}

/// The central element whose pairing with every `u` under the invariant
/// form is `tr_{L(λ)}(u Θ)`, assembled block by block from dual bases.
pub fn central_from_trace(q: &QuantumGroup, lambda: &Weight) -> Result<CentralCandidate, Error> {
    check_lambda(q, lambda)?;
    let p = q.presentation();
    let l = repn::irreducible(q, lambda)?;
    let mut z = Element::zero();
    let mut mats: BTreeMap<RootVec, (Vec<Matrix>, Vec<Matrix>, Matrix)> = BTreeMap::new();
    for (low, nu) in blocks(&l) {
        if !mats.contains_key(&nu) {
            let g = q.gram(&nu)?;
            let c = g.matrix.inverse()?;
            let ys = g
                .rows
                .iter()
                .map(|y| repn::act(q, &word_element(q, Side::F, y), &l))
                .collect::<Result<Vec<_>, _>>()?;
            let xs = g
                .cols
                .iter()
                .map(|x| repn::act(q, &word_element(q, Side::E, x), &l))
                .collect::<Result<Vec<_>, _>>()?;
            mats.insert(nu.clone(), (ys, xs, c));
        }
        let (ys, xs, c) = &mats[&nu];
        let t = block_traces(&l, &low, ys, xs);
        if t.is_zero() {
            continue;
        }
        let coef = c.mul(&t).mul(c).transpose();
        let g = q.gram(&nu)?;
        let low_root = low.to_root().ok_or(Error::NotInRootLattice)?;
        let high: Vec<i32> = low_root.iter().zip(&nu).map(|(a, b)| a + b).collect();
        // Θ on L_{λ'}, the inverse S² twist of U^{−ν}, and the toral factor
        let scale = theta_scalar(q, &low)
            * crate::pairing::square_antipode_factor(q, &nu).inv()?
            * p.gpair(&nu, &high);
        let tor = Toral::new(low_root.clone(), high.iter().map(|x| -x).collect());
        for (k, y) in g.rows.iter().enumerate() {
            for (b, x) in g.cols.iter().enumerate() {
                let v = coef.get(k, b);
                if v.is_zero() {
                    continue;
                }
                z.add_term(
                    Term {
                        f: y.clone(),
                        t: tor.clone(),
                        e: x.clone(),
                    },
                    v * &scale,
                );
            }
        }
    }
    if !is_central(q, &z) {
        return Err(Error::CentralityCheckFailed);
    }
    Ok(CentralCandidate {
        z,
        lambda: lambda.clone(),
        method: Method::Trace,
    })
}

/// `Σ_μ (rs⁻¹)^{−2(ρ,μ)} dim L(λ)_μ ω'_μ ω_{−μ}`, the degree-zero part of `z_λ`.
pub fn degree_zero_part(q: &QuantumGroup, lambda: &Weight) -> Result<ToralPart, Error> {
    let roots = q.presentation().roots();
    let mut out = ToralPart::zero();
    for (mu, k) in roots.freudenthal_mults(lambda)? {
        let root = mu.to_root().ok_or(Error::NotInRootLattice)?;
        out.add_term(
            ToralPart::balanced(&root),
            theta_scalar(q, &mu).scale_int(k as i64),
        );
    }
    Ok(out)
}

/// Solves for a central element directly: an ansatz over the blocks
/// `y ω'_{λ'} ω_{−λ'−ν} x` with `λ'`, `λ' + ν` weights of `L(λ)`, constrained
/// by `ad(e_i) z = ad(f_i) z = 0` and with the degree-zero part fixed.
pub fn central_by_solve(q: &QuantumGroup, lambda: &Weight) -> Result<CentralCandidate, Error> {
    check_lambda(q, lambda)?;
    let n = q.rank();
    let roots = q.presentation().roots();
    let mults = roots.freudenthal_mults(lambda)?;
    let zero_part = degree_zero_part(q, lambda)?;
    // unknowns: the coefficients of the positive-degree monomials
    let mut unknowns: Vec<Term> = Vec::new();
    let mut fixed = Element::zero();
    for low in mults.keys() {
        for high in mults.keys() {
            let Some(nu) = (high - low).to_root() else { continue };
            if nu.iter().any(|x| *x < 0) {
                continue;
            }
            let lo = low.to_root().unwrap();
            let hi = high.to_root().unwrap();
            let tor = Toral::new(lo.clone(), hi.iter().map(|x| -x).collect());
            if nu.iter().all(|x| *x == 0) {
                fixed.add_term(Term::toral(tor.clone()), zero_part.coeff(&tor));
                continue;
            }
            let ys = q.basis(Side::F, &nu)?.reps().to_vec();
            let xs = q.basis(Side::E, &nu)?.reps().to_vec();
            for y in &ys {
                for x in &xs {
                    unknowns.push(Term {
                        f: y.clone(),
                        t: tor.clone(),
                        e: x.clone(),
                    });
                }
            }
        }
    }
    if unknowns.is_empty() && !lambda.is_zero() {
        return Err(Error::NoSolution);
    }
    // each constraint: Σ_j u_j ad(g)(B_j) = −ad(g)(fixed)
    let mut equations: BTreeMap<(u8, Term), (SparseRow, Scalar)> = BTreeMap::new();
    let mut record = |tag: u8, img: &Element, col: Option<usize>| {
        for (t, c) in img.iter() {
            let entry = equations
                .entry((tag, t.clone()))
                .or_insert_with(|| (SparseRow::new(), Scalar::zero()));
            match col {
                Some(j) => {
                    entry.0.insert(j, c.clone());
                }
                None => entry.1 = -c.clone(),
            }
        }
    };
    for i in 0..n {
        let tags = [2 * i as u8, 2 * i as u8 + 1];
        record(tags[0], &q.ad_e(i, &fixed), None);
        record(tags[1], &q.ad_f(i, &fixed), None);
        for (j, b) in unknowns.iter().enumerate() {
            let be = Element::from_term(b.clone(), Scalar::one());
            record(tags[0], &q.ad_e(i, &be), Some(j));
            record(tags[1], &q.ad_f(i, &be), Some(j));
        }
    }
    let eqs: Vec<(SparseRow, Scalar)> = equations.into_values().collect();
    let sol = solve_unique(&eqs, unknowns.len())?;
    let mut z = fixed;
    for (b, c) in unknowns.into_iter().zip(sol) {
        z.add_term(b, c);
    }
    if !is_central(q, &z) {
        return Err(Error::CentralityCheckFailed);
    }
    Ok(CentralCandidate {
        z,
        lambda: lambda.clone(),
        method: Method::Solve,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelMode {
    /// Characters `ϱ^λ`, `λ` in the weight lattice.
    LambdaOnly,
    /// The whole family `ϱ^{λ,μ}`.
    Full,
}

/// Nonzero `(η, φ)` with coordinates in `[−bound, bound]` on which every
/// character of the chosen family takes the value 1.
pub fn parity_kernel(n: usize, bound: i64, mode: KernelMode) -> Result<Vec<(RootVec, RootVec)>, Error> {
    let q = crate::qgroup::Presentation::new(n)?;
    let roots = q.roots();
    let unit = |i: usize| {
        let mut v = vec![0; n];
        v[i] = 2;
        v
    };
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for k in 0..n {
        let w = roots.fundamental(k).alpha_doubled();
        // exponents of ⟨ω'_ϖ, ω_φ⟩ / ⟨ω'_η, ω_ϖ⟩, linear in (η, φ)
        let mut ru = vec![0i64; 2 * n];
        let mut rv = vec![0i64; 2 * n];
        for j in 0..n {
            let a = q.pair_exp_doubled(&unit(j), &w)?;
            let b = q.pair_exp_doubled(&w, &unit(j))?;
            ru[j] = -a.0 as i64;
            rv[j] = -a.1 as i64;
            ru[n + j] = b.0 as i64;
            rv[n + j] = b.1 as i64;
        }
        rows.push(ru);
        rows.push(rv);
        if mode == KernelMode::Full {
            // (rs⁻¹)^{(η+φ, ϖ_k)}
            let wk = roots.fundamental(k);
            let mut row = vec![0i64; 2 * n];
            for j in 0..n {
                let x = Weight::from_alpha(&{
                    let mut v = vec![0; n];
                    v[j] = 1;
                    v
                })
                .inner4(&wk);
                row[j] = x;
                row[n + j] = x;
            }
            rows.push(row);
        }
    }
    Ok(integer_kernel_in_box(&rows, 2 * n, bound)
        .into_iter()
        .map(|v| {
            let eta = v[..n].iter().map(|x| *x as i32).collect();
            let phi = v[n..].iter().map(|x| *x as i32).collect();
            (eta, phi)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repn::{act, verma};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rank_two() -> QuantumGroup {
        QuantumGroup::new(2).unwrap()
    }

    #[test]
    fn characters() {
        let q = rank_two();
        let roots = q.presentation().roots().clone();
        let t = Toral::new(vec![1, -2], vec![0, 1]);
        let w1 = roots.fundamental(0);
        let pair = CharacterPair::new(Weight::zero(2), w1.clone());
        // (η+φ, ϖ₁) = (α₁ − α₂, ε₁) = 1
        assert_eq!(char_eval(&q, &pair, &ToralPart::monomial(t, Scalar::one())), Scalar::rs(1, -1));
        // ϱ^{ϖ_i}(ω'_η ω_{−η}) = (s²r⁻²)^{(α_i,ϖ_i) η_i}
        for i in 0..2 {
            let mut eta = vec![0; 2];
            eta[i] = 1;
            let pair = CharacterPair::untwisted(roots.fundamental(i));
            let v = char_eval(&q, &pair, &ToralPart::monomial(ToralPart::balanced(&eta), Scalar::one()));
            let k = roots.simple_root(i).inner4(&roots.fundamental(i)) as i32;
            assert_eq!(v, Scalar::uv(-k, k));
        }
        let one = ToralPart::monomial(Toral::identity(2), Scalar::one());
        assert!(char_eval(&q, &CharacterPair::new(w1.clone(), w1), &one).is_one());
    }

    #[test]
    fn weyl_action_and_averages() {
        let q = rank_two();
        let roots = q.presentation().roots().clone();
        assert_eq!(av(&q, &Weight::zero(2)).unwrap(), ToralPart::monomial(Toral::identity(2), Scalar::one()));
        let a = av(&q, &Weight::from_eps(&[1, 0])).unwrap();
        assert_eq!(a.len(), 4);
        let quarter = Scalar::from_int(4).inv().unwrap();
        assert!(a.iter().all(|(_, c)| *c == quarter));
        for w in roots.weyl_group() {
            assert_eq!(weyl_act(&w, &a).unwrap(), a);
        }
        let bad = ToralPart::monomial(Toral::new(vec![1, 0], vec![0, 0]), Scalar::one());
        assert_eq!(weyl_act(&WeylElement::identity(2), &bad), Err(Error::NotInUb0));
        let exp = av_expansion(&q, &a).unwrap();
        assert_eq!(exp.len(), 1);
        assert!(exp[&Weight::from_eps(&[1, 0])].is_one());
    }

    /// `ϱ^{σ(λ),μ}(u) = ϱ^{λ,μ}(σ⁻¹ u)` on balanced monomials.
    #[test]
    fn characters_intertwine_weyl_action() {
        let q = rank_two();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..4 {
            let lam = Weight((0..2).map(|_| rng.gen_range(-3..=3)).collect());
            let mu = Weight((0..2).map(|_| rng.gen_range(-3..=3)).collect());
            for i in 0..2 {
                let s = WeylElement::simple(2, i);
                for eta in [[1, 0], [0, 1], [1, -1], [2, 1]] {
                    let u = ToralPart::monomial(ToralPart::balanced(&eta), Scalar::one());
                    let lhs = char_eval(&q, &CharacterPair::new(s.apply(&lam), mu.clone()), &u);
                    let rhs = char_eval(&q, &CharacterPair::new(lam.clone(), mu.clone()), &weyl_act(&s.inverse(), &u).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn hc_map_basics() {
        let q = rank_two();
        assert_eq!(hc_xi(&q, &q.one()), ToralPart::monomial(Toral::identity(2), Scalar::one()));
        let x = q.mul(&q.f(0), &q.e(0));
        assert!(hc_xi(&q, &x).is_empty());
    }

    #[test]
    fn trivial_central_element() {
        let q = rank_two();
        let z = central_from_trace(&q, &Weight::zero(2)).unwrap().z;
        assert_eq!(z, q.one());
        let z = central_by_solve(&q, &Weight::zero(2)).unwrap().z;
        assert_eq!(z, q.one());
        assert_eq!(
            central_from_trace(&q, &Weight(vec![1, 1])).unwrap_err(),
            Error::NotInRootLattice
        );
    }

    #[test]
    fn vector_representation_central_element() {
        let q = rank_two();
        let lam = Weight::from_eps(&[1, 0]);
        let z = central_from_trace(&q, &lam).unwrap().z;
        assert!(is_central(&q, &z));
        assert_eq!(z.toral_part(), degree_zero_part(&q, &lam).unwrap().to_element());
        let mut want = ToralPart::zero();
        for mu in [[1, 1], [-1, -1], [0, 1], [0, -1], [0, 0]] {
            want.add_term(ToralPart::balanced(&mu), Scalar::one());
        }
        assert_eq!(hc_xi(&q, &z), want);
        let solved = central_by_solve(&q, &lam).unwrap().z;
        assert_eq!(solved, z);
        // z acts on Verma modules by ϱ^{λ+ρ,μ}(ξ(z)), a Weyl-invariant value
        let xi = hc_xi(&q, &z);
        let roots = q.presentation().roots().clone();
        let rho = roots.rho();
        for (l, m) in [([0, 0], [0, 0]), ([2, 0], [1, 1]), ([1, 1], [2, 0]), ([0, 2], [1, -1])] {
            let pair = CharacterPair::new(Weight(l.to_vec()), Weight(m.to_vec()));
            let module = verma(&q, pair.clone(), 2).unwrap();
            let shifted = &pair.lambda + &rho;
            let want = char_eval(&q, &CharacterPair::new(shifted.clone(), pair.mu.clone()), &xi);
            let a = act(&q, &z, &module).unwrap();
            for r in 0..module.dim() {
                for c in 0..module.dim() {
                    let v = if r == c { want.clone() } else { Scalar::zero() };
                    assert_eq!(a.get(r, c), &v);
                }
            }
            for i in 0..2 {
                let refl = roots.reflect(i, &shifted).unwrap();
                assert_eq!(char_eval(&q, &CharacterPair::new(refl, pair.mu.clone()), &xi), want);
            }
        }
    }

    /// `ξ(z_λ)` is `W`-invariant, has leading term `|Wλ| av(λ)` and otherwise
    /// only `av(μ)` with `μ` strictly below `λ`.
    #[test]
    fn harish_chandra_images_are_triangular() {
        let q = rank_two();
        let roots = q.presentation().roots().clone();
        let lambdas = [Weight::zero(2), Weight::from_eps(&[1, 0]), Weight::from_eps(&[1, 1])];
        let mut leading = Vec::new();
        for lam in &lambdas {
            let cand = central_from_trace(&q, lam).unwrap();
            let xi = hc_xi(&q, &cand.z);
            for w in roots.weyl_group() {
                assert_eq!(weyl_act(&w, &xi).unwrap(), xi);
            }
            let exp = av_expansion(&q, &xi).unwrap();
            let orbit = roots.weyl_orbit(lam).len() as i64;
            assert_eq!(exp[lam], Scalar::from_int(orbit));
            for mu in exp.keys() {
                assert!(mu == lam || roots.dominated_by(mu, lam));
            }
            leading.push(lam.clone());
        }
        // distinct leading terms make the images independent
        leading.dedup();
        assert_eq!(leading.len(), lambdas.len());
    }

    #[test]
    fn adjoint_central_element_by_both_methods() {
        let q = rank_two();
        let lam = Weight::from_eps(&[1, 1]);
        let a = central_from_trace(&q, &lam).unwrap().z;
        let b = central_by_solve(&q, &lam).unwrap().z;
        assert_eq!(a, b);
    }

    #[test]
    fn parity_kernels() {
        let k1 = parity_kernel(1, 3, KernelMode::LambdaOnly).unwrap();
        assert!(k1.contains(&(vec![1], vec![1])));
        assert!(parity_kernel(2, 3, KernelMode::LambdaOnly).unwrap().is_empty());
        let k3 = parity_kernel(3, 2, KernelMode::LambdaOnly).unwrap();
        assert!(k3.contains(&(vec![1, 0, 1], vec![1, 0, 1])));
        assert!(parity_kernel(4, 2, KernelMode::LambdaOnly).unwrap().is_empty());
        for n in 1..=4 {
            assert!(parity_kernel(n, 2, KernelMode::Full).unwrap().is_empty());
        }
    }
}
