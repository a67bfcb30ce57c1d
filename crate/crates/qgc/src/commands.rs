//! One runner per subcommand. Every runner is deterministic given its
//! arguments; progress goes to stderr through the `progress` callback.

use qgc_core::center::{
    av_expansion, central_by_solve, central_from_trace, hc_xi, is_central, parity_kernel,
    CentralCandidate, KernelMode, Method, ToralPart,
};
use qgc_core::qgroup::{Element, QuantumGroup, Side};
use qgc_core::repn::{self, CharacterPair};
use qgc_core::rootdata::{RootVec, Weight};
use qgc_core::scalars::Scalar;
use qgc_core::Error;
use rand::Rng;
use serde_json::{json, Value};

use crate::args::{Format, Request, Task};
use crate::fuzz;
use crate::render::{self, Style};
use crate::report::Report;

pub struct Ctx<'a> {
    pub q: &'a QuantumGroup,
    pub style: Style,
    pub progress: &'a dyn Fn(&str),
}

pub fn style_for(f: Format) -> Style {
    match f {
        Format::Json => Style::Json,
        Format::Text => Style::Text,
    }
}

/// Runs a validated request against `q`, which must have rank `req.n`.
pub fn run(req: &Request, q: &QuantumGroup, progress: &dyn Fn(&str)) -> Report {
    let ctx = Ctx {
        q,
        style: style_for(req.format),
        progress,
    };
    let name = req.task.name();
    let out = match &req.task {
        Task::RootData => root_data(&ctx),
        Task::GradedDim { side, nu } => graded_dim(&ctx, *side, nu),
        Task::PairingGram { nu } => pairing_gram(&ctx, nu),
        Task::RossoCheck { height, trials, seed } => rosso_check(&ctx, *height, *trials, *seed),
        Task::Verma { lambda, mu, depth, check_eq46 } => verma(&ctx, lambda, mu, *depth, *check_eq46),
        Task::Irrep { lambda } => irrep(&ctx, lambda),
        Task::Central { lambda, method, verify } => central(&ctx, lambda, *method, *verify),
        Task::HcImage { lambda, method } => hc_image(&ctx, lambda, *method),
        Task::ParityKernel { bound, mode } => parity(&ctx, *bound, *mode),
        Task::Selftest { seed } => Ok(selftest(&ctx, *seed)),
    };
    out.unwrap_or_else(|e| Report::error(name, &e))
}

fn words(ws: &[Vec<u8>]) -> Value {
    Value::Array(ws.iter().map(render::word).collect())
}

fn text(x: &Element) -> String {
    x.to_string()
}

fn root_data(c: &Ctx) -> Result<Report, Error> {
    let roots = c.q.presentation().roots();
    let n = roots.rank();
    let all = |f: &dyn Fn(usize) -> Weight| Value::Array((0..n).map(|i| render::weight(&f(i))).collect());
    Ok(Report::value(
        "root-data",
        json!({
            "n": n,
            "simple_roots": all(&|i| roots.simple_root(i)),
            "fundamental_weights": all(&|i| roots.fundamental(i)),
            "rho": render::weight(&roots.rho()),
            "positive_roots": roots.positive_roots().iter().map(render::weight).collect::<Vec<_>>(),
            "weyl_order": roots.weyl_order(),
        }),
    ))
}

fn graded_dim(c: &Ctx, side: Side, nu: &RootVec) -> Result<Report, Error> {
    let b = c.q.basis(side, nu)?;
    let roots = c.q.presentation().roots();
    Ok(Report::value(
        "graded-dim",
        json!({
            "sign": if side == Side::E { "+" } else { "-" },
            "nu": nu,
            "dim": b.dim(),
            "kostant": roots.kostant_count(nu),
            "representatives": words(b.reps()),
        }),
    ))
}

fn pairing_gram(c: &Ctx, nu: &RootVec) -> Result<Report, Error> {
    let g = c.q.gram(nu)?;
    let det = g.matrix.determinant();
    Ok(Report::check(
        "pairing-gram",
        !det.is_zero(),
        json!({
            "nu": nu,
            "rows": words(&g.rows),
            "cols": words(&g.cols),
            "matrix": render::matrix(&g.matrix, c.style),
            "determinant": render::scalar(&det, c.style),
        }),
    ))
}

fn content(n: usize, w: &[u8]) -> RootVec {
    qgc_core::qgroup::content(n, w)
}

fn rosso_check(c: &Ctx, height: usize, trials: usize, seed: u64) -> Result<Report, Error> {
    let q = c.q;
    let n = q.rank();
    let mut rng = fuzz::rng(seed);
    let gens = fuzz::generators(q);
    let mut witness = Value::Null;
    let mut invariance = 0;
    for t in 0..trials {
        let a = &gens[t % gens.len()];
        let b = fuzz::element(q, &mut rng, height);
        let d = fuzz::element(q, &mut rng, height);
        (c.progress)(&format!("rosso-check: invariance trial {}/{}", t + 1, trials));
        if q.check_ad_invariance(a, &b, &d) {
            invariance += 1;
        } else if witness.is_null() {
            witness = json!({"check": "ad-invariance", "a": text(a), "b": text(&b), "c": text(&d)});
        }
    }
    // monomials from mismatched blocks pair to zero
    let mut orthogonal = 0;
    for _ in 0..trials {
        let (x, y) = loop {
            let x = fuzz::element(q, &mut rng, height);
            let y = fuzz::element(q, &mut rng, height);
            let (tx, _) = x.iter().next().expect("nonzero");
            let (ty, _) = y.iter().next().expect("nonzero");
            if content(n, &tx.e) != content(n, &ty.f) || content(n, &tx.f) != content(n, &ty.e) {
                break (
                    Element::from_term(tx.clone(), Scalar::one()),
                    Element::from_term(ty.clone(), Scalar::one()),
                );
            }
        };
        if q.rosso(&x, &y).is_zero() {
            orthogonal += 1;
        } else if witness.is_null() {
            witness = json!({"check": "orthogonality", "x": text(&x), "y": text(&y)});
        }
    }
    let ok = invariance == trials && orthogonal == trials;
    Ok(Report::check(
        "rosso-check",
        ok,
        json!({
            "height": height,
            "trials": trials,
            "seed": seed,
            "invariance_passed": invariance,
            "orthogonality_passed": orthogonal,
            "witness": witness,
        }),
    ))
}

fn verma(c: &Ctx, lambda: &Weight, mu: &Weight, depth: u32, check: bool) -> Result<Report, Error> {
    let pair = CharacterPair::new(lambda.clone(), mu.clone());
    let m = repn::verma(c.q, pair.clone(), depth)?;
    let spaces: Vec<Value> = m
        .spaces()
        .iter()
        .map(|s| json!({"content": s.content, "weight": render::weight(&s.weight), "dim": s.words.len()}))
        .collect();
    let mut payload = json!({
        "lambda": render::weight(lambda),
        "mu": render::weight(mu),
        "depth": depth,
        "dim": m.dim(),
        "spaces": spaces,
    });
    if !check {
        return Ok(Report::value("verma", payload));
    }
    let mut results = Vec::new();
    let mut ok = true;
    for i in 0..c.q.rank() {
        for k in 0..depth {
            (c.progress)(&format!("verma: straightening i={} k={}", i + 1, k));
            let holds = repn::straightening_holds(c.q, &pair, i, k)?;
            ok &= holds;
            results.push(json!({"i": i + 1, "k": k, "holds": holds}));
        }
    }
    payload["eq46"] = Value::Array(results);
    Ok(Report::check("verma", ok, payload))
}

fn irrep(c: &Ctx, lambda: &Weight) -> Result<Report, Error> {
    let roots = c.q.presentation().roots();
    (c.progress)("irrep: building the quotient module");
    let m = repn::irreducible(c.q, lambda)?;
    let built = m.multiplicities();
    let expected = roots.freudenthal_mults(lambda)?;
    let table: Vec<Value> = expected
        .iter()
        .map(|(w, k)| {
            json!({
                "weight": render::weight(w),
                "mult": built.get(w).copied().unwrap_or(0),
                "freudenthal": k,
            })
        })
        .collect();
    let symmetric = roots
        .weyl_group()
        .iter()
        .all(|s| built.iter().all(|(w, k)| built.get(&s.apply(w)) == Some(k)));
    let matches = built == expected;
    Ok(Report::check(
        "irrep",
        matches && symmetric,
        json!({
            "lambda": render::weight(lambda),
            "dim": m.dim(),
            "weyl_dim": roots.weyl_dim(lambda)?,
            "multiplicities": table,
            "matches_freudenthal": matches,
            "weyl_symmetric": symmetric,
        }),
    ))
}

fn build_central(c: &Ctx, lambda: &Weight, method: Method) -> Result<CentralCandidate, Error> {
    (c.progress)(&format!("central: {method:?} construction for {:?}", lambda.0));
    match method {
        Method::Trace => central_from_trace(c.q, lambda),
        Method::Solve => central_by_solve(c.q, lambda),
    }
}

/// `Σ_μ dim L(λ)_μ ω'_μ ω_{−μ}`.
fn expected_image(q: &QuantumGroup, lambda: &Weight) -> Result<ToralPart, Error> {
    let mut want = ToralPart::zero();
    for (mu, k) in q.presentation().roots().freudenthal_mults(lambda)? {
        let root = mu.to_root().ok_or(Error::NotInRootLattice)?;
        want.add_term(ToralPart::balanced(&root), Scalar::from_int(k as i64));
    }
    Ok(want)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Trace => "trace",
        Method::Solve => "solve",
    }
}

fn central(c: &Ctx, lambda: &Weight, method: Method, verify: bool) -> Result<Report, Error> {
    let cand = build_central(c, lambda, method)?;
    let mut payload = json!({
        "lambda": render::weight(lambda),
        "method": method_name(method),
        "terms": cand.z.len(),
        "element": render::element(&cand.z, c.style),
    });
    if !verify {
        return Ok(Report::value("central", payload));
    }
    (c.progress)("central: verifying");
    let centrality = is_central(c.q, &cand.z);
    let image = hc_xi(c.q, &cand.z) == expected_image(c.q, lambda)?;
    payload["centrality"] = json!(centrality);
    payload["hc_image_matches"] = json!(image);
    Ok(Report::check("central", centrality && image, payload))
}

fn hc_image(c: &Ctx, lambda: &Weight, method: Method) -> Result<Report, Error> {
    let cand = build_central(c, lambda, method)?;
    let xi = hc_xi(c.q, &cand.z);
    let av: Vec<Value> = av_expansion(c.q, &xi)?
        .iter()
        .map(|(w, k)| json!({"weight": render::weight(w), "coeff": render::scalar(k, c.style)}))
        .collect();
    Ok(Report::value(
        "hc-image",
        json!({
            "lambda": render::weight(lambda),
            "image": render::toral_part(&xi, c.style),
            "av_expansion": av,
        }),
    ))
}

fn parity(c: &Ctx, bound: i64, mode: KernelMode) -> Result<Report, Error> {
    let points = parity_kernel(c.q.rank(), bound, mode)?;
    let list: Vec<Value> = points.iter().map(|(e, p)| json!({"eta": e, "phi": p})).collect();
    Ok(Report::value(
        "parity-kernel",
        json!({
            "bound": bound,
            "mode": if mode == KernelMode::Full { "full" } else { "lambda" },
            "count": points.len(),
            "empty": points.is_empty(),
            "points": list,
        }),
    ))
}

fn relators_vanish(q: &QuantumGroup) -> bool {
    [Side::E, Side::F].into_iter().all(|side| {
        q.relators(side).iter().all(|(_, terms)| {
            let mut acc = Element::zero();
            for (w, k) in terms {
                acc.add_scaled(k, &q.word_by_products(side, w));
            }
            acc.is_zero()
        })
    })
}

fn selftest(c: &Ctx, seed: u64) -> Report {
    let q = c.q;
    let n = q.rank();
    let roots = q.presentation().roots().clone();
    let mut rng = fuzz::rng(seed);
    let mut checks: Vec<(&str, Result<bool, Error>)> = Vec::new();
    (c.progress)("selftest: relations and Hopf axioms");
    checks.push(("relations", Ok(relators_vanish(q))));
    let gens = fuzz::generators(q);
    checks.push((
        "hopf-axioms",
        Ok(gens
            .iter()
            .all(|x| q.coassociativity_holds(x) && q.counit_holds(x) && q.antipode_holds(x))),
    ));
    (c.progress)("selftest: pairing");
    let mut s_inv = Ok(true);
    for _ in 0..5 {
        let len = rng.gen_range(0..=2);
        let w = fuzz::word(&mut rng, n, len);
        let rev: Vec<u8> = w.iter().rev().copied().collect();
        let y = fuzz::borel(q, &mut rng, Side::F, &w);
        let x = fuzz::borel(q, &mut rng, Side::E, &rev);
        s_inv = s_inv.and_then(|ok| {
            Ok(ok && q.skew_pair(&q.antipode(&y), &q.antipode(&x))? == q.skew_pair(&y, &x)?)
        });
    }
    checks.push(("pairing-antipode", s_inv));
    let mut gram = Ok(true);
    for h in 1..=3 {
        for nu in contents_of_height(n, h) {
            gram = gram.and_then(|ok| {
                let g = q.gram(&nu)?;
                Ok(ok && !g.matrix.determinant().is_zero() && g.rows.len() as u64 == roots.kostant_count(&nu))
            });
        }
    }
    checks.push(("gram-nonsingular", gram));
    let mut inv = true;
    for t in 0..4 {
        let b = fuzz::element(q, &mut rng, 2);
        let d = fuzz::element(q, &mut rng, 2);
        inv &= q.check_ad_invariance(&gens[t % gens.len()], &b, &d);
    }
    checks.push(("rosso-invariance", Ok(inv)));
    (c.progress)("selftest: modules");
    let w1 = roots.fundamental(0);
    checks.push((
        "irrep-multiplicities",
        repn::irreducible(q, &w1).and_then(|m| Ok(m.multiplicities() == roots.freudenthal_mults(&w1)?)),
    ));
    let lam = Weight::from_eps(&{
        let mut v = vec![0; n];
        v[0] = 1;
        v
    });
    if n <= 2 {
        (c.progress)("selftest: central element");
        checks.push((
            "central-element",
            central_from_trace(q, &lam)
                .and_then(|z| Ok(hc_xi(q, &z.z) == expected_image(q, &lam)?)),
        ));
    }
    let parity = parity_kernel(n, 2, KernelMode::Full).map(|k| k.is_empty());
    checks.push(("parity-full-empty", parity));
    let list: Vec<Value> = checks
        .iter()
        .map(|(name, r)| match r {
            Ok(ok) => json!({"check": name, "ok": ok}),
            Err(e) => json!({"check": name, "ok": false, "error": e.to_string()}),
        })
        .collect();
    let ok = checks.iter().all(|(_, r)| matches!(r, Ok(true)));
    let failed: Vec<&str> = checks
        .iter()
        .filter(|(_, r)| !matches!(r, Ok(true)))
        .map(|(name, _)| *name)
        .collect();
    Report::check("selftest", ok, json!({"n": n, "seed": seed, "checks": list, "failed": failed}))
}

/// Degrees of height exactly `h` in `Q⁺`.
pub fn contents_of_height(n: usize, h: usize) -> Vec<RootVec> {
    let mut out = Vec::new();
    fn rec(n: usize, left: usize, cur: &mut RootVec, out: &mut Vec<RootVec>) {
        if cur.len() == n - 1 {
            cur.push(left as i32);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=left {
            cur.push(k as i32);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    rec(n, h, &mut Vec::new(), &mut out);
    out
}
