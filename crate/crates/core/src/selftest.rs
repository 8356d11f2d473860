//! Seeded property suites with a deterministic JSON report.
//!
//! Every suite draws from a fixed seed and reports only counts and
//! counterexamples, so two runs print byte-identical output.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::abelian::{AbGroup, AbHom};
use crate::algebra::{verify_flow, AlgElem, AlgebraBase};
use crate::catalog::{mu_q, product_triplet, triplet_q, triplet_theta};
use crate::classify::{
    build_pi, centralizer, check_conditions, decide_conjugacy, search_conjugacy, verify_pi, PiPhi, PiSamples, Verdict,
};
use crate::cocycle::{coboundary_of, coboundary_witness, Cocycle};
use crate::dynamics::{
    beta_apply, gamma0_mul, rho_apply, verify_rho_relations, weak_mixing_witness, Gamma0Elem, RhoSample, Triplet,
};
use crate::error::{Error, Result};
use crate::lambda::{mu_hat, mu_tilde};
use crate::lattice::{constants, det2, gcd2, AffineSL2, LatticePoint};
use crate::report::CheckReport;
use crate::sampling::Sampler;
use crate::scalars::Phase;

/// Canonical suite names in run order.
pub const SUITES: &[&str] = &[
    "det_gcd",
    "coboundary",
    "action",
    "intertwiner",
    "centralizer",
    "factor",
    "separation",
    "mixing",
    "malleability",
];

/// Short names also accepted by `--suite`.
const ALIASES: &[(&str, &str)] =
    &[("lemma21", "det_gcd"), ("prop22", "coboundary"), ("relations", "action"), ("lemma42", "intertwiner")];

/// Resolves a suite name or alias.
pub fn resolve(name: &str) -> Option<&'static str> {
    SUITES.iter().copied().find(|s| *s == name).or_else(|| ALIASES.iter().find(|(a, _)| *a == name).map(|(_, s)| *s))
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Orders used by the malleability suite.
    pub qs: Vec<u64>,
}

impl Default for Options {
    fn default() -> Self {
        Options { qs: vec![3, 5] }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub report: CheckReport,
    pub params: Value,
}

impl SuiteOutcome {
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "ok": self.report.ok,
            "checked": self.report.checked,
            "counterexamples": self.report.counterexamples,
            "params": self.params,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Selftest {
    pub ok: bool,
    pub suites: Vec<SuiteOutcome>,
}

impl Selftest {
    pub fn to_json(&self) -> Value {
        json!({
            "ok": self.ok,
            "suites": self.suites.iter().map(SuiteOutcome::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Runs one suite, or all of them when `suite` is `None`.
pub fn run(suite: Option<&str>, opts: &Options) -> Result<Selftest> {
    let names: Vec<&'static str> = match suite {
        Some(s) => vec![resolve(s).ok_or_else(|| Error::Unsupported(format!("unknown suite {s:?}")))?],
        None => SUITES.to_vec(),
    };
    let suites = names.into_iter().map(|n| run_suite(n, opts)).collect::<Result<Vec<_>>>()?;
    Ok(Selftest { ok: suites.iter().all(|s| s.report.ok), suites })
}

pub fn run_suite(name: &str, opts: &Options) -> Result<SuiteOutcome> {
    let name = resolve(name).ok_or_else(|| Error::Unsupported(format!("unknown suite {name:?}")))?;
    let (report, params) = match name {
        "det_gcd" => det_gcd(),
        "coboundary" => coboundary()?,
        "action" => action()?,
        "intertwiner" => intertwiner()?,
        "centralizer" => centralizers()?,
        "factor" => factor()?,
        "separation" => separation()?,
        "mixing" => mixing()?,
        "malleability" => malleability(&opts.qs)?,
        _ => unreachable!("resolved above"),
    };
    Ok(SuiteOutcome { name, report, params })
}

const WINDOW: i64 = 6;

/// The mod-2 identity exhaustively on the window, plus SL(2, Z)-invariance
/// of `det` and `gcd` on random samples.
pub fn det_gcd() -> (CheckReport, Value) {
    let mut r = CheckReport::new();
    let pts: Vec<LatticePoint> =
        (-WINDOW..=WINDOW).flat_map(|q| (-WINDOW..=WINDOW).map(move |p| LatticePoint::new(q, p))).collect();
    for k in &pts {
        for k0 in &pts {
            let diff: BigInt = det2(k, k0) - (gcd2(k) + gcd2(k0) - gcd2(&(k + k0)));
            r.check(diff.is_even(), || json!({"check": "mod2", "k": k, "k0": k0}));
        }
    }
    let mut s = Sampler::new(0x21);
    for _ in 0..200 {
        let (g, k, k0) = (s.sl2(8), s.point(20), s.point(20));
        let (gk, gk0) = (g.apply(&k), g.apply(&k0));
        r.check(
            det2(&gk, &gk0) == det2(&k, &k0) && gcd2(&gk) == gcd2(&k),
            || json!({"check": "invariance", "k": k, "k0": k0}),
        );
    }
    (r, json!({"window": WINDOW, "pairs": pts.len() * pts.len(), "invariance_samples": 200}))
}

fn same_cocycle(a: &Cocycle, b: &Cocycle) -> Result<bool> {
    let els = a.group().elements()?;
    Ok(els.iter().all(|g| els.iter().all(|h| a.eval(g, h) == b.eval(g, h))))
}

fn coboundary_groups() -> Vec<AbGroup> {
    [
        vec![2],
        vec![3],
        vec![4],
        vec![2, 2],
        vec![6],
        vec![2, 4],
        vec![2, 2, 2],
        vec![8],
        vec![3, 3],
        vec![12],
        vec![2, 6],
        vec![4, 4],
        vec![2, 8],
        vec![2, 2, 2, 2],
    ]
    .into_iter()
    .map(|t| AbGroup::new(0, t).expect("valid"))
    .collect()
}

/// The commutator criterion against the brute-force coboundary solver. Each
/// witness is also checked to reproduce the difference exactly.
pub fn coboundary() -> Result<(CheckReport, Value)> {
    let mut s = Sampler::new(0x22);
    let mut pairs: Vec<(&'static str, Cocycle, Cocycle)> = Vec::new();
    for g in coboundary_groups() {
        let a = s.bichar(&g);
        let b = s.bichar(&g);
        let da = coboundary_of(&g, &s.cochain(&g, 12))?;
        let db = coboundary_of(&g, &s.cochain(&g, 12))?;
        let ta = a.add(&da)?.to_table()?;
        pairs.push(("random_coboundary", ta.clone(), a.clone()));
        pairs.push(("random_tables", ta, b.add(&db)?.to_table()?));
        pairs.push(("random_bichars", a.clone(), b));
        pairs.push(("transpose", a.clone(), transpose(&a)?));
    }
    for q in [2u64, 3, 4] {
        let m = mu_q(q);
        let g = m.group().clone();
        let d = coboundary_of(&g, &s.cochain(&g, 6))?;
        pairs.push(("mu_q_coboundary", m.clone(), m.add(&d)?.to_table()?));
        pairs.push(("mu_q_square", m.clone(), m.add(&m)?));
        pairs.push(("mu_q_trivial", m.clone(), Cocycle::trivial(&g)));
    }
    let mut r = CheckReport::new();
    let (mut yes, mut no) = (0usize, 0usize);
    for (i, (kind, m1, m2)) in pairs.iter().enumerate() {
        let criterion = m1.cohomologous(m2)?;
        let witness = coboundary_witness(m1, m2)?;
        r.check(
            criterion == witness.is_some(),
            || json!({"pair": i, "kind": kind, "criterion": criterion, "witness": witness.is_some()}),
        );
        if let Some(b) = &witness {
            let rebuilt = m2.add(&coboundary_of(m1.group(), b)?)?;
            r.check(same_cocycle(&rebuilt, m1)?, || json!({"pair": i, "kind": kind, "check": "witness"}));
        }
        if criterion {
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok((r, json!({"pairs": pairs.len(), "cohomologous": yes, "not_cohomologous": no})))
}

fn transpose(c: &Cocycle) -> Result<Cocycle> {
    let b = c.as_bicharacter().expect("bichar input");
    let m = b.matrix();
    let t = (0..m.len()).map(|i| (0..m.len()).map(|j| m[j][i]).collect()).collect();
    Cocycle::bichar(c.group(), t)
}

fn random_gamma0(s: &mut Sampler, t: &Triplet) -> Gamma0Elem {
    Gamma0Elem { c: s.character(t.group()), k: s.point(3), gamma: s.sl2(5) }
}

/// The group law of `Γ₀`, the `ρ` relations and the `*`-homomorphism
/// property of `ρ`, over `((Z/3)², μ_3, χ_3)`.
pub fn action() -> Result<(CheckReport, Value)> {
    let t = triplet_q(3);
    let base = t.base().clone();
    let mut s = Sampler::new(0x3);
    let mut r = CheckReport::new();
    for i in 0..100 {
        let (a, b, c) = (random_gamma0(&mut s, &t), random_gamma0(&mut s, &t), random_gamma0(&mut s, &t));
        let left = gamma0_mul(&t, &gamma0_mul(&t, &a, &b)?, &c)?;
        let right = gamma0_mul(&t, &a, &gamma0_mul(&t, &b, &c)?)?;
        r.check(left == right, || json!({"triple": i, "check": "associativity"}));
    }
    let mut samples = Vec::new();
    for _ in 0..50 {
        let lambda_only = s.int(0, 1) == 1;
        let x = s.alg_elem(&base, 2, 3, lambda_only);
        samples.push(RhoSample { k: s.point(3), l: s.point(3), gamma: s.sl2(5), x });
    }
    let xi = constants().xi;
    for _ in 0..10 {
        let x = s.alg_elem(&base, 2, 3, true);
        samples.push(RhoSample { k: constants().e1, l: s.point(2), gamma: xi.matrix.clone(), x });
    }
    r.merge(verify_rho_relations(&t, &samples)?);
    for i in 0..20 {
        let g = random_gamma0(&mut s, &t);
        let x = s.alg_elem(&base, 2, 3, false);
        let y = s.alg_elem(&base, 2, 3, false);
        let (gx, gy) = (rho_apply(&t, &g, &x)?, rho_apply(&t, &g, &y)?);
        r.check(rho_apply(&t, &g, &x.mul(&y)?)? == gx.mul(&gy)?, || json!({"sample": i, "check": "rho_mul"}));
        r.check(rho_apply(&t, &g, &x.star())? == gx.star(), || json!({"sample": i, "check": "rho_star"}));
        r.check(gx.trace() == x.trace(), || json!({"sample": i, "check": "rho_trace"}));
        let h = random_gamma0(&mut s, &t);
        let gh = gamma0_mul(&t, &g, &h)?;
        r.check(
            rho_apply(&t, &gh, &x)? == rho_apply(&t, &g, &rho_apply(&t, &h, &x)?)?,
            || json!({"sample": i, "check": "rho_law"}),
        );
    }
    let cube = xi.mul(&xi).mul(&xi);
    r.check(cube.is_identity(), || json!({"check": "xi_order"}));
    Ok((r, json!({"associativity": 100, "rho_samples": samples.len(), "homomorphism_samples": 20})))
}

/// The intertwiner for the unipotent map on `((Z/3)², μ_3, χ_3)`, the
/// cocycle-change identity behind it, and the gcd-weight mutation on
/// `(Z/4)²`, which must be caught.
pub fn intertwiner() -> Result<(CheckReport, Value)> {
    let t = triplet_q(3);
    let phi = AbHom::new(t.group(), t.group(), vec![vec![1, 0], vec![1, 1]])?;
    let pi = build_pi(&t, &t, &phi)?;
    let samples = PiSamples::random(&t, 0x42, 100, 2, 20);
    let mut r = verify_pi(&pi, &samples)?;

    let g = t.group().clone();
    let mut s = Sampler::new(0x420);
    let mu = t.mu();
    let mu0 = mu.add(&coboundary_of(&g, &s.cochain(&g, 9))?)?.to_table()?;
    r.check(mu.cohomologous(&mu0)?, || json!({"check": "cohomologous"}));
    for i in 0..200 {
        let (l1, l2) = (s.lambda(&g, 2, 3), s.lambda(&g, 2, 3));
        let sum = l1.add(&l2)?;
        let defect = |m: &Cocycle| mu_tilde(m, &l1, &l2) - mu_hat(m, &l1) - mu_hat(m, &l2) + mu_hat(m, &sum);
        r.check(defect(mu) == defect(&mu0), || json!({"sample": i, "check": "cocycle_change"}));
    }

    let four = triplet_q(4);
    let other = Triplet::new(four.mu().clone(), four.chi().pow(3))?;
    let id = AbHom::new(four.group(), other.group(), vec![vec![1, 0], vec![0, 1]])?;
    let good = build_pi(&four, &other, &id)?;
    let mutation_samples = PiSamples::random(&four, 0x44, 20, 2, 3);
    r.merge(verify_pi(&good, &mutation_samples)?);
    let mutated = verify_pi(&PiPhi::without_gcd_weights(good), &mutation_samples)?;
    r.check(!mutated.ok, || json!({"check": "mutation_detected"}));
    Ok((
        r,
        json!({
            "pairs": samples.pairs.len(),
            "affine": samples.affine.len(),
            "cocycle_change_samples": 200,
            "mutation_caught": !mutated.ok,
        }),
    ))
}

/// Centralizer orders and cyclicity for the catalogued triplets.
pub fn centralizers() -> Result<(CheckReport, Value)> {
    let mut r = CheckReport::new();
    let mut cases = vec![];
    for q in [3u64, 5, 7] {
        cases.push((format!("mu_{q}"), triplet_q(q), q as usize, true));
    }
    cases.push(("product_3_5".into(), product_triplet(&[3, 5])?, 15, true));
    let z3 = AbGroup::cyclic_power(3, 1);
    cases.push(("trivial_z3".into(), crate::catalog::untwisted(&z3)?, 2, true));
    let mut seen = vec![];
    for (name, t, order, cyclic) in cases {
        let c = centralizer(&t, None)?;
        r.check(
            c.order == Some(order) && c.cyclic == Some(cyclic) && c.complete,
            || json!({"case": name, "order": c.order, "cyclic": c.cyclic}),
        );
        for phi in &c.elements {
            r.check(check_conditions(&t, &t, phi)? == (true, true), || json!({"case": name, "check": "element"}));
        }
        seen.push(json!({"case": name, "order": c.order}));
    }
    Ok((r, Value::Array(seen)))
}

/// Nondegeneracy of the `μ_q`, degeneracy of the trivial cocycle.
pub fn factor() -> Result<(CheckReport, Value)> {
    let mut r = CheckReport::new();
    for q in [3u64, 5, 7] {
        r.check(mu_q(q).is_nondegenerate(), || json!({"case": format!("mu_{q}")}));
    }
    r.check(product_triplet(&[3, 5])?.mu().is_nondegenerate(), || json!({"case": "product_3_5"}));
    for g in [AbGroup::cyclic_power(3, 1), AbGroup::cyclic_power(3, 2), AbGroup::free(2)] {
        let w = Cocycle::trivial(&g).degeneracy_witness();
        r.check(w.as_ref().is_some_and(|w| !w.is_zero()), || json!({"case": "trivial", "group": g.torsion()}));
    }
    Ok((r, json!({"q": [3, 5, 7]})))
}

/// `θ` drawn as `n/d` with `0 < n/d ≤ 1/4`, optionally negated.
fn family_theta(s: &mut Sampler) -> Phase {
    let d = s.int(4, 24);
    let theta = Phase::new(s.int(1, d / 4), d);
    if s.int(0, 1) == 0 {
        theta
    } else {
        -theta
    }
}

/// The `Z²` closed form against bounded enumeration, and its verdict against
/// the law `2θ_a = ±2θ_b`.
pub fn separation() -> Result<(CheckReport, Value)> {
    let mut s = Sampler::new(0x5);
    let chi = [Phase::new(1, 3), Phase::ZERO];
    let mut r = CheckReport::new();
    let (mut yes, mut half) = (0, 0);
    for i in 0..60 {
        let ta = family_theta(&mut s);
        let tb = match s.int(0, 4) {
            0 => ta,
            1 => -ta,
            2 => {
                half += 1;
                ta + Phase::HALF
            }
            _ => family_theta(&mut s),
        };
        let (a, b) = (triplet_theta(ta, chi), triplet_theta(tb, chi));
        let closed = decide_conjugacy(&a, &b, None)?;
        let search = search_conjugacy(&a, &b, Some(3))?;
        let law = ta.scale(2) == tb.scale(2) || ta.scale(2) == -tb.scale(2);
        r.check(
            (closed.verdict == Verdict::Yes) == law,
            || json!({"pair": i, "check": "law", "theta_a": ta, "theta_b": tb}),
        );
        r.check(search.verdict != Verdict::No, || json!({"pair": i, "check": "search_incomplete"}));
        r.check(
            (search.verdict == Verdict::Yes) == (closed.verdict == Verdict::Yes),
            || json!({"pair": i, "check": "agreement", "theta_a": ta, "theta_b": tb}),
        );
        if let Some(w) = &closed.witness {
            r.check(check_conditions(&a, &b, w)? == (true, true), || json!({"pair": i, "check": "witness"}));
            yes += 1;
        }
    }
    Ok((r, json!({"pairs": 60, "yes": yes, "half_shifted": half, "bound": 3})))
}

/// Weak-mixing witnesses on random lists, re-verified by direct traces.
pub fn mixing() -> Result<(CheckReport, Value)> {
    let t = triplet_q(3);
    let mut s = Sampler::new(0x31);
    let mut r = CheckReport::new();
    let mut radius = 0i64;
    for i in 0..20 {
        let n = s.int(1, 4) as usize;
        let mut elems: Vec<AlgElem> = (0..n).map(|_| s.alg_elem(t.base(), 2, 3, true)).collect();
        if i % 2 == 0 {
            elems.push(elems[0].star());
        }
        let k = weak_mixing_witness(&t, &elems)?;
        radius = radius.max(k.to_i64().map(|(a, b)| a.abs().max(b.abs())).unwrap_or(i64::MAX));
        let shift = AffineSL2::translation(k.clone());
        let mut exact = true;
        for a in &elems {
            for b in &elems {
                let lhs = a.mul(&beta_apply(&t, &shift, b)?)?.trace();
                exact &= lhs == a.trace().mul(&b.trace());
            }
        }
        r.check(exact, || json!({"list": i, "k": k}));
    }
    Ok((r, json!({"lists": 20, "max_witness_radius": radius})))
}

/// The flow checks for `((Z/q)², μ_q)` for each `q`.
pub fn malleability(qs: &[u64]) -> Result<(CheckReport, Value)> {
    let mut r = CheckReport::new();
    for &q in qs {
        let base: Arc<AlgebraBase> = AlgebraBase::new(mu_q(q));
        r.merge(verify_flow(&base, 0x60 + q, 20)?);
    }
    Ok((r, json!({"q": qs, "samples": 20})))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(resolve("lemma21"), Some("det_gcd"));
        assert_eq!(resolve("malleability"), Some("malleability"));
        assert_eq!(resolve("nope"), None);
        assert!(run(Some("nope"), &Options::default()).is_err());
    }

    #[test]
    fn cheap_suites_pass() {
        for name in ["det_gcd", "factor", "centralizer"] {
            let out = run_suite(name, &Options::default()).unwrap();
            assert!(out.report.ok, "{name}: {:?}", out.report.counterexamples);
        }
        let (r, p) = det_gcd();
        assert_eq!(r.checked, 28561 + 200);
        assert_eq!(p["pairs"], 28561);
    }
}
