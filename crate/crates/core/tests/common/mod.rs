//! Fixtures, independent oracles and property checks shared by the
//! integration targets.
#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use zhouval::curve::{
    pullback_order, universal_denominator, weakly_holomorphic_membership, CurvePoint, MonomialCurve, TruncatedSeries,
};
use zhouval::interp::{check_interpolation, Function, InterpolationProblem, Ring, Witness};
use zhouval::oracle::curve_order_by_taylor;
use zhouval::poly::{context, parse_polynomial, Context, ExponentVector, Polynomial};
use zhouval::rational::{q, qf, ExtQ, Q};
use zhouval::trop::{
    jumping_number, multiplicative_bound_constant, relative_type, tian_function, tian_value_lp, trop_value,
    truncate_weight, weight_relative_type, AnalyticWeight, BackgroundDensity, Ray,
};

pub const V1: [&str; 1] = ["z"];
pub const V2: [&str; 2] = ["z1", "z2"];
pub const V3: [&str; 3] = ["z1", "z2", "z3"];

pub fn weight(vars: &[&str], scale: Q, gens: &[(&str, Q)]) -> AnalyticWeight {
    AnalyticWeight::parse(vars, scale, gens).unwrap()
}

pub fn poly(text: &str, vars: &[&str]) -> Polynomial {
    parse_polynomial(text, vars).unwrap()
}

/// Runs `test` on `cases` draws from a fixed-seed generator.
pub fn check<S, F>(cases: u32, strategy: S, test: F) -> Result<(), String>
where
    S: Strategy,
    S::Value: std::fmt::Debug,
    F: Fn(S::Value) -> Result<(), TestCaseError>,
{
    let config = Config { cases, failure_persistence: None, max_global_rejects: 100_000, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

// ---- independent oracles ----

/// `min <w, alpha>` over the support, straight from the term list.
pub fn monomial_valuation(f: &Polynomial, w: &[Q]) -> Option<Q> {
    f.terms()
        .map(|(e, _)| e.entries().iter().zip(w).map(|(&k, wi)| wi * Q::from_integer(k.into())).sum::<Q>())
        .min()
}

/// `n` is a nonnegative combination of `p` and `q`.
pub fn representable(n: i64, p: i64, q: i64) -> bool {
    n >= 0 && (0..=n / p).any(|a| (n - a * p) % q == 0)
}

/// Largest non-representable integer, by scanning up to `pq`.
pub fn frobenius_brute(p: i64, q: i64) -> i64 {
    (0..=p * q).rev().find(|&n| !representable(n, p, q)).unwrap_or(-1)
}

/// Smallest `m` with `pm + k` representable for every `k >= 0`.
pub fn denominator_exponent_brute(p: i64, q: i64) -> u32 {
    let f = frobenius_brute(p, q);
    (0u32..).find(|&m| (0..=f.max(0)).all(|k| representable(p * i64::from(m) + k, p, q))).unwrap()
}

// ---- strategies ----

pub fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=3).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| qf(n, d))
}

pub fn poly_in(vars: Context, max_terms: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    let n = vars.len();
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), small_q()), 1..=max_terms).prop_filter_map(
        "nonzero polynomial",
        move |terms| {
            let p = Polynomial::from_terms(vars.clone(), terms.into_iter().map(|(e, c)| (ExponentVector::new(e), c)))
                .unwrap();
            (!p.is_zero()).then_some(p)
        },
    )
}

pub fn ray_in(n: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((0i64..=6, 1i64..=4), n)
        .prop_filter("not all zero", |v| v.iter().any(|(a, _)| *a != 0))
        .prop_map(|v| v.into_iter().map(|(a, b)| qf(a, b)).collect())
}

pub fn curve_and_point() -> impl Strategy<Value = (MonomialCurve, CurvePoint)> {
    let curves = prop::sample::select(vec![(2u32, 3u32), (2, 5), (3, 4), (3, 5), (1, 2), (1, 3)]);
    let point = prop_oneof![Just(None), small_q().prop_map(Some)];
    (curves, point).prop_map(|((p, q), t)| {
        let pt = t.map_or(CurvePoint::Origin, |t| CurvePoint::rational(t).unwrap());
        (MonomialCurve::new(p, q).unwrap(), pt)
    })
}

// ---- property checks ----

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

/// Monomial valuations are additive on products, ultrametric on sums
/// and vanish on nonzero constants.
pub fn nu_w_axioms(cases: u32) -> Result<(), String> {
    let ctx = context(&V3);
    let strat = (poly_in(ctx.clone(), 5, 4), poly_in(ctx.clone(), 5, 4), ray_in(3), small_q());
    check(cases, strat, |(f, g, w, c)| {
        let ray = Ray::new(w.clone()).unwrap();
        let nu = |p: &Polynomial| trop_value(p, &ray).unwrap();
        ensure(nu(&f) == monomial_valuation(&f, &w).unwrap(), || format!("library disagrees with oracle on {f}"))?;
        let fg = f.checked_mul(&g).unwrap();
        ensure(nu(&fg) == nu(&f) + nu(&g), || format!("nu({f} * {g}) is not additive"))?;
        let s = f.checked_add(&g).unwrap();
        if !s.is_zero() {
            ensure(nu(&s) >= nu(&f).min(nu(&g)), || format!("nu({f} + {g}) below the minimum"))?;
        }
        ensure(nu(&f.scale(&c)) == nu(&f), || "scaling by a unit moved nu".into())?;
        ensure(nu(&Polynomial::constant(ctx.clone(), c.clone())).is_zero(), || "constant has nonzero value".into())
    })
}

/// Orders along a monomial curve satisfy the same axioms, with
/// `+infinity` on the defining ideal, and agree with Taylor expansion.
pub fn curve_valuation_axioms(cases: u32) -> Result<(), String> {
    let ctx = context(&V2);
    let strat = (curve_and_point(), poly_in(ctx.clone(), 4, 3), poly_in(ctx.clone(), 4, 3), small_q());
    check(cases, strat, |((curve, pt), f, g, c)| {
        let ord = |p: &Polynomial| pullback_order(p, &curve, &pt).unwrap();
        ensure(curve_order_by_taylor(&f, &curve, &pt) == Some(ord(&f)), || format!("Taylor oracle disagrees on {f}"))?;
        let fg = f.checked_mul(&g).unwrap();
        ensure(ord(&fg) == ord(&f) + ord(&g), || format!("ord({f} * {g}) is not additive at {pt}"))?;
        let s = f.checked_add(&g).unwrap();
        if !s.is_zero() {
            ensure(ord(&s) >= ord(&f).min(ord(&g)), || format!("ord({f} + {g}) below the minimum at {pt}"))?;
        }
        let unit = Polynomial::constant(ctx.clone(), c.clone());
        ensure(ord(&unit) == ExtQ::Finite(Q::zero()), || "constant has nonzero order".into())?;
        let defining = curve.defining_polynomial(&ctx).checked_mul(&f).unwrap();
        ensure(ord(&defining) == ExtQ::Infinity, || "defining ideal has finite order".into())
    })
}

/// `delta = z1^m` from the Frobenius oracle, and `delta * s` lies in the
/// local ring for every weakly holomorphic truncation `s`.
pub fn universal_denominator_property(p: u32, q: u32, expected_m: u32, cases: u32) -> Result<(), String> {
    let curve = MonomialCurve::new(p, q).unwrap();
    let m = denominator_exponent_brute(i64::from(p), i64::from(q));
    if m != expected_m {
        return Err(format!("Frobenius oracle gives m = {m} for ({p},{q}), expected {expected_m}"));
    }
    let delta = universal_denominator(&curve);
    let expected = Polynomial::monomial(context(&V2), ExponentVector::new(vec![m, 0]), Q::one());
    if delta != expected {
        return Err(format!("denominator for ({p},{q}) is {delta}, expected {expected}"));
    }
    let f = frobenius_brute(i64::from(p), i64::from(q));
    let strat = (1i64..=8).prop_flat_map(move |extra| {
        let order = f + extra;
        prop::collection::vec((0..order, small_q()), 0..8).prop_map(move |terms| (terms, order))
    });
    let pulled = curve.pullback(&delta).unwrap();
    check(cases, strat, |(terms, order)| {
        let s = TruncatedSeries::new(terms, order).unwrap();
        let before = weakly_holomorphic_membership(&s, &curve).unwrap();
        ensure(before.in_ow, || "nonnegative t-series must be weakly holomorphic".into())?;
        let moved = s.mul_exact(&pulled);
        let after = weakly_holomorphic_membership(&moved, &curve).unwrap();
        ensure(after.in_o, || format!("delta * s left the local ring for ({p},{q})"))?;
        for (k, _) in moved.terms() {
            ensure(representable(k, i64::from(p), i64::from(q)), || format!("t^{k} is not in the semigroup"))?;
        }
        Ok(())
    })
}

/// Printing and reparsing a polynomial is the identity.
pub fn parse_round_trip(cases: u32) -> Result<(), String> {
    let ctx = context(&V3);
    check(cases, poly_in(ctx, 6, 5), |f| {
        let back = f.parse_like(&f.to_string()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure(back == f, || format!("`{f}` reparsed as `{back}`"))
    })
}

// ---- interpolation corpus ----

fn cusp_functions() -> Vec<(Polynomial, Q)> {
    let hs = ["z1", "z2", "z1*z2"];
    let gs = ["z1 - 1", "z2 - 1"];
    hs.iter()
        .flat_map(|h| gs.iter().map(move |g| (poly(&format!("({h})*({g})"), &V2), q(1))))
        .collect()
}

pub fn cusp_problem(point: CurvePoint) -> InterpolationProblem {
    InterpolationProblem::on_curve(MonomialCurve::cusp(), point, context(&V2), cusp_functions())
}

pub fn cusp_polynomials() -> Vec<Polynomial> {
    cusp_functions().into_iter().map(|(f, _)| f).collect()
}

fn affine(vars: &[&str], fs: &[(&str, Q)]) -> InterpolationProblem {
    let ctx = context(vars);
    InterpolationProblem::affine(ctx.clone(), fs.iter().map(|(f, a)| (Polynomial::parse_in(&ctx, f).unwrap(), a.clone())).collect())
}

/// Named regression instances covering every ring kind.
pub fn interpolation_corpus() -> Vec<(String, InterpolationProblem)> {
    let mut out = vec![
        ("cusp at (1,1)".to_string(), cusp_problem(CurvePoint::rational(q(1)).unwrap())),
        ("cusp at origin".to_string(), cusp_problem(CurvePoint::Origin)),
        ("cusp at t=2".to_string(), cusp_problem(CurvePoint::rational(q(2)).unwrap())),
        ("cusp at t=-1".to_string(), cusp_problem(CurvePoint::rational(q(-1)).unwrap())),
        ("coordinates".into(), affine(&V2, &[("z1", q(1)), ("z2", q(1))])),
        ("weighted coordinates".into(), affine(&V2, &[("z1", q(2)), ("z2", q(3))])),
        ("squares".into(), affine(&V2, &[("z1^2", q(1)), ("z2^3", q(1))])),
        ("product and power".into(), affine(&V2, &[("z1*z2", q(1)), ("z1^3", q(1))])),
        ("with unit factor".into(), affine(&V2, &[("z1 + z1^2", qf(1, 2)), ("3*z2", q(1))])),
        ("with f0".into(), affine(&V2, &[("z1*z2", q(0)), ("z1", q(1)), ("z2", q(1))])),
        ("non-vanishing".into(), affine(&V2, &[("1 + z1", q(1)), ("z2", q(1))])),
        ("three variables".into(), affine(&V3, &[("z1", q(1)), ("z2", q(1)), ("z3^2", q(1))])),
        (
            "(2,5) origin".into(),
            InterpolationProblem::on_curve(
                MonomialCurve::new(2, 5).unwrap(),
                CurvePoint::Origin,
                context(&V2),
                vec![(poly("z1", &V2), q(2)), (poly("z2", &V2), q(5))],
            ),
        ),
        (
            "(3,4) root of unity".into(),
            InterpolationProblem::on_curve(
                MonomialCurve::new(3, 4).unwrap(),
                CurvePoint::unit_root(3).unwrap(),
                context(&V2),
                vec![(poly("z1 - 1", &V2), q(1)), (poly("z1^2 + z1 + 1", &V2), q(1))],
            ),
        ),
    ];
    let mut real = affine(&["x1", "x2"], &[("x1", q(1)), ("x2^2", q(1))]);
    real.ring = Ring::RealAffine;
    out.push(("real lift".into(), real));
    let mut wh = InterpolationProblem::on_curve(MonomialCurve::cusp(), CurvePoint::Origin, context(&V2), vec![]);
    wh.weakly_holomorphic = true;
    wh.functions = vec![
        (Function::Series(TruncatedSeries::new([(1, q(1)), (4, q(2))], 8).unwrap()), q(1)),
        (Function::Series(TruncatedSeries::new([(2, q(1))], 8).unwrap()), q(2)),
    ];
    out.push(("weakly holomorphic".into(), wh));
    for (i, (a, b)) in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 5)].iter().enumerate() {
        let f1 = format!("z1^{a}");
        let f2 = format!("z2^{b}");
        out.push((format!("monomial {i}"), affine(&V2, &[(&f1, q(1)), (&f2, q(1)), ("z1*z2", q(1))])));
    }
    out
}

/// Every reported witness realizes the prescribed values under an
/// independent evaluation, and `sigma >= sum a_j` always.
pub fn witness_soundness() -> Result<usize, String> {
    let corpus = interpolation_corpus();
    for (name, prob) in &corpus {
        let v = check_interpolation(prob).map_err(|e| format!("{name}: {e}"))?;
        if v.sigma < ExtQ::Finite(prob.target()) {
            return Err(format!("{name}: sigma {} below target", v.sigma));
        }
        if v.holds && v.witnesses.is_empty() {
            return Err(format!("{name}: holds without a witness"));
        }
        for w in &v.witnesses {
            for (f, a) in &prob.functions {
                let value = witness_value(w, f, prob).ok_or_else(|| format!("{name}: oracle cannot evaluate {w:?}"))?;
                if value != *a {
                    return Err(format!("{name}: witness {} gives {value} instead of {a}", w.describe()));
                }
            }
        }
    }
    Ok(corpus.len())
}

fn witness_value(w: &Witness, f: &Function, prob: &InterpolationProblem) -> Option<Q> {
    match (w, f) {
        // the real lift only renames variables, so exponents are unchanged
        (Witness::Monomial(ray), Function::Polynomial(p)) => monomial_valuation(p, ray.entries()),
        (Witness::CurveOrder { point, scale }, Function::Polynomial(p)) => {
            let Ring::Curve { curve, .. } = &prob.ring else { return None };
            match curve_order_by_taylor(p, curve, point)
                .or_else(|| pullback_order(p, curve, point).ok())?
            {
                ExtQ::Finite(o) => Some(o * scale),
                ExtQ::Infinity => None,
            }
        }
        (Witness::CurveOrder { scale, .. }, Function::Series(s)) => {
            let k = s.terms().next()?.0;
            Some(Q::from_integer(k.into()) * scale)
        }
        _ => None,
    }
}

// ---- toric families ----

/// `s * log sum |z_i|^{b_i}` with `s = sum 1/b_i`, so the jumping number is 1.
pub fn zhou_family() -> Vec<AnalyticWeight> {
    let exps: &[&[i64]] = &[&[1], &[3], &[1, 1], &[2, 2], &[2, 3], &[1, 4], &[3, 5], &[1, 1, 1], &[2, 3, 6], &[2, 4, 4]];
    let mut out = Vec::new();
    for b in exps {
        let vars: &[&str] = match b.len() {
            1 => &V1,
            2 => &V2,
            _ => &V3,
        };
        let s: Q = b.iter().map(|&bi| qf(1, bi)).sum();
        let gens: Vec<String> = vars.iter().zip(b.iter()).map(|(v, bi)| format!("{v}^{bi}")).collect();
        let g: Vec<(&str, Q)> = gens.iter().map(|x| (x.as_str(), q(1))).collect();
        out.push(weight(vars, s.clone(), &g));
        // same singularity through the exponents a_j and a unit coefficient
        let gens: Vec<String> = vars.iter().map(|v| format!("2*{v}")).collect();
        let g: Vec<(&str, Q)> = gens.iter().zip(b.iter()).map(|(x, &bi)| (x.as_str(), qf(1, bi))).collect();
        out.push(weight(vars, s, &g));
    }
    out
}

/// Admissible twists: monomial weights vanishing at the origin.
pub fn twists(dim: usize) -> Vec<AnalyticWeight> {
    match dim {
        1 => vec![weight(&V1, q(1), &[("z", q(1))]), weight(&V1, qf(1, 2), &[("z^3", q(1))])],
        2 => vec![
            weight(&V2, q(1), &[("z1*z2", q(1))]),
            weight(&V2, q(1), &[("z1", q(1)), ("z2^2", q(1))]),
            weight(&V2, q(2), &[("z1^3", q(1)), ("z2", q(2))]),
            weight(&V2, q(1), &[("z1", q(1))]),
        ],
        _ => vec![
            weight(&V3, q(1), &[("z1*z2*z3", q(1))]),
            weight(&V3, q(1), &[("z1", q(1)), ("z2", q(1)), ("z3^2", q(1))]),
        ],
    }
}

pub fn random_monomial(vars: Context) -> impl Strategy<Value = Polynomial> {
    let n = vars.len();
    (prop::collection::vec(0u32..=7, n), small_q())
        .prop_map(move |(e, c)| Polynomial::monomial(vars.clone(), ExponentVector::new(e), c))
}

/// `sigma(log|G|, Phi) + 1 = c^G(Phi)` on the certified family.
pub fn jumping_identity(cases: u32) -> Result<usize, String> {
    let family = zhou_family();
    let rho_of = |phi: &AnalyticWeight| BackgroundDensity::trivial(phi.context().clone());
    for phi in &family {
        let cert = zhouval::trop::certify_zhou_candidate(phi, &rho_of(phi)).map_err(|e| e.to_string())?;
        if !cert.is_candidate() || !cert.jumping_number.is_one() {
            return Err(format!("family member is not a certified candidate: {:?}", cert.report));
        }
        check(cases, random_monomial(phi.context().clone()), |g| {
            let nu = relative_type(&g, phi).unwrap().value;
            let c = jumping_number(phi, &g).unwrap();
            ensure(nu == ExtQ::Finite(&c - Q::one()), || format!("nu({g}) = {nu} but c^G = {c}"))
        })?;
    }
    Ok(family.len())
}

pub const TIAN_POINTS: [(i64, i64); 6] = [(0, 1), (1, 4), (1, 2), (1, 1), (2, 1), (4, 1)];

/// Concave, increasing at 0, linear with slope sigma, terminal slope sigma.
pub fn tian_linearity() -> Result<usize, String> {
    let mut count = 0;
    for phi in zhou_family() {
        let rho = BackgroundDensity::trivial(phi.context().clone());
        for psi in twists(phi.dim()) {
            let sigma = match weight_relative_type(&psi, &phi).map_err(|e| e.to_string())? {
                ExtQ::Finite(s) => s,
                ExtQ::Infinity => return Err("infinite sigma".into()),
            };
            let tn = tian_function(&phi, &psi, &rho, &q(0), &q(4)).map_err(|e| e.to_string())?;
            let tag = || format!("phi {:?}, psi {:?}", phi.generators().len(), psi.generators().len());
            if !tn.is_concave() {
                return Err(format!("not concave: {}", tag()));
            }
            if !tn.initial_slope().is_positive() {
                return Err(format!("not increasing at 0: {}", tag()));
            }
            let base = tn.eval(&q(0));
            for (n, d) in TIAN_POINTS {
                let t = qf(n, d);
                let expect = &base + &sigma * &t;
                let lp = tian_value_lp(&phi, &psi, &rho, &t).map_err(|e| e.to_string())?;
                if tn.eval(&t) != expect || lp != expect {
                    return Err(format!("Tn({t}) = {} (LP {lp}), expected {expect}: {}", tn.eval(&t), tag()));
                }
            }
            if *tn.final_slope() != sigma {
                return Err(format!("terminal slope {} differs from sigma {sigma}", tn.final_slope()));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Weights for the truncation checks, each with its exact `c(phi)`.
pub fn truncation_corpus() -> Vec<(AnalyticWeight, Q)> {
    vec![
        (weight(&V1, q(1), &[("z", q(1))]), q(1)),
        (weight(&V1, q(2), &[("z^3", q(1))]), qf(1, 6)),
        (weight(&V2, q(1), &[("z1", q(1))]), q(1)),
        (weight(&V2, q(1), &[("z1*z2", q(1))]), q(1)),
        (weight(&V2, q(1), &[("z1^2", q(1)), ("z2^3", q(1))]), qf(5, 6)),
        (weight(&V2, q(3), &[("z1^2*z2", q(1))]), qf(1, 6)),
        (weight(&V2, q(1), &[("z1", qf(1, 2)), ("z2^5", q(1))]), qf(7, 10)),
        (weight(&V3, q(1), &[("z1", q(1))]), q(1)),
        (weight(&V3, q(1), &[("z1*z2", q(1)), ("z3^4", q(1))]), qf(5, 4)),
    ]
}

pub const TRUNCATION_ORDERS: [u32; 7] = [1, 2, 4, 8, 16, 32, 64];

/// `c(phi_N)` decreases to `c(phi)` with gap at most `2/N`.
pub fn truncation_limit() -> Result<usize, String> {
    let corpus = truncation_corpus();
    for (phi, c) in &corpus {
        let one = Polynomial::one(phi.context().clone());
        let direct = jumping_number(phi, &one).map_err(|e| e.to_string())?;
        if direct != *c {
            return Err(format!("c(phi) = {direct}, expected {c}"));
        }
        let mut prev: Option<Q> = None;
        for n in TRUNCATION_ORDERS {
            let cn = jumping_number(&truncate_weight(phi, n).unwrap(), &one).map_err(|e| e.to_string())?;
            if prev.as_ref().is_some_and(|p| cn > *p) {
                return Err(format!("c(phi_{n}) = {cn} increased"));
            }
            if cn < *c || &cn - c > qf(2, i64::from(n)) {
                return Err(format!("c(phi_{n}) = {cn} outside [{c}, {c} + 2/{n}]"));
            }
            prev = Some(cn);
        }
    }
    Ok(corpus.len())
}

fn test_functions(vars: &[&str]) -> Vec<Polynomial> {
    let texts: &[&str] = match vars.len() {
        1 => &["z", "z^2 + z^5", "3*z^4"],
        2 => &["z1", "z2^3", "z1*z2 + z1^4", "z1^2 - z2^2", "z1 + z2^7", "2*z1^3*z2^2"],
        _ => &["z1", "z2*z3", "z1^2 + z2^2 + z3^5", "z1*z2*z3^3"],
    };
    texts.iter().map(|t| poly(t, vars)).collect()
}

fn vars_of(phi: &AnalyticWeight) -> Vec<&str> {
    phi.context().iter().map(String::as_str).collect()
}

/// `sigma(fg, phi_N) <= sigma(f, phi_N) + C(g)` for `N <= 32`.
pub fn multiplicative_bound() -> Result<usize, String> {
    let mut checked = 0;
    for (phi, _) in truncation_corpus() {
        let fs = test_functions(&vars_of(&phi));
        for g in &fs {
            let c = multiplicative_bound_constant(g, &phi).map_err(|e| e.to_string())?;
            for n in 1..=32 {
                let phi_n = truncate_weight(&phi, n).unwrap();
                for f in &fs {
                    let fg = f.checked_mul(g).unwrap();
                    let lhs = relative_type(&fg, &phi_n).unwrap().value;
                    let rhs = relative_type(f, &phi_n).unwrap().value + ExtQ::Finite(c.clone());
                    if lhs > rhs {
                        return Err(format!("sigma({f} * {g}, phi_{n}) = {lhs} exceeds {rhs}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// `0 <= c^f(phi_N) - sigma(f, phi_N) <= B` for `N <= 32`, with `B`
/// the multiplicative constant of the coordinate product.
pub fn jumping_gap() -> Result<usize, String> {
    let mut checked = 0;
    for (phi, _) in truncation_corpus() {
        let vars = vars_of(&phi);
        let all = poly(&vars.join("*"), &vars);
        let bound = multiplicative_bound_constant(&all, &phi).map_err(|e| e.to_string())?;
        for f in test_functions(&vars) {
            for n in 1..=32 {
                let phi_n = truncate_weight(&phi, n).unwrap();
                let c = jumping_number(&phi_n, &f).map_err(|e| e.to_string())?;
                let ExtQ::Finite(s) = relative_type(&f, &phi_n).unwrap().value else {
                    return Err("infinite sigma".into());
                };
                let gap = c - s;
                if gap.is_negative() || gap > bound {
                    return Err(format!("gap {gap} for {f} at N = {n} outside [0, {bound}]"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}
