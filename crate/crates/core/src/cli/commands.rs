use num_traits::Signed;
use serde_json::Value;

use super::problem::EstimateKind;
use super::report::{Provenance, Report, Table};
use super::{Args, CliError, Problem};
use crate::curve::{curve_zero_set, pullback_order, relative_type_curve, universal_denominator, CurvePoint, MonomialCurve};
use crate::interp::{check_interpolation, zero_set_is_origin, Ring, VerdictStatus};
use crate::numeric::{cross_check_jumping_number, estimate_mass_decay, estimate_relative_type_integral, DEFAULT_TOLERANCE};
use crate::oracle::{curve_order_by_taylor, grid_relative_type};
use crate::poly::Polynomial;
use crate::rational::{fmt_q, ExtQ, Q};
use crate::trop::{
    certify_zhou_candidate, jumping_number_by_rays, relative_type, tian_envelope, weight_relative_type,
    weighted_jumping_number, AnalyticWeight,
};

/// Grid resolution of the affine relative-type oracle.
const GRID: u32 = 60;

fn q_str(x: &Q) -> String {
    fmt_q(x)
}

/// `(g, phi, target)`: either explicit, or the product of `functions`
/// against `log sum |f_j|^{1/a_j}`.
fn sigma_inputs(p: &Problem) -> Result<(Polynomial, AnalyticWeight, Option<Q>), CliError> {
    match (p.g()?, p.file.weight.is_some()) {
        (Some(g), true) => Ok((g, p.weight()?, None)),
        (None, false) => {
            let fs = p.polynomials()?;
            let target: Q = fs.iter().map(|(_, a)| a.clone()).sum();
            let g = Polynomial::product(p.vars.clone(), fs.iter().map(|(f, _)| f)).map_err(|e| CliError::Schema(e.to_string()))?;
            let gens: Vec<(Polynomial, Q)> = fs.into_iter().filter(|(_, a)| a.is_positive()).collect();
            let phi = AnalyticWeight::from_generators(gens).map_err(|e| CliError::Schema(format!("functions: {e}")))?;
            Ok((g, phi, Some(target)))
        }
        _ => Err(CliError::Schema("give both `g` and `weight`, or only `functions`".into())),
    }
}

fn curve_sigma_by_taylor(g: &Polynomial, phi: &AnalyticWeight, curve: &MonomialCurve, pt: &CurvePoint) -> Option<ExtQ> {
    let num = curve_order_by_taylor(g, curve, pt)?;
    let mut den: Option<Q> = None;
    for gen in phi.generators() {
        if let ExtQ::Finite(o) = curve_order_by_taylor(&gen.poly, curve, pt)? {
            let r = o / &gen.a;
            if den.as_ref().is_none_or(|d| r < *d) {
                den = Some(r);
            }
        }
    }
    match (num, den) {
        (ExtQ::Finite(n), Some(d)) if d.is_positive() => Some(ExtQ::Finite(n / d / phi.scale())),
        _ => None,
    }
}

pub fn sigma(p: &Problem, args: &Args, r: &mut Report) -> Result<(), CliError> {
    let (g, phi, target) = sigma_inputs(p)?;
    match &p.ring {
        Ring::Affine | Ring::RealAffine => {
            if p.ring == Ring::RealAffine {
                r.notes.push("computed on the coefficient-identical complex lift".into());
            }
            let rt = relative_type(&g, &phi)?;
            r.ext("sigma", &rt.value);
            r.witnesses = rt.witnesses.iter().map(|w| format!("w = ({})", w.to_strings().join(", "))).collect();
            r.exact("candidate_rays", rt.certificate.len());
            r.table = Some(Table {
                columns: vec!["ray".into(), "trop_g".into(), "weight".into(), "ratio".into()],
                rows: rt
                    .certificate
                    .iter()
                    .map(|e| {
                        vec![
                            e.ray.to_strings().join(" "),
                            q_str(&e.numerator),
                            q_str(&e.denominator),
                            e.ratio().map_or_else(|| "-".into(), |x| q_str(&x)),
                        ]
                    })
                    .collect(),
            });
            if args.oracle {
                let grid = grid_relative_type(&g, &phi, GRID)?;
                r.ext("oracle_grid_sigma", &grid);
                r.exact("oracle_agrees", rt.value <= grid);
                if grid != rt.value {
                    r.notes.push(format!("no minimizer on the 1/{GRID} grid; the grid value is an upper bound"));
                }
            }
        }
        Ring::Curve { curve, point } => {
            let gens: Vec<(Polynomial, Q)> = phi.generators().iter().map(|g| (g.poly.clone(), g.a.clone())).collect();
            let value = match relative_type_curve(&g, &gens, curve, point)? {
                ExtQ::Finite(v) => ExtQ::Finite(v / phi.scale()),
                ExtQ::Infinity => ExtQ::Infinity,
            };
            r.ext("sigma", &value);
            r.table = Some(Table {
                columns: vec!["function".into(), "a".into(), "order".into()],
                rows: std::iter::once(Ok(vec![format!("g = {g}"), "-".into(), pullback_order(&g, curve, point)?.to_report_string()]))
                    .chain(gens.iter().map(|(f, a)| {
                        Ok(vec![f.to_string(), q_str(a), pullback_order(f, curve, point)?.to_report_string()])
                    }))
                    .collect::<Result<_, CliError>>()?,
            });
            if args.oracle {
                match curve_sigma_by_taylor(&g, &phi, curve, point) {
                    Some(o) => {
                        r.ext("oracle_taylor_sigma", &o);
                        r.exact("oracle_agrees", o == value);
                    }
                    None => r.notes.push(format!("no Taylor oracle at {point}")),
                }
            }
        }
    }
    if let Some(t) = target {
        r.rational("target", &t);
    }
    Ok(())
}

pub fn lct(p: &Problem, args: &Args, r: &mut Report) -> Result<(), CliError> {
    if p.curve().is_some() {
        return Err(CliError::Unsupported("jumping numbers on curve germs".into()));
    }
    let phi = p.weight()?;
    let g = p.g()?.unwrap_or_else(|| Polynomial::one(p.vars.clone()));
    let rho = p.background()?;
    let lp = weighted_jumping_number(&phi, &rho, &g)?;
    let rays = jumping_number_by_rays(&phi, &rho, &g)?;
    r.rational("jumping_number", &lp);
    r.rational("jumping_number_rays", &rays);
    r.exact("routes_agree", lp == rays);
    match certify_zhou_candidate(&phi, &rho) {
        Ok(c) => {
            r.exact("cond1", c.cond1);
            r.exact("cond2", c.cond2);
            r.exact("critical", c.critical);
            r.exact("toric_maximal", c.toric_maximal);
            r.exact("zhou_candidate", c.is_candidate());
            r.exact("n0", c.n0.map_or(Value::Null, Value::from));
            r.witnesses = c.minimizers.iter().map(|w| format!("minimizer w = ({})", w.to_strings().join(", "))).collect();
            r.notes.extend(c.report);
        }
        Err(e) => r.notes.push(format!("no candidate certificate: {e}")),
    }
    if args.oracle {
        if rho.is_trivial() {
            let (exact, b) = cross_check_jumping_number(&phi, &g)?;
            r.estimated("oracle_bracket_lo", b.lo, None, Provenance::Quadrature);
            r.estimated("oracle_bracket_hi", b.hi, None, Provenance::Quadrature);
            r.exact("oracle_contains_exact", b.contains(crate::rational::to_f64(&exact)));
        } else {
            r.notes.push("the bisection oracle needs a trivial background".into());
        }
    }
    Ok(())
}

pub fn tian(p: &Problem, r: &mut Report) -> Result<(), CliError> {
    if p.curve().is_some() {
        return Err(CliError::Unsupported("Tian functions on curve germs".into()));
    }
    let phi = p.weight()?;
    let psi = p.psi()?.ok_or_else(|| CliError::Schema("missing `psi`".into()))?;
    let rho = p.background()?;
    let (lo, hi) = p.tian_range()?;
    let env = tian_envelope(&phi, &psi, &rho)?;
    let f = env.restrict(&lo, &hi)?;
    r.ext("sigma", &weight_relative_type(&psi, &phi)?);
    r.rational("tn_lo", &f.eval(&lo));
    r.rational("terminal_slope", &env.asymptotic_slope());
    r.exact("concave", f.is_concave());
    r.exact("kinks", f.kinks().iter().map(q_str).collect::<Vec<_>>());
    let s = f.slopes();
    r.table = Some(Table {
        columns: vec!["t".into(), "value".into(), "slope_left".into(), "slope_right".into()],
        rows: f
            .breakpoints()
            .iter()
            .zip(f.values())
            .enumerate()
            .map(|(i, (t, v))| vec![q_str(t), q_str(v), q_str(&s[i]), q_str(&s[i + 1])])
            .collect(),
    });
    Ok(())
}

pub fn interpolate(p: &Problem, args: &Args, r: &mut Report) -> Result<(), CliError> {
    let prob = p.interpolation()?;
    let v = check_interpolation(&prob)?;
    r.exact("holds", v.holds);
    r.exact(
        "status",
        match v.status {
            VerdictStatus::Holds => "holds",
            VerdictStatus::Fails => "fails",
            VerdictStatus::Indeterminate => "indeterminate",
        },
    );
    r.ext("sigma", &v.sigma);
    r.rational("target", &v.target);
    r.exact("converse_applicable", v.converse_applicable.map_or(Value::Null, Value::from));
    r.witnesses = v.witnesses.iter().map(|w| w.describe()).collect();
    r.notes = v.notes.clone();
    r.table = Some(Table {
        columns: vec!["index".into(), "function".into(), "a".into(), "value".into()],
        rows: v
            .diagnostics
            .iter()
            .map(|d| vec![d.index.to_string(), d.function.clone(), q_str(&d.target), d.value.to_report_string()])
            .collect(),
    });
    if args.oracle {
        match (&p.ring, p.polynomials()) {
            (Ring::Affine | Ring::RealAffine, Ok(_)) if v.sigma.finite().is_some() => {
                let (g, phi, _) = sigma_inputs(p)?;
                let grid = grid_relative_type(&g, &phi, GRID)?;
                r.ext("oracle_grid_sigma", &grid);
                r.exact("oracle_agrees", v.sigma <= grid);
            }
            (Ring::Curve { curve, point }, Ok(_)) => {
                let (g, phi, _) = sigma_inputs(p)?;
                match curve_sigma_by_taylor(&g, &phi, curve, point) {
                    Some(o) => {
                        r.ext("oracle_taylor_sigma", &o);
                        r.exact("oracle_agrees", o == v.sigma);
                    }
                    None => r.notes.push(format!("no Taylor oracle at {point}")),
                }
            }
            _ => r.notes.push("no oracle for this input".into()),
        }
    }
    Ok(())
}

pub fn verify_integral(p: &Problem, args: &Args, t_max: Option<f64>, r: &mut Report) -> Result<(), CliError> {
    if p.curve().is_some() {
        return Err(CliError::Unsupported("sublevel integrals on curve germs".into()));
    }
    let phi = p.weight()?;
    let rho = p.background()?;
    let plan = p.plan(args.seed, args.samples, t_max, r.seed)?;
    let kind = p.estimate_kind();
    let est = match kind {
        EstimateKind::RelativeType => estimate_relative_type_integral(&phi, p.psi()?.as_ref(), &rho, &plan)?,
        EstimateKind::MassDecay => estimate_mass_decay(&phi, &rho, &plan)?,
    };
    r.exact("kind", if kind == EstimateKind::RelativeType { "relative_type" } else { "mass_decay" });
    r.exact("samples_per_t", plan.samples_per_t);
    r.exact("streams", plan.stream_count);
    r.exact("reference", est.reference.clone());
    r.estimated("limit", est.limit, None, Provenance::MonteCarlo);
    r.estimated("fit_residual", est.fit_residual, None, Provenance::MonteCarlo);
    r.estimated("deviation", est.deviation, None, Provenance::MonteCarlo);
    r.exact("tolerance", DEFAULT_TOLERANCE);
    r.results.push(super::report::Entry {
        name: "within_tolerance".into(),
        value: est.within_tolerance.into(),
        provenance: Provenance::MonteCarlo,
        stderr: None,
    });
    r.table = Some(Table {
        columns: vec!["t".into(), "estimate".into(), "stderr".into(), "exact".into()],
        rows: est
            .estimates
            .iter()
            .map(|e| vec![e.t.to_string(), e.estimate.to_string(), e.stderr.to_string(), est.reference.clone()])
            .collect(),
    });
    Ok(())
}

pub fn denominator(p: &Problem, r: &mut Report) -> Result<(), CliError> {
    let (curve, _) = p.curve().ok_or_else(|| CliError::Unsupported("universal denominators need a monomial curve".into()))?;
    let delta = universal_denominator(curve).with_context(p.vars.clone()).map_err(|e| CliError::Internal(e.to_string()))?;
    let m = delta.as_monomial().map_or(0, |(e, _)| e.entries()[0]);
    r.exact("p", curve.p());
    r.exact("q", curve.q());
    r.exact("frobenius", curve.frobenius());
    r.exact("gaps", u64::from(curve.p() - 1) * u64::from(curve.q() - 1) / 2);
    r.exact("exponent", m);
    r.exact("delta", delta.to_string());
    Ok(())
}

pub fn zeroset(p: &Problem, r: &mut Report) -> Result<(), CliError> {
    let fs: Vec<Polynomial> = p.polynomials()?.into_iter().map(|(f, _)| f).collect();
    let origin_only = zero_set_is_origin(&fs, &p.ring)?;
    r.exact("origin_only", origin_only);
    if let Some((curve, _)) = p.curve() {
        let z = curve_zero_set(&fs, curve)?;
        r.exact("whole_curve", z.whole_curve);
        let mut rows = Vec::new();
        if z.contains_origin {
            rows.push(vec!["0/1".into(), "0/1".into(), "0/1".into()]);
        }
        for (t, (x, y)) in &z.rational_points {
            rows.push(vec![q_str(t), q_str(x), q_str(y)]);
        }
        r.table = Some(Table { columns: vec!["t".into(), "z1".into(), "z2".into()], rows });
        if z.irrational_factor.degree().is_some_and(|d| d > 0) {
            r.notes.push(format!("further zeros at the roots of {}", z.irrational_factor));
        }
    }
    Ok(())
}
