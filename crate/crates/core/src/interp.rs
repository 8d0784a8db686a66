//! Valuative interpolation: is there a valuation `nu` with `nu(f_j) = a_j`?
//!
//! The criterion compares `sigma(log|F|, phi)` with `sum a_j`, where
//! `F = prod f_j` (including a designated `f_0` with `a_0 = 0`) and
//! `phi = log sum_{a_j > 0} |f_j|^{1/a_j}`. The inequality
//! `sigma >= sum a_j` always holds; equality is the interpolation
//! condition, and minimizers of the relative type give explicit witnesses.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::curve::{
    curve_zero_set, pullback_order, CurveError, CurveFunction, CurvePoint, MonomialCurve, TruncatedSeries,
};
use crate::poly::{context, Context, PolyError, Polynomial};
use crate::rational::{fmt_q, ExtQ, Q};
use crate::trop::{relative_type, trop_value, AnalyticWeight, Generator, Ray, TropError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Trop(#[from] TropError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("invalid problem: {0}")]
    Invalid(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    /// Polynomials on `C^n` at the origin.
    Affine,
    /// The local ring of a monomial curve at a point.
    Curve { curve: MonomialCurve, point: CurvePoint },
    /// Real polynomials at the origin of `R^n`, decided through the
    /// coefficient-preserving lift to `C^n`.
    RealAffine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Function {
    Polynomial(Polynomial),
    /// A weakly holomorphic germ at the origin of a curve.
    Series(TruncatedSeries),
}

impl Function {
    fn describe(&self) -> String {
        match self {
            Function::Polynomial(p) => p.to_string(),
            Function::Series(s) => format!("series of order {}", s.valuation().map_or("?".into(), |v| v.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationProblem {
    pub ring: Ring,
    pub vars: Context,
    /// `(f_j, a_j)`; at most one entry has `a_j = 0`.
    pub functions: Vec<(Function, Q)>,
    /// Inputs are germs in `O^w` rather than `O`.
    pub weakly_holomorphic: bool,
}

impl InterpolationProblem {
    pub fn affine(vars: Context, functions: Vec<(Polynomial, Q)>) -> Self {
        Self::polynomials(Ring::Affine, vars, functions)
    }

    pub fn on_curve(curve: MonomialCurve, point: CurvePoint, vars: Context, functions: Vec<(Polynomial, Q)>) -> Self {
        Self::polynomials(Ring::Curve { curve, point }, vars, functions)
    }

    fn polynomials(ring: Ring, vars: Context, functions: Vec<(Polynomial, Q)>) -> Self {
        let functions = functions.into_iter().map(|(f, a)| (Function::Polynomial(f), a)).collect();
        InterpolationProblem { ring, vars, functions, weakly_holomorphic: false }
    }

    pub fn target(&self) -> Q {
        self.functions.iter().map(|(_, a)| a.clone()).sum()
    }

    fn validate(&self) -> Result<(), InterpError> {
        if self.functions.is_empty() {
            return Err(InterpError::Invalid("no functions".into()));
        }
        if self.functions.iter().any(|(_, a)| a.is_negative()) {
            return Err(InterpError::Invalid("exponents must be nonnegative".into()));
        }
        if self.functions.iter().filter(|(_, a)| a.is_zero()).count() > 1 {
            return Err(InterpError::Invalid("at most one function may carry a = 0".into()));
        }
        if self.functions.iter().all(|(_, a)| a.is_zero()) {
            return Err(InterpError::Invalid("need a function with a > 0".into()));
        }
        for (f, _) in &self.functions {
            match f {
                Function::Polynomial(p) => {
                    if p.vars() != &self.vars {
                        return Err(PolyError::ContextMismatch { left: self.vars.join(","), right: p.vars().join(",") }.into());
                    }
                    if p.is_zero() {
                        return Err(InterpError::Invalid("functions must be nonzero".into()));
                    }
                }
                Function::Series(_) => {
                    let at_origin = matches!(&self.ring, Ring::Curve { point: CurvePoint::Origin, .. });
                    if !at_origin || !self.weakly_holomorphic {
                        return Err(InterpError::Unsupported(
                            "series inputs are accepted only as weakly holomorphic germs at a curve origin".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A valuation realizing the interpolation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The monomial valuation `nu(z^alpha) = <w, alpha>`.
    Monomial(Ray),
    /// `scale * ord_pt` along the curve.
    CurveOrder { point: CurvePoint, scale: Q },
}

impl Witness {
    pub fn describe(&self) -> String {
        match self {
            Witness::Monomial(r) => format!("monomial valuation w = ({})", r.to_strings().join(", ")),
            Witness::CurveOrder { point, scale } => format!("{} * ord at {point}", fmt_q(scale)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Holds,
    Fails,
    /// `sigma` equals the target but no candidate witness verified.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub index: usize,
    pub function: String,
    pub target: Q,
    pub value: ExtQ,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationVerdict {
    pub sigma: ExtQ,
    pub target: Q,
    pub holds: bool,
    pub status: VerdictStatus,
    /// Verified witnesses, canonical order; the first is primary.
    pub witnesses: Vec<Witness>,
    /// `nu(f_j)` under the primary candidate valuation.
    pub diagnostics: Vec<Diagnostic>,
    /// The primary witness is positive on every coordinate.
    pub converse_applicable: Option<bool>,
    pub notes: Vec<String>,
}

impl InterpolationVerdict {
    fn new(sigma: ExtQ, target: Q) -> Self {
        InterpolationVerdict {
            sigma,
            target,
            holds: false,
            status: VerdictStatus::Fails,
            witnesses: Vec::new(),
            diagnostics: Vec::new(),
            converse_applicable: None,
            notes: Vec::new(),
        }
    }
}

pub fn check_interpolation(prob: &InterpolationProblem) -> Result<InterpolationVerdict, InterpError> {
    prob.validate()?;
    match &prob.ring {
        Ring::Affine => check_affine(prob),
        Ring::Curve { curve, point } => check_curve(prob, curve, point),
        Ring::RealAffine => {
            let lifted = real_lift(prob)?;
            let mut verdict = check_affine(&lifted)?;
            verdict.notes.push("decided on the coefficient-identical complex lift".into());
            Ok(verdict)
        }
    }
}

fn polys(prob: &InterpolationProblem) -> Result<Vec<(&Polynomial, &Q)>, InterpError> {
    prob.functions
        .iter()
        .map(|(f, a)| match f {
            Function::Polynomial(p) => Ok((p, a)),
            Function::Series(_) => Err(InterpError::Unsupported("series in an affine ring".into())),
        })
        .collect()
}

fn assert_one_sided(sigma: &ExtQ, target: &Q) {
    assert!(*sigma >= ExtQ::Finite(target.clone()), "sigma fell below the target sum");
}

fn check_affine(prob: &InterpolationProblem) -> Result<InterpolationVerdict, InterpError> {
    let fs = polys(prob)?;
    let target = prob.target();
    if let Some((f, _)) = fs.iter().find(|(f, a)| a.is_positive() && !f.vanishes_at_origin()) {
        let mut v = InterpolationVerdict::new(ExtQ::Infinity, target);
        v.notes.push(format!("`{f}` does not vanish at the origin, so phi is bounded and sigma is infinite"));
        return Ok(v);
    }
    let generators: Vec<Generator> = fs
        .iter()
        .filter(|(_, a)| a.is_positive())
        .map(|(f, a)| Generator { poly: (*f).clone(), a: (*a).clone() })
        .collect();
    let phi = AnalyticWeight::new(Q::from_integer(1.into()), generators)?;
    let big_f = Polynomial::product(prob.vars.clone(), fs.iter().map(|(f, _)| *f))?;
    let rt = relative_type(&big_f, &phi)?;
    assert_one_sided(&rt.value, &target);
    let mut verdict = InterpolationVerdict::new(rt.value.clone(), target.clone());

    let valuation = |w: &Ray, f: &Polynomial| trop_value(f, w).map(ExtQ::Finite);
    let scaled: Vec<Ray> = rt
        .witnesses
        .iter()
        .map(|w| {
            let d = crate::trop::weight_value(&phi, w)?;
            Ok(w.scaled(&d.recip()))
        })
        .collect::<Result<_, TropError>>()?;
    if let Some(primary) = scaled.first() {
        verdict.diagnostics = diagnostics(prob, |f| match f {
            Function::Polynomial(p) => valuation(primary, p),
            Function::Series(_) => unreachable!("validated"),
        })?;
        verdict.converse_applicable = Some(primary.entries().iter().all(Signed::is_positive));
    }
    if rt.value == ExtQ::Finite(target.clone()) {
        for w in &scaled {
            let ok = fs.iter().all(|(f, a)| trop_value(f, w).as_ref() == Ok(*a));
            if ok {
                verdict.witnesses.push(Witness::Monomial(w.clone()));
            }
        }
        settle(&mut verdict, prob);
    } else {
        verdict.notes.push(format!(
            "sigma = {} exceeds the target {}",
            rt.value,
            fmt_q(&target)
        ));
    }
    Ok(verdict)
}

fn settle(verdict: &mut InterpolationVerdict, prob: &InterpolationProblem) {
    if verdict.witnesses.is_empty() {
        verdict.status = VerdictStatus::Indeterminate;
        verdict.notes.push("sigma meets the target but no candidate valuation verified".into());
        if prob.functions.iter().any(|(_, a)| a.is_zero()) {
            verdict.notes.push("f0 cannot be given value 0 by any candidate".into());
        }
    } else {
        verdict.holds = true;
        verdict.status = VerdictStatus::Holds;
    }
}

fn diagnostics<F>(prob: &InterpolationProblem, mut value: F) -> Result<Vec<Diagnostic>, InterpError>
where
    F: FnMut(&Function) -> Result<ExtQ, TropError>,
{
    prob.functions
        .iter()
        .enumerate()
        .map(|(index, (f, a))| {
            Ok(Diagnostic { index, function: f.describe(), target: a.clone(), value: value(f)? })
        })
        .collect()
}

fn curve_order(f: &Function, curve: &MonomialCurve, point: &CurvePoint) -> Result<ExtQ, CurveError> {
    match f {
        Function::Polynomial(p) => pullback_order(p, curve, point),
        Function::Series(s) => crate::curve::curve_valuation(&CurveFunction::Series(s.clone()), curve, point),
    }
}

fn check_curve(prob: &InterpolationProblem, curve: &MonomialCurve, point: &CurvePoint) -> Result<InterpolationVerdict, InterpError> {
    if prob.vars.len() != 2 {
        return Err(CurveError::WrongVariableCount(prob.vars.len()).into());
    }
    let target = prob.target();
    let mut orders = Vec::with_capacity(prob.functions.len());
    for (f, _) in &prob.functions {
        match curve_order(f, curve, point)? {
            ExtQ::Finite(o) => orders.push(o),
            ExtQ::Infinity => return Err(CurveError::InDefiningIdeal(f.describe()).into()),
        }
    }
    let total: Q = orders.iter().cloned().sum();
    let mut min_ratio: Option<Q> = None;
    for ((_, a), o) in prob.functions.iter().zip(&orders) {
        if a.is_positive() {
            let r = o / a;
            if min_ratio.as_ref().is_none_or(|m| r < *m) {
                min_ratio = Some(r);
            }
        }
    }
    let min_ratio = min_ratio.expect("validated: some a > 0");
    if min_ratio.is_zero() {
        let mut v = InterpolationVerdict::new(ExtQ::Infinity, target);
        v.notes.push(format!("some generator does not vanish at {point}, so sigma is infinite"));
        return Ok(v);
    }
    let sigma = ExtQ::Finite(&total / &min_ratio);
    assert_one_sided(&sigma, &target);
    let mut verdict = InterpolationVerdict::new(sigma.clone(), target.clone());
    let scale = min_ratio.recip();
    verdict.diagnostics = prob
        .functions
        .iter()
        .zip(&orders)
        .enumerate()
        .map(|(index, ((f, a), o))| Diagnostic {
            index,
            function: f.describe(),
            target: a.clone(),
            value: ExtQ::Finite(o * &scale),
        })
        .collect();
    if sigma == ExtQ::Finite(target.clone()) {
        let ok = prob.functions.iter().zip(&orders).all(|((_, a), o)| o * &scale == *a);
        if ok {
            verdict.witnesses.push(Witness::CurveOrder { point: point.clone(), scale });
        }
        settle(&mut verdict, prob);
    } else {
        verdict.notes.push(format!("sigma = {sigma} exceeds the target {} at {point}", fmt_q(&target)));
        if point.is_origin() {
            note_other_points(prob, curve, &mut verdict)?;
        }
    }
    Ok(verdict)
}

/// Interpolation can still succeed on the global ring at another common zero.
fn note_other_points(prob: &InterpolationProblem, curve: &MonomialCurve, verdict: &mut InterpolationVerdict) -> Result<(), InterpError> {
    let Ok(fs) = polys(prob) else { return Ok(()) };
    let positive: Vec<Polynomial> = fs.iter().filter(|(_, a)| a.is_positive()).map(|(f, _)| (*f).clone()).collect();
    let zeros = curve_zero_set(&positive, curve)?;
    for (t0, (x, y)) in &zeros.rational_points {
        let mut other = prob.clone();
        other.ring = Ring::Curve { curve: *curve, point: CurvePoint::Rational(t0.clone()) };
        if check_curve(&other, curve, &CurvePoint::Rational(t0.clone()))?.holds {
            verdict.notes.push(format!(
                "interpolation holds at the common zero ({}, {}) (t = {}), giving a valuation on the coordinate ring",
                fmt_q(x),
                fmt_q(y),
                fmt_q(t0)
            ));
        }
    }
    Ok(())
}

/// Whether the common zero set of `functions` is exactly the origin.
pub fn zero_set_is_origin(functions: &[Polynomial], ring: &Ring) -> Result<bool, InterpError> {
    if functions.is_empty() {
        return Err(InterpError::Invalid("no functions".into()));
    }
    match ring {
        Ring::Affine | Ring::RealAffine => {
            let n = functions[0].num_vars();
            let mut supports = Vec::new();
            for f in functions {
                let (e, _) = f.as_monomial().ok_or_else(|| {
                    InterpError::Unsupported(format!("`{f}` is not a monomial; only monomial zero sets are decided"))
                })?;
                supports.push(e.entries().iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i).collect::<Vec<_>>());
            }
            // some f avoiding z_i vanishes somewhere on the z_i axis unless
            // a generator is a pure power of z_i
            Ok((0..n).all(|i| supports.iter().any(|s| s.as_slice() == [i])))
        }
        Ring::Curve { curve, .. } => Ok(curve_zero_set(functions, curve)?.is_origin_only()),
    }
}

fn lifted_name(name: &str) -> String {
    match name.strip_prefix('x') {
        Some(rest) => format!("z{rest}"),
        None => name.to_string(),
    }
}

/// The coefficient-identical complex problem: `x_i -> z_i`.
pub fn real_lift(prob: &InterpolationProblem) -> Result<InterpolationProblem, InterpError> {
    let names: Vec<String> = prob.vars.iter().map(|v| lifted_name(v)).collect();
    let vars = context(&names);
    let functions = prob
        .functions
        .iter()
        .map(|(f, a)| match f {
            Function::Polynomial(p) => Ok((Function::Polynomial(p.with_context(vars.clone())?), a.clone())),
            Function::Series(_) => Err(InterpError::Unsupported("series in a real polynomial ring".into())),
        })
        .collect::<Result<Vec<_>, InterpError>>()?;
    let ring = match &prob.ring {
        Ring::RealAffine => Ring::Affine,
        other => other.clone(),
    };
    Ok(InterpolationProblem { ring, vars, functions, weakly_holomorphic: prob.weakly_holomorphic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::rational::q;

    const V2: [&str; 2] = ["z1", "z2"];

    fn affine(fs: &[(&str, i64)]) -> InterpolationProblem {
        let ctx = context(&V2);
        InterpolationProblem::affine(
            ctx.clone(),
            fs.iter().map(|(f, a)| (Polynomial::parse_in(&ctx, f).unwrap(), q(*a))).collect(),
        )
    }

    fn cusp(point: CurvePoint) -> InterpolationProblem {
        let ctx = context(&V2);
        let fs = ["z1*(z1 - 1)", "z1*(z2 - 1)", "z2*(z1 - 1)", "z2*(z2 - 1)", "z1*z2*(z1 - 1)", "z1*z2*(z2 - 1)"];
        InterpolationProblem::on_curve(
            MonomialCurve::cusp(),
            point,
            ctx.clone(),
            fs.iter().map(|f| (Polynomial::parse_in(&ctx, f).unwrap(), q(1))).collect(),
        )
    }

    #[test]
    fn coordinates_interpolate() {
        let v = check_interpolation(&affine(&[("z1", 1), ("z2", 1)])).unwrap();
        assert!(v.holds);
        assert_eq!(v.sigma, ExtQ::Finite(q(2)));
        assert_eq!(v.witnesses, vec![Witness::Monomial(Ray::new(vec![q(1), q(1)]).unwrap())]);
        assert_eq!(v.converse_applicable, Some(true));
    }

    #[test]
    fn incompatible_targets_fail() {
        // nu(z1 z2) >= nu(z1) = 2 > 1 for every valuation
        let v = check_interpolation(&affine(&[("z1*z2", 1), ("z1", 2)])).unwrap();
        assert!(!v.holds);
        assert_eq!(v.sigma, ExtQ::Finite(q(4)));
        assert_eq!(v.target, q(3));
    }

    #[test]
    fn unit_background_function() {
        let v = check_interpolation(&affine(&[("1 + z1", 0), ("z1", 1), ("z2", 2)])).unwrap();
        assert!(v.holds);
        assert_eq!(v.diagnostics[0].value, ExtQ::Finite(q(0)));
    }

    #[test]
    fn non_vanishing_generator_is_automatic_failure() {
        let v = check_interpolation(&affine(&[("1 + z1", 1), ("z2", 1)])).unwrap();
        assert!(!v.holds);
        assert!(v.sigma.is_infinite());
    }

    #[test]
    fn cusp_at_smooth_point_holds() {
        let v = check_interpolation(&cusp(CurvePoint::rational(q(1)).unwrap())).unwrap();
        assert!(v.holds);
        assert_eq!(v.sigma, ExtQ::Finite(q(6)));
        assert!(v.diagnostics.iter().all(|d| d.value == ExtQ::Finite(q(1))));
    }

    #[test]
    fn cusp_at_origin_fails_but_notes_smooth_point() {
        let v = check_interpolation(&cusp(CurvePoint::Origin)).unwrap();
        assert!(!v.holds);
        assert_eq!(v.sigma, ExtQ::Finite(q(10)));
        assert!(v.notes.iter().any(|n| n.contains("(1/1, 1/1)")));
    }

    #[test]
    fn zero_sets() {
        let p = |s: &str| parse_polynomial(s, &V2).unwrap();
        assert!(zero_set_is_origin(&[p("z1"), p("z2")], &Ring::Affine).unwrap());
        assert!(!zero_set_is_origin(&[p("z1*z2"), p("z1")], &Ring::Affine).unwrap());
        assert!(zero_set_is_origin(&[p("z1^2"), p("z2^3*z1"), p("z2^5")], &Ring::Affine).unwrap());
        assert!(zero_set_is_origin(&[p("z1 + z2")], &Ring::Affine).is_err());
        let ring = Ring::Curve { curve: MonomialCurve::cusp(), point: CurvePoint::Origin };
        let fs: Vec<Polynomial> = cusp(CurvePoint::Origin)
            .functions
            .into_iter()
            .map(|(f, _)| match f {
                Function::Polynomial(p) => p,
                Function::Series(_) => unreachable!(),
            })
            .collect();
        assert!(!zero_set_is_origin(&fs, &ring).unwrap());
    }

    #[test]
    fn real_lift_renames_variables() {
        let ctx = context(&["x1", "x2"]);
        let prob = InterpolationProblem {
            ring: Ring::RealAffine,
            vars: ctx.clone(),
            functions: vec![(Function::Polynomial(Polynomial::parse_in(&ctx, "x1^2 + x2^2").unwrap()), q(1))],
            weakly_holomorphic: false,
        };
        let lifted = real_lift(&prob).unwrap();
        assert_eq!(lifted.ring, Ring::Affine);
        match &lifted.functions[0].0 {
            Function::Polynomial(p) => assert_eq!(p.to_string(), "z1^2 + z2^2"),
            Function::Series(_) => unreachable!(),
        }
    }

    #[test]
    fn invalid_problems() {
        assert!(check_interpolation(&affine(&[("z1", 0), ("z2", 0)])).is_err());
        assert!(check_interpolation(&affine(&[("z1", -1)])).is_err());
    }
}
