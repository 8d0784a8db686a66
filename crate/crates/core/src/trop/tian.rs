//! Tian functions `Tn(t) = c(phi; rho e^{2 t psi})`.
//!
//! For toric data `Tn` is the lower envelope of the lines
//! `t -> (A(v) + t E(v)) / D(v)` over candidate rays `v` with `D(v) > 0`,
//! where `A` is the threshold numerator of `rho`, `E` the profile of `psi`
//! and `D` the profile of `phi`.

use std::collections::BTreeSet;

use num_traits::{One, Signed};

use super::toric::{check_context, max_scale, numerator, shifted_exponents, MinLinear, Toric};
use super::{AnalyticWeight, BackgroundDensity, TropError};
use crate::poly::Polynomial;
use crate::rational::{fmt_q, ExtQ, Q};

/// Concave piecewise-linear function given by breakpoints, values there,
/// and slopes on every interval including the two unbounded ends
/// (`slopes.len() == breakpoints.len() + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinearFn {
    breakpoints: Vec<Q>,
    values: Vec<Q>,
    slopes: Vec<Q>,
}

impl PiecewiseLinearFn {
    pub fn new(breakpoints: Vec<Q>, values: Vec<Q>, slopes: Vec<Q>) -> Result<Self, TropError> {
        let bad = |m: &str| Err(TropError::InvalidRange(m.to_string()));
        if breakpoints.is_empty() || values.len() != breakpoints.len() || slopes.len() != breakpoints.len() + 1 {
            return bad("breakpoint, value and slope counts disagree");
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return bad("breakpoints must increase strictly");
        }
        for i in 0..breakpoints.len() - 1 {
            let rise = &values[i + 1] - &values[i];
            if rise != &slopes[i + 1] * (&breakpoints[i + 1] - &breakpoints[i]) {
                return bad("values are inconsistent with slopes");
            }
        }
        Ok(PiecewiseLinearFn { breakpoints, values, slopes })
    }

    pub fn breakpoints(&self) -> &[Q] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn slopes(&self) -> &[Q] {
        &self.slopes
    }

    pub fn eval(&self, t: &Q) -> Q {
        let b = &self.breakpoints;
        let i = b.partition_point(|x| x <= t);
        if i == 0 {
            return &self.values[0] + &self.slopes[0] * (t - &b[0]);
        }
        &self.values[i - 1] + &self.slopes[i] * (t - &b[i - 1])
    }

    pub fn is_concave(&self) -> bool {
        self.slopes.windows(2).all(|w| w[0] >= w[1])
    }

    /// Slope on the right unbounded end.
    pub fn final_slope(&self) -> &Q {
        self.slopes.last().expect("at least one slope")
    }

    /// Slope on the first bounded interval, or the right end when there is none.
    pub fn initial_slope(&self) -> &Q {
        &self.slopes[1]
    }

    /// Breakpoints where the slope changes.
    pub fn kinks(&self) -> Vec<Q> {
        (0..self.breakpoints.len())
            .filter(|&i| self.slopes[i] != self.slopes[i + 1])
            .map(|i| self.breakpoints[i].clone())
            .collect()
    }
}

/// Lines `(intercept, slope)` plus integrability guards `a + t e > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TianEnvelope {
    lines: Vec<(Q, Q)>,
    guards: Vec<(Q, Q)>,
}

impl TianEnvelope {
    pub fn lines(&self) -> &[(Q, Q)] {
        &self.lines
    }

    pub fn eval(&self, t: &Q) -> Q {
        self.lines.iter().map(|(a, s)| a + s * t).min().expect("envelope has lines")
    }

    /// `rho e^{2 t psi}` is integrable near the origin.
    pub fn defined_at(&self, t: &Q) -> bool {
        self.guards.iter().all(|(a, e)| (a + e * t).is_positive())
    }

    /// Slope of `Tn` for large `t`.
    pub fn asymptotic_slope(&self) -> Q {
        self.lines.iter().map(|(_, s)| s.clone()).min().expect("envelope has lines")
    }

    fn tied_slopes(&self, t: &Q) -> Vec<Q> {
        let v = self.eval(t);
        self.lines.iter().filter(|(a, s)| a + s * t == v).map(|(_, s)| s.clone()).collect()
    }

    pub fn restrict(&self, lo: &Q, hi: &Q) -> Result<PiecewiseLinearFn, TropError> {
        if lo >= hi {
            return Err(TropError::InvalidRange(format!("[{}, {}] is empty", fmt_q(lo), fmt_q(hi))));
        }
        for t in [lo, hi] {
            if !self.defined_at(t) {
                return Err(TropError::TianUndefined(fmt_q(t)));
            }
        }
        let mut cuts: BTreeSet<Q> = [lo.clone(), hi.clone()].into_iter().collect();
        for (i, (a1, s1)) in self.lines.iter().enumerate() {
            for (a2, s2) in &self.lines[i + 1..] {
                if s1 != s2 {
                    let t = (a2 - a1) / (s1 - s2);
                    if &t > lo && &t < hi {
                        cuts.insert(t);
                    }
                }
            }
        }
        let cuts: Vec<Q> = cuts.into_iter().collect();
        let two = Q::from_integer(2.into());
        let piece_slope = |l: &Q, r: &Q| {
            let mid = (l + r) / &two;
            let v = self.eval(&mid);
            self.lines.iter().find(|(a, s)| a + s * &mid == v).map(|(_, s)| s.clone()).expect("active line")
        };
        let mut breakpoints = vec![lo.clone()];
        let mut slopes = vec![self.tied_slopes(lo).into_iter().max().expect("active line")];
        let mut current = piece_slope(&cuts[0], &cuts[1]);
        for w in cuts.windows(2).skip(1) {
            let s = piece_slope(&w[0], &w[1]);
            if s != current {
                breakpoints.push(w[0].clone());
                slopes.push(std::mem::replace(&mut current, s));
            }
        }
        slopes.push(current);
        breakpoints.push(hi.clone());
        slopes.push(self.tied_slopes(hi).into_iter().min().expect("active line"));
        let values = breakpoints.iter().map(|t| self.eval(t)).collect();
        PiecewiseLinearFn::new(breakpoints, values, slopes)
    }
}

fn check_twist(phi: &AnalyticWeight, psi: &AnalyticWeight) -> Result<MinLinear, TropError> {
    check_context(phi.context(), psi.context())?;
    psi.require_vanishing()?;
    Ok(MinLinear::new(psi.toric_points()?))
}

pub fn tian_envelope(
    phi: &AnalyticWeight,
    psi: &AnalyticWeight,
    rho: &BackgroundDensity,
) -> Result<TianEnvelope, TropError> {
    let e = check_twist(phi, psi)?;
    let toric = Toric::new(phi, rho)?;
    let gammas = shifted_exponents(rho, &Polynomial::one(phi.context().clone()))?;
    let mut lines = BTreeSet::new();
    let mut guards = BTreeSet::new();
    for w in toric.rays(&[&gammas, &e.points]) {
        let a = numerator(&gammas, &toric.d0, &w);
        let ev = e.eval(&w);
        let d = toric.d.eval(&w);
        if d.is_positive() {
            lines.insert((&a / &d, &ev / &d));
        }
        guards.insert((a, ev));
    }
    Ok(TianEnvelope { lines: lines.into_iter().collect(), guards: guards.into_iter().collect() })
}

/// Exact `Tn` on `[lo, hi]`.
pub fn tian_function(
    phi: &AnalyticWeight,
    psi: &AnalyticWeight,
    rho: &BackgroundDensity,
    lo: &Q,
    hi: &Q,
) -> Result<PiecewiseLinearFn, TropError> {
    tian_envelope(phi, psi, rho)?.restrict(lo, hi)
}

/// `Tn(t)` from the Newton-polyhedron LP at a single `t`.
pub fn tian_value_lp(phi: &AnalyticWeight, psi: &AnalyticWeight, rho: &BackgroundDensity, t: &Q) -> Result<Q, TropError> {
    let e = check_twist(phi, psi)?;
    let toric = Toric::new(phi, rho)?;
    let gammas = shifted_exponents(rho, &Polynomial::one(phi.context().clone()))?;
    let mut best: Option<Q> = None;
    let mut consider = |point: Vec<Q>, fixed: &[(Q, &[Vec<Q>])]| -> Result<(), TropError> {
        match max_scale(&point, fixed, &toric.d.points) {
            Some(ExtQ::Finite(v)) if v.is_positive() => {
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
                Ok(())
            }
            _ => Err(TropError::TianUndefined(fmt_q(t))),
        }
    };
    for gamma in &gammas {
        if t.is_negative() {
            consider(gamma.clone(), &[(Q::one(), &toric.d0.points), (-t, &e.points)])?;
        } else {
            for qpt in &e.points {
                let point = gamma.iter().zip(qpt).map(|(g, x)| g + t * x).collect();
                consider(point, &[(Q::one(), &toric.d0.points)])?;
            }
        }
    }
    Ok(best.expect("exponent set is nonempty"))
}
