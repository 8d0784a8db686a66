//! Shared machinery: min-of-linear functions and the Newton-polyhedron LP.

use num_traits::{One, Signed, Zero};

use super::{AnalyticWeight, BackgroundDensity, TropError};
use crate::arrangement::candidate_rays;
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::poly::{newton_vertices, Context, PolyError, Polynomial};
use crate::rational::{dot, ExtQ, Q};

/// `w -> min_{p in points} <p, w>`; identically zero when `points` is empty.
#[derive(Clone, Debug, Default)]
pub(crate) struct MinLinear {
    pub points: Vec<Vec<Q>>,
}

impl MinLinear {
    pub fn new(points: Vec<Vec<Q>>) -> Self {
        MinLinear { points: reduce(&points) }
    }

    pub fn eval(&self, w: &[Q]) -> Q {
        self.points.iter().map(|p| dot(p, w)).min().unwrap_or_else(Q::zero)
    }
}

/// Newton vertices of `points`, in input order.
pub(crate) fn reduce(points: &[Vec<Q>]) -> Vec<Vec<Q>> {
    newton_vertices(points).into_iter().map(|i| points[i].clone()).collect()
}

pub(crate) fn check_context(expected: &Context, got: &Context) -> Result<(), TropError> {
    if expected == got {
        Ok(())
    } else {
        Err(PolyError::ContextMismatch { left: expected.join(","), right: got.join(",") }.into())
    }
}

/// Weight data for the LP and ray routes.
pub(crate) struct Toric {
    pub dim: usize,
    /// Reduced points of `phi`.
    pub d: MinLinear,
    /// Reduced points of `phi_0` (empty when absent).
    pub d0: MinLinear,
}

impl Toric {
    pub fn new(phi: &AnalyticWeight, rho: &BackgroundDensity) -> Result<Self, TropError> {
        phi.require_vanishing()?;
        check_context(phi.context(), rho.context())?;
        let d = MinLinear::new(phi.toric_points()?);
        let d0 = match rho.phi0() {
            Some(w) => MinLinear::new(w.toric_points()?),
            None => MinLinear::default(),
        };
        Ok(Toric { dim: phi.dim(), d, d0 })
    }

    pub fn rays(&self, extra: &[&[Vec<Q>]]) -> Vec<Vec<Q>> {
        let mut sets: Vec<&[Vec<Q>]> = vec![&self.d.points, &self.d0.points];
        sets.extend_from_slice(extra);
        candidate_rays(self.dim, &sets)
    }
}

/// Reduced exponent points `gamma + 1` over the supports of `f0_i * G`.
pub(crate) fn shifted_exponents(rho: &BackgroundDensity, g: &Polynomial) -> Result<Vec<Vec<Q>>, TropError> {
    if g.is_zero() {
        return Err(TropError::ZeroPolynomial);
    }
    check_context(rho.context(), g.vars())?;
    let mut pts = Vec::new();
    for f in rho.f0().iter().filter(|f| !f.is_zero()) {
        let prod = f.checked_mul(g)?;
        for e in prod.support() {
            pts.push(e.to_rational().into_iter().map(|x| x + Q::one()).collect::<Vec<Q>>());
        }
    }
    Ok(reduce(&pts))
}

/// `max { t : point in sum_f m_f * conv(F) + t * conv(target) + R^n_{>=0} }`.
///
/// `None` when infeasible for every `t >= 0`.
pub(crate) fn max_scale(point: &[Q], fixed: &[(Q, &[Vec<Q>])], target: &[Vec<Q>]) -> Option<ExtQ> {
    let fixed: Vec<&(Q, &[Vec<Q>])> = fixed.iter().filter(|(m, pts)| m.is_positive() && !pts.is_empty()).collect();
    let nfixed: usize = fixed.iter().map(|(_, pts)| pts.len()).sum();
    let nvars = nfixed + target.len();
    let mut objective = vec![Q::zero(); nvars];
    for o in objective.iter_mut().skip(nfixed) {
        *o = Q::one();
    }
    let mut lp = LinearProgram::maximize(objective);
    let mut offset = 0;
    for (m, pts) in &fixed {
        let mut row = vec![Q::zero(); nvars];
        for r in row.iter_mut().skip(offset).take(pts.len()) {
            *r = Q::one();
        }
        lp.constraint(row, Relation::Eq, m.clone());
        offset += pts.len();
    }
    for (coord, bound) in point.iter().enumerate() {
        let row: Vec<Q> = fixed
            .iter()
            .flat_map(|(_, pts)| pts.iter())
            .chain(target)
            .map(|p| p[coord].clone())
            .collect();
        lp.constraint(row, Relation::Le, bound.clone());
    }
    match lp.solve() {
        LpOutcome::Optimal { value, .. } => Some(ExtQ::Finite(value)),
        LpOutcome::Unbounded => Some(ExtQ::Infinity),
        LpOutcome::Infeasible => None,
    }
}

/// `min_gamma <gamma, w> - D0(w)`.
pub(crate) fn numerator(gammas: &[Vec<Q>], d0: &MinLinear, w: &[Q]) -> Q {
    let best = gammas.iter().map(|g| dot(g, w)).min().expect("nonempty exponent set");
    best - d0.eval(w)
}
