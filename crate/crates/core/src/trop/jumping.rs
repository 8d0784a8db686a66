//! Jumping numbers `c^G(phi) = sup{c : rho |G|^2 e^{-2c phi} integrable near o}`.
//!
//! For toric data the density is integrable exactly when every shifted
//! exponent `gamma + 1` of `f0_i * G` lies in the interior of
//! `P(phi_0) + c P(phi)`, where `P(.)` is the Newton polyhedron of the
//! scaled points `c alpha_j / a_j`. The threshold is therefore the minimum
//! over `gamma` of a small linear program.

use num_traits::{One, Signed};

use super::toric::{max_scale, numerator, shifted_exponents, Toric};
use super::{AnalyticWeight, BackgroundDensity, TropError};
use crate::poly::Polynomial;
use crate::rational::{ExtQ, Q};

/// `c^G(phi)` against the unit density.
pub fn jumping_number(phi: &AnalyticWeight, g: &Polynomial) -> Result<Q, TropError> {
    weighted_jumping_number(phi, &BackgroundDensity::trivial(phi.context().clone()), g)
}

/// Whether `rho |G|^2` is integrable near the origin.
pub fn density_is_integrable(rho: &BackgroundDensity, g: &Polynomial) -> Result<bool, TropError> {
    let gammas = shifted_exponents(rho, g)?;
    let Some(phi0) = rho.phi0() else { return Ok(true) };
    let d0 = super::toric::MinLinear::new(phi0.toric_points()?);
    let rays = crate::arrangement::candidate_rays(phi0.dim(), &[&gammas, &d0.points]);
    Ok(rays.iter().all(|w| numerator(&gammas, &d0, w).is_positive()))
}

/// `c^G(phi)` against `rho = |f0|^2 e^{-2 phi_0}`, by linear programming.
pub fn weighted_jumping_number(
    phi: &AnalyticWeight,
    rho: &BackgroundDensity,
    g: &Polynomial,
) -> Result<Q, TropError> {
    let toric = Toric::new(phi, rho)?;
    let gammas = shifted_exponents(rho, g)?;
    if !density_is_integrable(rho, g)? {
        return Err(TropError::DensityNotIntegrable);
    }
    let fixed = [(Q::one(), toric.d0.points.as_slice())];
    let mut best: Option<Q> = None;
    for gamma in &gammas {
        let value = match max_scale(gamma, &fixed, &toric.d.points) {
            Some(ExtQ::Finite(v)) => v,
            // nonzero points bound t; infeasibility is excluded above
            _ => unreachable!("integrable density yields a finite threshold"),
        };
        if best.as_ref().is_none_or(|b| value < *b) {
            best = Some(value);
        }
    }
    Ok(best.expect("nonzero f0 * G has support"))
}

/// Same value, by minimizing `(min_gamma <gamma + 1, w> - D0(w)) / D(w)`
/// over candidate rays. Independent of the LP code path.
pub fn jumping_number_by_rays(
    phi: &AnalyticWeight,
    rho: &BackgroundDensity,
    g: &Polynomial,
) -> Result<Q, TropError> {
    let toric = Toric::new(phi, rho)?;
    let gammas = shifted_exponents(rho, g)?;
    let rays = toric.rays(&[&gammas]);
    let mut best: Option<Q> = None;
    for w in &rays {
        let a = numerator(&gammas, &toric.d0, w);
        let d = toric.d.eval(w);
        if !a.is_positive() {
            return Err(TropError::DensityNotIntegrable);
        }
        if d.is_positive() {
            let r = a / d;
            if best.as_ref().is_none_or(|b| r < *b) {
                best = Some(r);
            }
        }
    }
    Ok(best.expect("D is positive inside the simplex"))
}
