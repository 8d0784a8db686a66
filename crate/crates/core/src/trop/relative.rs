use num_traits::Signed;

use super::toric::{check_context, MinLinear};
use super::{AnalyticWeight, Ray, TropError};
use crate::arrangement::candidate_rays;
use crate::poly::{newton_data, Polynomial};
use crate::rational::{ExtQ, Q};

/// One evaluated candidate ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateEntry {
    pub ray: Ray,
    pub numerator: Q,
    pub denominator: Q,
}

impl CertificateEntry {
    pub fn ratio(&self) -> Option<Q> {
        self.denominator.is_positive().then(|| &self.numerator / &self.denominator)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeTypeResult {
    pub value: ExtQ,
    /// Minimizing rays on the standard simplex, lexicographic order.
    pub witnesses: Vec<Ray>,
    pub certificate: Vec<CertificateEntry>,
}

/// `sigma(log|g|, phi) = inf_w trop(g, w) / D(w)` over the standard simplex.
///
/// Both sides are concave and piecewise linear, and the ratio is
/// linear-fractional on every cell of their common refinement, so the
/// infimum is attained at a cell vertex with `D > 0`. Vertices where
/// `D = 0` carry no information: `trop(g, .) >= 0` there and the ratio is
/// constant along segments issuing from them.
pub fn relative_type(g: &Polynomial, phi: &AnalyticWeight) -> Result<RelativeTypeResult, TropError> {
    check_context(phi.context(), g.vars())?;
    phi.require_vanishing()?;
    let den = MinLinear::new(phi.toric_points()?);
    if g.is_zero() {
        return Ok(RelativeTypeResult { value: ExtQ::Infinity, witnesses: Vec::new(), certificate: Vec::new() });
    }
    let num = MinLinear { points: newton_data(g)?.vertex_points() };
    let rays = candidate_rays(phi.dim(), &[&num.points, &den.points]);
    let certificate: Vec<CertificateEntry> = rays
        .into_iter()
        .map(|w| CertificateEntry {
            numerator: num.eval(&w),
            denominator: den.eval(&w),
            ray: Ray::new(w).expect("simplex points are rays"),
        })
        .collect();
    let value = certificate
        .iter()
        .filter_map(CertificateEntry::ratio)
        .min()
        .expect("the denominator is positive in the interior of the simplex");
    let witnesses = certificate
        .iter()
        .filter(|e| e.ratio().as_ref() == Some(&value))
        .map(|e| e.ray.clone())
        .collect();
    Ok(RelativeTypeResult { value: ExtQ::Finite(value), witnesses, certificate })
}

/// `sigma(psi, phi) = inf_w E(w) / D(w)` for a second analytic weight `psi`.
pub fn weight_relative_type(psi: &AnalyticWeight, phi: &AnalyticWeight) -> Result<ExtQ, TropError> {
    check_context(phi.context(), psi.context())?;
    phi.require_vanishing()?;
    let den = MinLinear::new(phi.toric_points()?);
    let num = MinLinear::new(psi.toric_points()?);
    let rays = candidate_rays(phi.dim(), &[&num.points, &den.points]);
    let value = rays
        .iter()
        .filter_map(|w| {
            let d = den.eval(w);
            d.is_positive().then(|| num.eval(w) / d)
        })
        .min()
        .expect("the denominator is positive in the interior of the simplex");
    Ok(ExtQ::Finite(value))
}

/// `max trop(g, w) / D_1(w)` over candidate rays with `D_1 > 0`, where
/// `D_1` is the profile of `truncate_weight(phi, 1)`. Bounds
/// `sigma(fg, phi_N) - sigma(f, phi_N)` for every `N >= 1`, since
/// `D_N >= D_1` pointwise.
pub fn multiplicative_bound_constant(g: &Polynomial, phi: &AnalyticWeight) -> Result<Q, TropError> {
    check_context(phi.context(), g.vars())?;
    if g.is_zero() {
        return Err(TropError::ZeroPolynomial);
    }
    let truncated = super::truncate_weight(phi, 1)?;
    truncated.require_vanishing()?;
    let den = MinLinear::new(truncated.toric_points()?);
    let num = MinLinear { points: newton_data(g)?.vertex_points() };
    let rays = candidate_rays(phi.dim(), &[&num.points, &den.points]);
    Ok(rays
        .iter()
        .filter_map(|w| {
            let d = den.eval(w);
            d.is_positive().then(|| num.eval(w) / d)
        })
        .max()
        .expect("D_1 is positive inside the simplex"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{context, parse_polynomial};
    use crate::rational::{q, qf};

    const V2: [&str; 2] = ["z1", "z2"];

    fn lin() -> AnalyticWeight {
        AnalyticWeight::parse(&V2, q(1), &[("z1", q(1)), ("z2", q(1))]).unwrap()
    }

    fn sigma(g: &str, phi: &AnalyticWeight) -> RelativeTypeResult {
        relative_type(&parse_polynomial(g, &V2).unwrap(), phi).unwrap()
    }

    #[test]
    fn product_of_coordinates() {
        let r = sigma("z1*z2", &lin());
        assert_eq!(r.value, ExtQ::Finite(q(2)));
        assert_eq!(r.witnesses, vec![Ray::new(vec![qf(1, 2), qf(1, 2)]).unwrap()]);
    }

    #[test]
    fn cusp_against_linear_weight() {
        let r = sigma("z1^3 - z2^2", &lin());
        assert_eq!(r.value, ExtQ::Finite(q(2)));
        assert_eq!(r.witnesses, vec![Ray::new(vec![qf(1, 2), qf(1, 2)]).unwrap()]);
        let at = |w: Vec<Q>| r.certificate.iter().find(|e| e.ray.entries() == w.as_slice()).unwrap().ratio();
        assert_eq!(at(vec![qf(2, 5), qf(3, 5)]), Some(q(3)));
    }

    #[test]
    fn high_power_and_scaled_generators() {
        assert_eq!(sigma("z1^4*z2^4", &lin()).value, ExtQ::Finite(q(8)));
        let sq = AnalyticWeight::parse(&V2, q(1), &[("z1^2", q(1)), ("z2^2", q(1))]).unwrap();
        assert_eq!(sigma("z1", &sq).value, ExtQ::Finite(qf(1, 2)));
    }

    #[test]
    fn zero_denominator_faces_are_skipped() {
        // D(w) = w1 vanishes at (0,1)
        let phi = AnalyticWeight::parse(&V2, q(1), &[("z1", q(1))]).unwrap();
        assert_eq!(sigma("z2", &phi).value, ExtQ::Finite(q(0)));
        assert_eq!(sigma("z1*z2", &phi).value, ExtQ::Finite(q(1)));
    }

    #[test]
    fn weight_against_weight() {
        let psi = AnalyticWeight::parse(&V2, q(3), &[("z1*z2", q(1))]).unwrap();
        let sq = AnalyticWeight::parse(&V2, q(1), &[("z1^2", q(1)), ("z2^2", q(1))]).unwrap();
        assert_eq!(weight_relative_type(&psi, &sq).unwrap(), ExtQ::Finite(q(3)));
        let psi = AnalyticWeight::parse(&V2, q(1), &[("z1", q(2)), ("z2", q(1))]).unwrap();
        assert_eq!(weight_relative_type(&psi, &lin()).unwrap(), ExtQ::Finite(qf(1, 2)));
    }

    #[test]
    fn zero_polynomial_is_infinite() {
        let r = relative_type(&Polynomial::zero(context(&V2)), &lin()).unwrap();
        assert!(r.value.is_infinite());
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn non_vanishing_weight_rejected() {
        let phi = AnalyticWeight::parse(&V2, q(1), &[("1 + z1", q(1))]).unwrap();
        let g = parse_polynomial("z1", &V2).unwrap();
        assert!(matches!(relative_type(&g, &phi), Err(TropError::NotVanishingAtOrigin { index: 0, .. })));
    }

    #[test]
    fn bound_constant_for_coordinate_factor() {
        let g = parse_polynomial("z1", &V2).unwrap();
        assert_eq!(multiplicative_bound_constant(&g, &lin()).unwrap(), q(1));
        let one = parse_polynomial("1", &V2).unwrap();
        assert_eq!(multiplicative_bound_constant(&one, &lin()).unwrap(), q(0));
    }
}
