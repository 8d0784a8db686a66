//! Slow, independent recomputations used by `--oracle` runs.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::curve::{CurvePoint, MonomialCurve};
use crate::poly::Polynomial;
use crate::rational::{ExtQ, Q};
use crate::trop::{trop_value, weight_value, AnalyticWeight, Ray, TropError};

/// Compositions of `n` into `parts` nonnegative integers.
fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|k| {
            compositions(n - k, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, k);
                rest
            })
        })
        .collect()
}

/// `min trop(g, w) / D(w)` over the simplex grid `w in (1/n) Z^d`.
///
/// An upper bound for the exact relative type, equal to it whenever some
/// minimizer lies on the grid.
pub fn grid_relative_type(g: &Polynomial, phi: &AnalyticWeight, n: u32) -> Result<ExtQ, TropError> {
    if g.is_zero() {
        return Ok(ExtQ::Infinity);
    }
    let denom = Q::from_integer(BigInt::from(n));
    let mut best: Option<Q> = None;
    for c in compositions(n, phi.dim()) {
        let w = Ray::new(c.into_iter().map(|k| Q::from_integer(k.into()) / &denom).collect())?;
        let d = weight_value(phi, &w)?;
        if d.is_positive() {
            let r = trop_value(g, &w)? / d;
            if best.as_ref().is_none_or(|b| r < *b) {
                best = Some(r);
            }
        }
    }
    Ok(best.map_or(ExtQ::Infinity, ExtQ::Finite))
}

fn binomial(n: usize, k: usize) -> Q {
    (0..k).fold(Q::from_integer(1.into()), |acc, i| acc * Q::from_integer((n - i).into()) / Q::from_integer((i + 1).into()))
}

/// Order of `f(t^p, t^q)` at a rational parameter from Taylor coefficients.
///
/// `None` for roots of unity, which have no rational expansion point.
pub fn curve_order_by_taylor(f: &Polynomial, curve: &MonomialCurve, pt: &CurvePoint) -> Option<ExtQ> {
    let u = curve.pullback(f).ok()?;
    let c = u.coeffs();
    let t0 = match pt {
        CurvePoint::Origin => Q::zero(),
        CurvePoint::Rational(t) => t.clone(),
        CurvePoint::UnitRoot(_) => return None,
    };
    for k in 0..c.len() {
        let mut pow = Q::from_integer(1.into());
        let mut coeff = Q::zero();
        for (j, cj) in c.iter().enumerate().skip(k) {
            if j > k {
                pow *= &t0;
            }
            coeff += binomial(j, k) * cj * &pow;
        }
        if !coeff.is_zero() {
            return Some(ExtQ::Finite(Q::from_integer(k.into())));
        }
    }
    Some(ExtQ::Infinity)
}
