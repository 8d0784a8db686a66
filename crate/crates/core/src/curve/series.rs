//! Germs at the origin of a monomial curve as truncated Laurent series in `t`.
//!
//! Weakly holomorphic germs are modeled as holomorphic germs on the
//! normalization, i.e. power series in `t`; a germ lies in `O_{X,o}` when
//! only exponents of the semigroup `<p, q>` occur.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{CurveError, CurvePoint, MonomialCurve, UPoly};
use crate::poly::{context, ExponentVector, Polynomial};
use crate::rational::{ExtQ, Q};

/// `sum_k c_k t^k`, with every coefficient of exponent `< order` known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: BTreeMap<i64, Q>,
    order: i64,
}

impl TruncatedSeries {
    pub fn new<I: IntoIterator<Item = (i64, Q)>>(terms: I, order: i64) -> Result<Self, CurveError> {
        let mut coeffs: BTreeMap<i64, Q> = BTreeMap::new();
        for (k, c) in terms {
            if k >= order {
                return Err(CurveError::InvalidPoint(format!(
                    "series term t^{k} lies at or beyond the truncation order {order}"
                )));
            }
            *coeffs.entry(k).or_insert_with(Q::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries { coeffs, order })
    }

    /// `t^k + O(t^order)`.
    pub fn monomial(k: i64, order: i64) -> Result<Self, CurveError> {
        Self::new([(k, Q::one())], order)
    }

    /// A polynomial in `t`, truncated at `order`.
    pub fn from_upoly(u: &UPoly, order: i64) -> Self {
        let coeffs = u
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (k as i64, c.clone()))
            .filter(|(k, c)| *k < order && !c.is_zero())
            .collect();
        TruncatedSeries { coeffs, order }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Result<i64, CurveError> {
        self.coeffs.keys().next().copied().ok_or(CurveError::UndeterminedSeries(self.order))
    }

    fn lower_bound(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.order)
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.saturating_add(other.lower_bound()).min(other.order.saturating_add(self.lower_bound()));
        let mut coeffs: BTreeMap<i64, Q> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                if a + b < order {
                    *coeffs.entry(a + b).or_insert_with(Q::zero) += x * y;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        TruncatedSeries { coeffs, order }
    }

    /// Product with an exact polynomial in `t`.
    pub fn mul_exact(&self, u: &UPoly) -> TruncatedSeries {
        let Some(low) = u.order_at_zero() else {
            return TruncatedSeries { coeffs: BTreeMap::new(), order: i64::MAX };
        };
        let exact = TruncatedSeries::from_upoly(u, i64::MAX);
        let order = self.order + low as i64;
        let mut out = self.mul(&exact);
        out.order = order;
        out.coeffs.retain(|k, _| *k < order);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub in_o: bool,
    pub in_ow: bool,
}

pub fn weakly_holomorphic_membership(s: &TruncatedSeries, curve: &MonomialCurve) -> Result<Membership, CurveError> {
    let frobenius = curve.frobenius();
    if s.order <= frobenius {
        return Err(CurveError::InsufficientTruncation { order: s.order, frobenius });
    }
    let in_ow = s.coeffs.keys().all(|&k| k >= 0);
    let in_o = in_ow && s.coeffs.keys().all(|&k| curve.in_semigroup(k));
    Ok(Membership { in_o, in_ow })
}

/// `z1^m` with `m = ceil((F + 1) / p)`: multiplies every weakly holomorphic
/// germ into `O_{X,o}`, since `t^{pm}` shifts all exponents past `F`.
pub fn universal_denominator(curve: &MonomialCurve) -> Polynomial {
    let p = i64::from(curve.p());
    let m = (curve.frobenius() + 1 + p - 1).div_euclid(p).max(0);
    let m = u32::try_from(m).expect("denominator exponent fits in u32");
    Polynomial::monomial(context(&["z1", "z2"]), ExponentVector::new(vec![m, 0]), Q::one())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveFunction {
    Polynomial(Polynomial),
    /// A germ at the origin.
    Series(TruncatedSeries),
    /// `numerator / denominator` at the origin.
    Quotient { numerator: TruncatedSeries, denominator: Polynomial },
}

/// Order of a function along `X` at `pt`.
pub fn curve_valuation(f: &CurveFunction, curve: &MonomialCurve, pt: &CurvePoint) -> Result<ExtQ, CurveError> {
    let origin_only = || {
        if pt.is_origin() {
            Ok(())
        } else {
            Err(CurveError::InvalidPoint("series inputs are germs at the origin".into()))
        }
    };
    match f {
        CurveFunction::Polynomial(p) => match super::pullback_order(p, curve, pt)? {
            ExtQ::Infinity => Err(CurveError::InDefiningIdeal(p.to_string())),
            v => Ok(v),
        },
        CurveFunction::Series(s) => {
            origin_only()?;
            Ok(ExtQ::Finite(Q::from_integer(s.valuation()?.into())))
        }
        CurveFunction::Quotient { numerator, denominator } => {
            origin_only()?;
            let den = match super::pullback_order(denominator, curve, pt)? {
                ExtQ::Finite(d) => d,
                ExtQ::Infinity => return Err(CurveError::InDefiningIdeal(denominator.to_string())),
            };
            let num = Q::from_integer(numerator.valuation()?.into());
            let value = &num - &den;
            // weakly holomorphic numerators stay above -ord(denominator)
            debug_assert!(num < Q::zero() || value >= -den.clone());
            Ok(ExtQ::Finite(value))
        }
    }
}
