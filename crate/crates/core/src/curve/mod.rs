//! Monomial curve germs `X = {z1^q = z2^p}` through their normalization
//! `t -> (t^p, t^q)`.
//!
//! Everything is computed on the pullback `f(t^p, t^q)`, a univariate
//! polynomial in `t`. Since `gcd(p, q) = 1` the parameterization is
//! injective, so orders along `X` are orders in `t`.

mod series;
mod univariate;

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{Context, ExponentVector, PolyError, Polynomial};
use crate::rational::{fmt_q, ExtQ, Q};

pub use series::{
    curve_valuation, universal_denominator, weakly_holomorphic_membership, CurveFunction, Membership,
    TruncatedSeries,
};
pub use univariate::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("invalid monomial curve (p, q) = ({p}, {q}): need coprime 1 <= p < q")]
    InvalidCurve { p: u32, q: u32 },
    #[error("curve functions take exactly two variables, got {0}")]
    WrongVariableCount(usize),
    #[error("`{0}` lies in the defining ideal of the curve")]
    InDefiningIdeal(String),
    #[error("generator {index} (`{poly}`) does not vanish at the point")]
    NotSingularAt { index: usize, poly: String },
    #[error("generator {index} has non-positive exponent {a}")]
    InvalidExponent { index: usize, a: String },
    #[error("truncation order {order} does not exceed the Frobenius number {frobenius}")]
    InsufficientTruncation { order: i64, frobenius: i64 },
    #[error("invalid curve point: {0}")]
    InvalidPoint(String),
    #[error("series coefficients are undetermined below the truncation order {0}")]
    UndeterminedSeries(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialCurve {
    p: u32,
    q: u32,
}

impl MonomialCurve {
    pub fn new(p: u32, q: u32) -> Result<Self, CurveError> {
        if p == 0 || p >= q || p.gcd(&q) != 1 {
            return Err(CurveError::InvalidCurve { p, q });
        }
        Ok(MonomialCurve { p, q })
    }

    /// The cuspidal cubic `z1^3 = z2^2`.
    pub fn cusp() -> Self {
        MonomialCurve { p: 2, q: 3 }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Largest integer outside the semigroup `<p, q>`; `-1` when `p = 1`.
    pub fn frobenius(&self) -> i64 {
        let (p, q) = (i64::from(self.p), i64::from(self.q));
        p * q - p - q
    }

    /// `k` lies in `<p, q>` (which contains 0).
    pub fn in_semigroup(&self, k: i64) -> bool {
        if k < 0 {
            return false;
        }
        let (p, q) = (i64::from(self.p), i64::from(self.q));
        (0..=k / q).any(|b| (k - b * q) % p == 0)
    }

    /// `z1^q - z2^p`.
    pub fn defining_polynomial(&self, vars: &Context) -> Polynomial {
        let a = Polynomial::monomial(vars.clone(), ExponentVector::new(vec![self.q, 0]), Q::one());
        let b = Polynomial::monomial(vars.clone(), ExponentVector::new(vec![0, self.p]), Q::one());
        &a - &b
    }

    /// `f(t^p, t^q)`.
    pub fn pullback(&self, f: &Polynomial) -> Result<UPoly, CurveError> {
        if f.num_vars() != 2 {
            return Err(CurveError::WrongVariableCount(f.num_vars()));
        }
        let mut out = UPoly::zero();
        for (e, c) in f.terms() {
            let k = u64::from(self.p) * u64::from(e.entries()[0]) + u64::from(self.q) * u64::from(e.entries()[1]);
            let k = usize::try_from(k).expect("degree fits in memory");
            out = out.add(&UPoly::monomial(k, c.clone()));
        }
        Ok(out)
    }

    /// Point of `X` over a rational parameter.
    pub fn point_at(&self, t: &Q) -> (Q, Q) {
        let pw = |e: u32| (0..e).fold(Q::one(), |acc, _| acc * t);
        (pw(self.p), pw(self.q))
    }
}

impl fmt::Display for MonomialCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z1^{} = z2^{}", self.q, self.p)
    }
}

/// A point of `X` in the parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    /// `t = 0`.
    Origin,
    /// `t = t0`, a nonzero rational.
    Rational(Q),
    /// `t` a primitive `d`-th root of unity.
    UnitRoot(u32),
}

impl CurvePoint {
    pub fn rational(t0: Q) -> Result<Self, CurveError> {
        if t0.is_zero() {
            return Err(CurveError::InvalidPoint("a smooth point needs t0 != 0; use the origin".into()));
        }
        Ok(CurvePoint::Rational(t0))
    }

    pub fn unit_root(d: u32) -> Result<Self, CurveError> {
        if d == 0 {
            return Err(CurveError::InvalidPoint("root of unity order must be positive".into()));
        }
        Ok(if d == 1 { CurvePoint::Rational(Q::one()) } else { CurvePoint::UnitRoot(d) })
    }

    pub fn is_origin(&self) -> bool {
        matches!(self, CurvePoint::Origin)
    }

    /// Order of vanishing of a pullback at this point; `Infinity` for zero.
    pub fn order(&self, f: &UPoly) -> ExtQ {
        let m = match self {
            CurvePoint::Origin => f.order_at_zero().map(|k| k as u64),
            CurvePoint::Rational(t0) => f.multiplicity(&UPoly::linear_root(t0)),
            CurvePoint::UnitRoot(d) => f.multiplicity(&UPoly::cyclotomic(*d)),
        };
        match m {
            Some(k) => ExtQ::Finite(Q::from_integer(k.into())),
            None => ExtQ::Infinity,
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Origin => write!(f, "t=0"),
            CurvePoint::Rational(t) => write!(f, "t={}", fmt_q(t)),
            CurvePoint::UnitRoot(d) => write!(f, "t=primitive root of unity of order {d}"),
        }
    }
}

/// Order of `f(t^p, t^q)` at `pt`; `Infinity` iff `f` vanishes on `X`.
pub fn pullback_order(f: &Polynomial, curve: &MonomialCurve, pt: &CurvePoint) -> Result<ExtQ, CurveError> {
    Ok(pt.order(&curve.pullback(f)?))
}

/// `ord(g) / min_j (ord(f_j) / a_j)` along `X` at `pt`.
pub fn relative_type_curve(
    g: &Polynomial,
    phi: &[(Polynomial, Q)],
    curve: &MonomialCurve,
    pt: &CurvePoint,
) -> Result<ExtQ, CurveError> {
    let num = match pullback_order(g, curve, pt)? {
        ExtQ::Finite(v) => v,
        ExtQ::Infinity => return Err(CurveError::InDefiningIdeal(g.to_string())),
    };
    let mut den: Option<Q> = None;
    for (index, (f, a)) in phi.iter().enumerate() {
        if !a.is_positive() {
            return Err(CurveError::InvalidExponent { index, a: fmt_q(a) });
        }
        let r = match pullback_order(f, curve, pt)? {
            // f vanishes on X: contributes nothing to the sum
            ExtQ::Infinity => continue,
            ExtQ::Finite(o) if o.is_zero() => {
                return Err(CurveError::NotSingularAt { index, poly: f.to_string() });
            }
            ExtQ::Finite(o) => o / a,
        };
        if den.as_ref().is_none_or(|d| r < *d) {
            den = Some(r);
        }
    }
    match den {
        Some(d) => Ok(ExtQ::Finite(num / d)),
        None => Err(CurveError::InvalidPoint("every generator vanishes identically on the curve".into())),
    }
}

/// Common zeros of `fs` on `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveZeroSet {
    /// Every function vanishes identically on `X`.
    pub whole_curve: bool,
    pub contains_origin: bool,
    /// Nonzero rational parameters with their points `(t^p, t^q)`.
    pub rational_points: Vec<(Q, (Q, Q))>,
    /// Monic factor of the common pullback gcd without rational roots.
    pub irrational_factor: UPoly,
}

impl CurveZeroSet {
    pub fn is_origin_only(&self) -> bool {
        !self.whole_curve && self.contains_origin && self.rational_points.is_empty() && self.irrational_factor.degree() == Some(0)
    }
}

pub fn curve_zero_set(fs: &[Polynomial], curve: &MonomialCurve) -> Result<CurveZeroSet, CurveError> {
    let mut g = UPoly::zero();
    for f in fs {
        g = g.gcd(&curve.pullback(f)?);
    }
    if g.is_zero() {
        return Ok(CurveZeroSet {
            whole_curve: true,
            contains_origin: true,
            rational_points: Vec::new(),
            irrational_factor: UPoly::zero(),
        });
    }
    let roots = g.rational_roots();
    let mut rest = g.clone();
    for r in &roots {
        let lin = UPoly::linear_root(r);
        while rest.div_rem(&lin).1.is_zero() {
            rest = rest.div_rem(&lin).0;
        }
    }
    Ok(CurveZeroSet {
        whole_curve: false,
        contains_origin: roots.iter().any(Zero::is_zero),
        rational_points: roots.iter().filter(|r| !r.is_zero()).map(|r| (r.clone(), curve.point_at(r))).collect(),
        irrational_factor: rest.monic(),
    })
}
