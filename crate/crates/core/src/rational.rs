//! Exact rational helpers shared by every exact layer.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"-p/q"` or a bare integer.
pub fn parse_q(text: &str) -> Option<Q> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Q::new(num, den))
}

/// Always `num/den`, including integers (`6/1`).
pub fn fmt_q(value: &Q) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn to_f64(value: &Q) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Rational extended by `+infinity`, with saturating addition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtQ {
    Finite(Q),
    Infinity,
}

impl ExtQ {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            ExtQ::Finite(v) => Some(v),
            ExtQ::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtQ::Infinity)
    }

    pub fn to_report_string(&self) -> String {
        match self {
            ExtQ::Finite(v) => fmt_q(v),
            ExtQ::Infinity => "inf".to_string(),
        }
    }
}

impl From<Q> for ExtQ {
    fn from(v: Q) -> Self {
        ExtQ::Finite(v)
    }
}

impl PartialOrd for ExtQ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtQ {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtQ::Finite(a), ExtQ::Finite(b)) => a.cmp(b),
            (ExtQ::Finite(_), ExtQ::Infinity) => Ordering::Less,
            (ExtQ::Infinity, ExtQ::Finite(_)) => Ordering::Greater,
            (ExtQ::Infinity, ExtQ::Infinity) => Ordering::Equal,
        }
    }
}

impl std::ops::Add for ExtQ {
    type Output = ExtQ;
    fn add(self, rhs: ExtQ) -> ExtQ {
        match (self, rhs) {
            (ExtQ::Finite(a), ExtQ::Finite(b)) => ExtQ::Finite(a + b),
            _ => ExtQ::Infinity,
        }
    }
}

impl fmt::Display for ExtQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_report_string())
    }
}

/// Dot product of a rational vector with an integer exponent vector.
pub fn dot_int(w: &[Q], exps: &[u32]) -> Q {
    w.iter()
        .zip(exps)
        .filter(|(_, &e)| e != 0)
        .fold(Q::zero(), |acc, (wi, &e)| acc + wi * Q::from_integer(BigInt::from(e)))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Smallest integer `>= value`.
pub fn ceil_q(value: &Q) -> BigInt {
    value.ceil().to_integer()
}

pub fn is_nonneg(v: &Q) -> bool {
    !v.is_negative()
}

pub fn one() -> Q {
    Q::one()
}

pub fn zero() -> Q {
    Q::zero()
}

/// Solves the square system `a * x = b` exactly; `None` when singular.
#[allow(clippy::needless_range_loop)]
pub fn solve_square(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for k in col..n {
            a[col][k] = &a[col][k] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for k in col..n {
                    let delta = &factor * &a[col][k];
                    a[r][k] -= delta;
                }
                let delta = &factor * &b[col];
                b[r] -= delta;
            }
        }
    }
    Some(b)
}
