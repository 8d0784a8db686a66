//! Multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] lives in a fixed variable context (an ordered list of
//! names). Arithmetic between polynomials of different contexts is refused;
//! the `checked_*` methods report it, the operator impls panic on it.

mod newton;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{to_f64, Q};

pub use newton::{newton_data, newton_vertices, point_in_newton_polyhedron, NewtonData};
pub use parse::parse_polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at column {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at column {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("negative exponent at column {position}")]
    NegativeExponent { position: usize },
    #[error("fractional exponent at column {position}")]
    FractionalExponent { position: usize },
    #[error("variable context mismatch: [{left}] vs [{right}]")]
    ContextMismatch { left: String, right: String },
    #[error("the zero polynomial has no Newton data")]
    ZeroPolynomial,
    #[error("exponent vector has {got} entries, context has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
}

/// Exponents of a monomial, one entry per context variable.
///
/// Ordered graded-lexicographically: total degree first, then entries left
/// to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, index: usize, power: u32) -> Self {
        let mut e = vec![0; n];
        e[index] = power;
        ExponentVector(e)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Coordinatewise `self >= other`.
    pub fn dominates(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn to_rational(&self) -> Vec<Q> {
        self.0.iter().map(|&e| Q::from_integer(BigInt::from(e))).collect()
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered variable names shared by every polynomial of one problem.
pub type Context = Arc<[String]>;

pub fn context<S: AsRef<str>>(names: &[S]) -> Context {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: Context,
    terms: BTreeMap<ExponentVector, Q>,
}

impl Polynomial {
    pub fn zero(vars: Context) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Context, value: Q) -> Self {
        let n = vars.len();
        let mut p = Polynomial::zero(vars);
        p.add_term(ExponentVector::zeros(n), value);
        p
    }

    pub fn one(vars: Context) -> Self {
        Self::constant(vars, Q::one())
    }

    pub fn variable(vars: Context, index: usize) -> Self {
        let n = vars.len();
        Self::monomial(vars, ExponentVector::unit(n, index, 1), Q::one())
    }

    pub fn monomial(vars: Context, exps: ExponentVector, coeff: Q) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent arity must match the context");
        let mut p = Polynomial::zero(vars);
        p.add_term(exps, coeff);
        p
    }

    /// Builds from raw terms, collecting duplicates and dropping zeros.
    pub fn from_terms<I>(vars: Context, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (ExponentVector, Q)>,
    {
        let mut p = Polynomial::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(PolyError::ArityMismatch { expected: p.vars.len(), got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: ExponentVector, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Context {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn coefficient(&self, exps: &ExponentVector) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coefficient(&ExponentVector::zeros(self.vars.len()))
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// A single term `c * z^alpha`.
    pub fn as_monomial(&self) -> Option<(&ExponentVector, &Q)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn same_context(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_context(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch {
                left: self.vars.join(","),
                right: other.vars.join(","),
            })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_context(other)?;
        let mut out = Polynomial::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Q) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * factor);
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(self.vars.clone());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Product of a nonempty list; the empty product is `1` in `vars`.
    pub fn product<'a, I>(vars: Context, factors: I) -> Result<Polynomial, PolyError>
    where
        I: IntoIterator<Item = &'a Polynomial>,
    {
        factors
            .into_iter()
            .try_fold(Polynomial::one(vars), |acc, f| acc.checked_mul(f))
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.vars.len());
        self.terms.iter().fold(Q::zero(), |acc, (e, c)| {
            let mono = e
                .entries()
                .iter()
                .zip(point)
                .fold(Q::one(), |m, (&k, x)| m * num_traits::pow(x.clone(), k as usize));
            acc + c * mono
        })
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        self.terms.iter().fold(Complex64::new(0.0, 0.0), |acc, (e, c)| {
            let mono = e
                .entries()
                .iter()
                .zip(point)
                .fold(Complex64::new(1.0, 0.0), |m, (&k, z)| m * z.powu(k));
            acc + mono * to_f64(c)
        })
    }

    /// Same coefficients, new variable names (arity must agree).
    pub fn with_context(&self, vars: Context) -> Result<Polynomial, PolyError> {
        if vars.len() != self.vars.len() {
            return Err(PolyError::ArityMismatch { expected: vars.len(), got: self.vars.len() });
        }
        Ok(Polynomial { vars, terms: self.terms.clone() })
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication across variable contexts")
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition across variable contexts")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction across variable contexts")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Q::one())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], exps: &ExponentVector) -> fmt::Result {
    let mut first = true;
    for (name, &k) in vars.iter().zip(exps.entries()) {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{k}")?;
        }
    }
    Ok(())
}

/// Canonical form: descending graded-lex, explicit `*` and `^`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e.is_zero() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write_monomial(f, &self.vars, e)?;
            } else {
                write!(f, "{magnitude}*")?;
                write_monomial(f, &self.vars, e)?;
            }
        }
        Ok(())
    }
}
