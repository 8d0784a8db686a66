//! Exact calculus for weights with monomial analytic singularities near the
//! origin of `C^n`.
//!
//! A weight `c * log(sum_j |f_j|^(1/a_j))` whose generators are each a
//! unit times a monomial `z^alpha_j` is determined, up to `O(1)`, by the
//! concave piecewise-linear function
//! `D(w) = c * min_j <alpha_j, w> / a_j` on the nonnegative orthant. Every
//! invariant computed here is a ratio of such functions minimized over the
//! standard simplex, or a linear program over the Newton polyhedron
//! `{c * alpha_j / a_j} + R^n_{>=0}`.

mod jumping;
mod relative;
mod tian;
pub(crate) mod toric;
mod zhou;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{newton_data, Context, ExponentVector, PolyError, Polynomial};
use crate::rational::{fmt_q, Q};

pub use jumping::{density_is_integrable, jumping_number, jumping_number_by_rays, weighted_jumping_number};
pub use relative::{multiplicative_bound_constant, relative_type, weight_relative_type, CertificateEntry, RelativeTypeResult};
pub use tian::{tian_envelope, tian_function, tian_value_lp, PiecewiseLinearFn, TianEnvelope};
pub use zhou::{certify_zhou_candidate, ZhouCertificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid ray: {0}")]
    InvalidRay(String),
    #[error("the zero polynomial has no order")]
    ZeroPolynomial,
    #[error("generator {index} (`{poly}`) does not vanish at the origin")]
    NotVanishingAtOrigin { index: usize, poly: String },
    #[error(
        "generator {index} (`{poly}`) has {vertices} Newton vertices; only unit-times-monomial generators are supported"
    )]
    NonMonomialGenerator { index: usize, poly: String, vertices: usize },
    #[error("the background density is not integrable near the origin")]
    DensityNotIntegrable,
    #[error("the twisted density is not integrable for any exponent at t = {0}")]
    TianUndefined(String),
    #[error("invalid range: {0}")]
    InvalidRange(String),
}

/// One generator `(f_j, a_j)` contributing `|f_j|^(1/a_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub poly: Polynomial,
    pub a: Q,
}

/// `scale * log(sum_j |f_j|^(1/a_j))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyticWeight {
    scale: Q,
    generators: Vec<Generator>,
}

impl AnalyticWeight {
    pub fn new(scale: Q, generators: Vec<Generator>) -> Result<Self, TropError> {
        if !scale.is_positive() {
            return Err(TropError::InvalidWeight(format!("scale {} must be positive", fmt_q(&scale))));
        }
        let Some(first) = generators.first() else {
            return Err(TropError::InvalidWeight("no generators".into()));
        };
        for (i, g) in generators.iter().enumerate() {
            if g.poly.is_zero() {
                return Err(TropError::InvalidWeight(format!("generator {i} is zero")));
            }
            if !g.a.is_positive() {
                return Err(TropError::InvalidWeight(format!("generator {i} has non-positive a = {}", fmt_q(&g.a))));
            }
            if !g.poly.same_context(&first.poly) {
                return Err(PolyError::ContextMismatch {
                    left: first.poly.vars().join(","),
                    right: g.poly.vars().join(","),
                }
                .into());
            }
        }
        Ok(AnalyticWeight { scale, generators })
    }

    /// Parses generator expressions in `vars`.
    pub fn parse<S: AsRef<str>>(vars: &[S], scale: Q, generators: &[(&str, Q)]) -> Result<Self, TropError> {
        let ctx = crate::poly::context(vars);
        let gens = generators
            .iter()
            .map(|(text, a)| {
                Ok(Generator { poly: Polynomial::parse_in(&ctx, text)?, a: a.clone() })
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Self::new(scale, gens)
    }

    /// `log(sum_j |f_j|^(1/a_j))` with unit scale.
    pub fn from_generators(generators: Vec<(Polynomial, Q)>) -> Result<Self, TropError> {
        Self::new(Q::one(), generators.into_iter().map(|(poly, a)| Generator { poly, a }).collect())
    }

    pub fn scale(&self) -> &Q {
        &self.scale
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn context(&self) -> &Context {
        self.generators[0].poly.vars()
    }

    pub fn dim(&self) -> usize {
        self.context().len()
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.generators.iter().all(|g| g.poly.vanishes_at_origin())
    }

    pub(crate) fn require_vanishing(&self) -> Result<(), TropError> {
        match self.generators.iter().position(|g| !g.poly.vanishes_at_origin()) {
            Some(index) => Err(TropError::NotVanishingAtOrigin {
                index,
                poly: self.generators[index].poly.to_string(),
            }),
            None => Ok(()),
        }
    }

    /// The same generators with the scale multiplied by `factor`.
    pub fn scaled(&self, factor: &Q) -> Result<Self, TropError> {
        Self::new(&self.scale * factor, self.generators.clone())
    }

    /// Points `scale * alpha_j / a_j`, one per generator, where `alpha_j`
    /// is the unique Newton vertex of `f_j`.
    pub fn toric_points(&self) -> Result<Vec<Vec<Q>>, TropError> {
        self.generators
            .iter()
            .enumerate()
            .map(|(index, g)| {
                let data = newton_data(&g.poly)?;
                let vertex = data.single_vertex().ok_or_else(|| TropError::NonMonomialGenerator {
                    index,
                    poly: g.poly.to_string(),
                    vertices: data.vertices.len(),
                })?;
                Ok(vertex.to_rational().iter().map(|x| x * &self.scale / &g.a).collect())
            })
            .collect()
    }

    pub fn is_monomial_class(&self) -> bool {
        self.toric_points().is_ok()
    }
}

/// Background density `|f_0|^2 e^{-2 phi_0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackgroundDensity {
    f0: Vec<Polynomial>,
    phi0: Option<AnalyticWeight>,
}

impl BackgroundDensity {
    pub fn new(f0: Vec<Polynomial>, phi0: Option<AnalyticWeight>) -> Result<Self, TropError> {
        if f0.is_empty() || f0.iter().all(Polynomial::is_zero) {
            return Err(TropError::InvalidWeight("background vector f0 is zero".into()));
        }
        let ctx = f0[0].vars().clone();
        let mismatch = f0.iter().find(|p| p.vars() != &ctx).map(|p| p.vars().join(","));
        let mismatch = mismatch.or_else(|| {
            phi0.as_ref().filter(|w| w.context() != &ctx).map(|w| w.context().join(","))
        });
        if let Some(other) = mismatch {
            return Err(PolyError::ContextMismatch { left: ctx.join(","), right: other }.into());
        }
        Ok(BackgroundDensity { f0, phi0 })
    }

    /// `f0 = 1`, no `phi_0`.
    pub fn trivial(vars: Context) -> Self {
        BackgroundDensity { f0: vec![Polynomial::one(vars)], phi0: None }
    }

    pub fn f0(&self) -> &[Polynomial] {
        &self.f0
    }

    pub fn phi0(&self) -> Option<&AnalyticWeight> {
        self.phi0.as_ref()
    }

    pub fn context(&self) -> &Context {
        self.f0[0].vars()
    }

    pub fn is_trivial(&self) -> bool {
        self.phi0.is_none()
            && self.f0.iter().filter(|p| !p.is_zero()).all(|p| {
                p.as_monomial().is_some_and(|(e, _)| e.is_zero())
            })
    }
}

/// A nonnegative direction `w`, not identically zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ray(Vec<Q>);

impl Ray {
    pub fn new(w: Vec<Q>) -> Result<Self, TropError> {
        if w.iter().any(Signed::is_negative) {
            return Err(TropError::InvalidRay("negative entry".into()));
        }
        if w.iter().all(Zero::is_zero) {
            return Err(TropError::InvalidRay("all entries are zero".into()));
        }
        Ok(Ray(w))
    }

    pub fn entries(&self) -> &[Q] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, factor: &Q) -> Ray {
        Ray(self.0.iter().map(|x| x * factor).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_q).collect()
    }
}

/// `min_{alpha in supp g} <w, alpha>`: the monomial valuation of `g`.
pub fn trop_value(g: &Polynomial, w: &Ray) -> Result<Q, TropError> {
    if g.is_zero() {
        return Err(TropError::ZeroPolynomial);
    }
    if w.dim() != g.num_vars() {
        return Err(PolyError::ArityMismatch { expected: g.num_vars(), got: w.dim() }.into());
    }
    Ok(g.support()
        .map(|e| crate::rational::dot_int(w.entries(), e.entries()))
        .min()
        .expect("nonzero polynomial has support"))
}

/// `scale * min_j trop_value(f_j, w) / a_j`.
pub fn weight_value(phi: &AnalyticWeight, w: &Ray) -> Result<Q, TropError> {
    let mut best: Option<Q> = None;
    for g in phi.generators() {
        let v = trop_value(&g.poly, w)? / &g.a;
        best = Some(match best {
            Some(b) if b <= v => b,
            _ => v,
        });
    }
    Ok(best.expect("weights have generators") * phi.scale())
}

/// Appends `(z_k^N, 1)` for every variable: `max{phi, N log|z|}` up to `O(1)`.
pub fn truncate_weight(phi: &AnalyticWeight, n: u32) -> Result<AnalyticWeight, TropError> {
    if n == 0 {
        return Err(TropError::InvalidWeight("truncation order must be at least 1".into()));
    }
    let ctx = phi.context().clone();
    let mut generators = phi.generators().to_vec();
    for k in 0..ctx.len() {
        let exps = ExponentVector::unit(ctx.len(), k, n);
        generators.push(Generator { poly: Polynomial::monomial(ctx.clone(), exps, Q::one()), a: Q::one() });
    }
    AnalyticWeight::new(phi.scale().clone(), generators)
}
