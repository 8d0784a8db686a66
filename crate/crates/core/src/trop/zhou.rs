//! Certification of local Zhou-weight candidates among toric weights.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::toric::{numerator, shifted_exponents, Toric};
use super::{density_is_integrable, weighted_jumping_number, AnalyticWeight, BackgroundDensity, Ray, TropError};
use crate::poly::{ExponentVector, Polynomial};
use crate::rational::{fmt_q, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZhouCertificate {
    /// `rho |z|^{2N} e^{-2 Phi}` is integrable for some `N`.
    pub cond1: bool,
    /// `rho e^{-2 Phi}` is not integrable.
    pub cond2: bool,
    /// The combined jumping number is exactly 1.
    pub critical: bool,
    /// No toric weight `Phi' >= Phi`, `Phi' != Phi + O(1)`, keeps `cond2`.
    pub toric_maximal: bool,
    pub jumping_number: Q,
    /// Smallest `N` witnessing `cond1`.
    pub n0: Option<u64>,
    /// Rays minimizing the threshold ratio.
    pub minimizers: Vec<Ray>,
    pub report: Vec<String>,
}

impl ZhouCertificate {
    pub fn is_candidate(&self) -> bool {
        self.cond1 && self.cond2 && self.critical && self.toric_maximal
    }
}

fn floor_q(x: &Q) -> Q {
    Q::from_integer(x.numer().div_floor(x.denom()))
}

pub fn certify_zhou_candidate(phi: &AnalyticWeight, rho: &BackgroundDensity) -> Result<ZhouCertificate, TropError> {
    let toric = Toric::new(phi, rho)?;
    let ctx = phi.context().clone();
    let one = Polynomial::one(ctx.clone());
    if !density_is_integrable(rho, &one)? {
        return Err(TropError::DensityNotIntegrable);
    }
    let gammas = shifted_exponents(rho, &one)?;
    let jn = weighted_jumping_number(phi, rho, &one)?;
    let cond2 = jn <= Q::one();
    let critical = jn == Q::one();
    let mut report = vec![format!("combined jumping number {}", fmt_q(&jn))];

    let rays = toric.rays(&[&gammas]);
    let evaluated: Vec<(&Vec<Q>, Q, Q)> =
        rays.iter().map(|w| (w, numerator(&gammas, &toric.d0, w), toric.d.eval(w))).collect();

    // cond1, coordinate by coordinate: A + N w_k > D at every vertex with D > 0.
    let mut cond1 = true;
    let mut n_needed = Q::zero();
    for k in 0..toric.dim {
        for (w, a, d) in &evaluated {
            if !d.is_positive() {
                continue;
            }
            if w[k].is_zero() {
                if a <= d {
                    cond1 = false;
                    report.push(format!(
                        "cond1 fails along {:?}: |z_{}|^N never compensates",
                        w.iter().map(fmt_q).collect::<Vec<_>>(),
                        k + 1
                    ));
                }
            } else {
                let bound = floor_q(&((d - a) / &w[k])) + Q::one();
                if bound > n_needed {
                    n_needed = bound;
                }
            }
        }
    }
    let n0 = if cond1 {
        let n0 = n_needed.to_integer().to_u64().expect("truncation order fits in u64");
        let n0_u32 = u32::try_from(n0).expect("truncation order fits in u32");
        let integrable_at = |n: u32| -> Result<bool, TropError> {
            for k in 0..toric.dim {
                let g = Polynomial::monomial(ctx.clone(), ExponentVector::unit(toric.dim, k, n), Q::one());
                if weighted_jumping_number(phi, rho, &g)? <= Q::one() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        let ok = integrable_at(n0_u32)?;
        let minimal = n0 == 0 || !integrable_at(n0_u32 - 1)?;
        assert!(ok && minimal, "vertex bound and LP disagree on the truncation order");
        report.push(format!("cond1 holds with N = {n0}"));
        Some(n0)
    } else {
        None
    };

    let minimizers: Vec<Ray> = evaluated
        .iter()
        .filter(|(_, a, d)| d.is_positive() && a / d == jn)
        .map(|(w, _, _)| Ray::new((*w).clone()).expect("simplex point"))
        .collect();

    // Maximal toric weights are exactly the half-spaces {<u, x> >= D(u)}.
    let toric_maximal = match minimizers.as_slice() {
        [u] => {
            let du = toric.d.eval(u.entries());
            let expected: BTreeSet<Vec<Q>> = (0..toric.dim)
                .filter(|&i| !u.entries()[i].is_zero())
                .map(|i| {
                    let mut p = vec![Q::zero(); toric.dim];
                    p[i] = &du / &u.entries()[i];
                    p
                })
                .collect();
            let actual: BTreeSet<Vec<Q>> = toric.d.points.iter().cloned().collect();
            expected == actual
        }
        _ => false,
    };
    report.push(format!(
        "{} minimizing ray(s); Newton polyhedron {} a half-space",
        minimizers.len(),
        if toric_maximal { "is" } else { "is not" }
    ));

    Ok(ZhouCertificate { cond1, cond2, critical, toric_maximal, jumping_number: jn, n0, minimizers, report })
}
