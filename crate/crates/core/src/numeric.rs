//! Floating-point evidence for the exact layer, in dimensions 1 and 2.
//!
//! Everything here works in log-radial coordinates `s_i = -log|z_i|`,
//! where the monomial weights become (up to bounded error) concave
//! piecewise-linear functions and Lebesgue measure is
//! `prod_i 2 pi e^{-2 s_i} ds_i dtheta_i / 2 pi`.

use std::f64::consts::PI;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::poly::Polynomial;
use crate::rational::{fmt_q, to_f64, ExtQ, Q};
use crate::trop::{
    certify_zhou_candidate, jumping_number, weight_relative_type, weighted_jumping_number, AnalyticWeight,
    BackgroundDensity, TropError,
};

/// Minimum samples per `t`.
pub const MIN_SAMPLES: u64 = 10_000;
/// Accepted samples needed before a per-`t` estimate is reported.
pub const MIN_ACCEPTED: u64 = 1_000;
/// Relative deviation allowed between an extrapolated limit and the exact value.
pub const DEFAULT_TOLERANCE: f64 = 0.02;
/// Target width of an integrability bracket.
pub const BRACKET_WIDTH: f64 = 1.0 / 128.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error(transparent)]
    Trop(#[from] TropError),
    #[error("invalid sampling plan: {0}")]
    InvalidPlan(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("weight is not a certified candidate: {0}")]
    NotCertified(String),
    #[error("hypothesis check failed: {0}")]
    Hypothesis(String),
    #[error("sampling budget exhausted at t = {t}: {accepted} accepted samples, {required} required")]
    BudgetExhausted { t: f64, accepted: u64, required: u64 },
    #[error("integrability undecided at c = {c}: fitted exponential rate {rate:e}")]
    Indeterminate { c: f64, rate: f64 },
    #[error("invalid bracket: {0}")]
    InvalidBracket(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SamplingPlan {
    pub dimension: usize,
    pub t_values: Vec<f64>,
    pub samples_per_t: u64,
    pub seed: u64,
    pub stream_count: u32,
}

impl SamplingPlan {
    pub fn new(dimension: usize, t_values: Vec<f64>, samples_per_t: u64, seed: u64) -> Self {
        SamplingPlan { dimension, t_values, samples_per_t, seed, stream_count: 16 }
    }

    pub fn validate(&self) -> Result<(), NumericError> {
        let bad = |m: String| Err(NumericError::InvalidPlan(m));
        if !(1..=2).contains(&self.dimension) {
            return bad(format!("dimension {} is not 1 or 2", self.dimension));
        }
        if self.t_values.is_empty() {
            return bad("no t values".into());
        }
        if self.t_values.iter().any(|t| !t.is_finite() || *t <= 0.0) {
            return bad("t values must be positive".into());
        }
        if self.t_values.windows(2).any(|w| w[0] >= w[1]) {
            return bad("t values must be strictly increasing".into());
        }
        if self.samples_per_t < MIN_SAMPLES {
            return bad(format!("samples_per_t = {} is below {MIN_SAMPLES}", self.samples_per_t));
        }
        if self.stream_count == 0 {
            return bad("stream_count must be positive".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TEstimate {
    pub t: f64,
    pub estimate: f64,
    pub stderr: f64,
    /// Fraction of proposals inside the sublevel set.
    pub acceptance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EstimateReport {
    pub estimates: Vec<TEstimate>,
    /// Intercept `a` of the fit `a + b/t`.
    pub limit: f64,
    pub slope: f64,
    /// RMS residual of the fit.
    pub fit_residual: f64,
    /// Exact value as `"num/den"`.
    pub reference: String,
    pub reference_value: f64,
    /// Relative deviation, or absolute when the reference is zero.
    pub deviation: f64,
    pub tolerance: f64,
    pub within_tolerance: bool,
}

impl EstimateReport {
    fn assemble(estimates: Vec<TEstimate>, reference: &Q) -> Self {
        let (limit, slope, fit_residual) = fit_inverse_t(&estimates);
        let reference_value = to_f64(reference);
        let diff = (limit - reference_value).abs();
        let deviation = if reference.is_zero() { diff } else { diff / reference_value.abs() };
        EstimateReport {
            estimates,
            limit,
            slope,
            fit_residual,
            reference: fmt_q(reference),
            reference_value,
            deviation,
            tolerance: DEFAULT_TOLERANCE,
            within_tolerance: deviation <= DEFAULT_TOLERANCE,
        }
    }
}

/// Least squares fit of `a + b/t` over the three largest `t`.
pub fn fit_inverse_t(estimates: &[TEstimate]) -> (f64, f64, f64) {
    let tail = &estimates[estimates.len().saturating_sub(3)..];
    if tail.len() == 1 {
        return (tail[0].estimate, 0.0, 0.0);
    }
    let n = tail.len() as f64;
    let xs: Vec<f64> = tail.iter().map(|e| 1.0 / e.t).collect();
    let ys: Vec<f64> = tail.iter().map(|e| e.estimate).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let b = sxy / sxx;
    let a = my - b * mx;
    let rss: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - a - b * x).powi(2)).sum();
    (a, b, (rss / n).sqrt())
}

/// A polynomial compiled for evaluation of `log|f|` at `z = e^{-s + i theta}`.
#[derive(Clone, Debug)]
struct LogPoly {
    terms: Vec<(Vec<f64>, f64)>,
}

impl LogPoly {
    fn new(p: &Polynomial) -> Self {
        let terms = p
            .terms()
            .map(|(e, c)| (e.entries().iter().map(|&k| f64::from(k)).collect(), to_f64(c)))
            .collect();
        LogPoly { terms }
    }

    /// `log|f(z)|`, `-inf` at zeros. The dominant term is factored out so
    /// large `s` does not underflow.
    fn log_abs(&self, s: &[f64], theta: &[f64]) -> f64 {
        if let [(e, c)] = self.terms.as_slice() {
            return c.abs().ln() - dotf(e, s);
        }
        let top = self.terms.iter().map(|(e, _)| -dotf(e, s)).fold(f64::NEG_INFINITY, f64::max);
        let (mut re, mut im) = (0.0, 0.0);
        for (e, c) in &self.terms {
            let mag = c * (-dotf(e, s) - top).exp();
            let phase = dotf(e, theta);
            re += mag * phase.cos();
            im += mag * phase.sin();
        }
        top + re.hypot(im).ln()
    }
}

fn dotf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn log_sum_exp(values: impl Iterator<Item = f64>) -> f64 {
    let (mut top, mut acc) = (f64::NEG_INFINITY, 0.0);
    for x in values.filter(|x| *x > f64::NEG_INFINITY) {
        if x > top {
            acc = acc * (top - x).exp() + 1.0;
            top = x;
        } else {
            acc += (x - top).exp();
        }
    }
    if top == f64::NEG_INFINITY {
        top
    } else {
        top + acc.ln()
    }
}

#[derive(Clone, Debug)]
struct LogWeight {
    scale: f64,
    gens: Vec<(LogPoly, f64)>,
}

impl LogWeight {
    fn new(w: &AnalyticWeight) -> Self {
        LogWeight {
            scale: to_f64(w.scale()),
            gens: w.generators().iter().map(|g| (LogPoly::new(&g.poly), to_f64(&g.a))).collect(),
        }
    }

    fn eval(&self, s: &[f64], theta: &[f64]) -> f64 {
        self.scale * log_sum_exp(self.gens.iter().map(|(f, a)| f.log_abs(s, theta) / a))
    }
}

/// `log(|f0|^2 e^{-2 phi_0})`.
#[derive(Clone, Debug)]
struct LogDensity {
    f0: Vec<LogPoly>,
    phi0: Option<LogWeight>,
}

impl LogDensity {
    fn new(rho: &BackgroundDensity) -> Self {
        LogDensity {
            f0: rho.f0().iter().filter(|f| !f.is_zero()).map(LogPoly::new).collect(),
            phi0: rho.phi0().map(LogWeight::new),
        }
    }

    fn eval(&self, s: &[f64], theta: &[f64]) -> f64 {
        let f = log_sum_exp(self.f0.iter().map(|p| 2.0 * p.log_abs(s, theta)));
        f - self.phi0.as_ref().map_or(0.0, |w| 2.0 * w.eval(s, theta))
    }
}

fn require_monomial(phi: &AnalyticWeight, plan_dim: Option<usize>) -> Result<(), NumericError> {
    if phi.dim() > 2 {
        return Err(NumericError::Unsupported(format!("dimension {} exceeds 2", phi.dim())));
    }
    if let Some(d) = plan_dim {
        if d != phi.dim() {
            return Err(NumericError::InvalidPlan(format!("plan dimension {d} but weight dimension {}", phi.dim())));
        }
    }
    if !phi.is_monomial_class() {
        return Err(NumericError::Unsupported("weights outside the monomial class".into()));
    }
    Ok(())
}

/// Lower corner of a polydisc (in `s`) containing `{phi < -t} ∩ Δ^n`.
///
/// `phi >= c log k_min - D(s)` with `k_min` the smallest generator
/// coefficient weight, so the sublevel set sits in `{D(s) > t'}`, and
/// each `s_i >= t' * min { s_i : D(s) >= 1, s >= 0 }`.
fn bounding_corner(phi: &AnalyticWeight, t: f64) -> Result<Vec<f64>, NumericError> {
    let points = phi.toric_points()?;
    let k_min = phi
        .generators()
        .iter()
        .map(|g| match g.poly.as_monomial() {
            Some((_, c)) => Ok(to_f64(&c.abs()).ln() / to_f64(&g.a)),
            None => Err(NumericError::Unsupported(format!("sampling needs monomial generators, got `{}`", g.poly))),
        })
        .try_fold(f64::INFINITY, |acc, v| v.map(|v| acc.min(v)))?;
    let shifted = (t + to_f64(phi.scale()) * k_min).max(0.0);
    let n = phi.dim();
    (0..n)
        .map(|i| {
            let mut objective = vec![Q::zero(); n];
            objective[i] = -Q::one();
            let mut lp = LinearProgram::maximize(objective);
            for p in &points {
                lp.constraint(p.clone(), Relation::Ge, Q::one());
            }
            match lp.solve() {
                LpOutcome::Optimal { value, .. } => Ok(shifted * to_f64(&-value)),
                _ => Err(NumericError::Unsupported("sublevel sets are not bounded away from the origin".into())),
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default)]
struct Moments {
    n: u64,
    accepted: u64,
    w: f64,
    ww: f64,
    x: f64,
    xx: f64,
    xw: f64,
}

impl Moments {
    fn merge(mut self, o: &Moments) -> Moments {
        self.n += o.n;
        self.accepted += o.accepted;
        self.w += o.w;
        self.ww += o.ww;
        self.x += o.x;
        self.xx += o.xx;
        self.xw += o.xw;
        self
    }

    fn push(&mut self, w: f64, y: f64) {
        let x = w * y;
        self.accepted += 1;
        self.w += w;
        self.ww += w * w;
        self.x += x;
        self.xx += x * x;
        self.xw += x * w;
    }

    fn mean_w(&self) -> (f64, f64) {
        let n = self.n as f64;
        let m = self.w / n;
        let var = (self.ww / n - m * m).max(0.0);
        (m, (var / n).sqrt())
    }

    /// `sum x / sum w` with a delta-method standard error.
    fn ratio(&self) -> (f64, f64) {
        let n = self.n as f64;
        let (mw, mx) = (self.w / n, self.x / n);
        let r = mx / mw;
        let sxx = self.xx / n - mx * mx;
        let sww = self.ww / n - mw * mw;
        let sxw = self.xw / n - mx * mw;
        let var = ((sxx - 2.0 * r * sxw + r * r * sww) / (mw * mw * n)).max(0.0);
        (r, var.sqrt())
    }
}

/// Worker count from `ZHOUVAL_THREADS`; 0 lets rayon decide.
pub fn thread_cap() -> usize {
    std::env::var("ZHOUVAL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).unwrap_or(0)
}

fn thread_pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
}

struct Sampler<'a> {
    threads: usize,
    phi: LogWeight,
    psi: Option<LogWeight>,
    density: LogDensity,
    plan: &'a SamplingPlan,
}

impl Sampler<'_> {
    fn stream_sizes(&self) -> Vec<u64> {
        let k = u64::from(self.plan.stream_count);
        let base = self.plan.samples_per_t / k;
        let extra = self.plan.samples_per_t % k;
        (0..k).map(|i| base + u64::from(i < extra)).collect()
    }

    fn run_stream(&self, t_index: usize, stream: u32, count: u64, t: f64, corner: &[f64]) -> Moments {
        let mut rng = ChaCha8Rng::seed_from_u64(self.plan.seed);
        rng.set_stream(((t_index as u64) << 32) | u64::from(stream));
        let n = corner.len();
        let mut s = vec![0.0; n];
        let mut theta = vec![0.0; n];
        let mut m = Moments { n: count, ..Moments::default() };
        for _ in 0..count {
            for i in 0..n {
                // |z_i|^2 uniform on [0, e^{-2 L_i}]
                let u: f64 = 1.0 - rng.random::<f64>();
                s[i] = corner[i] - 0.5 * u.ln();
                theta[i] = 2.0 * PI * rng.random::<f64>();
            }
            if self.phi.eval(&s, &theta) >= -t {
                continue;
            }
            let w = self.density.eval(&s, &theta).exp();
            let y = self.psi.as_ref().map_or(0.0, |p| -p.eval(&s, &theta) / t);
            m.push(w, y);
        }
        m
    }

    /// Per-`t` merged moments and box corners. Merging is a fixed-order
    /// fold, so results do not depend on the thread count.
    fn run(&self, phi: &AnalyticWeight) -> Result<Vec<(f64, Vec<f64>, Moments)>, NumericError> {
        let sizes = self.stream_sizes();
        let corners: Vec<Vec<f64>> =
            self.plan.t_values.iter().map(|&t| bounding_corner(phi, t)).collect::<Result<_, _>>()?;
        let jobs: Vec<(usize, u32)> = (0..self.plan.t_values.len())
            .flat_map(|ti| (0..self.plan.stream_count).map(move |k| (ti, k)))
            .collect();
        let parts: Vec<Moments> = thread_pool(self.threads).install(|| {
            jobs.par_iter()
                .map(|&(ti, k)| self.run_stream(ti, k, sizes[k as usize], self.plan.t_values[ti], &corners[ti]))
                .collect()
        });
        let chunk = self.plan.stream_count as usize;
        let mut out = Vec::new();
        for (ti, (&t, corner)) in self.plan.t_values.iter().zip(corners).enumerate() {
            let merged = parts[ti * chunk..(ti + 1) * chunk].iter().fold(Moments::default(), |a, b| a.merge(b));
            if merged.accepted < MIN_ACCEPTED {
                return Err(NumericError::BudgetExhausted { t, accepted: merged.accepted, required: MIN_ACCEPTED });
            }
            out.push((t, corner, merged));
        }
        Ok(out)
    }
}

/// Monte-Carlo estimate of
/// `int_{phi < -t} rho (-psi) / (t int_{phi < -t} rho)` against the exact
/// `sigma(psi, phi)`. `psi = None` is the zero weight.
pub fn estimate_relative_type_integral(
    phi: &AnalyticWeight,
    psi: Option<&AnalyticWeight>,
    rho: &BackgroundDensity,
    plan: &SamplingPlan,
) -> Result<EstimateReport, NumericError> {
    plan.validate()?;
    require_monomial(phi, Some(plan.dimension))?;
    let cert = certify_zhou_candidate(phi, rho)?;
    if !cert.is_candidate() {
        return Err(NumericError::NotCertified(cert.report.join("; ")));
    }
    let reference = match psi {
        Some(p) => match weight_relative_type(p, phi)? {
            ExtQ::Finite(v) => v,
            ExtQ::Infinity => return Err(NumericError::Unsupported("infinite relative type".into())),
        },
        None => Q::zero(),
    };
    let sampler = Sampler { threads: thread_cap(), phi: LogWeight::new(phi), psi: psi.map(LogWeight::new), density: LogDensity::new(rho), plan };
    let estimates = sampler
        .run(phi)?
        .into_iter()
        .map(|(t, _, m)| {
            let (estimate, stderr) = m.ratio();
            TEstimate { t, estimate, stderr, acceptance: m.accepted as f64 / m.n as f64 }
        })
        .collect();
    Ok(EstimateReport::assemble(estimates, &reference))
}

/// Monte-Carlo estimate of `-log(int_{phi < -t} rho) / 2t`, which tends to 1
/// when the jumping number of `phi` against `rho` is 1.
pub fn estimate_mass_decay(
    phi: &AnalyticWeight,
    rho: &BackgroundDensity,
    plan: &SamplingPlan,
) -> Result<EstimateReport, NumericError> {
    plan.validate()?;
    require_monomial(phi, Some(plan.dimension))?;
    let c = weighted_jumping_number(phi, rho, &Polynomial::one(phi.context().clone()))?;
    if !c.is_one() {
        return Err(NumericError::Hypothesis(format!("jumping number is {}, not 1", fmt_q(&c))));
    }
    let sampler = Sampler { threads: thread_cap(), phi: LogWeight::new(phi), psi: None, density: LogDensity::new(rho), plan };
    let estimates = sampler
        .run(phi)?
        .into_iter()
        .map(|(t, corner, m)| {
            let (mean, se) = m.mean_w();
            let log_volume: f64 = corner.iter().map(|l| PI.ln() - 2.0 * l).sum();
            let log_mass = log_volume + mean.ln();
            TEstimate { t, estimate: -log_mass / (2.0 * t), stderr: se / (mean * 2.0 * t), acceptance: m.accepted as f64 / m.n as f64 }
        })
        .collect();
    Ok(EstimateReport::assemble(estimates, &Q::one()))
}

/// Verdict of the shell-growth test at one exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Integrability {
    Integrable,
    NotIntegrable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Bracket {
    /// Integrable side.
    pub lo: f64,
    /// Non-integrable side.
    pub hi: f64,
    pub steps: u32,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, c: f64) -> bool {
        self.lo <= c && c <= self.hi
    }
}

/// Shell radii in the sup norm of `s`.
const SHELLS: [f64; 5] = [100.0, 200.0, 400.0, 800.0, 1600.0];
/// Quadrature step along a shell.
const SHELL_STEP: f64 = 0.25;
/// Rates below this are not trusted either way.
const RATE_FLOOR: f64 = 1e-4;

struct ShellIntegrand {
    g: LogPoly,
    /// Angular nodes per variable, enough to integrate `|G|^2` exactly.
    angles: usize,
    phi: LogWeight,
    dim: usize,
}

impl ShellIntegrand {
    fn log_angular_mean(&self, s: &[f64], c: f64) -> f64 {
        let m = self.angles;
        let nodes = |k: usize| 2.0 * PI * k as f64 / m as f64;
        let pts: Vec<Vec<f64>> = match self.dim {
            1 => (0..m).map(|a| vec![nodes(a)]).collect(),
            _ => (0..m).flat_map(|a| (0..m).map(move |b| vec![nodes(a), nodes(b)])).collect(),
        };
        let count = pts.len() as f64;
        let lse = log_sum_exp(pts.iter().map(|th| 2.0 * self.g.log_abs(s, th) - 2.0 * c * self.phi.eval(s, th)));
        lse - count.ln() - 2.0 * s.iter().sum::<f64>()
    }

    /// `log` of the integral over `{max_i s_i = r}`.
    fn log_flux(&self, r: f64, c: f64) -> f64 {
        if self.dim == 1 {
            return self.log_angular_mean(&[r], c);
        }
        let n = (r / SHELL_STEP).ceil() as usize;
        let h = r / n as f64;
        let mut logs = Vec::with_capacity(2 * (n + 1));
        for k in 0..=n {
            let u = k as f64 * h;
            let wt = if k == 0 || k == n { 0.5 * h } else { h };
            logs.push(wt.ln() + self.log_angular_mean(&[r, u], c));
            logs.push(wt.ln() + self.log_angular_mean(&[u, r], c));
        }
        log_sum_exp(logs.into_iter())
    }

    /// Least squares fit `log flux(r) = a - kappa r + m log r`.
    fn growth(&self, c: f64) -> (f64, f64) {
        let rows: Vec<[f64; 3]> = SHELLS.iter().map(|&r| [1.0, -r, r.ln()]).collect();
        let ys: Vec<f64> = SHELLS.iter().map(|&r| self.log_flux(r, c)).collect();
        let mut ata = [[0.0; 3]; 3];
        let mut aty = [0.0; 3];
        for (row, y) in rows.iter().zip(&ys) {
            for i in 0..3 {
                aty[i] += row[i] * y;
                for j in 0..3 {
                    ata[i][j] += row[i] * row[j];
                }
            }
        }
        let sol = solve3(ata, aty);
        (sol[1], sol[2])
    }

    fn classify(&self, c: f64) -> Result<Integrability, NumericError> {
        let (kappa, m) = self.growth(c);
        if kappa > RATE_FLOOR {
            Ok(Integrability::Integrable)
        } else if kappa < -RATE_FLOOR {
            Ok(Integrability::NotIntegrable)
        } else if m > -0.5 {
            // flux no faster than 1/r^{1/2}: the radial integral diverges
            Ok(Integrability::NotIntegrable)
        } else if m < -1.5 {
            Ok(Integrability::Integrable)
        } else {
            Err(NumericError::Indeterminate { c, rate: kappa })
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> [f64; 3] {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).expect("rows");
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..3 {
            let f = a[row][col] / a[col][col];
            for k in col..3 {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for i in (0..3).rev() {
        let s: f64 = (i + 1..3).map(|k| a[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    x
}

/// Integrability of `|G|^2 e^{-2 c phi}` near the origin, from the growth
/// rate of shell integrals in log-radial coordinates.
pub fn integrability_at(phi: &AnalyticWeight, g: &Polynomial, c: f64) -> Result<Integrability, NumericError> {
    shell_integrand(phi, g)?.classify(c)
}

fn shell_integrand(phi: &AnalyticWeight, g: &Polynomial) -> Result<ShellIntegrand, NumericError> {
    require_monomial(phi, None)?;
    if g.is_zero() {
        return Err(TropError::ZeroPolynomial.into());
    }
    if g.vars() != phi.context() {
        return Err(NumericError::Unsupported("G and phi use different variables".into()));
    }
    let deg = g.terms().flat_map(|(e, _)| e.entries().iter().copied()).max().unwrap_or(0) as usize;
    Ok(ShellIntegrand { g: LogPoly::new(g), angles: deg + 1, phi: LogWeight::new(phi), dim: phi.dim() })
}

/// Bisects `[lo, hi]` down to width at most `2^-7`. `lo` must be on the
/// integrable side and `hi` on the other.
pub fn integrability_bisect(phi: &AnalyticWeight, g: &Polynomial, lo: f64, hi: f64) -> Result<Bracket, NumericError> {
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) || lo < 0.0 {
        return Err(NumericError::InvalidBracket(format!("[{lo}, {hi}]")));
    }
    let f = shell_integrand(phi, g)?;
    if f.classify(lo)? != Integrability::Integrable {
        return Err(NumericError::InvalidBracket(format!("lower end {lo} is not integrable")));
    }
    if f.classify(hi)? != Integrability::NotIntegrable {
        return Err(NumericError::InvalidBracket(format!("upper end {hi} is integrable")));
    }
    let mut b = Bracket { lo, hi, steps: 0 };
    while b.width() > BRACKET_WIDTH {
        let mid = 0.5 * (b.lo + b.hi);
        match f.classify(mid)? {
            Integrability::Integrable => b.lo = mid,
            Integrability::NotIntegrable => b.hi = mid,
        }
        b.steps += 1;
    }
    Ok(b)
}

/// Exact jumping number paired with a numeric bracket found without it.
pub fn cross_check_jumping_number(phi: &AnalyticWeight, g: &Polynomial) -> Result<(Q, Bracket), NumericError> {
    let exact = jumping_number(phi, g)?;
    let f = shell_integrand(phi, g)?;
    let mut hi = 1.0;
    while f.classify(hi)? == Integrability::Integrable {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(NumericError::InvalidBracket("no non-integrable exponent below 1e6".into()));
        }
    }
    let bracket = integrability_bisect(phi, g, 0.0, hi)?;
    Ok((exact, bracket))
}
