//! JSON problem files.

use serde::Deserialize;

use super::CliError;
use crate::curve::{CurvePoint, MonomialCurve, TruncatedSeries};
use crate::interp::{Function, InterpolationProblem, Ring};
use crate::numeric::SamplingPlan;
use crate::poly::{context, Context, Polynomial};
use crate::rational::{parse_q, Q};
use crate::trop::{AnalyticWeight, BackgroundDensity, Generator};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum RawRational {
    Int(i64),
    Text(String),
}

/// A rational given as an integer or a `"p/q"` string, checked on load.
#[derive(Clone, Debug, Deserialize)]
#[serde(try_from = "RawRational")]
pub struct RationalInput(Q);

impl TryFrom<RawRational> for RationalInput {
    type Error = String;

    fn try_from(raw: RawRational) -> Result<Self, String> {
        match raw {
            RawRational::Int(n) => Ok(RationalInput(Q::from_integer(n.into()))),
            RawRational::Text(s) => parse_q(&s).map(RationalInput).ok_or_else(|| format!("`{s}` is not a rational")),
        }
    }
}

impl RationalInput {
    fn value(&self) -> Q {
        self.0.clone()
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingInput {
    Polynomial { vars: Vec<String> },
    RealPolynomial { vars: Vec<String> },
    MonomialCurve { p: u32, q: u32, vars: Option<Vec<String>> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum PointInput {
    Named(String),
    Parameter { t: RationalInput },
    UnitRoot { unit_root: u32 },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesInput {
    /// `[exponent, coefficient]` pairs.
    pub terms: Vec<(i64, RationalInput)>,
    pub order: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionInput {
    pub expr: Option<String>,
    pub series: Option<SeriesInput>,
    /// Defaults to 1.
    pub a: Option<RationalInput>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorInput {
    pub expr: String,
    pub a: Option<RationalInput>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightInput {
    pub scale: Option<RationalInput>,
    pub generators: Vec<GeneratorInput>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BackgroundInput {
    pub f0: Vec<String>,
    pub phi0: Option<WeightInput>,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum EstimateKind {
    RelativeType,
    MassDecay,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumericInput {
    pub kind: Option<EstimateKind>,
    pub t_values: Option<Vec<f64>>,
    pub samples_per_t: Option<u64>,
    pub seed: Option<u64>,
    pub streams: Option<u32>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub version: Option<u32>,
    pub ring: RingInput,
    pub point: Option<PointInput>,
    #[serde(default)]
    pub functions: Vec<FunctionInput>,
    #[serde(default)]
    pub weakly_holomorphic: bool,
    pub weight: Option<WeightInput>,
    pub psi: Option<WeightInput>,
    pub g: Option<String>,
    pub background: Option<BackgroundInput>,
    pub tian_range: Option<(RationalInput, RationalInput)>,
    pub numeric: Option<NumericInput>,
}

pub const DEFAULT_T_VALUES: [f64; 4] = [4.0, 6.0, 8.0, 10.0];
pub const DEFAULT_SAMPLES: u64 = 100_000;

/// A problem file resolved against its ring.
#[derive(Clone, Debug)]
pub struct Problem {
    pub file: ProblemFile,
    pub vars: Context,
    pub ring: Ring,
}

impl Problem {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: ProblemFile = serde_json::from_str(text)
            .map_err(|e| CliError::Schema(format!("invalid problem file: {e}")))?;
        if let Some(v) = file.version {
            if v != SCHEMA_VERSION {
                return Err(CliError::Schema(format!("schema version {v} is not supported (expected {SCHEMA_VERSION})")));
            }
        }
        let (vars, ring) = match &file.ring {
            RingInput::Polynomial { vars } => (checked_vars(vars)?, Ring::Affine),
            RingInput::RealPolynomial { vars } => (checked_vars(vars)?, Ring::RealAffine),
            RingInput::MonomialCurve { p, q, vars } => {
                let curve = MonomialCurve::new(*p, *q).map_err(|e| CliError::Schema(format!("ring: {e}")))?;
                let names = vars.clone().unwrap_or_else(|| vec!["z1".into(), "z2".into()]);
                if names.len() != 2 {
                    return Err(CliError::Schema("ring.vars: a monomial curve lives in two variables".into()));
                }
                let point = resolve_point(file.point.as_ref())?;
                (checked_vars(&names)?, Ring::Curve { curve, point })
            }
        };
        if file.point.is_some() && !matches!(ring, Ring::Curve { .. }) {
            match resolve_point(file.point.as_ref())? {
                CurvePoint::Origin => {}
                _ => return Err(CliError::Unsupported("only the origin is supported in affine rings".into())),
            }
        }
        Ok(Problem { file, vars, ring })
    }

    pub fn poly(&self, text: &str, at: &str) -> Result<Polynomial, CliError> {
        Polynomial::parse_in(&self.vars, text).map_err(|e| CliError::Schema(format!("{at}: {e}")))
    }

    pub fn curve(&self) -> Option<(&MonomialCurve, &CurvePoint)> {
        match &self.ring {
            Ring::Curve { curve, point } => Some((curve, point)),
            _ => None,
        }
    }

    pub fn weight_from(&self, w: &WeightInput, at: &str) -> Result<AnalyticWeight, CliError> {
        let scale = match &w.scale {
            Some(s) => s.value(),
            None => Q::from_integer(1.into()),
        };
        let gens = w
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let here = format!("{at}.generators[{i}]");
                let a = match &g.a {
                    Some(a) => a.value(),
                    None => Q::from_integer(1.into()),
                };
                Ok(Generator { poly: self.poly(&g.expr, &format!("{here}.expr"))?, a })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        AnalyticWeight::new(scale, gens).map_err(|e| CliError::Schema(format!("{at}: {e}")))
    }

    pub fn weight(&self) -> Result<AnalyticWeight, CliError> {
        let w = self.file.weight.as_ref().ok_or_else(|| CliError::Schema("missing `weight`".into()))?;
        self.weight_from(w, "weight")
    }

    pub fn psi(&self) -> Result<Option<AnalyticWeight>, CliError> {
        self.file.psi.as_ref().map(|w| self.weight_from(w, "psi")).transpose()
    }

    pub fn background(&self) -> Result<BackgroundDensity, CliError> {
        let Some(b) = &self.file.background else {
            return Ok(BackgroundDensity::trivial(self.vars.clone()));
        };
        let f0 = b
            .f0
            .iter()
            .enumerate()
            .map(|(i, s)| self.poly(s, &format!("background.f0[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let phi0 = b.phi0.as_ref().map(|w| self.weight_from(w, "background.phi0")).transpose()?;
        BackgroundDensity::new(f0, phi0).map_err(|e| CliError::Schema(format!("background: {e}")))
    }

    pub fn g(&self) -> Result<Option<Polynomial>, CliError> {
        self.file.g.as_ref().map(|s| self.poly(s, "g")).transpose()
    }

    pub fn functions(&self) -> Result<Vec<(Function, Q)>, CliError> {
        if self.file.functions.is_empty() {
            return Err(CliError::Schema("missing `functions`".into()));
        }
        self.file
            .functions
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let here = format!("functions[{i}]");
                let a = match &f.a {
                    Some(a) => a.value(),
                    None => Q::from_integer(1.into()),
                };
                let func = match (&f.expr, &f.series) {
                    (Some(e), None) => Function::Polynomial(self.poly(e, &format!("{here}.expr"))?),
                    (None, Some(s)) => {
                        let terms: Vec<(i64, Q)> = s.terms.iter().map(|(k, c)| (*k, c.value())).collect();
                        Function::Series(
                            TruncatedSeries::new(terms, s.order).map_err(|e| CliError::Schema(format!("{here}.series: {e}")))?,
                        )
                    }
                    _ => return Err(CliError::Schema(format!("{here}: give exactly one of `expr` and `series`"))),
                };
                Ok((func, a))
            })
            .collect()
    }

    /// Polynomial functions only.
    pub fn polynomials(&self) -> Result<Vec<(Polynomial, Q)>, CliError> {
        self.functions()?
            .into_iter()
            .map(|(f, a)| match f {
                Function::Polynomial(p) => Ok((p, a)),
                Function::Series(_) => Err(CliError::Unsupported("series inputs are only accepted by `interpolate`".into())),
            })
            .collect()
    }

    pub fn interpolation(&self) -> Result<InterpolationProblem, CliError> {
        Ok(InterpolationProblem {
            ring: self.ring.clone(),
            vars: self.vars.clone(),
            functions: self.functions()?,
            weakly_holomorphic: self.file.weakly_holomorphic,
        })
    }

    pub fn tian_range(&self) -> Result<(Q, Q), CliError> {
        match &self.file.tian_range {
            Some((lo, hi)) => Ok((lo.value(), hi.value())),
            None => Ok((Q::from_integer(0.into()), Q::from_integer(4.into()))),
        }
    }

    pub fn estimate_kind(&self) -> EstimateKind {
        self.file.numeric.as_ref().and_then(|n| n.kind).unwrap_or(EstimateKind::RelativeType)
    }

    /// The sampling plan, with command-line overrides applied.
    pub fn plan(&self, seed: Option<u64>, samples: Option<u64>, t_max: Option<f64>, default_seed: u64) -> Result<SamplingPlan, CliError> {
        let n = self.file.numeric.as_ref();
        let mut t_values = n.and_then(|n| n.t_values.clone()).unwrap_or_else(|| DEFAULT_T_VALUES.to_vec());
        if let Some(tm) = t_max {
            t_values.retain(|t| *t <= tm);
            if t_values.is_empty() {
                return Err(CliError::Schema(format!("no t values at or below --t-max {tm}")));
            }
        }
        let mut plan = SamplingPlan::new(
            self.vars.len(),
            t_values,
            samples.or(n.and_then(|n| n.samples_per_t)).unwrap_or(DEFAULT_SAMPLES),
            seed.or(n.and_then(|n| n.seed)).unwrap_or(default_seed),
        );
        if let Some(k) = n.and_then(|n| n.streams) {
            plan.stream_count = k;
        }
        plan.validate().map_err(|e| CliError::Schema(format!("numeric: {e}")))?;
        Ok(plan)
    }

    pub fn seed(&self) -> Option<u64> {
        self.file.numeric.as_ref().and_then(|n| n.seed)
    }
}

fn checked_vars(vars: &[String]) -> Result<Context, CliError> {
    if vars.is_empty() {
        return Err(CliError::Schema("ring.vars: at least one variable is required".into()));
    }
    for (i, v) in vars.iter().enumerate() {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(CliError::Schema(format!("ring.vars[{i}]: `{v}` is not an identifier")));
        }
        if vars[..i].contains(v) {
            return Err(CliError::Schema(format!("ring.vars[{i}]: duplicate variable `{v}`")));
        }
    }
    Ok(context(vars))
}

fn resolve_point(p: Option<&PointInput>) -> Result<CurvePoint, CliError> {
    let bad = |e: crate::curve::CurveError| CliError::Schema(format!("point: {e}"));
    match p {
        None => Ok(CurvePoint::Origin),
        Some(PointInput::Named(s)) if s == "origin" => Ok(CurvePoint::Origin),
        Some(PointInput::Named(s)) => Err(CliError::Schema(format!("point: unknown point `{s}`"))),
        Some(PointInput::Parameter { t }) => {
            let t = t.value();
            if num_traits::Zero::is_zero(&t) {
                Ok(CurvePoint::Origin)
            } else {
                CurvePoint::rational(t).map_err(bad)
            }
        }
        Some(PointInput::UnitRoot { unit_root }) => CurvePoint::unit_root(*unit_root).map_err(bad),
    }
}
