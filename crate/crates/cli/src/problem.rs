//! Problem files: a TOML document describing a preorder, a sample function,
//! the target interval `(α, β)`, and a base utility.
//!
//! ```toml
//! alpha = 0.0
//! beta = 1.0
//! base_utility = "sum"
//!
//! [space]
//! kind = "pareto"
//! dimension = 1
//!
//! [[samples]]
//! point = [0.0]
//! value = 0.0
//! ```
//!
//! Finite spaces name their elements and list generating pairs
//! `[x, y]` meaning `x ⪰ y`; the relation is their reflexive-transitive
//! closure. A document holding only `fixture = "example-gap"` (or
//! `"example-nin"`) selects a bundled analytic fixture.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use monoext::contours::PartialUtility;
use monoext::fixtures::{EXAMPLE_GAP, EXAMPLE_NIN};
use monoext::order::{FinitePreorder, ParetoSpace};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const DEFAULT_ALPHA: f64 = 0.0;
pub const DEFAULT_BETA: f64 = 1.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_utility: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<SampleSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SpaceSpec {
    Finite {
        elements: Vec<String>,
        #[serde(default)]
        geq: Vec<[String; 2]>,
    },
    Pareto {
        dimension: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<f64>>,
    pub value: f64,
}

impl ProblemFile {
    pub fn parse(text: &str, origin: &str) -> CliResult<Self> {
        toml::from_str(text).map_err(|e| CliError::Parse {
            origin: origin.to_string(),
            message: e.to_string().trim_end().to_string(),
        })
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("problem files always serialize")
    }
}

/// How the base utility `u` is obtained before squashing into `(α, β)`.
///
/// Textual form, shared by files and the command line: `chain`, `sum`, or
/// `weighted:w1,w2,...`.
#[derive(Debug, Clone, PartialEq)]
pub enum BaseUtility {
    /// Longest-chain level over the equivalence classes of a finite relation.
    Chain,
    /// Coordinate sum on `R^k`.
    Sum,
    /// Positive weighted coordinate sum on `R^k`.
    Weighted(Vec<f64>),
}

impl FromStr for BaseUtility {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "chain" => Ok(BaseUtility::Chain),
            "sum" => Ok(BaseUtility::Sum),
            other => {
                let weights = other
                    .strip_prefix("weighted:")
                    .ok_or_else(|| format!("unknown base utility {other:?}; expected chain, sum, or weighted:w1,w2,..."))?;
                weights
                    .split(',')
                    .map(|w| {
                        w.trim()
                            .parse::<f64>()
                            .map_err(|e| format!("weight {w:?}: {e}"))
                    })
                    .collect::<Result<Vec<_>, _>>()
                    .map(BaseUtility::Weighted)
            }
        }
    }
}

impl fmt::Display for BaseUtility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseUtility::Chain => f.write_str("chain"),
            BaseUtility::Sum => f.write_str("sum"),
            BaseUtility::Weighted(w) => {
                let parts: Vec<String> = w.iter().map(|x| format!("{x:?}")).collect();
                write!(f, "weighted:{}", parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureName {
    Gap,
    Nin,
}

impl FixtureName {
    pub fn as_str(self) -> &'static str {
        match self {
            FixtureName::Gap => EXAMPLE_GAP,
            FixtureName::Nin => EXAMPLE_NIN,
        }
    }
}

impl FromStr for FixtureName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            EXAMPLE_GAP => Ok(FixtureName::Gap),
            EXAMPLE_NIN => Ok(FixtureName::Nin),
            other => Err(format!(
                "unknown fixture {other:?}; expected {EXAMPLE_GAP} or {EXAMPLE_NIN}"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Finite {
        names: Vec<String>,
        rel: FinitePreorder,
        sample: PartialUtility<usize>,
    },
    Pareto {
        space: ParetoSpace,
        sample: PartialUtility<Vec<f64>>,
    },
    Fixture(FixtureName),
}

/// A validated problem, ready to build checkers and engines from.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub alpha: f64,
    pub beta: f64,
    /// `None` for fixtures, which carry their own base utility.
    pub base: Option<BaseUtility>,
    pub instance: Instance,
}

fn check_interval(origin: &str, alpha: f64, beta: f64) -> CliResult<()> {
    if alpha.is_finite() && beta.is_finite() && alpha < beta && (beta - alpha).is_finite() {
        Ok(())
    } else {
        Err(CliError::invalid(
            origin,
            "alpha/beta",
            format!("need finite alpha < beta, got alpha = {alpha}, beta = {beta}"),
        ))
    }
}

fn check_base(origin: &str, base: &BaseUtility, instance: &Instance) -> CliResult<()> {
    let bad = |msg: String| Err(CliError::invalid(origin, "base_utility", msg));
    match (instance, base) {
        (Instance::Finite { .. }, BaseUtility::Chain) => Ok(()),
        (Instance::Finite { .. }, other) => bad(format!(
            "{other} needs a pareto space; finite spaces use chain"
        )),
        (Instance::Pareto { .. }, BaseUtility::Chain) => {
            bad("chain needs a finite space; pareto spaces use sum or weighted".into())
        }
        (Instance::Pareto { .. }, BaseUtility::Sum) => Ok(()),
        (Instance::Pareto { space, .. }, BaseUtility::Weighted(w)) => {
            if w.len() != space.dim() {
                bad(format!("{} weights for dimension {}", w.len(), space.dim()))
            } else if let Some(x) = w.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
                bad(format!("weights must be positive and finite, got {x}"))
            } else {
                Ok(())
            }
        }
        (Instance::Fixture(_), _) => bad("fixtures use a built-in base utility".into()),
    }
}

fn finite_value(origin: &str, location: &str, v: f64) -> CliResult<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::invalid(
            origin,
            location,
            format!("value must be finite, got {v}"),
        ))
    }
}

impl Problem {
    pub fn fixture(name: FixtureName) -> Self {
        Problem {
            alpha: DEFAULT_ALPHA,
            beta: DEFAULT_BETA,
            base: None,
            instance: Instance::Fixture(name),
        }
    }

    pub fn from_file(file: &ProblemFile, origin: &str) -> CliResult<Self> {
        let alpha = file.alpha.unwrap_or(DEFAULT_ALPHA);
        let beta = file.beta.unwrap_or(DEFAULT_BETA);
        check_interval(origin, alpha, beta)?;
        let base = file
            .base_utility
            .as_deref()
            .map(|s| {
                s.parse::<BaseUtility>()
                    .map_err(|m| CliError::invalid(origin, "base_utility", m))
            })
            .transpose()?;

        if let Some(name) = &file.fixture {
            if file.space.is_some() || !file.samples.is_empty() {
                return Err(CliError::invalid(
                    origin,
                    "fixture",
                    "a fixture problem cannot also declare a space or samples",
                ));
            }
            let name: FixtureName = name
                .parse()
                .map_err(|m| CliError::invalid(origin, "fixture", m))?;
            let instance = Instance::Fixture(name);
            if let Some(b) = &base {
                check_base(origin, b, &instance)?;
            }
            return Ok(Problem {
                alpha,
                beta,
                base: None,
                instance,
            });
        }

        let space = file.space.as_ref().ok_or_else(|| {
            CliError::invalid(origin, "space", "missing [space] table or fixture")
        })?;
        let instance = match space {
            SpaceSpec::Finite { elements, geq } => {
                build_finite(origin, elements, geq, &file.samples)?
            }
            SpaceSpec::Pareto { dimension } => build_pareto(origin, *dimension, &file.samples)?,
        };
        let base = base.unwrap_or(match instance {
            Instance::Finite { .. } => BaseUtility::Chain,
            _ => BaseUtility::Sum,
        });
        check_base(origin, &base, &instance)?;
        Ok(Problem {
            alpha,
            beta,
            base: Some(base),
            instance,
        })
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        Self::from_file(&ProblemFile::load(path)?, &path.display().to_string())
    }

    /// Applies command-line overrides and re-validates.
    pub fn with_overrides(
        mut self,
        alpha: Option<f64>,
        beta: Option<f64>,
        base: Option<BaseUtility>,
    ) -> CliResult<Self> {
        const ORIGIN: &str = "command line";
        self.alpha = alpha.unwrap_or(self.alpha);
        self.beta = beta.unwrap_or(self.beta);
        check_interval(ORIGIN, self.alpha, self.beta)?;
        if let Some(b) = base {
            check_base(ORIGIN, &b, &self.instance)?;
            self.base = Some(b);
        }
        Ok(self)
    }

    /// A document that parses back to this problem.
    pub fn to_file(&self) -> ProblemFile {
        let mut file = ProblemFile {
            fixture: None,
            alpha: Some(self.alpha),
            beta: Some(self.beta),
            base_utility: self.base.as_ref().map(|b| b.to_string()),
            space: None,
            samples: Vec::new(),
        };
        match &self.instance {
            Instance::Fixture(name) => file.fixture = Some(name.as_str().to_string()),
            Instance::Finite { names, rel, sample } => {
                let geq = rel
                    .pairs()
                    .into_iter()
                    .filter(|(i, j)| i != j)
                    .map(|(i, j)| [names[i].clone(), names[j].clone()])
                    .collect();
                file.space = Some(SpaceSpec::Finite {
                    elements: names.clone(),
                    geq,
                });
                file.samples = sample
                    .entries()
                    .iter()
                    .map(|&(i, value)| SampleSpec {
                        element: Some(names[i].clone()),
                        point: None,
                        value,
                    })
                    .collect();
            }
            Instance::Pareto { space, sample } => {
                file.space = Some(SpaceSpec::Pareto {
                    dimension: space.dim(),
                });
                file.samples = sample
                    .entries()
                    .iter()
                    .map(|(p, value)| SampleSpec {
                        element: None,
                        point: Some(p.clone()),
                        value: *value,
                    })
                    .collect();
            }
        }
        file
    }

    pub fn describe(&self) -> String {
        let body = match &self.instance {
            Instance::Finite { names, sample, .. } => format!(
                "finite space with {} elements, {} sample points",
                names.len(),
                sample.len()
            ),
            Instance::Pareto { space, sample } => format!(
                "pareto space R^{}, {} sample points",
                space.dim(),
                sample.len()
            ),
            Instance::Fixture(name) => format!("analytic fixture {}", name.as_str()),
        };
        let base = self
            .base
            .as_ref()
            .map_or_else(|| "built-in".to_string(), |b| b.to_string());
        format!(
            "{body}; alpha = {}, beta = {}, base utility = {base}",
            self.alpha, self.beta
        )
    }
}

fn build_finite(
    origin: &str,
    elements: &[String],
    geq: &[[String; 2]],
    samples: &[SampleSpec],
) -> CliResult<Instance> {
    if elements.is_empty() {
        return Err(CliError::invalid(origin, "space.elements", "no elements"));
    }
    for (i, name) in elements.iter().enumerate() {
        if elements[..i].contains(name) {
            return Err(CliError::invalid(
                origin,
                format!("space.elements[{i}]"),
                format!("duplicate element {name:?}"),
            ));
        }
    }
    let index = |loc: String, name: &str| {
        elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| CliError::invalid(origin, loc, format!("unknown element {name:?}")))
    };
    let mut pairs = Vec::with_capacity(geq.len());
    for (k, [x, y]) in geq.iter().enumerate() {
        pairs.push((
            index(format!("space.geq[{k}][0]"), x)?,
            index(format!("space.geq[{k}][1]"), y)?,
        ));
    }
    let rel = FinitePreorder::closure(elements.len(), &pairs)?;
    let mut entries: Vec<(usize, f64)> = Vec::with_capacity(samples.len());
    for (k, s) in samples.iter().enumerate() {
        let loc = format!("samples[{k}]");
        if s.point.is_some() {
            return Err(CliError::invalid(
                origin,
                loc,
                "finite spaces take `element`, not `point`",
            ));
        }
        let name = s
            .element
            .as_deref()
            .ok_or_else(|| CliError::invalid(origin, loc.clone(), "missing `element`"))?;
        let i = index(format!("{loc}.element"), name)?;
        if entries.iter().any(|e| e.0 == i) {
            return Err(CliError::invalid(
                origin,
                loc,
                format!("{name:?} sampled twice"),
            ));
        }
        entries.push((i, finite_value(origin, &format!("{loc}.value"), s.value)?));
    }
    let sample = PartialUtility::new(&rel, entries)?;
    Ok(Instance::Finite {
        names: elements.to_vec(),
        rel,
        sample,
    })
}

fn build_pareto(origin: &str, dimension: usize, samples: &[SampleSpec]) -> CliResult<Instance> {
    let space = ParetoSpace::new(dimension)
        .map_err(|e| CliError::invalid(origin, "space.dimension", e.to_string()))?;
    let mut entries: Vec<(Vec<f64>, f64)> = Vec::with_capacity(samples.len());
    for (k, s) in samples.iter().enumerate() {
        let loc = format!("samples[{k}]");
        if s.element.is_some() {
            return Err(CliError::invalid(
                origin,
                loc,
                "pareto spaces take `point`, not `element`",
            ));
        }
        let point = s
            .point
            .as_ref()
            .ok_or_else(|| CliError::invalid(origin, loc.clone(), "missing `point`"))?;
        if point.len() != dimension {
            return Err(CliError::invalid(
                origin,
                format!("{loc}.point"),
                format!("expected {dimension} coordinates, got {}", point.len()),
            ));
        }
        for &c in point {
            finite_value(origin, &format!("{loc}.point"), c)?;
        }
        if entries.iter().any(|e| &e.0 == point) {
            return Err(CliError::invalid(
                origin,
                loc,
                format!("point {point:?} sampled twice"),
            ));
        }
        entries.push((
            point.clone(),
            finite_value(origin, &format!("{loc}.value"), s.value)?,
        ));
    }
    let sample = PartialUtility::new(&space, entries)?;
    Ok(Instance::Pareto { space, sample })
}
