//! Run settings from flags and an optional `key=value` file. Flags win.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use fuzzycover::logic::{builtin_aggregator, Aggregator, BUILTINS, TPROD};
use fuzzycover::neighborhood::Variant;
use fuzzycover::{Family, Group, REPORT_TOL};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(CliError::Config(format!("unknown format {other:?}"))),
        }
    }
}

pub fn parse_family(s: &str) -> Result<Family> {
    match s.trim().to_ascii_lowercase().as_str() {
        "overlap" => Ok(Family::Overlap),
        "tnorm" | "t-norm" => Ok(Family::TNorm),
        other => Err(CliError::Config(format!("unknown logic family {other:?}"))),
    }
}

/// A model group or an explicit operator `N<i>^C<j>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelSpec {
    Group(Group),
    Operator(u8, Variant),
}

impl ModelSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let upper = t.to_ascii_uppercase();
        let pair = upper
            .strip_prefix('N')
            .and_then(|r| r.split_once("^C"))
            .or_else(|| upper.split_once(','));
        if let Some((i, j)) = pair {
            let i: u8 = i
                .trim()
                .parse()
                .map_err(|_| CliError::Config(format!("bad operator {t:?}")))?;
            let j: u8 = j
                .trim()
                .parse()
                .map_err(|_| CliError::Config(format!("bad operator {t:?}")))?;
            if !(1..=4).contains(&i) {
                return Err(fuzzycover::Error::InvalidOperator { index: i }.into());
            }
            return Ok(ModelSpec::Operator(i, Variant::from_index(j)?));
        }
        Ok(ModelSpec::Group(Group::parse(t)?))
    }

    pub fn label(&self) -> String {
        match self {
            ModelSpec::Group(g) => g.label().to_owned(),
            ModelSpec::Operator(i, v) => fuzzycover::neighborhood::operator_label(*i, *v),
        }
    }
}

/// Every setting as given, before defaults.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Settings {
    pub input: Option<PathBuf>,
    pub agg: Option<String>,
    pub logic: Option<String>,
    pub model: Option<String>,
    pub models: Option<String>,
    pub cost: Option<String>,
    pub target: Option<String>,
    pub tolerance: Option<f64>,
    pub grid: Option<f64>,
    pub format: Option<String>,
    pub strict: Option<bool>,
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(CliError::Config(format!(
            "{key}: expected a boolean, got {v:?}"
        ))),
    }
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| CliError::Config(format!("{key}: bad value {v:?}")))
}

impl Settings {
    /// `key = value` lines; `#` starts a comment. Relative paths resolve against `base`.
    pub fn parse_file(text: &str, base: &Path) -> Result<Self> {
        let mut s = Settings::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(CliError::Parse {
                    line: n as u64 + 1,
                    col: 1,
                    message: "expected key=value".into(),
                });
            };
            let (k, v) = (k.trim().to_ascii_lowercase(), v.trim().to_owned());
            match k.as_str() {
                "input" => s.input = Some(base.join(v)),
                "output" => s.output = Some(base.join(v)),
                "agg" | "aggregator" => s.agg = Some(v),
                "logic" => s.logic = Some(v),
                "model" => s.model = Some(v),
                "models" => s.models = Some(v),
                "cost" => s.cost = Some(v),
                "target" => s.target = Some(v),
                "tolerance" => s.tolerance = Some(parse_num(&k, &v)?),
                "grid" => s.grid = Some(parse_num(&k, &v)?),
                "format" => s.format = Some(v),
                "strict" => s.strict = Some(parse_bool(&k, &v)?),
                "threads" => s.threads = Some(parse_num(&k, &v)?),
                _ => {
                    return Err(CliError::Parse {
                        line: n as u64 + 1,
                        col: 1,
                        message: format!("unknown key {k:?}"),
                    })
                }
            }
        }
        Ok(s)
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        let text = crate::input::read_text(path)?;
        Self::parse_file(&text, path.parent().unwrap_or(Path::new(".")))
    }

    /// Fields set in `self` win over `fallback`.
    pub fn or(self, fallback: Settings) -> Settings {
        Settings {
            input: self.input.or(fallback.input),
            agg: self.agg.or(fallback.agg),
            logic: self.logic.or(fallback.logic),
            model: self.model.or(fallback.model),
            models: self.models.or(fallback.models),
            cost: self.cost.or(fallback.cost),
            target: self.target.or(fallback.target),
            tolerance: self.tolerance.or(fallback.tolerance),
            grid: self.grid.or(fallback.grid),
            format: self.format.or(fallback.format),
            strict: self.strict.or(fallback.strict),
            threads: self.threads.or(fallback.threads),
            output: self.output.or(fallback.output),
        }
    }

    pub fn resolve(&self) -> Result<RunConfig> {
        let family = self.logic.as_deref().map(parse_family).transpose()?;
        let all = self
            .agg
            .as_deref()
            .is_some_and(|a| a.trim().eq_ignore_ascii_case("all"));
        let aggregator = match (&self.agg, family) {
            (Some(_), Some(Family::TNorm)) if all => TPROD,
            (Some(_), _) if all => fuzzycover::logic::OD,
            (Some(name), fam) => {
                let a = builtin_aggregator(name)?;
                if let Some(f) = fam {
                    if f != a.family() {
                        return Err(CliError::Config(format!(
                            "aggregator {} belongs to the {} family, not {}",
                            a.name(),
                            a.family().name(),
                            f.name()
                        )));
                    }
                }
                a
            }
            (None, Some(Family::TNorm)) => TPROD,
            (None, _) => fuzzycover::logic::OD,
        };
        let tolerance = self.tolerance.unwrap_or(REPORT_TOL);
        if !(tolerance.is_finite() && tolerance >= 0.0) {
            return Err(CliError::Config(format!(
                "tolerance must be non-negative, got {tolerance}"
            )));
        }
        let grid = self.grid.unwrap_or(fuzzycover::logic::STANDARD_GRID);
        if !(grid > 0.0 && grid <= 1.0) {
            return Err(CliError::Config(format!(
                "grid step must be in (0, 1], got {grid}"
            )));
        }
        let aggregators = if all {
            BUILTINS
                .into_iter()
                .filter(|a| family.map_or(true, |f| a.family() == f))
                .collect()
        } else {
            vec![aggregator]
        };
        Ok(RunConfig {
            input: self.input.clone(),
            aggregator,
            aggregators,
            model: ModelSpec::parse(self.model.as_deref().unwrap_or("A1"))?,
            models: split_list(self.models.as_deref()),
            cost: split_list(self.cost.as_deref()),
            target: self
                .target
                .as_deref()
                .map(crate::input::parse_values)
                .transpose()?,
            tolerance,
            grid,
            format: self
                .format
                .as_deref()
                .map(str::parse)
                .transpose()?
                .unwrap_or_default(),
            strict: self.strict.unwrap_or(false),
            threads: self.threads,
            output: self.output.clone(),
        })
    }
}

fn split_list(s: Option<&str>) -> Vec<String> {
    s.map(|s| {
        s.split(',')
            .map(|p| p.trim().to_owned())
            .filter(|p| !p.is_empty())
            .collect()
    })
    .unwrap_or_default()
}

/// Settings with defaults applied and names resolved.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub input: Option<PathBuf>,
    pub aggregator: Aggregator,
    /// Every aggregator selected; more than one only for `agg=all`.
    pub aggregators: Vec<Aggregator>,
    pub model: ModelSpec,
    pub models: Vec<String>,
    pub cost: Vec<String>,
    pub target: Option<Vec<f64>>,
    pub tolerance: f64,
    pub grid: f64,
    pub format: Format,
    pub strict: bool,
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn family(&self) -> Family {
        self.aggregator.family()
    }

    pub fn input(&self) -> Result<&Path> {
        self.input
            .as_deref()
            .ok_or_else(|| CliError::Config("no input file given".into()))
    }
}
