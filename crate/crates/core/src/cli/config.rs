//! Run configuration: defaults, an optional TOML file, then command-line flags.

use std::path::Path;

use serde::Deserialize;

use crate::convention::{BoxSide, Convention, RibbonStatistic};
use crate::error::{Error, Result};
use crate::render::Format;

/// Size limits for the exhaustive computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    /// Largest `n` for partition, block and operator computations.
    #[serde(default = "Bounds::default_partitions")]
    pub partitions: u32,
    /// Largest `n` for bar involutions and canonical bases.
    #[serde(default = "Bounds::default_canonical")]
    pub canonical: u32,
}

impl Bounds {
    fn default_partitions() -> u32 {
        10
    }

    fn default_canonical() -> u32 {
        8
    }

    pub fn check_partitions(&self, what: &str, n: u32) -> Result<()> {
        check(what, n, self.partitions)
    }

    pub fn check_canonical(&self, what: &str, n: u32) -> Result<()> {
        check(what, n, self.canonical)
    }
}

fn check(what: &str, n: u32, bound: u32) -> Result<()> {
    if n > bound {
        return Err(Error::BoundExceeded { what: what.into(), value: n.into(), bound: bound.into() });
    }
    Ok(())
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { partitions: Self::default_partitions(), canonical: Self::default_canonical() }
    }
}

/// Order in which e-quotient components are printed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientOrder {
    /// Runner `0, 1, ..., e-1` of the abacus.
    #[default]
    Runner,
    /// Runner `e-1, ..., 0`.
    Reversed,
}

/// The `v`-power attached to a ribbon strip of statistic `s`. The two
/// spellings `(-1)^s v^{-s}` and `(-v)^{-s}` denote the same monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpinPower {
    #[default]
    Signed,
    NegatedV,
}

/// Everything a command needs besides its own arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub e: u32,
    pub d: i64,
    pub bounds: Bounds,
    pub format: Format,
    pub quotient_order: QuotientOrder,
    pub spin_power: SpinPower,
    pub convention: Convention,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            e: 2,
            d: 0,
            bounds: Bounds::default(),
            format: Format::Json,
            quotient_order: QuotientOrder::Runner,
            spin_power: SpinPower::Signed,
            convention: Convention::Transposed,
        }
    }
}

/// The TOML file layout; every key is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub e: Option<u32>,
    pub d: Option<i64>,
    pub format: Option<Format>,
    pub bounds: Option<Bounds>,
    pub convention: Option<ConventionFile>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConventionFile {
    pub quotient_order: Option<QuotientOrder>,
    pub spin_power: Option<SpinPower>,
    pub ribbon_statistic: Option<RibbonStatistic>,
    pub f_side: Option<BoxSide>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        text.parse()
    }
}

impl std::str::FromStr for ConfigFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::Parse(format!("config: {e}")))
    }
}

/// Command-line values that take precedence over the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub e: Option<u32>,
    pub d: Option<i64>,
    pub format: Option<Format>,
    pub convention: Option<Convention>,
}

impl RunConfig {
    pub fn resolve(file: Option<ConfigFile>, flags: &Overrides) -> Result<Self> {
        let mut cfg = RunConfig::default();
        if let Some(file) = file {
            cfg.e = file.e.unwrap_or(cfg.e);
            cfg.d = file.d.unwrap_or(cfg.d);
            cfg.format = file.format.unwrap_or(cfg.format);
            cfg.bounds = file.bounds.unwrap_or(cfg.bounds);
            if let Some(c) = file.convention {
                cfg.quotient_order = c.quotient_order.unwrap_or_default();
                cfg.spin_power = c.spin_power.unwrap_or_default();
                cfg.convention = match (c.ribbon_statistic, c.f_side) {
                    (None, None) => cfg.convention,
                    (s, f) => Convention::from_rules(
                        s.unwrap_or(RibbonStatistic::Arm),
                        f.unwrap_or(match s {
                            Some(RibbonStatistic::Leg) => BoxSide::Above,
                            _ => BoxSide::Below,
                        }),
                    )?,
                };
            }
        }
        cfg.e = flags.e.unwrap_or(cfg.e);
        cfg.d = flags.d.unwrap_or(cfg.d);
        cfg.format = flags.format.unwrap_or(cfg.format);
        cfg.convention = flags.convention.unwrap_or(cfg.convention);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.e < 2 {
            return Err(Error::InvalidModulus(self.e));
        }
        if self.bounds.partitions == 0 || self.bounds.canonical == 0 {
            return Err(Error::Parse("bounds must be positive".into()));
        }
        Ok(())
    }
}
