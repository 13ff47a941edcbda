//! Label conventions for the Fock-space operators.
//!
//! Two self-consistent pairings of rules are supported. `Transposed` (the
//! default) labels characters so that the printed decomposition matrices of
//! GL(n,q) come out as rows of `G⁺`; `Classical` is the usual
//! Leclerc-Thibon labelling of the Fock space.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which statistic of a ribbon controls its sign and `v`-power `(-1)^s v^{-s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RibbonStatistic {
    /// Number of occupied columns minus one.
    Arm,
    /// Number of occupied rows minus one.
    Leg,
}

/// Which addable and removable cells of the same residue count towards the
/// `v`-power of `f_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoxSide {
    /// Cells in lower rows.
    Below,
    /// Cells in higher rows.
    Above,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Arm-weighted ribbons, `f_r` counting cells below, bases triangular
    /// towards dominance-larger labels.
    #[default]
    Transposed,
    /// Leg-weighted ribbons, `f_r` counting cells above, bases triangular
    /// towards dominance-smaller labels.
    Classical,
}

impl Convention {
    /// The convention with the given pair of rules; mixed pairs are rejected
    /// because they do not make the ribbon operators commute with `f_r`.
    pub fn from_rules(statistic: RibbonStatistic, side: BoxSide) -> Result<Self> {
        match (statistic, side) {
            (RibbonStatistic::Arm, BoxSide::Below) => Ok(Convention::Transposed),
            (RibbonStatistic::Leg, BoxSide::Above) => Ok(Convention::Classical),
            _ => Err(Error::Parse(format!(
                "ribbon statistic {statistic:?} with f-rule {side:?} is not a consistent convention"
            ))),
        }
    }

    pub fn ribbon_statistic(self) -> RibbonStatistic {
        match self {
            Convention::Transposed => RibbonStatistic::Arm,
            Convention::Classical => RibbonStatistic::Leg,
        }
    }

    pub fn box_side(self) -> BoxSide {
        match self {
            Convention::Transposed => BoxSide::Below,
            Convention::Classical => BoxSide::Above,
        }
    }

    /// Whether canonical vectors are supported on dominance-larger labels.
    pub fn triangular_upwards(self) -> bool {
        self == Convention::Transposed
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Transposed => "transposed",
            Convention::Classical => "classical",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "transposed" => Ok(Convention::Transposed),
            "classical" => Ok(Convention::Classical),
            _ => Err(Error::Parse(format!("unknown convention {s:?}"))),
        }
    }
}
