use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hyperfield::{normalize_projective, RealTropVal};
use crate::puiseux::{parse_puiseux, PuiseuxPoly};

/// A point of real tropical projective space in signed-valuation
/// coordinates, normalized so that the first nonzero coordinate is `(+, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealTropProjPoint {
    coords: Vec<RealTropVal>,
}

impl RealTropProjPoint {
    pub fn new(coords: &[RealTropVal]) -> Result<Self> {
        Ok(RealTropProjPoint {
            coords: normalize_projective(coords)?,
        })
    }

    pub fn coords(&self) -> &[RealTropVal] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Parses `s:v` pairs separated by commas, e.g. `+:0,-:1/2,0:inf`.
    pub fn parse_pairs(text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(RealTropVal::parse_pair)
            .collect::<Result<Vec<_>>>()?;
        RealTropProjPoint::new(&coords)
    }

    /// Reorders and drops coordinates: output coordinate `k` is input
    /// coordinate `map[k]`, then renormalizes.
    pub fn select(&self, map: &[usize]) -> Result<Self> {
        let coords: Vec<RealTropVal> = map
            .iter()
            .map(|&i| {
                self.coords.get(i).cloned().ok_or(Error::DimensionMismatch {
                    expected: self.coords.len(),
                    found: i + 1,
                })
            })
            .collect::<Result<_>>()?;
        RealTropProjPoint::new(&coords)
    }
}

impl fmt::Display for RealTropProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(RealTropVal::to_pair_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for RealTropProjPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RealTropProjPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<RealTropVal>::deserialize(deserializer)?;
        RealTropProjPoint::new(&coords).map_err(serde::de::Error::custom)
    }
}

/// Componentwise signed absolute value of a nonzero vector, normalized.
pub fn trop_r_point(coords: &[PuiseuxPoly]) -> Result<RealTropProjPoint> {
    let values: Vec<RealTropVal> = coords.iter().map(PuiseuxPoly::signed_value).collect();
    RealTropProjPoint::new(&values)
}

/// Accepts either signed-valuation pairs (`+:0,-:1/2`) or a comma-separated
/// list of Puiseux coordinates to be tropicalized (`1,-1+t,t`).
pub fn parse_point_literal(text: &str) -> Result<RealTropProjPoint> {
    if text.contains(':') {
        RealTropProjPoint::parse_pairs(text)
    } else {
        let coords = text.split(',').map(parse_puiseux).collect::<Result<Vec<_>>>()?;
        trop_r_point(&coords)
    }
}
