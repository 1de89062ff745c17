use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Coefficient field for homology: `ℚ` or `𝔽_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub const F2: FieldSpec = FieldSpec::Prime(2);

    /// `𝔽_p`, checking that `p` is prime.
    pub fn prime(p: u32) -> Result<Self, Error> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::InvalidField(p.to_string()));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    /// The default battery `{ℚ, 𝔽_2}`.
    pub fn battery() -> Vec<FieldSpec> {
        vec![FieldSpec::Rationals, FieldSpec::F2]
    }

    /// Parses a comma-separated list such as `Q,F2,F3`.
    pub fn parse_list(s: &str) -> Result<Vec<FieldSpec>, Error> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `QQ`, `0`, `F2`, `F_2`, `GF(2)`, `Z/2`, or a bare prime.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().to_ascii_uppercase();
        if matches!(t.as_str(), "Q" | "QQ" | "RATIONALS" | "0") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .trim_start_matches("GF(")
            .trim_end_matches(')')
            .trim_start_matches("Z/")
            .trim_start_matches('F')
            .trim_start_matches('_');
        digits
            .parse::<u32>()
            .ok()
            .and_then(|p| FieldSpec::prime(p).ok())
            .ok_or_else(|| Error::InvalidField(s.to_string()))
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
