//! Serde adapters writing rationals as `"num/den"` strings.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

use crate::algebra::rat::parse_rat;
use crate::Rat;

pub fn serialize<S: Serializer>(v: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
    let s = String::deserialize(d)?;
    parse_rat(&s).map_err(D::Error::custom)
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&q.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rat(s).map_err(D::Error::custom))
            .collect()
    }
}

/// Parses a comma-separated list of rationals such as `1,-1,1/2,3`.
pub fn parse_list(s: &str) -> Result<Vec<Rat>, crate::AlgebraError> {
    s.split(',').map(parse_rat).collect()
}
