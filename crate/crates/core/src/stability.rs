//! Exact S- and β-values from piecewise-polynomial volume profiles.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::rat::{int, rat};
use crate::algebra::{MPoly, Rat, Vars};
use crate::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error("pieces [{0}, {1}] and [{2}, {3}] overlap")]
    Overlap(Rat, Rat, Rat, Rat),
    #[error("empty interval [{0}, {1}]")]
    EmptyInterval(Rat, Rat),
    #[error("volume must be positive, got {0}")]
    NonPositiveVolume(Rat),
    #[error("profile must be a polynomial in u alone")]
    NotUnivariate,
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("preset {0:?} is a constant, not a divisor")]
    NotADivisor(String),
}

pub fn u_vars() -> Vars {
    Vars::new(&["u"])
}

/// `Σ cₖ uᵏ` from ascending coefficients.
pub fn upoly(coeffs: &[i64]) -> QPoly {
    let v = u_vars();
    MPoly::from_terms(&v, coeffs.iter().enumerate().map(|(k, &c)| (vec![k as u32], int(c)))).expect("one variable")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub lo: Rat,
    pub hi: Rat,
    pub poly: QPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePoly {
    pieces: Vec<Piece>,
}

impl PiecewisePoly {
    /// Pieces are sorted by `lo`; they must have `lo < hi`, must not
    /// overlap and must be polynomials in `u`.
    pub fn new(mut pieces: Vec<Piece>) -> Result<Self, StabilityError> {
        let v = u_vars();
        for p in &pieces {
            if p.lo >= p.hi {
                return Err(StabilityError::EmptyInterval(p.lo.clone(), p.hi.clone()));
            }
            if *p.poly.vars() != v {
                return Err(StabilityError::NotUnivariate);
            }
        }
        pieces.sort_by(|a, b| a.lo.cmp(&b.lo));
        for w in pieces.windows(2) {
            if w[1].lo < w[0].hi {
                return Err(StabilityError::Overlap(
                    w[0].lo.clone(),
                    w[0].hi.clone(),
                    w[1].lo.clone(),
                    w[1].hi.clone(),
                ));
            }
        }
        Ok(PiecewisePoly { pieces })
    }

    pub fn from_pieces(pieces: Vec<(Rat, Rat, QPoly)>) -> Result<Self, StabilityError> {
        Self::new(pieces.into_iter().map(|(lo, hi, poly)| Piece { lo, hi, poly }).collect())
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }
}

/// `∫_lo^hi f(u) du` through the exact antiderivative.
pub fn integrate_poly(f: &QPoly, lo: &Rat, hi: &Rat) -> Rat {
    f.terms().fold(Rat::zero(), |acc, (m, c)| {
        let k = m.exponents()[0] as usize + 1;
        let pw = |x: &Rat| (0..k).fold(Rat::one(), |a, _| a * x);
        acc + c * (pw(hi) - pw(lo)) / int(k as i64)
    })
}

pub fn integrate_piecewise(v: &PiecewisePoly) -> Rat {
    v.pieces
        .iter()
        .fold(Rat::zero(), |acc, p| acc + integrate_poly(&p.poly, &p.lo, &p.hi))
}

/// The integral divided by `(−K_X)³`.
pub fn s_value(v: &PiecewisePoly, anticanonical_volume: &Rat) -> Result<Rat, StabilityError> {
    if *anticanonical_volume <= Rat::zero() {
        return Err(StabilityError::NonPositiveVolume(anticanonical_volume.clone()));
    }
    Ok(integrate_piecewise(v) / anticanonical_volume)
}

pub fn beta_value(a: &Rat, s: &Rat) -> Rat {
    a - s
}

/// `(−K_X)³` for the family.
pub fn anticanonical_volume() -> Rat {
    int(24)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityReport {
    #[serde(with = "crate::serde_rat")]
    pub s_value: Rat,
    #[serde(with = "crate::serde_rat")]
    pub a_value: Rat,
    #[serde(with = "crate::serde_rat")]
    pub beta: Rat,
}

impl StabilityReport {
    pub fn new(s_value: Rat, a_value: Rat) -> Self {
        let beta = beta_value(&a_value, &s_value);
        StabilityReport { s_value, a_value, beta }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NemuroBound {
    #[serde(with = "crate::serde_rat")]
    pub factor: Rat,
    #[serde(with = "crate::serde_rat")]
    pub delta_bound: Rat,
    #[serde(with = "crate::serde_rat")]
    pub crude_bound: Rat,
}

/// The refined bound `3/4 + (3/4)∫₁²(2−u)³du` and its reciprocal, next to
/// the crude `(−K_X)³/3 · δ(S)/(2(−K_S)²)` with `δ(S) = 1`, `(−K_S)² = 6`.
pub fn nemuro_bound() -> NemuroBound {
    let three_quarters = rat(3, 4);
    let tail = PiecewisePoly::from_pieces(vec![(int(1), int(2), upoly(&[8, -12, 6, -1]))]).expect("one piece");
    let factor = &three_quarters + &three_quarters * integrate_piecewise(&tail);
    let delta_s = delta_sextic_del_pezzo();
    let crude_bound = anticanonical_volume() / int(3) * delta_s / (int(2) * int(6));
    NemuroBound {
        delta_bound: factor.recip(),
        factor,
        crude_bound,
    }
}

/// δ of the smooth sextic del Pezzo surface.
pub fn delta_sextic_del_pezzo() -> Rat {
    int(1)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Preset {
    /// A volume profile together with the log discrepancy of the divisor.
    Profile { volume: PiecewisePoly, a_value: Rat },
    /// An S-value quoted without its profile.
    SValue { s_value: Rat, a_value: Rat },
    Constant(Rat),
}

fn pieces(list: Vec<(i64, i64, &[i64])>) -> PiecewisePoly {
    PiecewisePoly::from_pieces(list.into_iter().map(|(lo, hi, c)| (int(lo), int(hi), upoly(c))).collect())
        .expect("preset pieces are valid")
}

/// `8u³ − 24u² + 24` on [0,1].
const F_FIRST: &[i64] = &[24, 0, -24, 8];
/// `8(2−u)³` on [1,2].
const TAIL: &[i64] = &[64, -96, 48, -8];
/// `8(2−u)³·u`, as typeset for F and E′.
const TAIL_TIMES_U: &[i64] = &[0, 64, -96, 48, -8];
/// `8(3 − 3u² + u³)` on [0,1]; the same polynomial as for F.
const E_FIRST: &[i64] = &[24, 0, -24, 8];

pub fn presets() -> BTreeMap<&'static str, Preset> {
    let one = int(1);
    BTreeMap::from([
        (
            "divisor-F-corrected",
            Preset::Profile {
                volume: pieces(vec![(0, 1, F_FIRST), (1, 2, TAIL)]),
                a_value: one.clone(),
            },
        ),
        (
            "divisor-F-literal",
            Preset::Profile {
                volume: pieces(vec![(0, 1, F_FIRST), (1, 2, TAIL_TIMES_U)]),
                a_value: one.clone(),
            },
        ),
        (
            "divisor-Eprime",
            Preset::Profile {
                volume: pieces(vec![(0, 1, F_FIRST), (1, 2, TAIL)]),
                a_value: one.clone(),
            },
        ),
        (
            "divisor-E",
            Preset::Profile {
                volume: pieces(vec![(0, 1, E_FIRST), (1, 2, TAIL)]),
                a_value: int(2),
            },
        ),
        (
            "fiber-S",
            Preset::SValue {
                s_value: rat(11, 16),
                a_value: one,
            },
        ),
        ("delta-sextic-dP", Preset::Constant(delta_sextic_del_pezzo())),
    ])
}

pub fn preset(name: &str) -> Result<Preset, StabilityError> {
    presets()
        .remove(name)
        .ok_or_else(|| StabilityError::UnknownPreset(name.to_string()))
}

pub fn preset_report(name: &str) -> Result<StabilityReport, StabilityError> {
    match preset(name)? {
        Preset::Profile { volume, a_value } => Ok(StabilityReport::new(s_value(&volume, &anticanonical_volume())?, a_value)),
        Preset::SValue { s_value, a_value } => Ok(StabilityReport::new(s_value, a_value)),
        Preset::Constant(_) => Err(StabilityError::NotADivisor(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrals() {
        let first = pieces(vec![(0, 1, F_FIRST)]);
        assert_eq!(integrate_piecewise(&first), int(18));
        assert_eq!(integrate_piecewise(&pieces(vec![(1, 2, TAIL)])), int(2));
        assert_eq!(integrate_piecewise(&pieces(vec![(0, 2, &[])])), int(0));
        assert_eq!(integrate_piecewise(&pieces(vec![(1, 2, TAIL_TIMES_U)])), rat(12, 5));
    }

    #[test]
    fn overlap_is_rejected() {
        // The E profile with its second range as typeset, [0,2].
        let r = PiecewisePoly::from_pieces(vec![(int(0), int(1), upoly(E_FIRST)), (int(0), int(2), upoly(TAIL))]);
        assert!(matches!(r, Err(StabilityError::Overlap(..))));
        let r = PiecewisePoly::from_pieces(vec![(int(1), int(1), upoly(TAIL))]);
        assert!(matches!(r, Err(StabilityError::EmptyInterval(..))));
    }

    #[test]
    fn preset_values() {
        let s = |n| preset_report(n).unwrap().s_value;
        assert_eq!(s("divisor-E"), rat(5, 6));
        assert_eq!(s("divisor-F-corrected"), rat(5, 6));
        assert_eq!(s("divisor-F-literal"), rat(17, 20));
        assert_eq!(s("divisor-Eprime"), rat(5, 6));
        assert_eq!(preset_report("divisor-E").unwrap().beta, rat(7, 6));
        assert_eq!(preset_report("fiber-S").unwrap().beta, rat(5, 16));
        assert_eq!(preset_report("divisor-Eprime").unwrap().beta, rat(1, 6));
        assert!(matches!(preset_report("delta-sextic-dP"), Err(StabilityError::NotADivisor(_))));
        assert!(matches!(preset("nope"), Err(StabilityError::UnknownPreset(_))));
    }

    #[test]
    fn nemuro() {
        let n = nemuro_bound();
        assert_eq!((n.factor, n.delta_bound, n.crude_bound), (rat(15, 16), rat(16, 15), rat(2, 3)));
        assert!(s_value(&pieces(vec![(0, 1, F_FIRST)]), &int(0)).is_err());
    }

    #[test]
    fn report_json() {
        let j = serde_json::to_string(&preset_report("divisor-E").unwrap()).unwrap();
        assert_eq!(j, r#"{"s_value":"5/6","a_value":"2","beta":"7/6"}"#);
    }
}
