//! Singularity strata of `X_(a:b:c:d) ⊂ (P¹)⁴` and of the degenerations
//! `X_(a:b:c) ⊂ P(1,1,2)²` over the exceptional divisor.

pub mod catalogue;
pub mod oracle;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::rat::int;
use crate::algebra::{AlgebraError, Rat, Ring, Scalar};
use crate::invariants::{GCoeffs, InvariantError};

pub use catalogue::{
    expected_singular_points, expected_singular_points_e, is_singular_1111, is_singular_22, ExpectedLocus, SingularPoint,
};
pub use oracle::{oracle_count_1111, oracle_count_22, SingReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("coefficients are all zero")]
    ZeroInput,
    #[error("expected {expected} coefficients, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("no catalogued singular-point list for {0}")]
    NoCatalogue(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StratumP3 {
    Smooth,
    Red,
    Curv,
    SixA1,
    FourA1,
    TwoA1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StratumE {
    Base,
    CurvPlus,
    FourA1Plus,
    TwoA1Plus,
}

impl fmt::Display for StratumP3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for StratumE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl StratumP3 {
    /// Number of singular `F_p`-points predicted for a representative with
    /// good reduction; `None` for the reducible stratum (a surface).
    pub fn predicted_count(self, p: u64) -> Option<u64> {
        match self {
            StratumP3::Smooth => Some(0),
            StratumP3::TwoA1 => Some(2),
            StratumP3::FourA1 => Some(4),
            StratumP3::SixA1 => Some(6),
            StratumP3::Curv => Some(p + 1),
            StratumP3::Red => None,
        }
    }

    /// Whether an oracle count at `p` fits the stratum: exact for the finite
    /// and curve strata, at least `p²` for the reducible one.
    pub fn count_fits(self, p: u64, count: u64) -> bool {
        match self.predicted_count(p) {
            Some(n) => n == count,
            None => count >= p * p,
        }
    }
}

/// Coordinates `(a:b:c)` of the exceptional plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ECoeffs {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl ECoeffs {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        ECoeffs { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        ECoeffs::new(int(a), int(b), int(c))
    }

    pub fn parse(s: &str) -> Result<Self, StrataError> {
        let v = crate::serde_rat::parse_list(s)?;
        match <[Rat; 3]>::try_from(v) {
            Ok([a, b, c]) => Ok(ECoeffs::new(a, b, c)),
            Err(v) => Err(StrataError::Arity {
                expected: 3,
                got: v.len(),
            }),
        }
    }

    pub fn to_array(&self) -> [Rat; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// Projective equality with an integer triple.
    pub fn is_proportional_to(&self, other: [i64; 3]) -> bool {
        let x = self.to_array();
        let y = other.map(int);
        (0..3).all(|i| (0..3).all(|j| &x[i] * &y[j] == &x[j] * &y[i]))
    }
}

fn squares<F: Ring>(x: &[F]) -> Vec<F> {
    x.iter().map(|v| v.clone() * v.clone()).collect()
}

/// Stratum of `(a:b:c:d)` over any field, conditions tested in precedence
/// order Red, Curv, SixA1, FourA1, TwoA1.
///
/// Over `F_p` this is the stratum of the reduction, which is what the
/// finite-field oracle actually sees.
pub fn classify_p3_in<F: Scalar>(x: &[F; 4]) -> Result<StratumP3, StrataError> {
    if x.iter().all(Ring::is_zero_elem) {
        return Err(StrataError::ZeroInput);
    }
    let sq = squares(x);
    let zeros: Vec<usize> = (0..4).filter(|&i| x[i].is_zero_elem()).collect();

    if sq.iter().all(|s| *s == sq[0]) || zeros.len() == 3 {
        return Ok(StratumP3::Red);
    }
    for skip in 0..4 {
        let t: Vec<usize> = (0..4).filter(|&i| i != skip).collect();
        if sq[t[0]] == sq[t[1]] && sq[t[1]] == sq[t[2]] && !sq[t[0]].is_zero_elem() {
            return Ok(StratumP3::Curv);
        }
    }
    if zeros.len() == 2 {
        let rest: Vec<usize> = (0..4).filter(|i| !zeros.contains(i)).collect();
        if sq[rest[0]] == sq[rest[1]] {
            return Ok(StratumP3::SixA1);
        }
        return Ok(StratumP3::FourA1);
    }
    for (i, j, k, l) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
        if sq[i] == sq[j] && sq[k] == sq[l] {
            return Ok(StratumP3::FourA1);
        }
    }
    if square_difference_vanishes(&sq) {
        return Ok(StratumP3::TwoA1);
    }
    Ok(StratumP3::Smooth)
}

fn square_difference_vanishes<F: Ring>(sq: &[F]) -> bool {
    (0..sq.len()).any(|i| (i + 1..sq.len()).any(|j| sq[i] == sq[j]))
}

pub fn classify_p3(g: &GCoeffs<Rat>) -> Result<StratumP3, StrataError> {
    classify_p3_in(&g.to_array())
}

pub fn classify_e(e: &ECoeffs) -> Result<StratumE, StrataError> {
    if e.is_zero() {
        return Err(StrataError::ZeroInput);
    }
    for s in [[1, 1, 1], [1, 1, -1], [1, -1, -1], [1, -1, 1]] {
        if e.is_proportional_to(s) {
            return Ok(StratumE::CurvPlus);
        }
    }
    for s in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
        if e.is_proportional_to(s) {
            return Ok(StratumE::FourA1Plus);
        }
    }
    if square_difference_vanishes(&squares(&e.to_array())) {
        return Ok(StratumE::TwoA1Plus);
    }
    Ok(StratumE::Base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3(a: i64, b: i64, c: i64, d: i64) -> StratumP3 {
        classify_p3(&GCoeffs::from_ints(a, b, c, d)).unwrap()
    }

    #[test]
    fn p3_representatives() {
        assert_eq!(p3(1, 2, 3, 5), StratumP3::Smooth);
        assert_eq!(p3(0, 0, 1, 1), StratumP3::SixA1);
        assert_eq!(p3(1, -1, 1, 1), StratumP3::Red);
        assert_eq!(p3(1, -1, 1, 2), StratumP3::Curv);
        assert_eq!(p3(0, 0, 1, 2), StratumP3::FourA1);
        assert_eq!(p3(-165, 165, 1517, 173), StratumP3::TwoA1);
        assert_eq!(p3(0, 0, 0, 1), StratumP3::Red);
        assert_eq!(p3(2, 2, 3, 3), StratumP3::FourA1);
        assert!(matches!(
            classify_p3(&GCoeffs::from_ints(0, 0, 0, 0)),
            Err(StrataError::ZeroInput)
        ));
    }

    #[test]
    fn e_representatives() {
        let e = |a, b, c| classify_e(&ECoeffs::from_ints(a, b, c)).unwrap();
        assert_eq!(e(1, 1, 1), StratumE::CurvPlus);
        assert_eq!(e(-2, 2, -2), StratumE::CurvPlus);
        assert_eq!(e(1, 0, 0), StratumE::FourA1Plus);
        assert_eq!(e(2, 3, 5), StratumE::Base);
        assert_eq!(e(1, 2, 2), StratumE::TwoA1Plus);
        assert!(classify_e(&ECoeffs::from_ints(0, 0, 0)).is_err());
    }

    #[test]
    fn reduction_mod_p_changes_stratum() {
        use crate::algebra::FpElem;
        let red = |v: [i64; 4], p| classify_p3_in(&v.map(|x| FpElem::from_i64(x, p).unwrap())).unwrap();
        assert_eq!(red([1, 2, 3, 5], 5), StratumP3::TwoA1);
        assert_eq!(red([-165, 165, 1517, 173], 5), StratumP3::SixA1);
        assert_eq!(red([-165, 165, 1517, 173], 7), StratumP3::FourA1);
        // b² = d² mod 7: two nodes, conjugate over F_49.
        assert_eq!(red([1, 2, 3, 5], 7), StratumP3::TwoA1);
        assert_eq!(red([1, 2, 3, 5], 17), StratumP3::Smooth);
    }

    #[test]
    fn count_predictions() {
        assert!(StratumP3::Curv.count_fits(7, 8));
        assert!(StratumP3::Red.count_fits(5, 36));
        assert!(!StratumP3::Red.count_fits(5, 24));
        assert!(!StratumP3::Smooth.count_fits(5, 2));
    }
}
