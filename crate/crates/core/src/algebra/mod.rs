//! Exact coefficient rings and sparse multivariate polynomials.
//!
//! Everything above this module is written against the [`Ring`] trait, so the
//! same invariant formulas run over [`Rat`], over a prime field [`FpElem`], or
//! over polynomial rings built from either.

pub mod fp;
pub mod matrix;
pub mod mpoly;
pub mod rat;
pub mod series;
pub mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

pub use fp::FpElem;
pub use matrix::det;
pub use mpoly::{MPoly, Monomial, Vars};
pub use rat::Rat;
pub use series::{series_expand, RationalFunction, SeriesTrunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable sets differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("coefficient rings differ (moduli {left} and {right})")]
    RingMismatch { left: u64, right: u64 },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` has no binding")]
    UnboundVariable(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("denominator {den} is not invertible mod {modulus}")]
    NotInvertibleMod { den: String, modulus: u64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("series denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Commutative ring with identity, as used by the generic formulas.
///
/// `zero_like`/`one_like` take a witness so that context-carrying rings
/// (polynomials over a fixed variable set) can produce their constants.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    /// Multiplication by a rational constant.
    fn scale(&self, q: &Rat) -> Self;
    /// `Some(q)` with `self = q * d`, or `None` if `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Option<Self>;

    fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Exact field of coefficients: the rationals or a prime field.
pub trait Scalar: Ring + num_traits::Zero + num_traits::One + fmt::Display {
    fn from_rat(q: &Rat) -> Self;
    fn from_u64(n: u64) -> Self {
        Self::from_rat(&Rat::from_integer(n.into()))
    }
    fn inv(&self) -> Option<Self>;
    /// Whether `self` and `other` live in the same ring.
    fn check_compatible(&self, _other: &Self) -> Result<(), AlgebraError> {
        Ok(())
    }
}
