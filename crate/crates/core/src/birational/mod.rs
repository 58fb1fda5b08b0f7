//! Symbolic checks of the explicit maps: the four-line construction and the
//! map χ, the maps ρ and σ, the Segre-type embedding and the
//! complete-intersection model with its degeneration.

pub mod complete_intersection;
pub mod lines;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use complete_intersection::{
    ci_model, family_member, limit_check, limit_equations, segre_identities, segre_pullback_check, CIModel,
};
pub use lines::{
    abcd_from_c, discriminants, lines_from_c, rho_sigma_identities, verify_chi_vanishing, CPoint, ChiReport,
    Discriminants, LinePair,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BirationalError {
    #[error("c0^2 = c2^2: the line through c and its image is not defined")]
    DegenerateLines,
    #[error("expected 4 coordinates, got {0}")]
    Arity(usize),
    #[error("all four coefficients vanish")]
    ZeroOutput,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
