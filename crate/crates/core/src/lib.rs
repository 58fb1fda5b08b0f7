//! Exact computations around the W(F4)-symmetric family of (1,1,1,1) divisors
//! on (P¹)⁴: invariants and the quotient map to P(1,3,4,6), the group action,
//! singularity strata with a finite-field oracle, the toric moduli fan,
//! stability arithmetic and the birational identities.

pub mod algebra;
pub mod birational;
pub mod invariants;
pub mod serde_rat;
pub mod stability;
pub mod strata;
pub mod toric;
pub mod weighted;
pub mod weyl;

pub use algebra::{AlgebraError, FpElem, MPoly, Rat, Ring, Scalar, Vars};
pub use invariants::{GCoeffs, Form1111, Invariants, SValues};
pub use weighted::{wp_equal, WeightedPoint};

/// Polynomials with rational coefficients.
pub type QPoly = MPoly<Rat>;
/// Polynomials over a prime field.
pub type FpPoly = MPoly<FpElem>;
