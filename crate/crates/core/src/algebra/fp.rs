use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::{reduce_mod, Rat};
use super::{AlgebraError, Ring, Scalar};

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue; `p` must be prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Debug)]
enum Repr {
    /// Residue in `[0, p)` together with its odd prime modulus.
    Residue { value: u64, modulus: u64 },
    /// A rational constant not yet bound to a modulus. This is what the
    /// context-free constructors (`zero`, `one`, `from_rat`) produce; it is
    /// reduced on first contact with a bound residue.
    Unbound(Rat),
}

/// Element of the prime field `F_p`.
///
/// Arithmetic between residues of different moduli panics; use
/// [`FpElem::checked_add`] and friends, or [`Scalar::check_compatible`], to
/// get an [`AlgebraError::RingMismatch`] instead.
#[derive(Clone, Debug)]
pub struct FpElem(Repr);

impl FpElem {
    pub fn new(value: u64, modulus: u64) -> Result<Self, AlgebraError> {
        if !is_odd_prime(modulus) {
            return Err(AlgebraError::NotOddPrime(modulus));
        }
        Ok(FpElem(Repr::Residue {
            value: value % modulus,
            modulus,
        }))
    }

    pub fn from_i64(value: i64, modulus: u64) -> Result<Self, AlgebraError> {
        let m = modulus as i64;
        Self::new(value.rem_euclid(m) as u64, modulus)
    }

    pub fn from_rat_mod(q: &Rat, modulus: u64) -> Result<Self, AlgebraError> {
        if !is_odd_prime(modulus) {
            return Err(AlgebraError::NotOddPrime(modulus));
        }
        Ok(FpElem(Repr::Residue {
            value: reduce_mod(q, modulus)?,
            modulus,
        }))
    }

    /// `None` for modulus-free constants.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Repr::Residue { modulus, .. } => Some(modulus),
            Repr::Unbound(_) => None,
        }
    }

    /// Residue in `[0, p)`; `None` for modulus-free constants.
    pub fn residue(&self) -> Option<u64> {
        match self.0 {
            Repr::Residue { value, .. } => Some(value),
            Repr::Unbound(_) => None,
        }
    }

    fn bind(&self, modulus: u64) -> Result<u64, AlgebraError> {
        match &self.0 {
            Repr::Residue { value, modulus: m } => {
                if *m == modulus {
                    Ok(*value)
                } else {
                    Err(AlgebraError::RingMismatch {
                        left: *m,
                        right: modulus,
                    })
                }
            }
            Repr::Unbound(q) => reduce_mod(q, modulus),
        }
    }

    fn combine(
        &self,
        other: &Self,
        on_residues: impl Fn(u64, u64, u64) -> u64,
        on_rationals: impl Fn(&Rat, &Rat) -> Rat,
    ) -> Result<Self, AlgebraError> {
        let modulus = match (self.modulus(), other.modulus()) {
            (Some(l), Some(r)) if l != r => {
                return Err(AlgebraError::RingMismatch { left: l, right: r })
            }
            (Some(m), _) | (None, Some(m)) => m,
            (None, None) => {
                let (Repr::Unbound(a), Repr::Unbound(b)) = (&self.0, &other.0) else {
                    unreachable!()
                };
                return Ok(FpElem(Repr::Unbound(on_rationals(a, b))));
            }
        };
        let a = self.bind(modulus)?;
        let b = other.bind(modulus)?;
        Ok(FpElem(Repr::Residue {
            value: on_residues(a, b, modulus),
            modulus,
        }))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.combine(other, |a, b, p| (a + b) % p, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.combine(other, |a, b, p| (a + p - b) % p, |a, b| a - b)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.combine(other, mul_mod, |a, b| a * b)
    }
}

impl PartialEq for FpElem {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Unbound(a), Repr::Unbound(b)) => a == b,
            _ => {
                let m = self.modulus().or(other.modulus()).unwrap();
                matches!((self.bind(m), other.bind(m)), (Ok(a), Ok(b)) if a == b)
            }
        }
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Residue { value, .. } => write!(f, "{value}"),
            Repr::Unbound(q) => write!(f, "{q}"),
        }
    }
}

macro_rules! fp_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for FpElem {
            type Output = FpElem;
            fn $method(self, rhs: FpElem) -> FpElem {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $trait<&'a FpElem> for &'a FpElem {
            type Output = FpElem;
            fn $method(self, rhs: &FpElem) -> FpElem {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

fp_binop!(Add, add, checked_add);
fp_binop!(Sub, sub, checked_sub);
fp_binop!(Mul, mul, checked_mul);

impl Neg for FpElem {
    type Output = FpElem;
    fn neg(self) -> FpElem {
        match self.0 {
            Repr::Residue { value, modulus } => FpElem(Repr::Residue {
                value: (modulus - value) % modulus,
                modulus,
            }),
            Repr::Unbound(q) => FpElem(Repr::Unbound(-q)),
        }
    }
}

impl Zero for FpElem {
    fn zero() -> Self {
        FpElem(Repr::Unbound(Rat::zero()))
    }
    fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Residue { value, .. } => *value == 0,
            Repr::Unbound(q) => q.is_zero(),
        }
    }
}

impl One for FpElem {
    fn one() -> Self {
        FpElem(Repr::Unbound(Rat::one()))
    }
}

impl Ring for FpElem {
    fn zero_like(&self) -> Self {
        match self.0 {
            Repr::Residue { modulus, .. } => FpElem(Repr::Residue { value: 0, modulus }),
            Repr::Unbound(_) => Self::zero(),
        }
    }
    fn one_like(&self) -> Self {
        match self.0 {
            Repr::Residue { modulus, .. } => FpElem(Repr::Residue { value: 1, modulus }),
            Repr::Unbound(_) => Self::one(),
        }
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn scale(&self, q: &Rat) -> Self {
        self.clone() * FpElem::from_rat(q)
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        d.inv().map(|i| self.clone() * i)
    }
}

impl Scalar for FpElem {
    fn from_rat(q: &Rat) -> Self {
        FpElem(Repr::Unbound(q.clone()))
    }
    fn inv(&self) -> Option<Self> {
        match &self.0 {
            Repr::Residue { value: 0, .. } => None,
            Repr::Residue { value, modulus } => Some(FpElem(Repr::Residue {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            })),
            Repr::Unbound(q) => {
                if q.is_zero() {
                    None
                } else {
                    Some(FpElem(Repr::Unbound(q.recip())))
                }
            }
        }
    }
    fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        match (self.modulus(), other.modulus()) {
            (Some(l), Some(r)) if l != r => Err(AlgebraError::RingMismatch { left: l, right: r }),
            _ => Ok(()),
        }
    }
}
