use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{AlgebraError, Ring, Scalar};

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"n"` or `"n/d"` (optional sign, surrounding whitespace ignored).
pub fn parse_rat(s: &str) -> Result<Rat, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Residue of `q` in `F_p`, failing when `p` divides the denominator.
pub fn reduce_mod(q: &Rat, p: u64) -> Result<u64, AlgebraError> {
    let modulus = BigInt::from(p);
    let den = q.denom().mod_floor(&modulus);
    if den.is_zero() {
        return Err(AlgebraError::NotInvertibleMod {
            den: q.denom().to_string(),
            modulus: p,
        });
    }
    let num = q.numer().mod_floor(&modulus).to_u64().unwrap();
    let den = den.to_u64().unwrap();
    Ok(super::fp::mul_mod(num, super::fp::inv_mod(den, p), p))
}

/// Integer-valued lcm of the denominators, used to clear fractions.
pub fn common_denominator<'a>(items: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    items
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Scales a vector by a positive rational to coprime integers (signs are kept).
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<BigInt> {
    let den = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|q| (q * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn scale(&self, q: &Rat) -> Self {
        self * q
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(self / d)
        }
    }
}

impl Scalar for Rat {
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rat(" -8/27 ").unwrap(), rat(-8, 27));
        assert_eq!(parse_rat("12").unwrap(), int(12));
        assert_eq!(parse_rat("3/-6").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn display_is_num_over_den() {
        assert_eq!(rat(4, 3).to_string(), "4/3");
        assert_eq!(int(-2).to_string(), "-2");
    }

    #[test]
    fn mod_p_reduction() {
        assert_eq!(reduce_mod(&rat(1, 2), 5).unwrap(), 3);
        assert_eq!(reduce_mod(&int(-1), 7).unwrap(), 6);
        assert!(reduce_mod(&rat(1, 5), 5).is_err());
    }

    #[test]
    fn primitive_vectors() {
        let v = [rat(-1, 2), rat(1, 2), int(0), rat(3, 4)];
        let p = primitive_integer_vector(&v);
        assert_eq!(p, vec![(-2).into(), 2.into(), 0.into(), 3.into()]);
    }
}
