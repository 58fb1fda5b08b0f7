use num_traits::Zero;

use super::rat::Rat;
use super::AlgebraError;

/// Power series in `t` truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTrunc {
    coeffs: Vec<Rat>,
}

impl SeriesTrunc {
    pub fn zero(order: usize) -> Self {
        SeriesTrunc {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &SeriesTrunc) -> SeriesTrunc {
        let n = self.coeffs.len().min(other.coeffs.len());
        SeriesTrunc {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }
}

/// `num(t) / den(t)` with coefficient lists in ascending powers of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: Vec<Rat>,
    pub den: Vec<Rat>,
}

impl RationalFunction {
    pub fn new(num: Vec<Rat>, den: Vec<Rat>) -> Self {
        RationalFunction { num, den }
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Self {
        let conv = |v: &[i64]| v.iter().map(|&x| Rat::from_integer(x.into())).collect();
        RationalFunction {
            num: conv(num),
            den: conv(den),
        }
    }

    /// Multiplies the numerator by a constant.
    pub fn scaled(mut self, c: &Rat) -> Self {
        for x in &mut self.num {
            *x = &*x * c;
        }
        self
    }

    /// Taylor expansion at `t = 0` by solving `den * s = num` term by term.
    pub fn expand(&self, order: usize) -> Result<SeriesTrunc, AlgebraError> {
        let d0 = match self.den.first() {
            Some(d) if !d.is_zero() => d.clone(),
            _ => return Err(AlgebraError::ZeroConstantTerm),
        };
        let mut s: Vec<Rat> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.get(n).cloned().unwrap_or_else(Rat::zero);
            for k in 1..=n.min(self.den.len().saturating_sub(1)) {
                acc -= &self.den[k] * &s[n - k];
            }
            s.push(acc / &d0);
        }
        Ok(SeriesTrunc { coeffs: s })
    }
}

/// Expansion of a formal sum of rational functions.
pub fn series_expand(terms: &[RationalFunction], order: usize) -> Result<SeriesTrunc, AlgebraError> {
    let mut acc = SeriesTrunc::zero(order);
    for f in terms {
        acc = acc.add(&f.expand(order)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    fn ints(s: &SeriesTrunc) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|q| {
                assert!(q.is_integer());
                i64::try_from(q.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn geometric() {
        let f = RationalFunction::from_ints(&[1], &[1, -1]);
        assert_eq!(ints(&f.expand(3).unwrap()), vec![1, 1, 1, 1]);
    }

    #[test]
    fn product_of_two_geometric_series() {
        // (1 - t^2)(1 - t^3) = 1 - t^2 - t^3 + t^5
        let f = RationalFunction::from_ints(&[1], &[1, 0, -1, -1, 0, 1]);
        assert_eq!(ints(&f.expand(6).unwrap()), vec![1, 0, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn zero_constant_term_rejected() {
        let f = RationalFunction::from_ints(&[1], &[0, 1]);
        assert_eq!(f.expand(2), Err(AlgebraError::ZeroConstantTerm));
    }

    #[test]
    fn sums_and_scaling() {
        let f = RationalFunction::from_ints(&[1], &[1, -1]).scaled(&int(3));
        let g = RationalFunction::from_ints(&[2, 1], &[1]);
        let s = series_expand(&[f, g], 2).unwrap();
        assert_eq!(ints(&s), vec![5, 4, 3]);
    }
}
