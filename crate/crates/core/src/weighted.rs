//! Points of weighted projective spaces and their equality test.

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Rat, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weight vectors differ: {0:?} vs {1:?}")]
    WeightMismatch(Vec<u32>, Vec<u32>),
    #[error("{weights} weights for {coords} coordinates")]
    Length { weights: usize, coords: usize },
    #[error("weights must be positive")]
    NonPositiveWeight,
    #[error("all coordinates are zero")]
    ZeroPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedPoint {
    pub weights: Vec<u32>,
    #[serde(with = "crate::serde_rat::vec")]
    pub coords: Vec<Rat>,
}

/// Weights of P(1,3,4,6), the target of `(H:R:S:T)`.
pub const HRST_WEIGHTS: [u32; 4] = [1, 3, 4, 6];

impl WeightedPoint {
    pub fn new(weights: Vec<u32>, coords: Vec<Rat>) -> Result<Self, WeightError> {
        if weights.len() != coords.len() {
            return Err(WeightError::Length {
                weights: weights.len(),
                coords: coords.len(),
            });
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(WeightError::NonPositiveWeight);
        }
        if coords.iter().all(Zero::is_zero) {
            return Err(WeightError::ZeroPoint);
        }
        Ok(WeightedPoint { weights, coords })
    }

    pub fn hrst(coords: [Rat; 4]) -> Result<Self, WeightError> {
        Self::new(HRST_WEIGHTS.to_vec(), coords.to_vec())
    }

    /// `(λ^w₀ x₀ : … : λ^wₙ xₙ)`, the same point.
    pub fn rescale(&self, lambda: &Rat) -> Self {
        let coords = self
            .coords
            .iter()
            .zip(&self.weights)
            .map(|(x, &w)| x * Ring::pow(lambda, w))
            .collect();
        WeightedPoint {
            weights: self.weights.clone(),
            coords,
        }
    }
}

/// Exponent vectors `e` with `Σ eᵢ wᵢ = degree`, in lexicographic order.
pub fn weighted_monomials(weights: &[u32], degree: u32) -> Vec<Vec<u32>> {
    fn go(weights: &[u32], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        match weights.split_first() {
            None => {
                if left == 0 {
                    out.push(cur.clone());
                }
            }
            Some((&w, rest)) => {
                for e in 0..=left / w {
                    cur.push(e);
                    go(rest, left - e * w, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(weights, degree, &mut Vec::new(), &mut out);
    out
}

pub fn lcm_weights(weights: &[u32]) -> u32 {
    weights.iter().fold(1, |acc, &w| acc.lcm(&w))
}

/// All monomials of weighted degree `lcm(weights)` evaluated at `coords`.
pub fn veronese<R: Ring>(weights: &[u32], coords: &[R]) -> Vec<R> {
    let deg = lcm_weights(weights);
    let one = coords[0].one_like();
    let powers: Vec<Vec<R>> = coords
        .iter()
        .zip(weights)
        .map(|(x, &w)| {
            let mut p = vec![one.clone()];
            for _ in 0..deg / w {
                let next = p.last().unwrap().clone() * x.clone();
                p.push(next);
            }
            p
        })
        .collect();
    weighted_monomials(weights, deg)
        .into_iter()
        .map(|e| {
            e.iter()
                .enumerate()
                .fold(one.clone(), |acc, (i, &k)| acc * powers[i][k as usize].clone())
        })
        .collect()
}

/// Weighted-projective equality over an integral domain: the Veronese
/// vectors are nonzero and proportional.
///
/// Proportionality is tested against one pivot entry, which over a domain is
/// equivalent to the vanishing of all 2x2 minors.
pub fn wp_equal_in<R: Ring>(weights: &[u32], p: &[R], q: &[R]) -> bool {
    if p == q {
        return p.iter().any(|x| !x.is_zero_elem());
    }
    let u = veronese(weights, p);
    let v = veronese(weights, q);
    let Some(k) = u.iter().position(|x| !x.is_zero_elem()) else {
        return false;
    };
    if v[k].is_zero_elem() {
        return false;
    }
    u.iter()
        .zip(&v)
        .all(|(ui, vi)| u[k].clone() * vi.clone() == v[k].clone() * ui.clone())
}

pub fn wp_equal(p: &WeightedPoint, q: &WeightedPoint) -> Result<bool, WeightError> {
    if p.weights != q.weights {
        return Err(WeightError::WeightMismatch(p.weights.clone(), q.weights.clone()));
    }
    for x in [p, q] {
        if x.coords.len() != x.weights.len() {
            return Err(WeightError::Length {
                weights: x.weights.len(),
                coords: x.coords.len(),
            });
        }
        if x.coords.iter().all(Zero::is_zero) {
            return Err(WeightError::ZeroPoint);
        }
    }
    Ok(wp_equal_in(&p.weights, &p.coords, &q.coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    fn hrst(c: [Rat; 4]) -> WeightedPoint {
        WeightedPoint::hrst(c).unwrap()
    }

    #[test]
    fn rescaled_points_agree() {
        let p = hrst([int(1), int(0), rat(1, 12), rat(1, 216)]);
        let q = hrst([int(2), int(0), rat(4, 3), rat(8, 27)]);
        assert!(wp_equal(&p, &q).unwrap());
        assert_eq!(p.rescale(&int(2)), q);
    }

    #[test]
    fn distinct_points() {
        let p = hrst([int(1), int(0), int(0), int(0)]);
        let q = hrst([int(0), int(0), int(0), int(1)]);
        assert!(!wp_equal(&p, &q).unwrap());
        let one = hrst([int(1), int(1), int(1), int(1)]);
        assert!(wp_equal(&one, &one).unwrap());
    }

    #[test]
    fn root_of_unity_scaling_is_detected() {
        // (1:1:1:1) and (1:-1:1:1) agree coordinatewise up to a power but are
        // distinct points: λ=-1 flips the weight-3 coordinate only together
        // with the weight-1 coordinate.
        let p = hrst([int(1), int(1), int(1), int(1)]);
        let q = hrst([int(1), int(-1), int(1), int(1)]);
        assert!(!wp_equal(&p, &q).unwrap());
        // λ=-1 itself: (1:1:1:1) ~ (-1:-1:1:1).
        let r = hrst([int(-1), int(-1), int(1), int(1)]);
        assert!(wp_equal(&p, &r).unwrap());
        // (0:0:1:1) and (0:0:1:-1) are equal through λ=i over the algebraic closure.
        let s = hrst([int(0), int(0), int(1), int(1)]);
        let t = hrst([int(0), int(0), int(1), int(-1)]);
        assert!(wp_equal(&s, &t).unwrap());
    }

    #[test]
    fn monomial_count_for_hrst() {
        let m = weighted_monomials(&HRST_WEIGHTS, 12);
        assert!(m.iter().all(|e| e[0] + 3 * e[1] + 4 * e[2] + 6 * e[3] == 12));
        assert_eq!(m.len(), 16);
    }

    #[test]
    fn errors() {
        let p = hrst([int(1), int(0), int(0), int(0)]);
        let q = WeightedPoint::new(vec![1, 2], vec![int(1), int(1)]).unwrap();
        assert!(matches!(wp_equal(&p, &q), Err(WeightError::WeightMismatch(..))));
        assert_eq!(
            WeightedPoint::new(vec![1, 2], vec![int(0), int(0)]),
            Err(WeightError::ZeroPoint)
        );
    }

    #[test]
    fn json_shape() {
        let p = hrst([int(2), int(0), rat(4, 3), rat(8, 27)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"weights":[1,3,4,6],"coords":["2","0","4/3","8/27"]}"#);
        let back: WeightedPoint = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
