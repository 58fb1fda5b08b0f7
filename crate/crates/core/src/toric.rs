//! The toric fan of the K-moduli component and its description as the
//! (1,2,3)-weighted blow-up of P(1,3,4,6).

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

pub type Ray = [i64; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("ray {0:?} is not primitive")]
    NotPrimitive(Ray),
    #[error("cone {0:?} is degenerate")]
    DegenerateCone([usize; 3]),
    #[error("cone {0:?} refers to a missing ray")]
    BadIndex([usize; 3]),
    #[error("cone {0:?} is not a maximal cone of the fan")]
    NoSuchCone([usize; 3]),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fan {
    rays: Vec<Ray>,
    cones: Vec<[usize; 3]>,
}

fn det3(m: [Ray; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

impl Fan {
    /// Checks that rays are primitive and maximal cones are simplicial and
    /// full-dimensional.
    pub fn new(rays: Vec<Ray>, cones: Vec<[usize; 3]>) -> Result<Self, ToricError> {
        for r in &rays {
            if r.iter().fold(0i64, |g, x| g.gcd(x)) != 1 {
                return Err(ToricError::NotPrimitive(*r));
            }
        }
        let fan = Fan { rays, cones };
        for c in &fan.cones {
            if c.iter().any(|&i| i >= fan.rays.len()) {
                return Err(ToricError::BadIndex(*c));
            }
            if fan.det(c) == 0 {
                return Err(ToricError::DegenerateCone(*c));
            }
        }
        Ok(fan)
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn cones(&self) -> &[[usize; 3]] {
        &self.cones
    }

    fn det(&self, c: &[usize; 3]) -> i64 {
        det3(c.map(|i| self.rays[i]))
    }

    /// Maximal cones as sets of ray vectors, independent of labelling.
    pub fn cone_sets(&self) -> BTreeSet<BTreeSet<Ray>> {
        self.cones
            .iter()
            .map(|c| c.iter().map(|&i| self.rays[i]).collect())
            .collect()
    }

    /// Whether `x` lies in the closed cone `c`.
    fn cone_contains(&self, c: &[usize; 3], x: Ray) -> bool {
        let m = c.map(|i| self.rays[i]);
        let d = det3(m);
        // Cramer: the coefficient of ray k is det(m with row k replaced by x) / d.
        (0..3).all(|k| {
            let mut mk = m;
            mk[k] = x;
            let n = det3(mk);
            n == 0 || (n > 0) == (d > 0)
        })
    }
}

/// Rays `v0 = (1,2,3)`, `v1, v2, v3` the unit vectors, `v4 = (−3,−4,−6)`.
pub fn moduli_fan() -> Fan {
    Fan::new(
        vec![[1, 2, 3], [1, 0, 0], [0, 1, 0], [0, 0, 1], [-3, -4, -6]],
        vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [4, 1, 2], [4, 1, 3], [4, 2, 3]],
    )
    .expect("valid fan")
}

/// The fan of P(1,3,4,6): rays `v1, v2, v3, v4` (labels 0..3) and the four
/// cones omitting one ray each.
pub fn p1346_fan() -> Fan {
    Fan::new(
        vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [-3, -4, -6]],
        vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
    )
    .expect("valid fan")
}

/// `|det|` of the cone's rays; the cone is matched as a set.
pub fn cone_multiplicity(f: &Fan, cone: [usize; 3]) -> Result<u64, ToricError> {
    let key: BTreeSet<usize> = cone.into_iter().collect();
    f.cones
        .iter()
        .find(|c| c.iter().copied().collect::<BTreeSet<_>>() == key)
        .map(|c| f.det(c).unsigned_abs())
        .ok_or(ToricError::NoSuchCone(cone))
}

pub fn multiplicities(f: &Fan) -> Vec<u64> {
    f.cones.iter().map(|c| f.det(c).unsigned_abs()).collect()
}

/// Each wall lies in exactly two maximal cones, and `samples` random integer
/// vectors each lie in some cone.
pub fn fan_is_complete_seeded(f: &Fan, samples: usize, seed: u64) -> bool {
    let mut walls: BTreeMap<[usize; 2], usize> = BTreeMap::new();
    for c in &f.cones {
        if f.det(c) == 0 {
            return false;
        }
        for skip in 0..3 {
            let mut w: Vec<usize> = (0..3).filter(|&k| k != skip).map(|k| c[k]).collect();
            w.sort();
            *walls.entry([w[0], w[1]]).or_insert(0) += 1;
        }
    }
    if walls.values().any(|&n| n != 2) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let x: Ray = std::array::from_fn(|_| rng.gen_range(-1000..=1000));
        f.cones.iter().any(|c| f.cone_contains(c, x))
    })
}

pub fn fan_is_complete(f: &Fan) -> bool {
    fan_is_complete_seeded(f, 1000, 0x7041c)
}

/// Inserts `Σ wᵢ·(ray i of the cone)` (made primitive) and replaces the cone
/// by the three cones joining the new ray to its facets.
pub fn star_subdivision(f: &Fan, cone: usize, weights: [i64; 3]) -> Result<Fan, ToricError> {
    let c = *f.cones.get(cone).ok_or(ToricError::NoSuchCone([usize::MAX; 3]))?;
    let mut v: Ray = [0; 3];
    for (k, &i) in c.iter().enumerate() {
        for j in 0..3 {
            v[j] += weights[k] * f.rays[i][j];
        }
    }
    let g = v.iter().fold(0i64, |g, x| g.gcd(x));
    let v = v.map(|x| x / g);
    let mut rays = f.rays.clone();
    let new = rays.len();
    rays.push(v);
    let mut cones: Vec<[usize; 3]> = f.cones.iter().enumerate().filter(|&(i, _)| i != cone).map(|(_, c)| *c).collect();
    for skip in 0..3 {
        let facet: Vec<usize> = (0..3).filter(|&k| k != skip).map(|k| c[k]).collect();
        cones.push([new, facet[0], facet[1]]);
    }
    Fan::new(rays, cones)
}

/// The (1,2,3) star subdivision of cone(v1,v2,v3) in the P(1,3,4,6) fan is
/// the moduli fan.
pub fn star_subdivision_check() -> bool {
    matches!(star_subdivision(&p1346_fan(), 0, [1, 2, 3]), Ok(f) if f.cone_sets() == moduli_fan().cone_sets())
}

/// Exponents of `r⁶, r⁴s, r³t, r²s², rst, s³, t²`.
pub const IDEAL_GENERATORS: [[u32; 3]; 7] = [[6, 0, 0], [4, 1, 0], [3, 0, 1], [2, 2, 0], [1, 1, 1], [0, 3, 0], [0, 0, 2]];

pub fn ideal_weighted_orders(weights: [u32; 3]) -> Vec<u32> {
    IDEAL_GENERATORS
        .iter()
        .map(|e| e.iter().zip(weights).map(|(a, w)| a * w).sum())
        .collect()
}
