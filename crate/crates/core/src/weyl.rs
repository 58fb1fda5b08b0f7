//! The groups W(D4) ⊂ W(F4) acting on the G-subspace, and orbits on P³.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::rat::{int, rat};
use crate::algebra::{det, Rat, Ring};
use crate::invariants::GCoeffs;

/// Closure larger than this means the generators were mistranscribed.
pub const GENERATION_BOUND: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator {0} is not invertible")]
    Singular(usize),
    #[error("closure exceeded {0} elements")]
    TooLarge(usize),
    #[error("-I is not in the group")]
    NoCenter,
    #[error("the zero vector is not a projective point")]
    ZeroVector,
}

type Mat = [[Rat; 4]; 4];

/// A 4x4 rational matrix acting on the coefficient vector `(a, d, b, c)/2`
/// of a form written in the basis `u1..u4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    matrix: Mat,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Rat::one() } else { Rat::zero() })),
        }
    }

    pub fn from_matrix(matrix: Mat) -> Self {
        GroupElement { matrix }
    }

    /// The coefficient action of the substitution `u_i ↦ Σ_j s[i][j] u_j`,
    /// which is the transpose of `s`.
    pub fn from_substitution(s: &Mat) -> Self {
        GroupElement {
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| s[j][i].clone())),
        }
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..4).fold(Rat::zero(), |acc, k| acc + &self.matrix[i][k] * &other.matrix[k][j])
            })
        });
        GroupElement { matrix: m }
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement {
            matrix: self.matrix.clone().map(|r| r.map(|x| -x)),
        }
    }

    pub fn det(&self) -> Rat {
        let rows: Vec<Vec<Rat>> = self.matrix.iter().map(|r| r.to_vec()).collect();
        det(&rows).expect("4x4")
    }

    /// Representative of `{M, -M}` whose first nonzero entry is positive.
    pub fn sign_normalized(&self) -> GroupElement {
        let first = self.matrix.iter().flatten().find(|x| !x.is_zero());
        match first {
            Some(x) if x.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Entries in `{0, ±1, ±1/2}` and determinant `±1`.
    pub fn is_well_formed(&self) -> bool {
        let allowed = [int(0), int(1), int(-1), rat(1, 2), rat(-1, 2)];
        self.matrix.iter().flatten().all(|x| allowed.contains(x)) && self.det().abs().is_one()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.matrix
                .iter()
                .map(|r| r.iter().map(|x| serde_json::Value::String(x.to_string())).collect())
                .collect(),
        )
    }

    /// Applies the element to `(a:b:c:d)` through the `u`-basis dictionary.
    pub fn act<R: Ring>(&self, x: &GCoeffs<R>) -> GCoeffs<R> {
        let k = x.u_coords();
        let out: [R; 4] = std::array::from_fn(|i| {
            (0..4).fold(k[0].zero_like(), |acc, j| {
                if self.matrix[i][j].is_zero() {
                    acc
                } else {
                    acc + k[j].scale(&self.matrix[i][j])
                }
            })
        });
        GCoeffs::from_u_coords(out)
    }
}

fn sub(rows: [[i64; 4]; 4]) -> GroupElement {
    GroupElement::from_substitution(&rows.map(|r| r.map(int)))
}

/// Generators of W(D4), with the names used in reports.
pub fn gamma0_generators_named() -> Vec<(&'static str, GroupElement)> {
    vec![
        ("negate-u1-u2", sub([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])),
        ("swap-u1-u2", sub([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])),
        ("cycle-u", sub([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])),
    ]
}

/// Generators of W(F4): those of W(D4), the `u4` sign change and the
/// Hadamard-type transformation.
pub fn gamma_generators_named() -> Vec<(&'static str, GroupElement)> {
    let h = rat(1, 2);
    let mh = rat(-1, 2);
    let hadamard = GroupElement::from_substitution(&[
        [h.clone(), h.clone(), h.clone(), h.clone()],
        [h.clone(), h.clone(), mh.clone(), mh.clone()],
        [h.clone(), mh.clone(), h.clone(), mh.clone()],
        [h.clone(), mh.clone(), mh, h],
    ]);
    let mut g = gamma0_generators_named();
    g.push(("negate-u4", sub([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])));
    g.push(("hadamard", hadamard));
    g
}

pub fn gamma0_generators() -> Vec<GroupElement> {
    gamma0_generators_named().into_iter().map(|(_, g)| g).collect()
}

pub fn gamma_generators() -> Vec<GroupElement> {
    gamma_generators_named().into_iter().map(|(_, g)| g).collect()
}

/// A finite matrix group, or its image modulo `±I` when `projective`.
///
/// Projective elements are stored sign-normalized.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    elements: Vec<GroupElement>,
    generators: Vec<GroupElement>,
    projective: bool,
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        let g = if self.projective { g.sign_normalized() } else { g.clone() };
        self.elements.contains(&g)
    }
}

/// Closure of `gens` under multiplication by breadth-first search.
pub fn generate(gens: &[GroupElement]) -> Result<MatrixGroup, GroupError> {
    closure(gens, false)
}

fn closure(gens: &[GroupElement], projective: bool) -> Result<MatrixGroup, GroupError> {
    for (i, g) in gens.iter().enumerate() {
        if g.det().is_zero() {
            return Err(GroupError::Singular(i));
        }
    }
    let norm = |g: GroupElement| if projective { g.sign_normalized() } else { g };
    let id = GroupElement::identity();
    let mut seen: HashMap<GroupElement, ()> = HashMap::new();
    let mut elements = vec![id.clone()];
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = norm(x.mul(g));
            if seen.contains_key(&y) {
                continue;
            }
            if elements.len() >= GENERATION_BOUND {
                return Err(GroupError::TooLarge(GENERATION_BOUND));
            }
            seen.insert(y.clone(), ());
            elements.push(y.clone());
            queue.push_back(y);
        }
    }
    Ok(MatrixGroup {
        elements,
        generators: gens.to_vec(),
        projective,
    })
}

/// The image of `group` in `PGL_4`, one representative per `{M, -M}`.
pub fn project_mod_center(group: &MatrixGroup) -> Result<MatrixGroup, GroupError> {
    if !group.contains(&GroupElement::identity().neg()) {
        return Err(GroupError::NoCenter);
    }
    let reps: BTreeSet<GroupElement> = group.elements.iter().map(GroupElement::sign_normalized).collect();
    let mut elements: Vec<GroupElement> = Vec::with_capacity(reps.len());
    elements.push(GroupElement::identity());
    elements.extend(reps.into_iter().filter(|g| *g != GroupElement::identity()));
    Ok(MatrixGroup {
        elements,
        generators: group.generators.iter().map(GroupElement::sign_normalized).collect(),
        projective: true,
    })
}

/// Scales so that the first nonzero coordinate is 1.
pub fn normalize(x: &GCoeffs<Rat>) -> Result<GCoeffs<Rat>, GroupError> {
    let arr = x.to_array();
    let pivot = arr.iter().find(|c| !c.is_zero()).ok_or(GroupError::ZeroVector)?.clone();
    Ok(GCoeffs::from_array(arr.map(|c| c / &pivot)))
}

/// `act(g, x)`, projectively normalized.
pub fn act(g: &GroupElement, x: &GCoeffs<Rat>) -> Result<GCoeffs<Rat>, GroupError> {
    normalize(&g.act(x))
}

/// The orbit as a sorted set of normalized points.
pub fn orbit(group: &MatrixGroup, x: &GCoeffs<Rat>) -> Result<Vec<GCoeffs<Rat>>, GroupError> {
    normalize(x)?;
    let mut pts: BTreeSet<[Rat; 4]> = BTreeSet::new();
    for g in &group.elements {
        pts.insert(act(g, x)?.to_array());
    }
    Ok(pts.into_iter().map(GCoeffs::from_array).collect())
}

/// Elements fixing the projective point `x`.
pub fn stabilizer(group: &MatrixGroup, x: &GCoeffs<Rat>) -> Result<MatrixGroup, GroupError> {
    let nx = normalize(x)?;
    let mut elements = Vec::new();
    for g in &group.elements {
        if act(g, x)? == nx {
            elements.push(g.clone());
        }
    }
    Ok(MatrixGroup {
        generators: elements.clone(),
        elements,
        projective: group.projective,
    })
}

/// The twelve points `(1:0:0:0), …, (0:0:0:1), (1:±1:±1:±1)`, sorted.
pub fn reducible_points() -> Vec<GCoeffs<Rat>> {
    let mut pts: BTreeSet<[Rat; 4]> = BTreeSet::new();
    for i in 0..4 {
        pts.insert(std::array::from_fn(|j| if i == j { int(1) } else { int(0) }));
    }
    for s in 0..8 {
        let sg = |bit: i32| if s >> bit & 1 == 1 { int(-1) } else { int(1) };
        pts.insert([int(1), sg(0), sg(1), sg(2)]);
    }
    pts.into_iter().map(GCoeffs::from_array).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GCoeffs {
        GCoeffs::from_ints(a, b, c, d)
    }

    fn named(name: &str) -> GroupElement {
        gamma_generators_named()
            .into_iter()
            .find(|(n, _)| *n == name)
            .unwrap()
            .1
    }

    #[test]
    fn generator_actions() {
        assert_eq!(named("negate-u4").act(&g(1, 2, 3, 4)), g(1, 2, -3, 4));
        assert_eq!(named("negate-u1-u2").act(&g(1, 2, 3, 4)), g(-1, 2, 3, -4));
        assert_eq!(act(&named("hadamard"), &g(0, 0, 0, 1)).unwrap(), g(1, -1, -1, 1));
        assert_eq!(act(&GroupElement::identity(), &g(1, 2, 3, 4)).unwrap(), normalize(&g(1, 2, 3, 4)).unwrap());
    }

    #[test]
    fn trivial_groups() {
        assert_eq!(generate(&[GroupElement::identity()]).unwrap().order(), 1);
        let pm = generate(&[GroupElement::identity().neg()]).unwrap();
        assert_eq!(pm.order(), 2);
        assert_eq!(project_mod_center(&pm).unwrap().order(), 1);
        let one = generate(&[GroupElement::identity()]).unwrap();
        assert_eq!(project_mod_center(&one).unwrap_err(), GroupError::NoCenter);
    }

    #[test]
    fn singular_generator_rejected() {
        let z = GroupElement::from_matrix(std::array::from_fn(|_| std::array::from_fn(|_| int(0))));
        assert_eq!(generate(&[z]).unwrap_err(), GroupError::Singular(0));
    }

    #[test]
    fn weyl_d4_order() {
        assert_eq!(generate(&gamma0_generators()).unwrap().order(), 192);
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(normalize(&g(0, 0, 0, 0)).unwrap_err(), GroupError::ZeroVector);
    }

    #[test]
    fn reducible_point_list() {
        let pts = reducible_points();
        assert_eq!(pts.len(), 12);
        assert!(pts.contains(&g(1, -1, 1, -1)));
    }
}
