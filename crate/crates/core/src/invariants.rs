//! Degree-(1,1,1,1) forms, the invariants H, L, M, D, R, S, T and the two
//! routes from (a:b:c:d) to P(1,3,4,6).
//!
//! Basis convention: `a_m = x1^i y1^(1-i) x2^j y2^(1-j) x3^k y3^(1-k) x4^l y4^(1-l)`
//! with `m = 8i + 4j + 2k + l`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::rat::{int, rat};
use crate::algebra::series::{series_expand, RationalFunction, SeriesTrunc};
use crate::algebra::{det, AlgebraError, MPoly, Rat, Ring, Scalar, Vars};
use crate::weighted::{WeightError, WeightedPoint, HRST_WEIGHTS};
use crate::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("coefficients are all zero")]
    ZeroInput,
    #[error("expected 4 coefficients, got {0}")]
    Arity(usize),
    #[error("H, R, S, T vanish simultaneously on a nonzero G-form (internal inconsistency)")]
    AllInvariantsZero,
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The 16 coefficients `a_0..a_15` of a (1,1,1,1)-form.
#[derive(Debug, Clone, PartialEq)]
pub struct Form1111<R> {
    pub coeffs: [R; 16],
}

/// Homogeneous coordinates `(a:b:c:d)` of a form in the G-subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct GCoeffs<R = Rat> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

#[derive(Serialize, Deserialize)]
struct GCoeffsJson {
    #[serde(with = "crate::serde_rat::vec")]
    gcoeffs: Vec<Rat>,
}

impl<R: Ring> GCoeffs<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        GCoeffs { a, b, c, d }
    }

    pub fn from_array([a, b, c, d]: [R; 4]) -> Self {
        GCoeffs { a, b, c, d }
    }

    pub fn to_array(&self) -> [R; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.to_array().iter().all(Ring::is_zero_elem)
    }

    /// Coordinates in the basis `(u1, u2, u3, u4)`: `(a, d, b, c)/2`.
    pub fn u_coords(&self) -> [R; 4] {
        let h = rat(1, 2);
        [
            self.a.scale(&h),
            self.d.scale(&h),
            self.b.scale(&h),
            self.c.scale(&h),
        ]
    }

    /// Inverse of [`GCoeffs::u_coords`].
    pub fn from_u_coords(k: [R; 4]) -> Self {
        let two = int(2);
        let [ka, kd, kb, kc] = k;
        GCoeffs {
            a: ka.scale(&two),
            b: kb.scale(&two),
            c: kc.scale(&two),
            d: kd.scale(&two),
        }
    }
}

impl GCoeffs<Rat> {
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        GCoeffs::new(int(a), int(b), int(c), int(d))
    }

    pub fn from_slice(v: &[Rat]) -> Result<Self, InvariantError> {
        let arr: [Rat; 4] = v.to_vec().try_into().map_err(|_| InvariantError::Arity(v.len()))?;
        Ok(GCoeffs::from_array(arr))
    }

    /// Parses `a,b,c,d` with rational entries such as `1,-1,1/2,3`.
    pub fn parse(s: &str) -> Result<Self, InvariantError> {
        Self::from_slice(&crate::serde_rat::parse_list(s)?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GCoeffsJson {
            gcoeffs: self.to_array().to_vec(),
        })
        .expect("rationals serialize")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, InvariantError> {
        let j: GCoeffsJson = serde_json::from_value(v.clone())
            .map_err(|e| InvariantError::Algebra(AlgebraError::Parse(e.to_string())))?;
        Self::from_slice(&j.gcoeffs)
    }
}

/// `(a, b, c, d)` as generators of `Q[a, b, c, d]`.
pub fn symbolic_gcoeffs() -> GCoeffs<QPoly> {
    let v = Vars::new(&["a", "b", "c", "d"]);
    let [a, b, c, d]: [QPoly; 4] = v.gens().try_into().unwrap();
    GCoeffs { a, b, c, d }
}

/// The form `G_{a,b,c,d}`.
pub fn g_form<R: Ring>(g: &GCoeffs<R>) -> Result<Form1111<R>, InvariantError> {
    if g.is_zero() {
        return Err(InvariantError::ZeroInput);
    }
    let h = rat(1, 2);
    let zero = g.a.zero_like();
    let mut coeffs: [R; 16] = std::array::from_fn(|_| zero.clone());
    let ad_plus = (g.a.clone() + g.d.clone()).scale(&h);
    let ad_minus = (g.a.clone() - g.d.clone()).scale(&h);
    let bc_plus = (g.b.clone() + g.c.clone()).scale(&h);
    let bc_minus = (g.b.clone() - g.c.clone()).scale(&h);
    coeffs[0] = ad_plus.clone();
    coeffs[15] = ad_plus;
    coeffs[3] = ad_minus.clone();
    coeffs[12] = ad_minus;
    coeffs[5] = bc_plus.clone();
    coeffs[10] = bc_plus;
    coeffs[6] = bc_minus.clone();
    coeffs[9] = bc_minus;
    Ok(Form1111 { coeffs })
}

/// Names of the (P¹)⁴ coordinates in the order used by [`form_polynomial`].
pub const XY_NAMES: [&str; 8] = ["x1", "y1", "x2", "y2", "x3", "y3", "x4", "y4"];

/// The exponent vector of `a_m` over `XY_NAMES`.
pub fn basis_exponents(m: usize) -> [u32; 8] {
    let mut e = [0; 8];
    for factor in 0..4 {
        let bit = (m >> (3 - factor)) & 1;
        if bit == 1 {
            e[2 * factor] = 1;
        } else {
            e[2 * factor + 1] = 1;
        }
    }
    e
}

/// `Σ a_m · monomial_m` as a polynomial over a variable set that contains
/// `x1..y4`; the coefficients must already live over that set.
pub fn form_polynomial<F: Scalar>(f: &Form1111<MPoly<F>>) -> Result<MPoly<F>, AlgebraError> {
    let vars = f.coeffs[0].vars().clone();
    let gens: Vec<MPoly<F>> = XY_NAMES
        .iter()
        .map(|n| vars.var(n))
        .collect::<Result<_, _>>()?;
    let mut acc = MPoly::zero(&vars);
    for (m, c) in f.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = basis_exponents(m);
        let mut t = c.clone();
        for (k, g) in gens.iter().enumerate() {
            if e[k] == 1 {
                t = t.try_mul(g)?;
            }
        }
        acc = acc.try_add(&t)?;
    }
    Ok(acc)
}

/// Lifts scalar coefficients to constants over the (P¹)⁴ coordinate ring.
pub fn form_polynomial_scalar<F: Scalar>(f: &Form1111<F>) -> MPoly<F> {
    let vars = Vars::new(&XY_NAMES);
    let lifted = Form1111 {
        coeffs: std::array::from_fn(|m| MPoly::constant(&vars, f.coeffs[m].clone())),
    };
    form_polynomial(&lifted).expect("variables are x1..y4")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Invariants<R> {
    pub h: R,
    pub l: R,
    pub m: R,
    pub d: R,
    pub r: R,
    pub s: R,
    pub t: R,
}

impl<R: Ring> Invariants<R> {
    /// `(H, R, S, T)`, a point of P(1,3,4,6) in weight order.
    pub fn hrst(&self) -> [R; 4] {
        [self.h.clone(), self.r.clone(), self.s.clone(), self.t.clone()]
    }
}

pub fn invariants<R: Ring>(f: &Form1111<R>) -> Invariants<R> {
    let a = |i: usize| f.coeffs[i].clone();
    let h = a(0) * a(15) - a(1) * a(14) - a(2) * a(13) + a(3) * a(12) - a(4) * a(11)
        + a(5) * a(10)
        + a(6) * a(9)
        - a(7) * a(8);
    let grid = |rows: [[usize; 4]; 4]| -> Vec<Vec<R>> {
        rows.iter().map(|r| r.iter().map(|&i| a(i)).collect()).collect()
    };
    let l = det(&grid([[0, 4, 8, 12], [1, 5, 9, 13], [2, 6, 10, 14], [3, 7, 11, 15]]))
        .expect("4x4");
    let m = det(&grid([[0, 8, 2, 10], [1, 9, 3, 11], [4, 12, 6, 14], [5, 13, 7, 15]]))
        .expect("4x4");
    let dm = vec![
        vec![
            a(0) * a(9) - a(1) * a(8),
            a(0) * a(11) + a(2) * a(9) - a(1) * a(10) - a(3) * a(8),
            a(2) * a(11) - a(3) * a(10),
        ],
        vec![
            a(0) * a(13) + a(4) * a(9) - a(1) * a(12) - a(5) * a(8),
            a(0) * a(15) + a(2) * a(13) + a(4) * a(11) + a(6) * a(9)
                - a(1) * a(14)
                - a(3) * a(12)
                - a(5) * a(10)
                - a(7) * a(8),
            a(2) * a(15) + a(6) * a(11) - a(3) * a(14) - a(7) * a(10),
        ],
        vec![
            a(4) * a(13) - a(5) * a(12),
            a(4) * a(15) + a(6) * a(13) - a(5) * a(14) - a(7) * a(12),
            a(6) * a(15) - a(7) * a(14),
        ],
    ];
    let d = det(&dm).expect("3x3");
    let (r, s, t) = rst(&h, &l, &m, &d);
    Invariants { h, l, m, d, r, s, t }
}

/// `R`, `S`, `T` as polynomials in `H`, `L`, `M`, `D`.
pub fn rst<R: Ring>(h: &R, l: &R, m: &R, d: &R) -> (R, R, R) {
    let h2 = h.clone() * h.clone();
    let h3 = h2.clone() * h.clone();
    let h4 = h2.clone() * h2.clone();
    let h6 = h4.clone() * h2.clone();
    let lm = l.clone() - m.clone();
    let l2 = l.clone() * l.clone();
    let m2 = m.clone() * m.clone();
    let lxm = l.clone() * m.clone();

    let r = h.clone() * lm.clone() + d.scale(&int(3));

    let s = h4.scale(&rat(1, 12)) - (h2.clone() * l.clone()).scale(&rat(2, 3))
        + (h2.clone() * m.clone()).scale(&rat(2, 3))
        - (h.clone() * d.clone()).scale(&int(2))
        + (l2.clone() + lxm.clone() + m2.clone()).scale(&rat(4, 3));

    let t = h6.scale(&rat(1, 216)) - (h4 * lm.clone()).scale(&rat(1, 18))
        - (h3 * d.clone()).scale(&rat(1, 6))
        + (h2 * (l2.scale(&int(2)) - lxm.clone() + m2.scale(&int(2)))).scale(&rat(1, 9))
        + (h.clone() * lm.clone() * d.clone()).scale(&rat(2, 3))
        - (l2.clone() * l.clone() - m2.clone() * m.clone()).scale(&rat(8, 27))
        - (lxm * lm).scale(&rat(4, 9))
        + d.clone() * d.clone();
    (r, s, t)
}

/// `(H : R : S : T)` on `G_{a,b,c,d}` over any ring.
pub fn quotient_coords<R: Ring>(g: &GCoeffs<R>) -> Result<[R; 4], InvariantError> {
    Ok(invariants(&g_form(g)?).hrst())
}

pub fn quotient_point(g: &GCoeffs<Rat>) -> Result<WeightedPoint, InvariantError> {
    let c = quotient_coords(g)?;
    if c.iter().all(Ring::is_zero_elem) {
        return Err(InvariantError::AllInvariantsZero);
    }
    Ok(WeightedPoint::hrst(c)?)
}

/// A point `(s1 : s2 : s3 : s4)` of P(1,2,3,4).
#[derive(Debug, Clone, PartialEq)]
pub struct SValues<R>(pub [R; 4]);

/// `(a:b:c:d) ↦ (a² : b² : c² : d²)`.
pub fn phi1<R: Ring>(g: &GCoeffs<R>) -> [R; 4] {
    g.to_array().map(|x| x.clone() * x)
}

/// Elementary symmetric functions.
pub fn phi2<R: Ring>(p: &[R; 4]) -> SValues<R> {
    let zero = p[0].zero_like();
    let mut e = [p[0].one_like(), zero.clone(), zero.clone(), zero.clone(), zero];
    for x in p {
        for k in (1..=4).rev() {
            e[k] = e[k].clone() + e[k - 1].clone() * x.clone();
        }
    }
    let [_, s1, s2, s3, s4] = e;
    SValues([s1, s2, s3, s4])
}

/// P(1,2,3,4) → P(1,3,4,6).
pub fn phi3<R: Ring>(s: &SValues<R>) -> [R; 4] {
    let [s1, s2, s3, s4] = s.0.clone();
    let s1_2 = s1.clone() * s1.clone();
    let s1_3 = s1_2.clone() * s1.clone();
    let s2_2 = s2.clone() * s2.clone();
    let w1 = s1.scale(&rat(1, 2));
    let w3 = (s1_3 - (s1.clone() * s2.clone()).scale(&int(4)) + s3.scale(&int(24))).scale(&rat(1, 32));
    let w4 = (s4.scale(&int(12)) + s2_2.clone() - (s1.clone() * s3.clone()).scale(&int(3))).scale(&rat(1, 12));
    let w6 = ((s1_2 * s4.clone()).scale(&int(27)) - (s2.clone() * s4).scale(&int(72))
        + (s2_2 * s2.clone()).scale(&int(2))
        - (s1 * s2 * s3.clone()).scale(&int(9))
        + (s3.clone() * s3).scale(&int(27)))
    .scale(&rat(1, 432));
    [w1, w3, w4, w6]
}

pub fn phi_chain_coords<R: Ring>(g: &GCoeffs<R>) -> Result<[R; 4], InvariantError> {
    if g.is_zero() {
        return Err(InvariantError::ZeroInput);
    }
    Ok(phi3(&phi2(&phi1(g))))
}

pub fn phi_chain(g: &GCoeffs<Rat>) -> Result<WeightedPoint, InvariantError> {
    Ok(WeightedPoint::hrst(phi_chain_coords(g)?)?)
}

/// The image of the 4A1 stratum,
/// `((t+1)/2 : (t+1)(t−1)²/32 : t²/12 : t³/216)`; `(0:0:1:d)` lands at `t = d²`.
pub fn four_a1_curve_point(t: &Rat) -> WeightedPoint {
    let one = int(1);
    let tm = t - &one;
    let tp = t + &one;
    WeightedPoint::hrst([
        &tp * rat(1, 2),
        &tp * &tm * &tm * rat(1, 32),
        t * t * rat(1, 12),
        t * t * t * rat(1, 216),
    ])
    .expect("first coordinate has weight 1 and the point is nonzero")
}

/// Weights of the quotient map's target.
pub fn hrst_weights() -> [u32; 4] {
    HRST_WEIGHTS
}

/// `Π_{i<j} (pᵢ − pⱼ)` with `p = (a², b², c², d²)`.
pub fn square_difference_product<R: Ring>(g: &GCoeffs<R>) -> R {
    let p = phi1(g);
    let mut acc = p[0].one_like();
    for i in 0..4 {
        for j in i + 1..4 {
            acc = acc * (p[i].clone() - p[j].clone());
        }
    }
    acc
}

/// Both sides of the Molien identity for the S₃-action on `C[L, M]`:
/// `(1/6)[1/(1−t)² + 3/(1−t²) + 2/(1+t+t²)]` and `1/((1−t²)(1−t³))`.
pub fn molien_series(order: usize) -> (SeriesTrunc, SeriesTrunc) {
    let sixth = rat(1, 6);
    let lhs = [
        RationalFunction::from_ints(&[1], &[1, -2, 1]).scaled(&sixth),
        RationalFunction::from_ints(&[3], &[1, 0, -1]).scaled(&sixth),
        RationalFunction::from_ints(&[2], &[1, 1, 1]).scaled(&sixth),
    ];
    let rhs = [RationalFunction::from_ints(&[1], &[1, 0, -1, -1, 0, 1])];
    (
        series_expand(&lhs, order).expect("constant terms are 1"),
        series_expand(&rhs, order).expect("constant terms are 1"),
    )
}

pub fn molien_check(order: usize) -> bool {
    let (l, r) = molien_series(order);
    l == r
}
