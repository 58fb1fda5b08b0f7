//! Four lines in P³ permuted by (Z/2)³, the map χ to (P¹)⁴ and the
//! coefficient formulas of its image.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::BirationalError;
use crate::algebra::rat::{int, rat};
use crate::algebra::{MPoly, Rat, Ring, Scalar, Vars};
use crate::invariants::{basis_exponents, g_form, Form1111, GCoeffs};
use crate::QPoly;

/// `z0..z3` followed by `c0..c3`.
pub fn zc_vars() -> Vars {
    Vars::new(&["z0", "z1", "z2", "z3", "c0", "c1", "c2", "c3"])
}

/// A point `(c0:c1:c2:c3)` of P³.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPoint(pub [Rat; 4]);

impl CPoint {
    pub fn from_ints(c: [i64; 4]) -> Self {
        CPoint(c.map(int))
    }

    pub fn parse(s: &str) -> Result<Self, BirationalError> {
        let v = crate::serde_rat::parse_list(s)?;
        let n = v.len();
        Ok(CPoint(v.try_into().map_err(|_| BirationalError::Arity(n))?))
    }

    /// Constants over `vars`.
    pub fn lift(&self, vars: &Vars) -> [QPoly; 4] {
        self.0.clone().map(|c| MPoly::constant(vars, c))
    }
}

/// `c0..c3` as generators over [`zc_vars`].
pub fn symbolic_c() -> [QPoly; 4] {
    let v = zc_vars();
    ["c0", "c1", "c2", "c3"].map(|n| v.gen(n))
}

/// Linear forms `f`, `g` in `z0..z3` cutting out one line.
#[derive(Debug, Clone, PartialEq)]
pub struct LinePair {
    pub f: QPoly,
    pub g: QPoly,
}

/// The eight forms `f1, g1, …, f4, g4` for coefficients over a variable set
/// containing `z0..z3`.
pub fn line_forms(c: &[QPoly; 4]) -> [LinePair; 4] {
    let vars = c[0].vars().clone();
    let z: [QPoly; 4] = ["z0", "z1", "z2", "z3"].map(|n| vars.gen(n));
    let [c0, c1, c2, c3] = c;
    let p = c0 * c0 - c2 * c2;
    let q = c2 * c3 - c0 * c1;
    let r = c1 * c2 - c0 * c3;
    let lin = |k: [&QPoly; 4]| -> QPoly {
        k.iter()
            .zip(&z)
            .fold(MPoly::zero(&vars), |acc, (coef, zi)| acc + *coef * zi)
    };
    let zero = MPoly::zero(&vars);
    let (mp, mq, mr) = (-&p, -&q, -&r);
    [
        LinePair {
            f: lin([&q, &p, &r, &zero]),
            g: lin([&r, &zero, &q, &p]),
        },
        LinePair {
            f: lin([&p, &q, &zero, &r]),
            g: lin([&zero, &r, &p, &q]),
        },
        LinePair {
            f: lin([&p, &mq, &zero, &mr]),
            g: lin([&zero, &mr, &p, &mq]),
        },
        LinePair {
            f: lin([&q, &mp, &r, &zero]),
            g: lin([&r, &zero, &q, &mp]),
        },
    ]
}

/// The four lines through a rational point, with coefficients as constants
/// over [`zc_vars`].
pub fn lines_from_c(c: &CPoint) -> Result<[LinePair; 4], BirationalError> {
    let [c0, _, c2, _] = &c.0;
    if c0 * c0 == c2 * c2 {
        return Err(BirationalError::DegenerateLines);
    }
    Ok(line_forms(&c.lift(&zc_vars())))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Discriminants<R> {
    pub d12: R,
    pub d13: R,
    pub d14: R,
    /// `(c0²+c1²−c2²−c3²)(c0²−c1²−c2²+c3²)(c0c1−c2c3)(c0c3−c1c2)`; its
    /// vanishing puts the four lines on a quadric.
    pub quadric_product: R,
}

impl<R: Ring> Discriminants<R> {
    /// Pairwise disjointness of the lines.
    pub fn lines_disjoint(&self) -> bool {
        !self.d12.is_zero_elem() && !self.d13.is_zero_elem() && !self.d14.is_zero_elem()
    }

    /// Exactly two of `D12, D13, D14` vanish: each line meets exactly two others.
    pub fn two_intersections_each(&self) -> bool {
        [&self.d12, &self.d13, &self.d14].iter().filter(|d| d.is_zero_elem()).count() == 2
    }
}

pub fn discriminants<R: Ring>(c: &[R; 4]) -> Discriminants<R> {
    let [c0, c1, c2, c3] = c.clone();
    let sq = |x: R| x.clone() * x;
    let d12 = (sq(c0.clone() + c1.clone()) - sq(c2.clone() + c3.clone()))
        * (sq(c0.clone() - c1.clone()) - sq(c2.clone() - c3.clone()));
    let d13 = (sq(c0.clone() - c2.clone()) + sq(c1.clone() - c3.clone()))
        * (sq(c0.clone() + c2.clone()) + sq(c1.clone() + c3.clone()));
    let d14 = (sq(c0.clone()) - sq(c2.clone())) * (sq(c1.clone()) - sq(c3.clone()));
    let q = quadric_factors(c);
    let quadric_product = q[0].clone() * q[1].clone() * q[2].clone() * q[3].clone();
    Discriminants {
        d12,
        d13,
        d14,
        quadric_product,
    }
}

/// `(A, B, C, E) = (c0c3−c1c2, c0²−c1²−c2²+c3², c0²+c1²−c2²−c3², c0c1−c2c3)`.
fn quadric_factors<R: Ring>(c: &[R; 4]) -> [R; 4] {
    let [c0, c1, c2, c3] = c.clone();
    let sq = |x: &R| x.clone() * x.clone();
    [
        c0.clone() * c3.clone() - c1.clone() * c2.clone(),
        sq(&c0) - sq(&c1) - sq(&c2) + sq(&c3),
        sq(&c0) + sq(&c1) - sq(&c2) - sq(&c3),
        c0 * c1 - c2 * c3,
    ]
}

/// Coefficients `(a, b, c, d)` of the closure of the image of χ, read off
/// from its quadrilinear equation
/// `4A²(x1x2x3x4+y1y2y3y4) − B²(x1x2y3y4+x3x4y1y2) + C²(x1x3y2y4+x2x4y1y3) − 4E²(x1x4y2y3+x2x3y1y4)`.
pub fn abcd_from_c<R: Ring>(c: &[R; 4]) -> GCoeffs<R> {
    let [a_, b_, c_, e_] = quadric_factors(c).map(|x| x.clone() * x);
    let four = int(4);
    GCoeffs::new(
        a_.scale(&four) - b_.clone(),
        c_.clone() - e_.scale(&four),
        c_ + e_.scale(&four),
        a_.scale(&four) + b_,
    )
}

/// The coefficient formulas as typeset next to the equation, including the
/// second summand of `d` without its square. Kept to document that this `d`
/// does not reproduce the equation.
pub fn abcd_as_printed<R: Ring>(c: &[R; 4]) -> GCoeffs<R> {
    let d12 = discriminants(c).d12;
    let [qa, qb, qc, qe] = quadric_factors(c);
    let four = int(4);
    GCoeffs::new(
        -d12.clone(),
        d12,
        qc.clone() * qc + (qe.clone() * qe).scale(&four),
        (qa.clone() * qa).scale(&four) + qb,
    )
}

/// `Σ a_m Π_k (f_k or g_k)`: the form pulled back along `x_k ↦ f_k, y_k ↦ g_k`.
pub fn pull_back_form<F: Scalar>(form: &Form1111<MPoly<F>>, images: &[(MPoly<F>, MPoly<F>); 4]) -> MPoly<F> {
    let vars = images[0].0.vars().clone();
    let mut acc = MPoly::zero(&vars);
    for (m, coef) in form.coeffs.iter().enumerate() {
        if coef.is_zero() {
            continue;
        }
        let e = basis_exponents(m);
        let mut t = coef.clone();
        for k in 0..4 {
            let img = if e[2 * k] == 1 { &images[k].0 } else { &images[k].1 };
            t = &t * img;
        }
        acc = acc + t;
    }
    acc
}

/// The pull-back of `G_{abcd_from_c(c)}` along χ for symbolic `c`.
pub fn chi_pullback_symbolic() -> QPoly {
    let c = symbolic_c();
    chi_pullback(&line_forms(&c), &c)
}

fn chi_pullback(lines: &[LinePair; 4], c: &[QPoly; 4]) -> QPoly {
    let form = g_form(&abcd_from_c(c)).expect("symbolic coefficients are nonzero");
    let images = lines.clone().map(|l| (l.f, l.g));
    pull_back_form(&form, &images)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiReport {
    pub vanishes: bool,
    /// Terms of the expanded pull-back (symbolic mode) or samples tested.
    pub size: usize,
}

/// Whether χ lands on `X_(abcd_from_c(c))`.
///
/// Symbolic mode expands the pull-back over `Q[z, c]` and checks for the zero
/// polynomial; fast mode evaluates at `samples` random rational points.
pub fn verify_chi_vanishing(symbolic: bool, samples: usize, seed: u64) -> ChiReport {
    if symbolic {
        let p = chi_pullback_symbolic();
        return ChiReport {
            vanishes: p.is_zero(),
            size: p.nterms(),
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || rat(rng.gen_range(-20..=20), rng.gen_range(1..=9));
    let pts: Vec<[Rat; 8]> = (0..samples).map(|_| std::array::from_fn(|_| draw())).collect();
    ChiReport {
        vanishes: pts.iter().all(|pt| chi_value(&line_forms(&symbolic_c()), pt).is_zero()),
        size: samples,
    }
}

/// The pull-back evaluated at one point `(z0..z3, c0..c3)`, for a possibly
/// modified set of line forms.
pub fn chi_value(lines: &[LinePair; 4], point: &[Rat; 8]) -> Rat {
    let c: [Rat; 4] = std::array::from_fn(|i| point[4 + i].clone());
    let form = match g_form(&abcd_from_c(&c)) {
        Ok(f) => f,
        Err(_) => return Rat::zero(),
    };
    let vals: [(Rat, Rat); 4] = std::array::from_fn(|k| (lines[k].f.eval(point), lines[k].g.eval(point)));
    let mut acc = Rat::zero();
    for (m, coef) in form.coeffs.iter().enumerate() {
        let e = basis_exponents(m);
        let mut t = coef.clone();
        for (k, v) in vals.iter().enumerate() {
            t *= if e[2 * k] == 1 { &v.0 } else { &v.1 };
        }
        acc += t;
    }
    acc
}

/// The three identities around ρ and σ:
/// `Q∘ρ = 0`, `(a+b)∘σ = Q` and `Q` vanishes on the P¹×P¹ parametrization,
/// where `Q = x² − y² − z² + t²`.
pub fn rho_sigma_identities() -> [bool; 3] {
    let qf = |x: &QPoly, y: &QPoly, z: &QPoly, t: &QPoly| x * x - y * y - z * z + t * t;

    let zv = Vars::new(&["z0", "z1", "z2", "z3"]);
    let [z0, z1, z2, z3]: [QPoly; 4] = zv.gens().try_into().unwrap();
    let two = int(2);
    let rho = [
        (&z0 * &z3 - &z1 * &z2).scale(&two),
        &z0 * &z0 - &z1 * &z1 - &z2 * &z2 + &z3 * &z3,
        (&z0 * &z1 - &z2 * &z3).scale(&two),
        &z0 * &z0 + &z1 * &z1 - &z2 * &z2 - &z3 * &z3,
    ];
    let first = qf(&rho[0], &rho[1], &rho[2], &rho[3]).is_zero();

    let xv = Vars::new(&["x", "y", "z", "t"]);
    let [x, y, z, t]: [QPoly; 4] = xv.gens().try_into().unwrap();
    let sigma = [&x * &x - &y * &y, &t * &t - &z * &z, &z * &z + &t * &t, &x * &x + &y * &y];
    let second = &sigma[0] + &sigma[1] == qf(&x, &y, &z, &t);

    let sv = Vars::new(&["s1", "t1", "s2", "t2"]);
    let [s1, t1, s2, t2]: [QPoly; 4] = sv.gens().try_into().unwrap();
    let param = [
        &s1 * &s2 + &t1 * &t2,
        &s1 * &t2 + &s2 * &t1,
        &s1 * &s2 - &t1 * &t2,
        &s1 * &t2 - &s2 * &t1,
    ];
    let third = qf(&param[0], &param[1], &param[2], &param[3]).is_zero();
    [first, second, third]
}

/// `σ∘ρ`, which equals [`abcd_from_c`].
pub fn sigma_rho<R: Ring>(c: &[R; 4]) -> GCoeffs<R> {
    let [a_, b_, c_, e_] = quadric_factors(c);
    let two = int(2);
    let (x, y, z, t) = (a_.scale(&two), b_, e_.scale(&two), c_);
    let sq = |v: &R| v.clone() * v.clone();
    GCoeffs::new(sq(&x) - sq(&y), sq(&t) - sq(&z), sq(&z) + sq(&t), sq(&x) + sq(&y))
}

/// The coefficient point of `abcd_from_c` at a rational `c`, divided by the
/// gcd of its integer entries; errors if all four vanish.
pub fn abcd_primitive(c: &CPoint) -> Result<GCoeffs<Rat>, BirationalError> {
    let g = abcd_from_c(&c.0);
    if g.is_zero() {
        return Err(BirationalError::ZeroOutput);
    }
    let v = crate::algebra::rat::primitive_integer_vector(&g.to_array());
    Ok(GCoeffs::from_array(std::array::from_fn(|i| Rat::from_integer(v[i].clone()))))
}
