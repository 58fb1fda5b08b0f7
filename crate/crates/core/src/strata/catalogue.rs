//! The explicit singular-point lists for the normal forms that have one.

use num_traits::Zero;

use super::{classify_e, classify_p3, ECoeffs, StrataError, StratumE, StratumP3};
use crate::algebra::rat::int;
use crate::algebra::matrix::det;
use crate::algebra::Rat;
use crate::birational::limit_equations;
use crate::invariants::{form_polynomial_scalar, g_form, GCoeffs};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularPoint {
    /// `((x1:y1), …, (x4:y4))` in (P¹)⁴.
    P1Four([[Rat; 2]; 4]),
    /// `((s1:t1:w1), (s2:t2:w2))` in P(1,1,2)².
    Weighted([[Rat; 3]; 2]),
}

#[derive(Debug, Clone)]
pub enum ExpectedLocus {
    Points(Vec<SingularPoint>),
    /// A rational curve given by a parametrization `(u:v) ↦ point`.
    Curve {
        description: &'static str,
        parametrization: fn(&Rat, &Rat) -> SingularPoint,
    },
}

impl ExpectedLocus {
    pub fn points(&self) -> Option<&[SingularPoint]> {
        match self {
            ExpectedLocus::Points(p) => Some(p),
            ExpectedLocus::Curve { .. } => None,
        }
    }
}

fn p1(coords: [[i64; 2]; 4]) -> SingularPoint {
    SingularPoint::P1Four(coords.map(|c| c.map(int)))
}

fn wt(coords: [[i64; 3]; 2]) -> SingularPoint {
    SingularPoint::Weighted(coords.map(|c| c.map(int)))
}

fn curv_1111(u: &Rat, v: &Rat) -> SingularPoint {
    let a = [u.clone(), v.clone()];
    let b = [v.clone(), u.clone()];
    SingularPoint::P1Four([a.clone(), b.clone(), a, b])
}

fn no_list(what: impl std::fmt::Display) -> StrataError {
    StrataError::NoCatalogue(what.to_string())
}

/// Singular points of `X_(a:-a:c:d)` for the normal forms that have a list.
///
/// Every point here passes [`is_singular_1111`]; two points of the commonly
/// quoted lists do not (one in the generic case, one for `(0:0:1:1)`) and
/// are replaced by the points the Jacobian criterion actually finds.
pub fn expected_singular_points(g: &GCoeffs<Rat>) -> Result<ExpectedLocus, StrataError> {
    if !(&g.a + &g.b).is_zero() {
        return Err(no_list("a point outside the plane a+b=0"));
    }
    let stratum = classify_p3(g)?;
    let (a, c, d) = (&g.a, &g.c, &g.d);
    match stratum {
        StratumP3::TwoA1 => Ok(ExpectedLocus::Points(vec![
            p1([[1, -1], [1, -1], [1, -1], [1, -1]]),
            p1([[1, 1], [1, 1], [1, 1], [1, 1]]),
        ])),
        StratumP3::SixA1 if a.is_zero() && c == d => Ok(ExpectedLocus::Points(vec![
            p1([[1, -1], [1, -1], [1, 1], [1, 1]]),
            p1([[1, 1], [1, 1], [1, 1], [1, 1]]),
            p1([[1, 1], [1, -1], [1, -1], [1, 1]]),
            p1([[1, -1], [1, 1], [1, 1], [1, -1]]),
            p1([[1, -1], [1, -1], [1, -1], [1, -1]]),
            p1([[1, 1], [1, 1], [1, -1], [1, -1]]),
        ])),
        StratumP3::FourA1 if a.is_zero() && !c.is_zero() => Ok(ExpectedLocus::Points(vec![
            p1([[1, -1], [1, -1], [1, 1], [1, 1]]),
            p1([[1, 1], [1, 1], [1, 1], [1, 1]]),
            p1([[1, -1], [1, -1], [1, -1], [1, -1]]),
            p1([[1, 1], [1, 1], [1, -1], [1, -1]]),
        ])),
        StratumP3::Curv if a == c => Ok(ExpectedLocus::Curve {
            description: "((u:v),(v:u),(u:v),(v:u))",
            parametrization: curv_1111,
        }),
        s => Err(no_list(format!("stratum {s} at this point of the plane a+b=0"))),
    }
}

fn curve_e1(u: &Rat, v: &Rat) -> SingularPoint {
    SingularPoint::Weighted([[u.clone(), v.clone(), Rat::zero()], [-v.clone(), u.clone(), Rat::zero()]])
}
fn curve_e2(u: &Rat, v: &Rat) -> SingularPoint {
    SingularPoint::Weighted([[u.clone(), v.clone(), Rat::zero()], [u.clone(), -v.clone(), Rat::zero()]])
}
fn curve_e3(u: &Rat, v: &Rat) -> SingularPoint {
    SingularPoint::Weighted([[u.clone(), v.clone(), Rat::zero()], [v.clone(), u.clone(), Rat::zero()]])
}
fn curve_e4(u: &Rat, v: &Rat) -> SingularPoint {
    SingularPoint::Weighted([[u.clone(), v.clone(), Rat::zero()], [u.clone(), v.clone(), Rat::zero()]])
}

/// `Sing(X_(a:b:c)) ∖ (C1 ∪ C2)` where it is defined over the rationals.
pub fn expected_singular_points_e(e: &ECoeffs) -> Result<ExpectedLocus, StrataError> {
    let stratum = classify_e(e)?;
    let pts = |v: Vec<[[i64; 3]; 2]>| Ok(ExpectedLocus::Points(v.into_iter().map(wt).collect()));
    match stratum {
        StratumE::Base => Ok(ExpectedLocus::Points(Vec::new())),
        StratumE::CurvPlus => {
            let (description, parametrization): (&'static str, fn(&Rat, &Rat) -> SingularPoint) =
                if e.is_proportional_to([1, 1, 1]) {
                    ("w1=w2=s1s2+t1t2=0", curve_e1)
                } else if e.is_proportional_to([1, 1, -1]) {
                    ("w1=w2=s1t2+t1s2=0", curve_e2)
                } else if e.is_proportional_to([1, -1, -1]) {
                    ("w1=w2=s1s2-t1t2=0", curve_e3)
                } else {
                    ("w1=w2=s1t2-t1s2=0", curve_e4)
                };
            Ok(ExpectedLocus::Curve {
                description,
                parametrization,
            })
        }
        StratumE::FourA1Plus if e.is_proportional_to([1, 0, 0]) => pts(vec![
            [[1, 0, 0], [1, 0, 0]],
            [[1, 0, 0], [0, 1, 0]],
            [[0, 1, 0], [1, 0, 0]],
            [[0, 1, 0], [0, 1, 0]],
        ]),
        StratumE::FourA1Plus if e.is_proportional_to([0, 0, 1]) => pts(vec![
            [[1, 1, 0], [1, 1, 0]],
            [[1, 1, 0], [1, -1, 0]],
            [[1, -1, 0], [1, 1, 0]],
            [[1, -1, 0], [1, -1, 0]],
        ]),
        StratumE::TwoA1Plus => {
            let [a, b, c] = e.to_array();
            if (&b + &c).is_zero() {
                pts(vec![[[1, 0, 0], [1, 0, 0]], [[0, 1, 0], [0, 1, 0]]])
            } else if b == c {
                pts(vec![[[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0]]])
            } else if a == b {
                pts(vec![[[1, 1, 0], [1, -1, 0]], [[1, -1, 0], [1, 1, 0]]])
            } else if (&a + &b).is_zero() {
                pts(vec![[[1, 1, 0], [1, 1, 0]], [[1, -1, 0], [1, -1, 0]]])
            } else {
                Err(no_list("a²=c²: the singular points are defined over Q(i)"))
            }
        }
        StratumE::FourA1Plus => Err(no_list("(0:1:0): the singular points are defined over Q(i)")),
    }
}

/// Jacobian criterion over Q at a point of (P¹)⁴: all eight partials of the
/// form vanish (Euler's relation then gives the form itself).
pub fn is_singular_1111(g: &GCoeffs<Rat>, pt: &[[Rat; 2]; 4]) -> Result<bool, StrataError> {
    let f = form_polynomial_scalar(&g_form(g)?);
    let x: Vec<Rat> = pt.iter().flatten().cloned().collect();
    Ok((0..8).all(|i| f.partial_at(i).eval(&x).is_zero()))
}

/// A point of P(1,1,2)² in the P³×P³ model, `(s,t,w) ↦ (w, s², t², st)`.
pub fn weighted_to_uv(pt: &[[Rat; 3]; 2]) -> [Rat; 8] {
    let img = |[s, t, w]: &[Rat; 3]| [w.clone(), s * s, t * t, s * t];
    let [u, v] = [img(&pt[0]), img(&pt[1])];
    std::array::from_fn(|i| if i < 4 { u[i].clone() } else { v[i - 4].clone() })
}

/// Jacobian criterion over Q on the limit complete intersection: the point
/// lies on all three equations and every 3×3 minor of the Jacobian vanishes.
pub fn is_singular_22(e: &ECoeffs, pt: &[[Rat; 3]; 2]) -> Result<bool, StrataError> {
    let model = limit_equations(e).map_err(|_| StrataError::ZeroInput)?;
    let x = weighted_to_uv(pt);
    if model.equations.iter().any(|f| !f.eval(&x).is_zero()) {
        return Ok(false);
    }
    let jac: Vec<Vec<Rat>> = model
        .equations
        .iter()
        .map(|f| (0..8).map(|i| f.partial_at(i).eval(&x)).collect())
        .collect();
    for i in 0..8 {
        for j in i + 1..8 {
            for k in j + 1..8 {
                let minor: Vec<Vec<Rat>> = jac.iter().map(|r| vec![r[i].clone(), r[j].clone(), r[k].clone()]).collect();
                if !det(&minor)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
