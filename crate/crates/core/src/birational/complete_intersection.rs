//! The model of `X_(a:b:c:d)` as a complete intersection of two quadrics and
//! a (1,1)-divisor in P³×P³, the line family through `(0:0:0:1)` and its
//! limit.


use super::BirationalError;
use crate::algebra::rat::{int, rat};
use crate::algebra::{MPoly, Rat, Vars};
use crate::invariants::{form_polynomial, g_form, GCoeffs, XY_NAMES};
use crate::strata::ECoeffs;
use crate::QPoly;

pub const UV_NAMES: [&str; 8] = ["u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"];

pub fn uv_vars() -> Vars {
    Vars::new(&UV_NAMES)
}

/// Three equations in `Q[u1..u4, v1..v4]` (possibly with extra parameter
/// variables): the `u`-quadric, the `v`-quadric and the (1,1)-form.
#[derive(Debug, Clone, PartialEq)]
pub struct CIModel {
    pub equations: [QPoly; 3],
}

impl CIModel {
    pub fn vars(&self) -> &Vars {
        self.equations[0].vars()
    }
}

/// `q·u1² + u2u3 − u4²`, the same in `v`, and
/// `k·u1v1 − (b/4)(u2+u3)(v2+v3) − (c/4)(u2−u3)(v2−v3) − a·u4v4`,
/// all over the variable set of the coefficient polynomials.
fn build(q: &QPoly, k: &QPoly, a: &QPoly, b: &QPoly, c: &QPoly) -> CIModel {
    let vars = q.vars().clone();
    let g = |n: &str| -> QPoly { vars.gen(n) };
    let (u1, u2, u3, u4) = (g("u1"), g("u2"), g("u3"), g("u4"));
    let (v1, v2, v3, v4) = (g("v1"), g("v2"), g("v3"), g("v4"));
    let quarter = rat(1, 4);
    let e1 = q * &u1 * &u1 + &u2 * &u3 - &u4 * &u4;
    let e2 = q * &v1 * &v1 + &v2 * &v3 - &v4 * &v4;
    let e3 = k * &u1 * &v1
        - (b * (&u2 + &u3) * (&v2 + &v3)).scale_by(&quarter)
        - (c * (&u2 - &u3) * (&v2 - &v3)).scale_by(&quarter)
        - a * &u4 * &v4;
    CIModel {
        equations: [e1, e2, e3],
    }
}

fn consts(vars: &Vars, xs: &[Rat]) -> Vec<QPoly> {
    xs.iter().map(|x| MPoly::constant(vars, x.clone())).collect()
}

/// The image of `X_(a:b:c:d)` under the Segre-type embedding.
pub fn ci_model(g: &GCoeffs<Rat>) -> Result<CIModel, BirationalError> {
    if g.is_zero() {
        return Err(BirationalError::ZeroOutput);
    }
    let v = uv_vars();
    let k = consts(&v, &g.to_array());
    Ok(build(&MPoly::one(&v), &k[3], &k[0], &k[1], &k[2]))
}

/// `ci_model` with `a, b, c, d` as variables.
pub fn ci_model_symbolic() -> CIModel {
    let v = Vars::new(&[&UV_NAMES[..], &["a", "b", "c", "d"]].concat());
    build(&MPoly::one(&v), &v.gen("d"), &v.gen("a"), &v.gen("b"), &v.gen("c"))
}

/// The model over the line `(sa:sb:sc:1)`, written `u1v1 − s(…)`.
pub fn line_family(e: &ECoeffs, s: &Rat) -> CIModel {
    let v = uv_vars();
    let k = consts(&v, &e.to_array().map(|x| x * s));
    build(&MPoly::one(&v), &MPoly::one(&v), &k[0], &k[1], &k[2])
}

/// The family after `s ↦ s²`, `u1 ↦ s·u1`, `v1 ↦ s·v1`, at parameter `s`.
pub fn family_member(e: &ECoeffs, s: &Rat) -> Result<CIModel, BirationalError> {
    if e.is_zero() {
        return Err(BirationalError::ZeroOutput);
    }
    let v = uv_vars();
    let k = consts(&v, &e.to_array());
    let q = MPoly::constant(&v, s * s);
    Ok(build(&q, &MPoly::one(&v), &k[0], &k[1], &k[2]))
}

/// The degenerate limit `u2u3 − u4² = v2v3 − v4² = 0`,
/// `u1v1 − (b/4)(u2+u3)(v2+v3) − (c/4)(u2−u3)(v2−v3) − a·u4v4 = 0`, built
/// directly rather than as a family member.
pub fn limit_equations(e: &ECoeffs) -> Result<CIModel, BirationalError> {
    if e.is_zero() {
        return Err(BirationalError::ZeroOutput);
    }
    let v = uv_vars();
    let g = |n: &str| -> QPoly { v.gen(n) };
    let [a, b, c] = e.to_array();
    let (u1, u2, u3, u4) = (g("u1"), g("u2"), g("u3"), g("u4"));
    let (v1, v2, v3, v4) = (g("v1"), g("v2"), g("v3"), g("v4"));
    Ok(CIModel {
        equations: [
            &u2 * &u3 - &u4 * &u4,
            &v2 * &v3 - &v4 * &v4,
            &u1 * &v1
                - (&u2 + &u3) * (&v2 + &v3).scale_by(&(b / int(4)))
                - (&u2 - &u3) * (&v2 - &v3).scale_by(&(c / int(4)))
                - (&u4 * &v4).scale_by(&a),
        ],
    })
}

/// Checks, with `a, b, c, s` symbolic, that
/// the reparametrized family at `s = 0` is the limit term for term, and that
/// `s ↦ s², u1 ↦ s·u1, v1 ↦ s·v1` turns the line family into the
/// reparametrized one with its third equation multiplied by `s²`.
pub fn limit_check() -> bool {
    let v = Vars::new(&[&UV_NAMES[..], &["a", "b", "c", "s"]].concat());
    let g = |n: &str| -> QPoly { v.gen(n) };
    let (a, b, c, s) = (g("a"), g("b"), g("c"), g("s"));
    let one = MPoly::one(&v);
    let line = build(&one, &one, &(&s * &a), &(&s * &b), &(&s * &c));
    let repar = build(&(&s * &s), &one, &a, &b, &c);

    let images: Vec<QPoly> = v
        .names()
        .iter()
        .map(|n| match n.as_str() {
            "s" => &s * &s,
            "u1" | "v1" => &s * &g(n),
            _ => g(n),
        })
        .collect();
    let moved: Vec<QPoly> = line
        .equations
        .iter()
        .map(|p| p.compose(&images, &v).expect("same variables"))
        .collect();
    let scaled = moved[0] == repar.equations[0]
        && moved[1] == repar.equations[1]
        && moved[2] == &s * &s * &repar.equations[2];

    let at_zero: Vec<QPoly> = repar
        .equations
        .iter()
        .map(|p| {
            let imgs: Vec<QPoly> = v
                .names()
                .iter()
                .map(|n| if n == "s" { MPoly::zero(&v) } else { g(n) })
                .collect();
            p.compose(&imgs, &v).expect("same variables")
        })
        .collect();
    let symbolic_limit = {
        let (u1, u2, u3, u4) = (g("u1"), g("u2"), g("u3"), g("u4"));
        let (v1, v2, v3, v4) = (g("v1"), g("v2"), g("v3"), g("v4"));
        let quarter = rat(1, 4);
        [
            &u2 * &u3 - &u4 * &u4,
            &v2 * &v3 - &v4 * &v4,
            &u1 * &v1
                - (&b * (&u2 + &u3) * (&v2 + &v3)).scale_by(&quarter)
                - (&c * (&u2 - &u3) * (&v2 - &v3)).scale_by(&quarter)
                - &a * &u4 * &v4,
        ]
    };
    scaled && at_zero.as_slice() == symbolic_limit.as_slice()
}

/// `(x1x2−y1y2 : k·x1y2 : 2x2y1 : x1x2+y1y2)` and the same for `x3, x4`, over
/// the variable set `vars` (which contains `x1..y4`). `k = 2` is the
/// embedding; other values exist to show the identities are rigid.
fn segre_images(vars: &Vars, k: i64) -> Vec<QPoly> {
    let g = |n: &str| -> QPoly { vars.gen(n) };
    let half = |i: usize, j: usize| -> [QPoly; 4] {
        let (xi, yi, xj, yj) = (
            g(&format!("x{i}")),
            g(&format!("y{i}")),
            g(&format!("x{j}")),
            g(&format!("y{j}")),
        );
        [
            &xi * &xj - &yi * &yj,
            (&xi * &yj).scale_by(&int(k)),
            (&xj * &yi).scale_by(&int(2)),
            &xi * &xj + &yi * &yj,
        ]
    };
    half(1, 2).into_iter().chain(half(3, 4)).collect()
}

fn segre_identities_with(k: i64) -> bool {
    let xy = Vars::new(&XY_NAMES);
    let uv = uv_vars();
    let quadric = |u: [&str; 4], w: Option<&QPoly>| -> QPoly {
        let g = |n: &str| -> QPoly { uv.gen(n) };
        let sq = w.map_or_else(|| g(u[0]) * g(u[0]), |c| c * g(u[0]) * g(u[0]));
        sq + g(u[1]) * g(u[2]) - g(u[3]) * g(u[3])
    };
    let q1 = quadric(["u1", "u2", "u3", "u4"], None);
    let mut images = segre_images(&xy, k);
    let first = q1.compose(&images, &xy).expect("eight images").is_zero();

    let st = Vars::new(&["s1", "t1", "w1", "s2", "t2", "w2"]);
    let h = |n: &str| -> QPoly { st.gen(n) };
    images = vec![
        h("w1"),
        h("s1") * h("s1"),
        h("t1") * h("t1"),
        h("s1") * h("t1"),
        h("w2"),
        h("s2") * h("s2"),
        h("t2") * h("t2"),
        h("s2") * h("t2"),
    ];
    let zero = MPoly::zero(&uv);
    let q2 = quadric(["u1", "u2", "u3", "u4"], Some(&zero));
    let q3 = quadric(["v1", "v2", "v3", "v4"], Some(&zero));
    let second = q2.compose(&images, &st).expect("eight images").is_zero()
        && q3.compose(&images, &st).expect("eight images").is_zero();
    first && second
}

/// `u1² + u2u3 − u4²` vanishes on the Segre-type embedding of (P¹)², and
/// `u2u3 − u4²` on the image of P(1,1,2) under `(s,t,w) ↦ (w, s², t², st)`.
pub fn segre_identities() -> bool {
    segre_identities_with(2)
}

/// The (1,1)-equation of `ci_model(a,b,c,d)` pulled back to (P¹)⁴ along the
/// embedding, symbolically in `a, b, c, d`.
pub fn segre_pullback_symbolic() -> QPoly {
    let vars = Vars::new(&[&XY_NAMES[..], &["a", "b", "c", "d"]].concat());
    let model = ci_model_symbolic();
    let mut images = segre_images(&vars, 2);
    images.extend(["a", "b", "c", "d"].map(|n| vars.gen::<Rat>(n)));
    model.equations[2].compose(&images, &vars).expect("twelve images")
}

/// The pull-back of the (1,1)-equation equals `−2·G_(a,b,c,−d)`. The sign of
/// `d` is a coordinate sign change of W(F4), so the model is isomorphic to
/// `X_(a:b:c:d)`.
pub fn segre_pullback_check() -> bool {
    let vars = Vars::new(&[&XY_NAMES[..], &["a", "b", "c", "d"]].concat());
    let g = |n: &str| -> QPoly { vars.gen(n) };
    let coeffs = GCoeffs::new(g("a"), g("b"), g("c"), -g("d"));
    let form = form_polynomial(&g_form(&coeffs).expect("nonzero")).expect("variables contain x1..y4");
    segre_pullback_symbolic() == form.scale_by(&int(-2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segre() {
        assert!(segre_identities());
        assert!(!segre_identities_with(3));
    }

    #[test]
    fn pullback_is_a_multiple_of_the_form() {
        assert!(segre_pullback_check());
    }

    #[test]
    fn limit() {
        assert!(limit_check());
        let e = ECoeffs::from_ints(1, 2, 3);
        assert_eq!(family_member(&e, &int(0)).unwrap(), limit_equations(&e).unwrap());
        assert_ne!(family_member(&e, &int(1)).unwrap(), limit_equations(&e).unwrap());
    }

    #[test]
    fn first_member_has_the_original_quadrics() {
        let e = ECoeffs::from_ints(1, 2, 3);
        let m = family_member(&e, &int(1)).unwrap();
        let v = uv_vars();
        let g = |n: &str| -> QPoly { v.gen(n) };
        assert_eq!(m.equations[0], g("u1") * g("u1") + g("u2") * g("u3") - g("u4") * g("u4"));
        assert_eq!(m.equations[1], g("v1") * g("v1") + g("v2") * g("v3") - g("v4") * g("v4"));
    }

    #[test]
    fn line_family_at_one_is_the_model() {
        let e = ECoeffs::from_ints(2, -1, 5);
        let g = GCoeffs::from_ints(2, -1, 5, 1);
        assert_eq!(line_family(&e, &int(1)), ci_model(&g).unwrap());
    }
}
