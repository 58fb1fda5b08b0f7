//! Rational grid scans of a plane in the (a:b:c:d) space.

use modulilab::algebra::rat::int;
use modulilab::strata::classify_p3;
use modulilab::{GCoeffs, Rat};
use num_traits::{Signed, Zero};
use serde::Serialize;

/// A plane `k·(a,b,c,d) = 0` with integer coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Plane {
    pub coeffs: [i64; 4],
}

impl Plane {
    /// Parses a linear equation such as `a+b=0`, `2c-d=0` or `a=b`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (lhs, rhs) = s.split_once('=').ok_or_else(|| format!("{s:?}: expected an equation"))?;
        let mut coeffs = linear_form(lhs)?;
        if rhs != "0" {
            for (k, r) in coeffs.iter_mut().zip(linear_form(rhs)?) {
                *k -= r;
            }
        }
        if coeffs.iter().all(|&k| k == 0) {
            return Err(format!("{s:?} is not a plane"));
        }
        Ok(Plane { coeffs })
    }
}

fn linear_form(s: &str) -> Result<[i64; 4], String> {
    let mut out = [0i64; 4];
    let mut rest = s;
    if rest.is_empty() {
        return Err("empty side of the equation".into());
    }
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let var = term.chars().last().ok_or_else(|| format!("empty term in {s:?}"))?;
        let idx = "abcd".find(var).ok_or_else(|| format!("{term:?}: unknown variable"))?;
        let num = term[..term.len() - 1].trim_end_matches('*');
        let k: i64 = if num.is_empty() { 1 } else { num.parse().map_err(|_| format!("{term:?}: bad coefficient"))? };
        out[idx] += sign * k;
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
    pub stratum: String,
}

/// Labels every grid point of the plane whose free coordinates lie in
/// `[-bound, bound]` with the given step. The first variable with a nonzero
/// coefficient is solved for; the other three are the grid coordinates.
pub fn scan(plane: &Plane, step: &Rat, bound: &Rat) -> Result<Vec<ScanRow>, String> {
    if !step.is_positive() || bound.is_negative() {
        return Err("step must be positive and bound nonnegative".into());
    }
    let n = (bound / step).floor().to_integer();
    let n: i64 = n.try_into().map_err(|_| "grid too large".to_string())?;
    if (2 * n + 1).pow(3) > 10_000_000 {
        return Err("grid too large".into());
    }
    let pivot = plane.coeffs.iter().position(|&k| k != 0).expect("nonzero plane");
    let free: Vec<usize> = (0..4).filter(|&i| i != pivot).collect();
    let mut rows = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            for k in -n..=n {
                let mut x = [int(0), int(0), int(0), int(0)];
                for (slot, t) in free.iter().zip([i, j, k]) {
                    x[*slot] = step * int(t);
                }
                let mut acc = Rat::zero();
                for &f in &free {
                    acc += &x[f] * int(plane.coeffs[f]);
                }
                x[pivot] = -acc / int(plane.coeffs[pivot]);
                let g = GCoeffs::from_array(x);
                if g.is_zero() {
                    continue;
                }
                let s = classify_p3(&g).map_err(|e| e.to_string())?;
                let [a, b, c, d] = g.to_array().map(|v| v.to_string());
                rows.push(ScanRow { a, b, c, d, stratum: s.to_string() });
            }
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[ScanRow]) -> String {
    let mut s = String::from("a,b,c,d,stratum\n");
    for r in rows {
        s += &format!("{},{},{},{},{}\n", r.a, r.b, r.c, r.d, r.stratum);
    }
    s
}
