//! Brute-force singular-point counts over `F_p` by the Jacobian criterion.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{classify_p3_in, ECoeffs, StrataError};
use crate::algebra::fp::{inv_mod, is_odd_prime, mul_mod};
use crate::algebra::rat::{primitive_integer_vector, reduce_mod};
use crate::algebra::{FpElem, Rat};
use crate::birational::limit_equations;
use crate::invariants::{form_polynomial_scalar, g_form, GCoeffs};
use crate::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingReport {
    pub prime: u64,
    pub count: u64,
    /// Singular points by affine chart. For (P¹)⁴ the key has one letter per
    /// factor naming the coordinate set to 1; for P³×P³ it is `u<i>v<j>`
    /// with `i`, `j` the first nonzero coordinates.
    pub per_chart: BTreeMap<String, u64>,
    /// Stratum of the reduction mod `p`, when the classifier applies over `F_p`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_stratum: Option<String>,
}

/// A polynomial with coefficients reduced to residues.
struct FlatPoly {
    terms: Vec<(Vec<u32>, u64)>,
    p: u64,
}

impl FlatPoly {
    fn new(f: &QPoly, p: u64) -> Result<Self, StrataError> {
        let terms = f
            .terms()
            .map(|(m, c)| Ok((m.exponents().to_vec(), reduce_mod(c, p)?)))
            .filter(|t| !matches!(t, Ok((_, 0))))
            .collect::<Result<_, StrataError>>()?;
        Ok(FlatPoly { terms, p })
    }

    fn eval(&self, pt: &[u64]) -> u64 {
        let p = self.p;
        self.terms.iter().fold(0, |acc, (e, c)| {
            let t = e
                .iter()
                .zip(pt)
                .fold(*c, |t, (&k, &x)| (0..k).fold(t, |t, _| mul_mod(t, x, p)));
            (acc + t) % p
        })
    }
}

fn check_prime(p: u64) -> Result<(), StrataError> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(StrataError::NotOddPrime(p))
    }
}

/// Rejects coefficients with a denominator divisible by `p`, then returns
/// the primitive integer representative so the reduction is never zero.
fn reducible_representative(xs: &[Rat], p: u64) -> Result<Vec<Rat>, StrataError> {
    for x in xs {
        reduce_mod(x, p)?;
    }
    Ok(primitive_integer_vector(xs)
        .into_iter()
        .map(Rat::from_integer)
        .collect())
}

/// Singular `F_p`-points of `X_(a:b:c:d) ⊂ (P¹)⁴`.
///
/// Each factor point is written `(1:y)` or `(0:1)`; in the first chart the
/// local derivative is `∂/∂y`, in the second `∂/∂x`.
pub fn oracle_count_1111(g: &GCoeffs<Rat>, p: u64) -> Result<SingReport, StrataError> {
    check_prime(p)?;
    if g.is_zero() {
        return Err(StrataError::ZeroInput);
    }
    let rep = GCoeffs::from_slice(&reducible_representative(&g.to_array(), p)?)?;
    let reduced: [FpElem; 4] = rep
        .to_array()
        .iter()
        .map(|x| FpElem::from_rat_mod(x, p))
        .collect::<Result<Vec<_>, _>>()?
        .try_into()
        .expect("four coefficients");
    let reduced_stratum = classify_p3_in(&reduced).ok().map(|s| s.to_string());

    let f = form_polynomial_scalar(&g_form(&rep)?);
    let eqn = FlatPoly::new(&f, p)?;
    let partials: Vec<FlatPoly> = (0..8)
        .map(|i| FlatPoly::new(&f.partial_at(i), p))
        .collect::<Result<_, _>>()?;

    // Factor points: index p is (0:1), index y < p is (1:y).
    let factor = |i: u64| if i == p { [0, 1] } else { [1, i] };
    let singular: Vec<String> = (0..(p + 1).pow(4))
        .into_par_iter()
        .filter_map(|n| {
            let idx = [n % (p + 1), n / (p + 1) % (p + 1), n / (p + 1).pow(2) % (p + 1), n / (p + 1).pow(3)];
            let pt: Vec<u64> = idx.iter().flat_map(|&i| factor(i)).collect();
            if eqn.eval(&pt) != 0 {
                return None;
            }
            let sing = (0..4).all(|k| {
                let local = if idx[k] == p { 2 * k } else { 2 * k + 1 };
                partials[local].eval(&pt) == 0
            });
            sing.then(|| idx.iter().map(|&i| if i == p { 'y' } else { 'x' }).collect())
        })
        .collect();
    Ok(report(p, singular, reduced_stratum))
}

fn report(p: u64, keys: Vec<String>, reduced_stratum: Option<String>) -> SingReport {
    let mut per_chart = BTreeMap::new();
    for k in &keys {
        *per_chart.entry(k.clone()).or_insert(0) += 1;
    }
    SingReport {
        prime: p,
        count: keys.len() as u64,
        per_chart,
        reduced_stratum,
    }
}

/// Points of P³(F_p) normalized so the first nonzero coordinate is 1.
fn projective_points(p: u64, n: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        for code in 0..p.pow(free as u32) {
            let mut v = vec![0; n];
            v[lead] = 1;
            let mut c = code;
            for x in v.iter_mut().skip(lead + 1) {
                *x = c % p;
                c /= p;
            }
            out.push(v);
        }
    }
    out
}

fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&x| mul_mod(x, inv, p)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Singular `F_p`-points of the degenerate 3-fold `X_(a:b:c)` in its
/// P³×P³ model: points on all three equations where the 3×8 Jacobian has
/// rank below 3.
pub fn oracle_count_22(e: &ECoeffs, p: u64) -> Result<SingReport, StrataError> {
    check_prime(p)?;
    if e.is_zero() {
        return Err(StrataError::ZeroInput);
    }
    let rep = reducible_representative(&e.to_array(), p)?;
    let rep = ECoeffs::new(rep[0].clone(), rep[1].clone(), rep[2].clone());
    let model = limit_equations(&rep).map_err(|_| StrataError::ZeroInput)?;
    let eqs: Vec<FlatPoly> = model
        .equations
        .iter()
        .map(|f| FlatPoly::new(f, p))
        .collect::<Result<_, _>>()?;
    let jac: Vec<Vec<FlatPoly>> = model
        .equations
        .iter()
        .map(|f| (0..8).map(|i| FlatPoly::new(&f.partial_at(i), p)).collect())
        .collect::<Result<_, _>>()?;

    let cone: Vec<Vec<u64>> = projective_points(p, 4)
        .into_iter()
        .filter(|u| (mul_mod(u[1], u[2], p) + p - mul_mod(u[3], u[3], p)) % p == 0)
        .collect();
    let lead = |v: &[u64]| v.iter().position(|&x| x != 0).unwrap() + 1;
    let singular: Vec<String> = cone
        .par_iter()
        .flat_map_iter(|u| {
            cone.iter().filter_map(|v| {
                let pt: Vec<u64> = u.iter().chain(v).copied().collect();
                if eqs[2].eval(&pt) != 0 {
                    return None;
                }
                let rows = jac.iter().map(|r| r.iter().map(|d| d.eval(&pt)).collect()).collect();
                (rank_mod(rows, p) < 3).then(|| format!("u{}v{}", lead(u), lead(v)))
            })
        })
        .collect();
    Ok(report(p, singular, None))
}
