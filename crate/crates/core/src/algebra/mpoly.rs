use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::rat::Rat;
use super::{AlgebraError, Ring, Scalar};

/// Ordered list of variable names shared by a family of polynomials.
#[derive(Clone)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// The generator of the polynomial ring named `name`.
    pub fn var<F: Scalar>(&self, name: &str) -> Result<MPoly<F>, AlgebraError> {
        MPoly::var(self, name)
    }

    /// Shorthand for [`Vars::var`] when the name is known to exist.
    pub fn gen<F: Scalar>(&self, name: &str) -> MPoly<F> {
        self.var(name)
            .unwrap_or_else(|_| panic!("`{name}` is not one of {:?}", self.names()))
    }

    pub fn gens<F: Scalar>(&self) -> Vec<MPoly<F>> {
        (0..self.len()).map(|i| MPoly::var_at(self, i)).collect()
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        Monomial(exps.into())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Box<[u32]>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in a `BTreeMap` under graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug)]
pub struct MPoly<F> {
    vars: Vars,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Scalar> PartialEq for MPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl<F: Scalar> MPoly<F> {
    pub fn zero(vars: &Vars) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: F) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero_elem() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, F::one())
    }

    pub fn from_rat(vars: &Vars, q: &Rat) -> Self {
        Self::constant(vars, F::from_rat(q))
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self, AlgebraError> {
        let i = vars
            .index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(vars, i))
    }

    pub fn var_at(vars: &Vars, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, Monomial::new(e), F::one())
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: F) -> Self {
        assert_eq!(m.0.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero_elem() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms(
        vars: &Vars,
        terms: impl IntoIterator<Item = (Vec<u32>, F)>,
    ) -> Result<Self, AlgebraError> {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(AlgebraError::Parse(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    vars.len()
                )));
            }
            accumulate(&mut acc, Monomial::new(e), c)?;
        }
        Ok(Self::from_map(vars, acc))
    }

    fn from_map(vars: &Vars, acc: HashMap<Monomial, F>) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero_elem()).collect(),
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> + '_ {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, exps: &[u32]) -> F {
        self.terms
            .get(&Monomial::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` if every term has total degree `d`; the zero polynomial gives `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.vars != other.vars {
            return Err(AlgebraError::VariableMismatch {
                left: self.vars.names().to_vec(),
                right: other.vars.names().to_vec(),
            });
        }
        if let (Some((_, a)), Some((_, b))) = (self.terms.iter().next(), other.terms.iter().next()) {
            a.check_compatible(b)?;
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m, c.clone());
        }
        Ok(MPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m, -c.clone());
        }
        Ok(MPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(self.nterms() * other.nterms());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut acc, ma.mul(mb), ca.clone() * cb.clone())?;
            }
        }
        Ok(Self::from_map(&self.vars, acc))
    }

    pub fn scale_by(&self, c: &F) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero_elem())
                .collect(),
        }
    }

    pub fn powi(&self, k: u32) -> Self {
        Ring::pow(self, k)
    }

    /// Formal partial derivative with respect to `var`.
    pub fn partial(&self, var: &str) -> Result<Self, AlgebraError> {
        let i = self
            .vars
            .index(var)
            .ok_or_else(|| AlgebraError::UnknownVariable(var.to_string()))?;
        Ok(self.partial_at(i))
    }

    pub fn partial_at(&self, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            let c = c.clone() * F::from_u64(e as u64);
            if !c.is_zero_elem() {
                terms.insert(Monomial(exps), c);
            }
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Evaluates at a point given in variable order.
    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e > 0 {
                    t = t * Ring::pow(x, e);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes `images[i]` for the `i`-th variable. All images must
    /// share the variable set `target`.
    pub fn compose(&self, images: &[MPoly<F>], target: &Vars) -> Result<Self, AlgebraError> {
        if images.len() != self.vars.len() {
            return Err(AlgebraError::UnboundVariable(
                self.vars
                    .names()
                    .get(images.len())
                    .cloned()
                    .unwrap_or_default(),
            ));
        }
        for img in images {
            if img.vars != *target {
                return Err(AlgebraError::VariableMismatch {
                    left: target.names().to_vec(),
                    right: img.vars.names().to_vec(),
                });
            }
        }
        let mut powers: Vec<Vec<MPoly<F>>> = images.iter().map(|p| vec![MPoly::one(target), p.clone()]).collect();
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().try_mul(&images[i])?;
                    powers[i].push(next);
                }
            }
        }
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.try_mul(&powers[i][e as usize])?;
                }
            }
            for (tm, tc) in t.terms {
                accumulate(&mut acc, tm, tc)?;
            }
        }
        Ok(Self::from_map(target, acc))
    }

    /// Substitution by variable name. Every variable of `self` must be bound;
    /// bindings for variables `self` does not use are ignored.
    pub fn substitute(&self, bindings: &BTreeMap<String, MPoly<F>>) -> Result<Self, AlgebraError> {
        let mut images = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            let img = bindings
                .get(name)
                .ok_or_else(|| AlgebraError::UnboundVariable(name.clone()))?;
            images.push(img.clone());
        }
        let target = match bindings.values().next() {
            Some(p) => p.vars.clone(),
            None => return Ok(self.clone()),
        };
        self.compose(&images, &target)
    }

    /// Re-expresses `self` over a variable set containing all of its variables.
    pub fn embed(&self, target: &Vars) -> Result<Self, AlgebraError> {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| {
                target
                    .index(n)
                    .ok_or_else(|| AlgebraError::UnknownVariable(n.clone()))
            })
            .collect::<Result<_, _>>()?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; target.len()];
                for (k, &x) in m.0.iter().enumerate() {
                    e[map[k]] = x;
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Ok(MPoly {
            vars: target.clone(),
            terms,
        })
    }

    /// Exact quotient `q` with `self = q * d`, or `None` when `d` does not divide `self`.
    ///
    /// Multivariate long division under graded-lex order: the leading term of
    /// a multiple of `d` is always divisible by the leading term of `d`, so a
    /// non-divisible leading remainder term proves indivisibility.
    pub fn divide_exact(&self, d: &Self) -> Result<Option<Self>, AlgebraError> {
        self.check(d)?;
        let (lm_d, lc_d) = d.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let (lm_d, inv_lc) = (lm_d.clone(), lc_d.inv().ok_or(AlgebraError::DivisionByZero)?);
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((lm, lc)) = rem.iter().next_back() {
            let Some(qm) = lm.div(&lm_d) else {
                return Ok(None);
            };
            let qc = lc.clone() * inv_lc.clone();
            for (m, c) in &d.terms {
                add_into(&mut rem, &m.mul(&qm), -(c.clone() * qc.clone()));
            }
            quot.insert(qm, qc);
        }
        Ok(Some(MPoly {
            vars: self.vars.clone(),
            terms: quot,
        }))
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> MPoly<G> {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero_elem())
                .collect(),
        }
    }

    pub fn try_map_coeffs<G: Scalar>(
        &self,
        f: impl Fn(&F) -> Result<G, AlgebraError>,
    ) -> Result<MPoly<G>, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let g = f(c)?;
            if !g.is_zero_elem() {
                terms.insert(m.clone(), g);
            }
        }
        Ok(MPoly {
            vars: self.vars.clone(),
            terms,
        })
    }
}

impl MPoly<Rat> {
    /// Reduction of every coefficient into `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Result<MPoly<super::FpElem>, AlgebraError> {
        self.try_map_coeffs(|c| super::FpElem::from_rat_mod(c, p))
    }
}

fn add_into<F: Scalar>(terms: &mut BTreeMap<Monomial, F>, m: &Monomial, c: F) {
    match terms.get_mut(m) {
        Some(slot) => {
            let s = slot.clone() + c;
            if s.is_zero_elem() {
                terms.remove(m);
            } else {
                *slot = s;
            }
        }
        None => {
            if !c.is_zero_elem() {
                terms.insert(m.clone(), c);
            }
        }
    }
}

fn accumulate<F: Scalar>(acc: &mut HashMap<Monomial, F>, m: Monomial, c: F) -> Result<(), AlgebraError> {
    match acc.get_mut(&m) {
        Some(slot) => {
            slot.check_compatible(&c)?;
            *slot = slot.clone() + c;
        }
        None => {
            acc.insert(m, c);
        }
    }
    Ok(())
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<F: Scalar> $trait for MPoly<F> {
            type Output = MPoly<F>;
            fn $method(self, rhs: MPoly<F>) -> MPoly<F> {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a, F: Scalar> $trait<&'a MPoly<F>> for &'a MPoly<F> {
            type Output = MPoly<F>;
            fn $method(self, rhs: &MPoly<F>) -> MPoly<F> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a, F: Scalar> $trait<&'a MPoly<F>> for MPoly<F> {
            type Output = MPoly<F>;
            fn $method(self, rhs: &MPoly<F>) -> MPoly<F> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a, F: Scalar> $trait<MPoly<F>> for &'a MPoly<F> {
            type Output = MPoly<F>;
            fn $method(self, rhs: MPoly<F>) -> MPoly<F> {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl<F: Scalar> Neg for MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        MPoly {
            vars: self.vars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<'a, F: Scalar> Neg for &'a MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        -self.clone()
    }
}

impl<F: Scalar> Ring for MPoly<F> {
    fn zero_like(&self) -> Self {
        MPoly::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        MPoly::one(&self.vars)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn scale(&self, q: &Rat) -> Self {
        self.scale_by(&F::from_rat(q))
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.divide_exact(d).ok().flatten()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    fn ab() -> (Vars, MPoly<Rat>, MPoly<Rat>) {
        let v = Vars::new(&["a", "b"]);
        let a = v.gen("a");
        let b = v.gen("b");
        (v, a, b)
    }

    #[test]
    fn difference_of_squares() {
        let (_, a, b) = ab();
        assert_eq!((&a + &b) * (&a - &b), &a * &a - &b * &b);
    }

    #[test]
    fn adding_zero_is_identity() {
        let (v, a, b) = ab();
        let p = &a * &b + a.scale(&rat(1, 3));
        assert_eq!(&p + &MPoly::zero(&v), p);
    }

    #[test]
    fn quadric_from_ops() {
        let v = Vars::new(&["u1", "u2", "u3", "u4"]);
        let [u1, u2, u3, u4]: [MPoly<Rat>; 4] = v.gens().try_into().unwrap();
        let q = u1.powi(2) + &u2 * &u3 - u4.powi(2);
        assert_eq!(q.nterms(), 3);
        assert_eq!(q.coefficient(&[0, 0, 0, 2]), int(-1));
        assert_eq!(q.coefficient(&[0, 1, 1, 0]), int(1));
        assert_eq!(q.homogeneous_degree(), Some(2));
    }

    #[test]
    fn zero_terms_are_pruned() {
        let (_, a, b) = ab();
        let p = (&a + &b) - &a - &b;
        assert!(p.is_zero());
        assert_eq!(p.nterms(), 0);
    }

    #[test]
    fn mismatched_variables_error() {
        let (_, a, _) = ab();
        let w = Vars::new(&["x"]);
        let x: MPoly<Rat> = w.gen("x");
        assert!(matches!(a.try_add(&x), Err(AlgebraError::VariableMismatch { .. })));
    }

    #[test]
    fn mismatched_moduli_error() {
        use crate::algebra::FpElem;
        let (_, a, _) = ab();
        let a5 = a.reduce_mod(5).unwrap();
        let a7 = a.reduce_mod(7).unwrap();
        assert!(matches!(a5.try_mul(&a7), Err(AlgebraError::RingMismatch { .. })));
        let _ : MPoly<FpElem> = a5.try_mul(&a5).unwrap();
    }

    #[test]
    fn partial_derivatives() {
        let (v, a, b) = ab();
        let p = a.powi(2) * &b;
        assert_eq!(p.partial("a").unwrap(), (&a * &b).scale(&int(2)));
        let c = MPoly::<Rat>::from_rat(&v, &rat(7, 2));
        assert!(c.partial("a").unwrap().is_zero());
        assert!(matches!(p.partial("z"), Err(AlgebraError::UnknownVariable(_))));

        let w = Vars::new(&["x1", "x2", "x3", "x4"]);
        let g: Vec<MPoly<Rat>> = w.gens();
        let prod = &(&g[0] * &g[1]) * &(&g[2] * &g[3]);
        assert_eq!(prod.partial("x1").unwrap(), &(&g[1] * &g[2]) * &g[3]);
    }

    #[test]
    fn exact_division() {
        let (_, a, b) = ab();
        let q = (a.powi(2) - b.powi(2)).divide_exact(&(&a - &b)).unwrap();
        assert_eq!(q, Some(&a + &b));
        let q = (a.powi(2) + b.powi(2)).divide_exact(&(&a - &b)).unwrap();
        assert_eq!(q, None);
        let cube = (&a - &b).powi(3);
        assert_eq!(cube.divide_exact(&(&a - &b)).unwrap(), Some((&a - &b).powi(2)));
        assert_eq!(cube.divide_exact(&a.zero_like()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn segre_substitutions_vanish() {
        let u = Vars::new(&["u1", "u2", "u3", "u4"]);
        let ug: Vec<MPoly<Rat>> = u.gens();
        let quadric = ug[0].powi(2) + &ug[1] * &ug[2] - ug[3].powi(2);
        let xy = Vars::new(&["x1", "y1", "x2", "y2"]);
        let [x1, y1, x2, y2]: [MPoly<Rat>; 4] = xy.gens().try_into().unwrap();
        let two = int(2);
        let images = [
            &x1 * &x2 - &y1 * &y2,
            (&x1 * &y2).scale(&two),
            (&x2 * &y1).scale(&two),
            &x1 * &x2 + &y1 * &y2,
        ];
        assert!(quadric.compose(&images, &xy).unwrap().is_zero());

        let st = Vars::new(&["s", "t"]);
        let s: MPoly<Rat> = st.gen("s");
        let t: MPoly<Rat> = st.gen("t");
        let cone = &ug[1] * &ug[2] - ug[3].powi(2);
        let mut b = BTreeMap::new();
        b.insert("u1".to_string(), MPoly::zero(&st));
        b.insert("u2".to_string(), s.powi(2));
        b.insert("u3".to_string(), t.powi(2));
        b.insert("u4".to_string(), &s * &t);
        assert!(cone.substitute(&b).unwrap().is_zero());
    }

    #[test]
    fn identity_substitution_and_unbound() {
        let (v, a, b) = ab();
        let p = a.powi(3) + (&a * &b).scale(&rat(-2, 5)) + MPoly::one(&v);
        let mut bind = BTreeMap::new();
        bind.insert("a".to_string(), a.clone());
        bind.insert("b".to_string(), b.clone());
        assert_eq!(p.substitute(&bind).unwrap(), p);
        bind.remove("b");
        assert_eq!(p.substitute(&bind), Err(AlgebraError::UnboundVariable("b".into())));
    }

    #[test]
    fn grlex_order_and_leading_term() {
        let (_, a, b) = ab();
        let p = &a + b.powi(2) + &a * &b;
        let lt = p.leading_term().unwrap().0.exponents().to_vec();
        assert_eq!(lt, vec![1, 1]);
    }

    #[test]
    fn embedding_and_evaluation() {
        let (_, a, b) = ab();
        let big = Vars::new(&["b", "z", "a"]);
        let p = &a * &a - &b;
        let e = p.embed(&big).unwrap();
        assert_eq!(e.eval(&[int(2), int(9), int(3)]), int(7));
        assert_eq!(p.eval(&[int(3), int(2)]), int(7));
    }
}
