//! Canonical text and JSON forms for polynomials.
//!
//! Text form: terms in descending graded-lex order joined by ` + ` / ` - `,
//! each written `coef*x^2*y` with the coefficient omitted when it is 1 and
//! rationals written `num/den`. The zero polynomial is `0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::mpoly::{MPoly, Vars};
use super::rat::parse_rat;
use super::{AlgebraError, Scalar};

impl<F: Scalar> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            for (name, &e) in self.vars().names().iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Parses the canonical text form (or any sum of such terms) over `vars`.
pub fn parse_poly<F: Scalar>(text: &str, vars: &Vars) -> Result<MPoly<F>, AlgebraError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(AlgebraError::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..=bytes.len() {
        let boundary = i == bytes.len()
            || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'*');
        if boundary {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        out.push(parse_term(t, vars)?);
    }
    MPoly::from_terms(vars, out)
}

fn parse_term<F: Scalar>(t: &str, vars: &Vars) -> Result<(Vec<u32>, F), AlgebraError> {
    let (neg, body) = match t.as_bytes()[0] {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    if body.is_empty() {
        return Err(AlgebraError::Parse(format!("dangling sign in `{t}`")));
    }
    let mut coef = super::rat::int(1);
    let mut exps = vec![0u32; vars.len()];
    for factor in body.split('*') {
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            coef *= parse_rat(factor)?;
            continue;
        }
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<u32>()
                    .map_err(|_| AlgebraError::Parse(format!("bad exponent in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        let i = vars
            .index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        exps[i] += e;
    }
    if neg {
        coef = -coef;
    }
    Ok((exps, F::from_rat(&coef)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

/// Structured form `{vars:[...], terms:[{exp:[...], coef:"num/den"}]}`,
/// terms in descending graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl<F: Scalar> From<&MPoly<F>> for PolyJson {
    fn from(p: &MPoly<F>) -> Self {
        PolyJson {
            vars: p.vars().names().to_vec(),
            terms: p
                .terms()
                .rev()
                .map(|(m, c)| TermJson {
                    exp: m.exponents().to_vec(),
                    coef: c.to_string(),
                })
                .collect(),
        }
    }
}

impl PolyJson {
    pub fn to_poly<F: Scalar>(&self) -> Result<MPoly<F>, AlgebraError> {
        let vars = Vars::new(&self.vars);
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exp.clone(), F::from_rat(&parse_rat(&t.coef)?))))
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        MPoly::from_terms(&vars, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, Rat};
    use crate::algebra::Ring;

    fn sample() -> (Vars, MPoly<Rat>) {
        let v = Vars::new(&["a", "b", "c"]);
        let a: MPoly<Rat> = v.gen("a");
        let b: MPoly<Rat> = v.gen("b");
        let c: MPoly<Rat> = v.gen("c");
        let p = a.powi(2) * &b - (&b * &c).scale(&rat(3, 2)) + MPoly::from_rat(&v, &rat(-7, 4)) + c.powi(3);
        (v, p)
    }

    #[test]
    fn canonical_text() {
        let (_, p) = sample();
        assert_eq!(p.to_string(), "a^2*b + c^3 - 3/2*b*c - 7/4");
    }

    #[test]
    fn text_round_trip() {
        let (v, p) = sample();
        let q: MPoly<Rat> = parse_poly(&p.to_string(), &v).unwrap();
        assert_eq!(q, p);
        assert_eq!(q.to_string(), p.to_string());
        let z: MPoly<Rat> = parse_poly("0", &v).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn json_round_trip() {
        let (_, p) = sample();
        let j = PolyJson::from(&p);
        let s = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_poly::<Rat>().unwrap(), p);
        assert_eq!(j.terms[0].exp, vec![2, 1, 0]);
        assert_eq!(j.terms.last().unwrap().coef, "-7/4");
    }

    #[test]
    fn parse_errors() {
        let v = Vars::new(&["a"]);
        assert!(matches!(parse_poly::<Rat>("a + z", &v), Err(AlgebraError::UnknownVariable(_))));
        assert!(parse_poly::<Rat>("a^x", &v).is_err());
        assert!(parse_poly::<Rat>("", &v).is_err());
        let p: MPoly<Rat> = parse_poly("2*a*a - a^2", &v).unwrap();
        assert_eq!(p, v.gen("a").powi(2));
        assert!(p.scale(&rat(0, 1)).is_zero());
    }
}
