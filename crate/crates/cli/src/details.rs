//! JSON renderings for `classify --details`.

use modulilab::birational::{CIModel, LinePair};
use modulilab::strata::{is_singular_1111, is_singular_22, ExpectedLocus, SingularPoint, StrataError};
use modulilab::Rat;
use serde_json::{json, Value};

fn tuple(c: &[Rat]) -> String {
    format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":"))
}

fn point(p: &SingularPoint) -> String {
    let parts: Vec<String> = match p {
        SingularPoint::P1Four(c) => c.iter().map(|x| tuple(x)).collect(),
        SingularPoint::Weighted(c) => c.iter().map(|x| tuple(x)).collect(),
    };
    format!("({})", parts.join(","))
}

/// The catalogued locus, or `null` when none is catalogued; each listed point
/// is re-checked with the Jacobian criterion.
pub fn locus<G: Checker>(found: Result<ExpectedLocus, StrataError>, g: &G) -> Value {
    match found {
        Ok(ExpectedLocus::Points(pts)) => Value::Array(
            pts.iter()
                .map(|p| json!({ "point": point(p), "singular": g.check(p) }))
                .collect(),
        ),
        Ok(ExpectedLocus::Curve { description, .. }) => json!({ "curve": description }),
        Err(_) => Value::Null,
    }
}

pub trait Checker {
    fn check(&self, p: &SingularPoint) -> bool;
}

impl Checker for modulilab::GCoeffs {
    fn check(&self, p: &SingularPoint) -> bool {
        matches!(p, SingularPoint::P1Four(c) if is_singular_1111(self, c).unwrap_or(false))
    }
}

impl Checker for modulilab::strata::ECoeffs {
    fn check(&self, p: &SingularPoint) -> bool {
        matches!(p, SingularPoint::Weighted(c) if is_singular_22(self, c).unwrap_or(false))
    }
}

pub fn model(m: CIModel) -> Value {
    json!(m.equations.iter().map(|e| e.to_string()).collect::<Vec<_>>())
}

pub fn lines(l: &[LinePair; 4]) -> Value {
    json!(l.iter().map(|p| json!({ "f": p.f.to_string(), "g": p.g.to_string() })).collect::<Vec<_>>())
}
