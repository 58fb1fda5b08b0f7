mod details;
mod output;
mod scan;
mod verify;

use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use modulilab::birational::lines::abcd_primitive;
use modulilab::birational::{ci_model, discriminants, lines_from_c, CPoint};
use modulilab::invariants::{g_form, invariants, quotient_point, symbolic_gcoeffs};
use modulilab::stability::{nemuro_bound, preset, preset_report, presets, Preset};
use modulilab::strata::{classify_e, classify_p3, expected_singular_points, expected_singular_points_e, oracle_count_1111, oracle_count_22, ECoeffs};
use modulilab::toric::{fan_is_complete, ideal_weighted_orders, moduli_fan, multiplicities, star_subdivision_check};
use modulilab::weyl::{gamma_generators, generate, orbit, project_mod_center, stabilizer};
use modulilab::GCoeffs;
use serde_json::{json, Value};

use output::{print_value, OutputFormat};

/// Default sampling seed; `MODULILAB_SEED` overrides it.
const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Parser, Debug)]
#[command(name = "modulilab", version, about = "Exact computations on the W(F4)-symmetric (1,1,1,1) divisors of (P1)^4")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Emit JSON instead of an aligned table.
    #[arg(long, global = true)]
    json: bool,
    /// Primes for commands that sweep several.
    #[arg(long, global = true, value_delimiter = ',', default_value = "5,7")]
    primes: Vec<u64>,
    /// Truncation order of the Molien series check.
    #[arg(long, global = true, default_value_t = 20)]
    series_order: usize,
    /// Print wall-clock time to standard error.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Singularity stratum of (a:b:c:d) or of (a:b:c) on the exceptional plane.
    Classify(ClassifyArgs),
    /// The invariants H, L, M, D, R, S, T.
    Invariants {
        #[arg(long, allow_hyphen_values = true)]
        gcoeffs: Option<String>,
        /// Print them as polynomials in a, b, c, d.
        #[arg(long)]
        symbolic: bool,
    },
    /// (H : R : S : T) in P(1,3,4,6).
    Quotient {
        #[arg(long, allow_hyphen_values = true)]
        gcoeffs: String,
    },
    /// Orbit under W(F4)/<-1>.
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        gcoeffs: String,
    },
    /// Stabilizer in W(F4)/<-1>.
    Stabilizer {
        #[arg(long, allow_hyphen_values = true)]
        gcoeffs: String,
    },
    /// Singular F_p-points by brute force.
    OracleCount {
        #[command(flatten)]
        point: PointArgs,
        /// A single prime; otherwise every prime in --primes.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// S-value and beta for a named divisor, or the Nemuro bound ("nemuro").
    Beta {
        #[arg(long)]
        preset: Option<String>,
    },
    /// The moduli fan with its checks.
    Fan {
        #[arg(long, default_value = "all")]
        check: FanCheck,
    },
    /// Run a verification suite; exit 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: verify::Suite,
        /// Expand the map chi symbolically instead of sampling.
        #[arg(long)]
        symbolic: bool,
        #[arg(long, allow_hyphen_values = true)]
        cpoint: Option<String>,
    },
    /// Stratum labels on a rational grid in a plane of P^3, as CSV.
    StrataScan {
        #[arg(long, default_value = "a+b=0")]
        plane: String,
        #[arg(long, default_value = "1/10")]
        step: String,
        /// Grid coordinates range over [-bound, bound].
        #[arg(long, default_value = "1")]
        bound: String,
    },
}

#[derive(clap::Args, Debug)]
#[group(id = "point", required = true, multiple = false)]
struct PointArgs {
    #[arg(long, allow_hyphen_values = true)]
    gcoeffs: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    ecoeffs: Option<String>,
}

#[derive(clap::Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Line parameters c0,c1,c2,c3; classifies the (a:b:c:d) they determine.
    #[arg(long, allow_hyphen_values = true, group = "point")]
    cpoint: Option<String>,
    /// Add the catalogued singular points and the model equations.
    #[arg(long)]
    details: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FanCheck {
    All,
    Complete,
    Subdivision,
    Multiplicities,
}

/// Bad input: maps to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    anyhow::Error::new(Usage(e.to_string()))
}

fn gcoeffs(s: &str) -> Result<GCoeffs> {
    let g = GCoeffs::parse(s).map_err(usage)?;
    if g.is_zero() {
        return Err(usage("--gcoeffs must not be all zero"));
    }
    Ok(g)
}

fn ecoeffs(s: &str) -> Result<ECoeffs> {
    let e = ECoeffs::parse(s).map_err(usage)?;
    if e.is_zero() {
        return Err(usage("--ecoeffs must not be all zero"));
    }
    Ok(e)
}

fn seed() -> Result<u64> {
    match std::env::var("MODULILAB_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| usage(format!("MODULILAB_SEED={s:?} is not a 64-bit integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn points(v: &[GCoeffs]) -> Value {
    Value::Array(v.iter().map(|g| json!(g.to_array().map(|x| x.to_string()))).collect())
}

fn invariants_json<R: std::fmt::Display>(i: &modulilab::Invariants<R>) -> Value {
    json!({
        "H": i.h.to_string(), "L": i.l.to_string(), "M": i.m.to_string(), "D": i.d.to_string(),
        "R": i.r.to_string(), "S": i.s.to_string(), "T": i.t.to_string(),
    })
}

/// Computes the result of one verb and whether it counts as a pass.
fn run(cli: &Cli) -> Result<(Value, bool)> {
    Ok(match &cli.verb {
        Verb::Classify(ClassifyArgs { point: p, cpoint, details }) => {
            let mut v = match (&p.gcoeffs, &p.ecoeffs, cpoint) {
                (Some(g), _, _) => {
                    let g = gcoeffs(g)?;
                    let mut v = json!({ "stratum": classify_p3(&g)?.to_string() });
                    if *details {
                        v["singular_points"] = details::locus(expected_singular_points(&g), &g);
                        v["model"] = details::model(ci_model(&g)?);
                    }
                    v
                }
                (_, Some(e), _) => {
                    let e = ecoeffs(e)?;
                    let mut v = json!({ "stratum": classify_e(&e)?.to_string() });
                    if *details {
                        v["singular_points"] = details::locus(expected_singular_points_e(&e), &e);
                    }
                    v
                }
                (_, _, Some(c)) => {
                    let c = CPoint::parse(c).map_err(usage)?;
                    let g = abcd_primitive(&c)?;
                    let mut v = json!({ "gcoeffs": points(&[g.clone()])[0], "stratum": classify_p3(&g)?.to_string() });
                    if *details {
                        v["lines"] = details::lines(&lines_from_c(&c)?);
                        let d = discriminants(&c.0);
                        v["discriminants"] = json!([d.d12, d.d13, d.d14].map(|x| x.to_string()));
                    }
                    v
                }
                _ => unreachable!("clap requires exactly one point"),
            };
            if v.get("singular_points").is_some_and(Value::is_null) {
                v.as_object_mut().expect("object").remove("singular_points");
            }
            (v, true)
        }
        Verb::Invariants { gcoeffs: g, symbolic } => {
            let v = if *symbolic {
                invariants_json(&invariants(&g_form(&symbolic_gcoeffs())?))
            } else {
                let g = gcoeffs(g.as_deref().ok_or_else(|| usage("--gcoeffs or --symbolic is required"))?)?;
                invariants_json(&invariants(&g_form(&g)?))
            };
            (v, true)
        }
        Verb::Quotient { gcoeffs: g } => {
            let w = quotient_point(&gcoeffs(g)?)?;
            (json!({ "wpoint": w.coords.iter().map(|x| x.to_string()).collect::<Vec<_>>() }), true)
        }
        Verb::Orbit { gcoeffs: g } => {
            let group = project_mod_center(&generate(&gamma_generators())?)?;
            let o = orbit(&group, &gcoeffs(g)?)?;
            (json!({ "size": o.len(), "points": points(&o) }), true)
        }
        Verb::Stabilizer { gcoeffs: g } => {
            let group = project_mod_center(&generate(&gamma_generators())?)?;
            let s = stabilizer(&group, &gcoeffs(g)?)?;
            let elements: Vec<Value> = s.elements().iter().map(|e| e.to_json()).collect();
            (json!({ "order": s.order(), "elements": elements }), true)
        }
        Verb::OracleCount { point, prime } => {
            let primes = match prime {
                Some(p) => vec![*p],
                None => cli.primes.clone(),
            };
            let mut reports = Vec::new();
            for p in &primes {
                let r = match (&point.gcoeffs, &point.ecoeffs) {
                    (Some(g), _) => oracle_count_1111(&gcoeffs(g)?, *p),
                    (None, Some(e)) => oracle_count_22(&ecoeffs(e)?, *p),
                    (None, None) => unreachable!("clap requires one of the two"),
                };
                let r = r.map_err(|e| match e {
                    modulilab::strata::StrataError::NotOddPrime(_) => usage(e),
                    other => other.into(),
                })?;
                reports.push(serde_json::to_value(r)?);
            }
            let v = if prime.is_some() { reports.remove(0) } else { Value::Array(reports) };
            (v, true)
        }
        Verb::Beta { preset: name } => match name.as_deref() {
            None => {
                let names: Vec<&str> = presets().keys().copied().chain(["nemuro"]).collect();
                (json!({ "presets": names }), true)
            }
            Some("nemuro") => (serde_json::to_value(nemuro_bound())?, true),
            Some(n) => match preset(n).map_err(usage)? {
                Preset::Constant(c) => (json!({ "preset": n, "constant": c.to_string() }), true),
                _ => {
                    let mut v = serde_json::to_value(preset_report(n)?)?;
                    v["preset"] = json!(n);
                    (v, true)
                }
            },
        },
        Verb::Fan { check } => {
            let f = moduli_fan();
            let mut v = json!({ "rays": f.rays(), "cones": f.cones() });
            let (all, c) = (matches!(check, FanCheck::All), *check);
            let mut ok = true;
            if all || matches!(c, FanCheck::Multiplicities) {
                v["multiplicities"] = json!(multiplicities(&f));
                v["ideal_weighted_orders"] = json!(ideal_weighted_orders([1, 2, 3]));
            }
            if all || matches!(c, FanCheck::Complete) {
                let complete = fan_is_complete(&f);
                ok &= complete;
                v["complete"] = json!(complete);
            }
            if all || matches!(c, FanCheck::Subdivision) {
                let sub = star_subdivision_check();
                ok &= sub;
                v["star_subdivision"] = json!(sub);
            }
            (v, ok)
        }
        Verb::Verify { suite, symbolic, cpoint } => {
            let cfg = verify::Config {
                primes: cli.primes.clone(),
                series_order: cli.series_order,
                seed: seed()?,
                symbolic: *symbolic,
                cpoint: cpoint
                    .as_deref()
                    .map(CPoint::parse)
                    .transpose()
                    .map_err(usage)?,
            };
            let results = verify::run(*suite, &cfg);
            let ok = results.iter().all(|r| r.pass);
            let v = Value::Array(
                results
                    .iter()
                    .map(|r| json!({ "check": r.name, "pass": r.pass, "detail": r.detail }))
                    .collect(),
            );
            (v, ok)
        }
        Verb::StrataScan { plane, step, bound } => {
            let plane = scan::Plane::parse(plane).map_err(usage)?;
            let step = modulilab::algebra::rat::parse_rat(step).map_err(usage)?;
            let bound = modulilab::algebra::rat::parse_rat(bound).map_err(usage)?;
            let rows = scan::scan(&plane, &step, &bound).map_err(usage)?;
            if cli.json {
                (serde_json::to_value(&rows)?, true)
            } else {
                print!("{}", scan::to_csv(&rows));
                return Ok((Value::Null, true));
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(p) = cli.primes.iter().find(|p| !modulilab::algebra::fp::is_odd_prime(**p)) {
        eprintln!("error: --primes: {p} is not an odd prime");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let result = run(&cli);
    if cli.timings {
        eprintln!("elapsed: {:.3?}", start.elapsed());
    }
    match result {
        Ok((v, ok)) => {
            if !v.is_null() {
                let format = if cli.json { OutputFormat::Json } else { OutputFormat::Table };
                print_value(&v, format);
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if e.is::<Usage>() { 2 } else { 1 })
        }
    }
}
