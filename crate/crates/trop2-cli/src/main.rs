//! Batch front door for the exact tropical geometry engine: parse inputs,
//! dispatch to the computation modules, and emit JSON results or SVG
//! pictures. One job per invocation; output is byte-identical for a fixed
//! (input, seed, version) triple.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use trop2::convexity::{
    cone_decompose, cone_closure, covector_cell, covector_of_point, goldfarb_sit,
    GeneratorMatrix,
};
use trop2::hypersurface::{closure2, is_in_hypersurface2, rank2_decompose, tropicalize2};
use trop2::json as tj;
use trop2::puiseux::{PuiseuxLaurent, PuiseuxPoly};
use trop2::rank2::{ExponentVector, Rank2Value, TropPoint2};
use trop2::scalar::Scalar;
use trop2::stable::{
    direct_stable_intersection, perturb_translation_check, results_agree, stable_intersection,
    stable_intersection_with_beta,
};
use trop2::svg::{svg_for_cone, svg_for_decomposition, BBox};
use trop2::{Error, Rat};

#[derive(Parser)]
#[command(
    name = "trop2-cli",
    version,
    about = "Exact rank-two tropical hypersurfaces, stable intersections and cones"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the rank-two hypersurface of a polynomial file.
    Hypersurface {
        /// Polynomial JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Plot window "xmin,xmax,ymin,ymax" (SVG only).
        #[arg(long, allow_hyphen_values = true)]
        bbox: Option<String>,
    },
    /// Closed pieces covering a hypersurface or a cone.
    Closure {
        /// Polynomial or generator JSON file.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stable intersection of two rank-one tropical hypersurfaces.
    Stable {
        /// First polynomial (u-free coefficients).
        #[arg(long)]
        f: PathBuf,
        /// Second polynomial (u-free coefficients).
        #[arg(long)]
        g: PathBuf,
        /// Perturbation slope override; certified before use.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Also run the direct oracle and report agreement.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Covector decomposition of a rank-two tropical cone.
    Cone {
        /// Generator JSON file.
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, allow_hyphen_values = true)]
        bbox: Option<String>,
    },
    /// Goldfarb-Sit cube systems and vertices.
    Gscube {
        /// Cube dimension, at least 2.
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the valuation transfer diagram under partial evaluation.
    CheckDiagram {
        /// Polynomial JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Value substituted for the second parameter.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        /// Value substituted for the first parameter (admissibility only).
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a decomposition JSON file to SVG.
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        bbox: Option<String>,
    },
    /// Seeded property checks over random instances.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per check.
        #[arg(long, default_value_t = 25)]
        instances: usize,
        /// Grid step for the decomposition soundness check.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: String,
    message: String,
    exit: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: e.code().into(),
            message: e.to_string(),
            exit: if e.is_validation() { 2 } else { 3 },
        }
    }
}

fn invalid(code: &str, message: String) -> Failure {
    Failure {
        code: code.into(),
        message,
        exit: 2,
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("TROP2_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let report = json!({"code": f.code, "message": f.message});
            eprintln!("{report}");
            ExitCode::from(f.exit)
        }
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| {
        invalid("io_error", format!("cannot read {}: {e}", path.display()))
    })?;
    serde_json::from_str(&text).map_err(|e| {
        invalid("parse_error", format!("{} is not JSON: {e}", path.display()))
    })
}

fn parse_rat_flag(s: &str, what: &str) -> Result<Rat, Failure> {
    Rat::parse_rat(s).ok_or_else(|| invalid("parse_error", format!("{what}: cannot parse {s:?}")))
}

fn parse_bbox(s: &str) -> Result<BBox<Rat>, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(invalid(
            "parse_error",
            "bbox must be four comma-separated rationals".into(),
        ));
    }
    let vals: Vec<Rat> = parts
        .iter()
        .map(|p| parse_rat_flag(p, "bbox entry"))
        .collect::<Result<_, _>>()?;
    if vals[0] >= vals[1] || vals[2] >= vals[3] {
        return Err(invalid("parse_error", "bbox window is empty".into()));
    }
    Ok((
        vals[0].clone(),
        vals[1].clone(),
        vals[2].clone(),
        vals[3].clone(),
    ))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| {
            invalid("io_error", format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            use std::io::Write;
            match std::io::stdout().write_all(text.as_bytes()) {
                Ok(()) => Ok(()),
                // downstream closed the pipe; not our error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(invalid("io_error", format!("cannot write stdout: {e}"))),
            }
        }
    }
}

fn envelope(command: &str, inputs: Value, result: Value) -> String {
    let doc = json!({
        "header": {
            "command": command,
            "inputs": inputs,
            "version": env!("CARGO_PKG_VERSION"),
        },
        "result": result,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
    text.push('\n');
    text
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Hypersurface {
            input,
            out,
            format,
            bbox,
        } => {
            let f: PuiseuxLaurent<Rat> = tj::laurent_from_json(&read_json(&input)?)?;
            let dec = rank2_decompose(&f);
            match format {
                Format::Json => {
                    let doc = envelope(
                        "hypersurface",
                        json!({"input": tj::laurent_json(&f)}),
                        tj::decomposition_json(&dec),
                    );
                    emit(&out, &doc)
                }
                Format::Svg => {
                    let window = bbox.as_deref().map(parse_bbox).transpose()?;
                    let svg = svg_for_decomposition(&dec, window)?;
                    emit(&out, &svg)
                }
            }
        }
        Command::Closure { input, out } => {
            let doc = read_json(&input)?;
            let is_cone = doc.get("gens").is_some();
            let (inputs, result) = if is_cone {
                let v: GeneratorMatrix<Rat> = tj::gens_from_json(&doc)?;
                let dec = cone_decompose(&v);
                let pieces = cone_closure(&dec)?;
                (
                    json!({"gens": tj::gens_json(&v)}),
                    json!({
                        "kind": "closure",
                        "d": dec.d,
                        "pieces": pieces.iter().map(tj::piece_json).collect::<Vec<_>>(),
                    }),
                )
            } else {
                let f: PuiseuxLaurent<Rat> = tj::laurent_from_json(&doc)?;
                let dec = rank2_decompose(&f);
                let pieces = closure2(&dec)?;
                (
                    json!({"input": tj::laurent_json(&f)}),
                    json!({
                        "kind": "closure",
                        "d": dec.d,
                        "pieces": pieces.iter().map(tj::piece_json).collect::<Vec<_>>(),
                    }),
                )
            };
            emit(&out, &envelope("closure", inputs, result))
        }
        Command::Stable {
            f,
            g,
            beta,
            oracle,
            out,
        } => {
            let fp: PuiseuxLaurent<Rat> = tj::laurent_from_json(&read_json(&f)?)?;
            let gp: PuiseuxLaurent<Rat> = tj::laurent_from_json(&read_json(&g)?)?;
            let result = match &beta {
                Some(b) => {
                    let b = parse_rat_flag(b, "beta")?;
                    stable_intersection_with_beta(&fp, &gp, &b)?
                }
                None => stable_intersection(&fp, &gp)?,
            };
            let mut payload = tj::stable_result_json(&result);
            if oracle {
                let direct = direct_stable_intersection(&fp, &gp)?;
                let agree = results_agree(&result, &direct)?;
                payload["oracle"] = json!({
                    "agree": agree,
                    "direct": tj::stable_result_json(&direct),
                });
            }
            let doc = envelope(
                "stable",
                json!({"f": tj::laurent_json(&fp), "g": tj::laurent_json(&gp)}),
                payload,
            );
            emit(&out, &doc)
        }
        Command::Cone {
            gens,
            out,
            format,
            bbox,
        } => {
            let v: GeneratorMatrix<Rat> = tj::gens_from_json(&read_json(&gens)?)?;
            let dec = cone_decompose(&v);
            match format {
                Format::Json => {
                    let doc = envelope(
                        "cone",
                        json!({"gens": tj::gens_json(&v)}),
                        tj::cone_decomposition_json(&dec),
                    );
                    emit(&out, &doc)
                }
                Format::Svg => {
                    let window = bbox.as_deref().map(parse_bbox).transpose()?;
                    let svg = svg_for_cone(&dec, window)?;
                    emit(&out, &svg)
                }
            }
        }
        Command::Gscube { d, out } => {
            let gs = goldfarb_sit::<Rat>(d)?;
            let doc = envelope("gscube", json!({"d": d}), tj::gs_json(&gs));
            emit(&out, &doc)
        }
        Command::CheckDiagram {
            input,
            sigma,
            rho,
            out,
        } => {
            if sigma.is_none() && rho.is_none() {
                return Err(invalid(
                    "missing_flag",
                    "check-diagram needs --sigma or --rho".into(),
                ));
            }
            let f: PuiseuxLaurent<Rat> = tj::laurent_from_json(&read_json(&input)?)?;
            let mut result = json!({"kind": "check-diagram"});
            if let Some(s) = &sigma {
                let s = parse_rat_flag(s, "sigma")?;
                if s <= Rat::from_int(0) {
                    return Err(invalid("invalid_input", "sigma must be positive".into()));
                }
                result["sigma"] = diagram_report(&f, &s, true)?;
            }
            if let Some(r) = &rho {
                let r = parse_rat_flag(r, "rho")?;
                if r <= Rat::from_int(0) {
                    return Err(invalid("invalid_input", "rho must be positive".into()));
                }
                result["rho"] = diagram_report(&f, &r, false)?;
            }
            let doc = envelope(
                "check-diagram",
                json!({"input": tj::laurent_json(&f)}),
                result,
            );
            emit(&out, &doc)
        }
        Command::Plot { input, out, bbox } => {
            let doc = read_json(&input)?;
            let window = bbox.as_deref().map(parse_bbox).transpose()?;
            // accept both bare decompositions and full result envelopes
            let doc = doc.get("result").cloned().unwrap_or(doc);
            let kind = doc.get("kind").and_then(Value::as_str).unwrap_or("");
            let svg = match kind {
                "hypersurface" => {
                    svg_for_decomposition(&tj::decomposition_from_json::<Rat>(&doc)?, window)?
                }
                "cone" => svg_for_cone(&tj::cone_decomposition_from_json::<Rat>(&doc)?, window)?,
                other => {
                    return Err(invalid(
                        "invalid_input",
                        format!("cannot plot documents of kind {other:?}"),
                    ))
                }
            };
            emit(&out, &svg)
        }
        Command::Selfcheck {
            seed,
            instances,
            grid,
            out,
        } => {
            let step = match &grid {
                Some(s) => parse_rat_flag(s, "grid")?,
                None => Rat::ratio(1, 2),
            };
            if step <= Rat::from_int(0) {
                return Err(invalid("invalid_input", "grid step must be positive".into()));
            }
            let report = selfcheck(seed, instances, &step)?;
            let ok = report
                .as_array()
                .expect("check list")
                .iter()
                .all(|c| c["failures"] == json!(0));
            let doc = envelope(
                "selfcheck",
                json!({"seed": seed, "instances": instances, "grid": step.to_string()}),
                json!({"kind": "selfcheck", "checks": report, "ok": ok}),
            );
            emit(&out, &doc)?;
            if ok {
                Ok(())
            } else {
                Err(Failure {
                    code: "selfcheck_failed".into(),
                    message: "at least one property check failed".into(),
                    exit: 3,
                })
            }
        }
    }
}

fn diagram_report(
    f: &PuiseuxLaurent<Rat>,
    point: &Rat,
    u_side: bool,
) -> Result<Value, Failure> {
    let mut terms = Vec::new();
    let mut all_ok = true;
    for (s, gamma) in f.terms() {
        let status = if u_side {
            match gamma.check_diagram(point) {
                Ok(true) => ("ok", None),
                Ok(false) => ("order_mismatch", None),
                Err(e @ Error::InadmissibleEvaluation { .. }) => {
                    ("inadmissible", Some(e.to_string()))
                }
                Err(e @ Error::NonEvaluableExponent { .. }) => {
                    ("non_evaluable", Some(e.to_string()))
                }
                Err(e) => return Err(e.into()),
            }
        } else {
            match gamma.partial_eval_t(point) {
                Ok(_) => ("ok", None),
                Err(e @ Error::InadmissibleEvaluation { .. }) => {
                    ("inadmissible", Some(e.to_string()))
                }
                Err(e @ Error::NonEvaluableExponent { .. }) => {
                    ("non_evaluable", Some(e.to_string()))
                }
                Err(e) => return Err(e.into()),
            }
        };
        if status.0 != "ok" {
            all_ok = false;
        }
        let mut entry = json!({"s": tj::expvec_json(s), "status": status.0});
        if let Some(detail) = status.1 {
            entry["detail"] = json!(detail);
        }
        terms.push(entry);
    }
    Ok(json!({
        "at": point.to_string(),
        "admissible": all_ok,
        "terms": terms,
    }))
}

/// Random Laurent polynomial with monomial coefficients; exponents in
/// [-2, 2]^d, valuations in [-3, 3] x [-1, 1], positive integer leads.
fn random_laurent(rng: &mut ChaCha8Rng, d: usize, max_terms: usize, u_free: bool) -> PuiseuxLaurent<Rat> {
    loop {
        let n = rng.gen_range(2..=max_terms);
        let mut terms = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..n {
            let s = ExponentVector::new((0..d).map(|_| rng.gen_range(-2..=2)).collect());
            if !seen.insert(s.clone()) {
                continue;
            }
            let c = Rat::from_int(rng.gen_range(1..=9));
            let a = Rat::from_int(rng.gen_range(-3..=3));
            let b = if u_free {
                Rat::from_int(0)
            } else {
                Rat::from_int(rng.gen_range(-1..=1))
            };
            terms.push((s, PuiseuxPoly::monomial(c, a, b)));
        }
        if terms.len() >= 2 {
            return PuiseuxLaurent::new(d, terms).expect("nonempty support");
        }
    }
}

fn random_positive_puiseux(rng: &mut ChaCha8Rng) -> PuiseuxPoly<Rat> {
    let n = rng.gen_range(1..=4);
    let terms: Vec<((Rat, Rat), Rat)> = (0..n)
        .map(|_| {
            (
                (
                    Rat::from_int(rng.gen_range(-3..=3)),
                    Rat::from_int(rng.gen_range(-3..=3)),
                ),
                Rat::from_int(rng.gen_range(1..=9)),
            )
        })
        .collect();
    PuiseuxPoly::from_terms(terms)
}

fn random_generators(rng: &mut ChaCha8Rng, d: usize, n: usize) -> GeneratorMatrix<Rat> {
    let gens = (0..n)
        .map(|_| {
            TropPoint2(
                (0..d)
                    .map(|_| {
                        Rank2Value::Finite(
                            Rat::from_int(rng.gen_range(-3..=3)),
                            Rat::from_int(rng.gen_range(-3..=3)),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    GeneratorMatrix::new(d, gens).expect("finite generators")
}

fn instance_rng(seed: u64, check: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (check << 48) ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn selfcheck(seed: u64, instances: usize, step: &Rat) -> Result<Value, Failure> {
    let mut checks = Vec::new();

    // stable intersection agrees with the direct oracle
    let failures: usize = (0..instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, 1, i);
            let d = if rng.gen_bool(0.5) { 2 } else { 3 };
            let f = random_laurent(&mut rng, d, 5, true);
            let g = random_laurent(&mut rng, d, 5, true);
            let ok = (|| -> trop2::Result<bool> {
                let stable = stable_intersection(&f, &g)?;
                let direct = direct_stable_intersection(&f, &g)?;
                results_agree(&stable, &direct)
            })();
            usize::from(!matches!(ok, Ok(true)))
        })
        .sum();
    checks.push(json!({
        "name": "stable_matches_direct",
        "instances": instances,
        "failures": failures,
    }));

    // perturbation acts as a second-block translation
    let failures: usize = (0..instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, 2, i);
            let f = random_laurent(&mut rng, 2, 4, true);
            let beta = Rat::from_int(rng.gen_range(2..=4));
            usize::from(!matches!(perturb_translation_check(&f, &beta), Ok(true)))
        })
        .sum();
    checks.push(json!({
        "name": "perturbation_translates",
        "instances": instances,
        "failures": failures,
    }));

    // valuation transfer diagram on positive coefficients
    let failures: usize = (0..instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, 3, i);
            let gamma = random_positive_puiseux(&mut rng);
            let sigma = match rng.gen_range(0..3) {
                0 => Rat::ratio(1, 2),
                1 => Rat::ratio(1, 3),
                _ => Rat::from_int(2),
            };
            usize::from(!matches!(gamma.check_diagram(&sigma), Ok(true)))
        })
        .sum();
    checks.push(json!({
        "name": "transfer_diagram",
        "instances": instances,
        "failures": failures,
    }));

    // decomposition interiors tile the hypersurface on a grid
    let grid_instances = instances.min(8);
    let failures: usize = (0..grid_instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, 4, i);
            let f = random_laurent(&mut rng, 2, 4, false);
            match grid_soundness(&f, step) {
                Ok(true) => 0,
                _ => 1,
            }
        })
        .sum();
    checks.push(json!({
        "name": "decomposition_grid",
        "instances": grid_instances,
        "failures": failures,
    }));

    // covector cells are tropically convex and intersect by union
    let failures: usize = (0..instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, 5, i);
            let d = rng.gen_range(1..=3);
            let n = rng.gen_range(1..=4);
            let v = random_generators(&mut rng, d, n);
            usize::from(!matches!(covector_properties(&mut rng, &v), Ok(true)))
        })
        .sum();
    checks.push(json!({
        "name": "covector_cells",
        "instances": instances,
        "failures": failures,
    }));

    Ok(Value::Array(checks))
}

/// Membership in the rank-two hypersurface matches lying in exactly one
/// interior piece, over a grid of block pairs.
fn grid_soundness(f: &PuiseuxLaurent<Rat>, step: &Rat) -> trop2::Result<bool> {
    let dec = rank2_decompose(f);
    let f2 = tropicalize2(f);
    let lo = Rat::from_int(-2);
    let hi = Rat::from_int(2);
    let mut axis = Vec::new();
    let mut x = lo.clone();
    while x <= hi {
        axis.push(x.clone());
        x = x + step.clone();
    }
    for t1 in &axis {
        for t2 in &axis {
            for u1 in &axis {
                for u2 in &axis {
                    let p = TropPoint2(vec![
                        Rank2Value::Finite(t1.clone(), u1.clone()),
                        Rank2Value::Finite(t2.clone(), u2.clone()),
                    ]);
                    let member = is_in_hypersurface2(&f2, &p)?;
                    let hits = dec
                        .interior_pieces_containing(
                            &[t1.clone(), t2.clone()],
                            &[u1.clone(), u2.clone()],
                        )?
                        .len();
                    if hits > 1 || member != (hits == 1) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Samples tropical combinations of the generators: each lies in the cone,
/// its covector cell is tropically convex under sampled combinations, and
/// cells of covector unions are intersections of cells.
fn covector_properties(rng: &mut ChaCha8Rng, v: &GeneratorMatrix<Rat>) -> trop2::Result<bool> {
    let combo = |rng: &mut ChaCha8Rng| -> TropPoint2<Rat> {
        let lambdas: Vec<Rank2Value<Rat>> = (0..v.n())
            .map(|_| {
                Rank2Value::Finite(
                    Rat::from_int(rng.gen_range(0..=2)),
                    Rat::from_int(rng.gen_range(-2..=2)),
                )
            })
            .collect();
        TropPoint2(
            (0..v.d())
                .map(|i| {
                    let mut acc = Rank2Value::TropZero;
                    for (lambda, g) in lambdas.iter().zip(v.gens()) {
                        acc = acc.trop_add(&lambda.trop_mul(&g.0[i]));
                    }
                    acc
                })
                .collect(),
        )
    };

    let p = combo(rng);
    let q = combo(rng);
    if !trop2::convexity::is_in_cone(&p, v)? || !trop2::convexity::is_in_cone(&q, v)? {
        return Ok(false);
    }

    let cov_p = covector_of_point(&p, v)?;
    let cell_p = covector_cell(&cov_p, v)?;
    if !cell_p.lex_member(&p)? {
        return Ok(false);
    }
    if cell_p.lex_member(&q)? {
        let mus = [
            Rank2Value::pair(0, 0),
            Rank2Value::pair(0, 1),
            Rank2Value::pair(1, -5),
            Rank2Value::pair(2, 0),
        ];
        for mu in &mus {
            let c = TropPoint2(
                p.0.iter()
                    .zip(&q.0)
                    .map(|(a, b)| a.trop_add(&mu.trop_mul(b)))
                    .collect(),
            );
            if !cell_p.lex_member(&c)? {
                return Ok(false);
            }
        }
    }

    // union identity on sampled points
    let cov_q = covector_of_point(&q, v)?;
    let mut union = cov_p.clone();
    union.edges.extend(cov_q.edges.iter().cloned());
    let cell_q = covector_cell(&cov_q, v)?;
    let cell_u = covector_cell(&union, v)?;
    for _ in 0..8 {
        let w = combo(rng);
        let both = cell_p.lex_member(&w)? && cell_q.lex_member(&w)?;
        if both != cell_u.lex_member(&w)? {
            return Ok(false);
        }
    }
    Ok(true)
}
