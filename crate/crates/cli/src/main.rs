//! `cyclerange`: command-line access to the numerical-range library.
//!
//! Exit codes: 0 on success, 1 when a verification subcommand finds a
//! failing case, 2 on invalid input.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cyclerange::boundary::{export_curve, sample_boundary, ExportFormat};
use cyclerange::extremal::{find_double_eigenvalue, min_frobenius_zero_product_with};
use cyclerange::inclusion::{includes, InclusionOptions, Method, DEFAULT_GRID};
use cyclerange::permsearch::{
    enumerate_classes, family_analysis_n6, find_extreme_with, class_label, labeled_class,
    verify_conjecture1_with, Direction, SearchMethod,
};
use cyclerange::spectra::{family_root, numerical_radius};
use cyclerange::{build_family, largest_root, min_path_weights, regular_ngon_check, trials, WeightVector};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cyclerange", version, about = "Numerical ranges of weighted cyclic shift matrices")]
struct Cli {
    /// Output format. CSV is available for `charpoly`, `support` and `boundary`.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for searches and boundary sampling (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Grid,
    Closed,
    Poly,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Max,
    Min,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchArg {
    Grid,
    Certified,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtremalKind {
    Ngon,
    Path,
    Frobenius,
    Double,
}

fn parse_weights(s: &str) -> Result<WeightVector, String> {
    s.parse::<WeightVector>().map_err(|e| e.to_string())
}

fn parse_ts(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|tok| {
            let t: f64 = tok.trim().parse().map_err(|_| format!("cannot parse {:?} as a number", tok.trim()))?;
            if (-1.0..=1.0).contains(&t) {
                Ok(t)
            } else {
                Err(format!("{t} is outside [-1, 1]"))
            }
        })
        .collect()
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of f and alpha with det(zI - 2Re(e^{i theta}S)) = f(z) - 2 alpha cos(n theta).
    Charpoly {
        /// Comma-separated weights a_1, ..., a_n.
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
    },
    /// Numerical radius r(S(a)).
    Radius {
        /// Comma-separated weights a_1, ..., a_n.
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
    },
    /// Top root z(t) and support z(t)/2 at t = cos(n theta).
    Support {
        /// Comma-separated weights a_1, ..., a_n.
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
        /// Comma-separated values in [-1, 1]; may be repeated.
        #[arg(long, value_parser = parse_ts, allow_hyphen_values = true, required = true)]
        t: Vec<Vec<f64>>,
    },
    /// Decide W(B) ⊆ W(A).
    Include {
        /// Weights of the containing matrix.
        #[arg(long = "A", value_parser = parse_weights)]
        a: WeightVector,
        /// Weights of the contained matrix.
        #[arg(long = "B", value_parser = parse_weights)]
        b: WeightVector,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Grid points in t = cos(n theta).
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
    },
    /// Sample the boundary of W(S(a)).
    Boundary {
        /// Comma-separated weights a_1, ..., a_n.
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
        /// Directions per rotation sector, at least 8; a disk uses this many in total.
        #[arg(long, default_value_t = 256)]
        points: usize,
        /// Write the curve here; `.csv` or `.json` picks the file format.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Arrangement whose range contains (max) or lies in (min) all others.
    Search {
        /// Number of weights; with no --weights, uses 1, 2, ..., n.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_weights)]
        weights: Option<WeightVector>,
        #[arg(long, value_enum, default_value_t = DirectionArg::Max)]
        direction: DirectionArg,
        #[arg(long, value_enum, default_value_t = SearchArg::Grid)]
        method: SearchArg,
        /// Grid points in t = cos(n theta).
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
    },
    /// Check that the alternating arrangement (1, 3, 5, ..., 6, 4, 2) is maximal.
    VerifyConjecture {
        #[arg(long, value_parser = parse_weights, conflicts_with_all = ["n", "trials", "seed"])]
        weights: Option<WeightVector>,
        /// Size of random trial vectors.
        #[arg(long)]
        n: Option<usize>,
        /// Number of random vectors drawn with --n.
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Seed for the random vectors.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Grid points in t = cos(n theta).
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
    },
    /// Extremal weight constructions.
    Extremal {
        #[arg(long, value_enum)]
        kind: ExtremalKind,
        /// Size for `path` and `frobenius`.
        #[arg(long)]
        n: Option<usize>,
        /// Weights for `ngon` (product 1) and `double` (odd count).
        #[arg(long, value_parser = parse_weights)]
        weights: Option<WeightVector>,
        /// Angle of the last weight pair for odd `frobenius`, in [0, pi/2].
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
        theta: f64,
    },
    /// The ten families of six-weight arrangements; with --weights, checks
    /// the cyclic-sum identities and head bounds.
    Families {
        #[arg(long, value_parser = parse_weights)]
        weights: Option<WeightVector>,
    },
    /// The two six-weight polynomials with squared weights (0, 3, 4, 8, 13, 30).
    Counterexample,
}

struct Failure {
    context: String,
    message: String,
}

fn fail(context: impl Into<String>, message: impl ToString) -> Failure {
    Failure {
        context: context.into(),
        message: message.to_string(),
    }
}

trait Context<T> {
    fn ctx(self, context: &str) -> Result<T, Failure>;
}

impl<T, E: ToString> Context<T> for Result<T, E> {
    fn ctx(self, context: &str) -> Result<T, Failure> {
        self.map_err(|e| fail(context, e))
    }
}

/// Result of a subcommand: JSON document, optional CSV rendering, and
/// whether a verification passed.
struct Output {
    json: Value,
    csv: Option<String>,
    pass: bool,
}

impl Output {
    fn ok(json: Value) -> Self {
        Self { json, csv: None, pass: true }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn tolerance() -> Result<Option<f64>, Failure> {
    match std::env::var("CYCLERANGE_TOL") {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(Some(t)),
            _ => Err(fail("CYCLERANGE_TOL", format!("{s:?} is not a finite nonnegative number"))),
        },
    }
}

fn options(grid: usize) -> Result<InclusionOptions, Failure> {
    if grid < 3 {
        return Err(fail("--grid", format!("{grid} is below the minimum of 3")));
    }
    Ok(InclusionOptions {
        tol: tolerance()?,
        ..InclusionOptions::with_grid(grid)
    })
}

fn labels(classes: &[cyclerange::DihedralClass]) -> Value {
    Value::Array(classes.iter().map(|c| to_value(&class_label(c))).collect())
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Charpoly { weights } => {
            let f = build_family(&weights);
            let mut csv = String::from("power,coefficient\n");
            for (i, c) in f.f_coeffs.iter().enumerate() {
                csv.push_str(&format!("{},{c:?}\n", f.n - i));
            }
            csv.push_str(&format!("alpha,{:?}\n", f.alpha));
            Ok(Output {
                json: json!({"command": "charpoly", "weights": weights, "n": f.n, "f": f.f_coeffs, "alpha": f.alpha}),
                csv: Some(csv),
                pass: true,
            })
        }
        Command::Radius { weights } => Ok(Output::ok(
            json!({"command": "radius", "weights": weights, "radius": numerical_radius(&weights)}),
        )),
        Command::Support { weights, t } => {
            let ts: Vec<f64> = t.into_iter().flatten().collect();
            if ts.is_empty() {
                return Err(fail("--t", "at least one value is required"));
            }
            let f = build_family(&weights);
            let mut csv = String::from("t,z,support\n");
            let samples: Vec<Value> = ts
                .iter()
                .map(|&t| {
                    let z = family_root(&f, t, None);
                    csv.push_str(&format!("{t:?},{z:?},{:?}\n", z / 2.0));
                    json!({"t": t, "z": z, "support": z / 2.0})
                })
                .collect();
            Ok(Output {
                json: json!({"command": "support", "weights": weights, "samples": samples}),
                csv: Some(csv),
                pass: true,
            })
        }
        Command::Include { a, b, method, grid } => {
            let m = match method {
                MethodArg::Auto => Method::Auto,
                MethodArg::Grid => Method::Grid,
                MethodArg::Closed => Method::Closed,
                MethodArg::Poly => Method::Poly,
            };
            let v = includes(&a, &b, m, &options(grid)?).ctx("--method")?;
            Ok(Output::ok(json!({"command": "include", "a": a, "b": b, "verdict": v})))
        }
        Command::Boundary { weights, points, out } => {
            let curve = sample_boundary(&weights, points).ctx("--points")?;
            match out {
                Some(path) => {
                    let fmt = match path.extension().and_then(|e| e.to_str()) {
                        Some("json") => ExportFormat::Json,
                        _ => ExportFormat::Csv,
                    };
                    let bytes = export_curve(&curve, fmt).ctx("--out")?;
                    std::fs::write(&path, bytes).ctx(&format!("--out {}", path.display()))?;
                    Ok(Output::ok(json!({
                        "command": "boundary",
                        "weights": weights,
                        "out": path.display().to_string(),
                        "points": curve.len(),
                    })))
                }
                None => {
                    let csv = String::from_utf8(export_curve(&curve, ExportFormat::Csv).ctx("boundary")?)
                        .expect("CSV export is UTF-8");
                    Ok(Output {
                        json: json!({"command": "boundary", "weights": weights, "curve": curve}),
                        csv: Some(csv),
                        pass: true,
                    })
                }
            }
        }
        Command::Search { n, weights, direction, method, grid } => {
            let weights = match (n, weights) {
                (_, Some(w)) => {
                    if let Some(n) = n.filter(|&n| n != w.len()) {
                        return Err(fail("--n", format!("{n} does not match {} weights", w.len())));
                    }
                    w
                }
                (Some(n), None) => {
                    if n < 2 {
                        return Err(fail("--n", format!("{n} is below the minimum of 2")));
                    }
                    WeightVector::new((1..=n).map(|x| x as f64).collect()).ctx("--n")?
                }
                (None, None) => return Err(fail("search", "one of --n or --weights is required")),
            };
            let dir = match direction {
                DirectionArg::Max => Direction::Max,
                DirectionArg::Min => Direction::Min,
            };
            let m = match method {
                SearchArg::Grid => SearchMethod::Grid,
                SearchArg::Certified => SearchMethod::Certified,
            };
            let rep = find_extreme_with(&weights, dir, m, &options(grid)?).ctx("--weights")?;
            let label = rep.found().and_then(class_label);
            Ok(Output::ok(json!({"command": "search", "weights": weights, "label": label, "report": rep})))
        }
        Command::VerifyConjecture { weights, n, trials: k, seed, grid } => {
            let opts = options(grid)?;
            let inputs: Vec<WeightVector> = match (weights, n) {
                (Some(w), _) => vec![w],
                (None, Some(n)) => {
                    if !(2..=cyclerange::permsearch::MAX_ENUMERATION_N).contains(&n) {
                        return Err(fail("--n", format!("{n} is outside 2..=10")));
                    }
                    if k == 0 {
                        return Err(fail("--trials", "must be at least 1"));
                    }
                    let mut rng = trials::rng(seed);
                    (0..k).map(|_| trials::ascending_weights(&mut rng, n)).collect()
                }
                (None, None) => return Err(fail("verify-conjecture", "one of --weights or --n is required")),
            };
            let reports = inputs
                .iter()
                .map(|w| verify_conjecture1_with(w, &opts))
                .collect::<Result<Vec<_>, _>>()
                .ctx("--weights")?;
            let pass = reports.iter().all(|r| r.pass);
            let worst = reports.iter().map(|r| r.worst_margin).fold(f64::INFINITY, f64::min);
            Ok(Output {
                json: json!({
                    "command": "verify-conjecture",
                    "n": inputs[0].len(),
                    "seed": n.map(|_| seed),
                    "trials": reports.len(),
                    "pass": pass,
                    "worst_margin": worst,
                    "reports": reports,
                }),
                csv: None,
                pass,
            })
        }
        Command::Extremal { kind, n, weights, theta } => {
            let need_n = |n: Option<usize>| n.ok_or_else(|| fail("--n", "required for this --kind"));
            let (name, report, pass) = match kind {
                ExtremalKind::Ngon => {
                    let w = weights.ok_or_else(|| fail("--weights", "required for --kind ngon"))?;
                    let v = regular_ngon_check(&w).ctx("--weights")?;
                    ("ngon", to_value(&v), v.is_included())
                }
                ExtremalKind::Path => {
                    let r = min_path_weights(need_n(n)?).ctx("--n")?;
                    let ok = (r.computed - r.objective).abs() < 1e-10 && r.residual.is_some_and(|x| x < 1e-9);
                    ("path", to_value(&r), ok)
                }
                ExtremalKind::Frobenius => {
                    let r = min_frobenius_zero_product_with(need_n(n)?, theta).ctx("--n/--theta")?;
                    let ok = (r.computed - r.objective).abs() < 1e-10;
                    ("frobenius", to_value(&r), ok)
                }
                ExtremalKind::Double => {
                    let path: Vec<f64> = match (weights, n) {
                        (Some(w), _) => w.weights().to_vec(),
                        (None, Some(n)) if n >= 3 => vec![1.0; n - 2],
                        (None, Some(n)) => return Err(fail("--n", format!("{n} is below the minimum of 3"))),
                        (None, None) => return Err(fail("--weights", "one of --weights or --n is required")),
                    };
                    let r = find_double_eigenvalue(&path).ctx("--weights")?;
                    let ok = r.gap.abs() < 1e-9;
                    ("double", to_value(&r), ok)
                }
            };
            Ok(Output {
                json: json!({"command": "extremal", "kind": name, "pass": pass, "report": report}),
                csv: None,
                pass,
            })
        }
        Command::Families { weights } => match weights {
            None => {
                let table = enumerate_classes(6).ctx("families")?;
                let fams: Vec<Value> = table
                    .families
                    .unwrap_or_default()
                    .iter()
                    .map(|f| {
                        json!({
                            "label": f.label,
                            "key": f.key,
                            "head": f.head,
                            "head_class": labeled_class(6, f.head),
                            "members": f.members,
                            "member_labels": labels(&f.members),
                        })
                    })
                    .collect();
                Ok(Output::ok(json!({"command": "families", "classes": table.classes.len(), "families": fams})))
            }
            Some(w) => {
                let fa = family_analysis_n6(&w).ctx("--weights")?;
                let pass = fa.bound.pass;
                Ok(Output {
                    json: json!({"command": "families", "pass": pass, "analysis": fa}),
                    csv: None,
                    pass,
                })
            }
        },
        Command::Counterexample => {
            let sq = [0.0, 3.0, 4.0, 8.0, 13.0, 30.0];
            let cases: Vec<Value> = [[4usize, 2, 6, 1, 5, 3], [3, 2, 6, 1, 5, 4]]
                .iter()
                .map(|p| {
                    let w = WeightVector::from_squares(p.iter().map(|&i| sq[i - 1]).collect()).expect("valid squares");
                    let f = build_family(&w);
                    let root = largest_root(&f.f_coeffs).expect("real-rooted");
                    json!({
                        "arrangement": p,
                        "squared_weights": w.squares(),
                        "f": f.f_coeffs,
                        "alpha": f.alpha,
                        "largest_root": root,
                        "radius": root / 2.0,
                    })
                })
                .collect();
            Ok(Output::ok(json!({"command": "counterexample", "squared_weights": sq, "cases": cases})))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if k == 0 {
            eprintln!("error: --threads: must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.format;
    let out = match run(cli.command) {
        Ok(out) => out,
        Err(f) => {
            eprintln!("error: {}: {}", f.context, f.message);
            return ExitCode::from(2);
        }
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&out.json).expect("JSON values serialize") + "\n",
        Format::Text => render::text(&out.json),
        Format::Csv => match out.csv {
            Some(csv) => csv,
            None => {
                eprintln!("error: --format: csv is only available for charpoly, support and boundary");
                return ExitCode::from(2);
            }
        },
    };
    print!("{text}");
    if out.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
