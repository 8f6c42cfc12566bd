//! Command line front end for the exact harmonic-polynomial library.
//!
//! Polynomials are written in the grammar `3/2*x1^2*x2 - x3 + 1/2*i*x2^4`
//! with variables `x1..xN`; scalars in the variable-free fragment
//! (`-1/2`, `1/2+3/4*i`). Every command names its ambient dimension
//! explicitly. Output is deterministic; `--json` switches to a machine
//! format in which a polynomial is
//! `{dim, terms: [{exponents, re_num, re_den, im_num, im_den}]}` with
//! terms in canonical (descending graded-lex) order.
//!
//! Exit codes: 0 success, 1 precondition or parse failure,
//! 2 verification failure.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use polyharm::arith::GaussianRational;
use polyharm::harmonic::{harmonic_basis, harmonic_decompose, project_lc};
use polyharm::mean::{rotate, spherical_mean, OrthoMatrix};
use polyharm::poly::Poly;
use polyharm::text::{parse_poly, parse_scalar};
use polyharm::verify::{run_all, run_suite, suite_names, SuiteReport, DEFAULT_SEED};
use polyharm::zonal::{eigen_monomial, zonal_harmonic, EigenSignature, UniPoly};

#[derive(Parser)]
#[command(
    name = "polyharm",
    version,
    about = "Exact computer algebra for harmonic polynomials over Q(i)",
    after_help = "Polynomial grammar: terms joined by +/-; a term is a coefficient\n\
                  *-separated from x<k>^<e> factors, e.g. \"3/2*x1^2*x2 - x3 + 1/2*i*x2^4\"."
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a polynomial as p0 + (X.X) p1 + ... with harmonic parts.
    Decompose {
        /// Ambient dimension N.
        #[arg(short = 'N', long = "dim")]
        dim: usize,
        /// The polynomial, in the grammar above.
        poly: String,
    },
    /// Print a basis of the homogeneous harmonics of degree d in N variables.
    Basis {
        /// Ambient dimension N (at least 2).
        n: usize,
        /// Homogeneous degree d.
        d: u32,
    },
    /// The normalized spherical mean of a polynomial, as an exact scalar.
    Mean {
        #[arg(short = 'N', long = "dim")]
        dim: usize,
        poly: String,
    },
    /// Project onto the harmonic polynomial congruent mod X.X - c.
    Project {
        #[arg(short = 'N', long = "dim")]
        dim: usize,
        /// The sphere parameter c, in scalar syntax.
        c: String,
        poly: String,
    },
    /// Zonal harmonic along a direction t on the sphere X.X = c.
    ///
    /// Prints the generating one-variable polynomial q (in y = t.X) and
    /// the harmonic polynomial h congruent to q(t.X) mod X.X - c. For
    /// N = 2 the construction degenerates: the command prints the basis
    /// (x1 + i*x2)^n, (x1 - i*x2)^n instead.
    Zonal {
        #[arg(short = 'N', long = "dim")]
        dim: usize,
        /// Direction t as N comma-separated scalars, e.g. "1,0,0".
        t: String,
        /// The sphere parameter c.
        c: String,
        /// Degree n of the zonal harmonic.
        degree: u32,
    },
    /// The simultaneous eigenvector prod_j (x_{2j-1} + i e_j x_{2j})^{a_j}.
    Eigen {
        /// Exponents a as comma-separated non-negative integers.
        a: String,
        /// Signs as comma-separated +1/-1 (also +/-).
        eps: String,
        /// Ambient dimension N; floor(N/2) must match the number of exponents.
        n: usize,
    },
    /// Apply an exact orthogonal change of variables p(X) -> p(XA).
    Rotate {
        #[arg(short = 'N', long = "dim")]
        dim: usize,
        /// Path to the matrix file: N rows of N scalars, whitespace separated.
        #[arg(long)]
        matrix: std::path::PathBuf,
        poly: String,
    },
    /// Run verification suites (all of them when no name is given).
    Verify {
        /// Suite name; see `verify --list`.
        suite: Option<String>,
        /// Seed for the randomized samples.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// List available suites and exit.
        #[arg(long)]
        list: bool,
    },
}

fn scalar_json(c: &GaussianRational) -> Value {
    json!({
        "re_num": c.re().numer().to_string(),
        "re_den": c.re().denom().to_string(),
        "im_num": c.im().numer().to_string(),
        "im_den": c.im().denom().to_string(),
    })
}

fn poly_json(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(m, c)| {
            json!({
                "exponents": m.exponents(),
                "re_num": c.re().numer().to_string(),
                "re_den": c.re().denom().to_string(),
                "im_num": c.im().numer().to_string(),
                "im_den": c.im().denom().to_string(),
            })
        })
        .collect();
    json!({ "dim": p.dim(), "terms": terms })
}

fn unipoly_json(q: &UniPoly) -> Value {
    let coeffs: Vec<Value> = q.coeffs().iter().map(scalar_json).collect();
    json!({ "coeffs": coeffs })
}

fn parse_scalar_list(text: &str) -> Result<Vec<GaussianRational>, String> {
    text.split(',')
        .map(|part| parse_scalar(part.trim()).map_err(|e| format!("bad scalar `{part}`: {e}")))
        .collect()
}

fn parse_sign_list(text: &str) -> Result<Vec<i8>, String> {
    text.split(',')
        .map(|part| match part.trim() {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            other => Err(format!("bad sign `{other}` (use +1 or -1)")),
        })
        .collect()
}

fn load_matrix(path: &std::path::Path, dim: usize) -> Result<OrthoMatrix, String> {
    let body = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut rows = Vec::new();
    for (lineno, line) in body.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Result<Vec<GaussianRational>, String> = line
            .split_whitespace()
            .map(|tok| {
                parse_scalar(tok).map_err(|e| format!("line {}: bad scalar `{tok}`: {e}", lineno + 1))
            })
            .collect();
        rows.push(row?);
    }
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(format!(
            "matrix must be {dim} rows of {dim} scalars, got {} rows",
            rows.len()
        ));
    }
    OrthoMatrix::new(rows).map_err(|e| e.to_string())
}

fn print_suite_line(r: &SuiteReport) {
    let status = if r.ok() { "ok" } else { "FAILED" };
    println!(
        "suite {:<20} {:>6} checks, {:>3} failed ... {status}",
        r.name, r.checks, r.failed
    );
    for m in &r.messages {
        println!("    {m}");
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Decompose { dim, poly } => {
            let p = parse_poly(&poly, dim).map_err(|e| e.to_string())?;
            let dec = harmonic_decompose(&p);
            if cli.json {
                let parts: Vec<Value> = dec.parts().iter().map(poly_json).collect();
                println!("{}", json!({ "dim": dim, "parts": parts }));
            } else if dec.parts().is_empty() {
                println!("p0: 0");
            } else {
                for (j, part) in dec.parts().iter().enumerate() {
                    println!("p{j}: {part}");
                }
            }
            Ok(0)
        }
        Command::Basis { n, d } => {
            if n < 2 {
                return Err("basis needs dimension at least 2".into());
            }
            let basis = harmonic_basis(n, d);
            if cli.json {
                let elements: Vec<Value> = basis.iter().map(poly_json).collect();
                println!(
                    "{}",
                    json!({ "dim": n, "degree": d, "elements": elements })
                );
            } else {
                for (i, h) in basis.iter().enumerate() {
                    println!("h{i}: {h}");
                }
            }
            Ok(0)
        }
        Command::Mean { dim, poly } => {
            let p = parse_poly(&poly, dim).map_err(|e| e.to_string())?;
            let v = spherical_mean(&p);
            if cli.json {
                println!("{}", json!({ "value": scalar_json(&v) }));
            } else {
                println!("{v}");
            }
            Ok(0)
        }
        Command::Project { dim, c, poly } => {
            let c = parse_scalar(&c).map_err(|e| e.to_string())?;
            let p = parse_poly(&poly, dim).map_err(|e| e.to_string())?;
            let out = project_lc(&p, &c);
            if cli.json {
                println!(
                    "{}",
                    json!({ "c": scalar_json(&c), "result": poly_json(&out) })
                );
            } else {
                println!("{out}");
            }
            Ok(0)
        }
        Command::Zonal { dim, t, c, degree } => {
            let t = parse_scalar_list(&t)?;
            if t.len() != dim {
                return Err(format!("direction has {} entries, dimension is {dim}", t.len()));
            }
            let c = parse_scalar(&c).map_err(|e| e.to_string())?;
            if dim == 2 {
                if t.iter().all(|x| x.is_zero()) {
                    return Err("direction vector must not be all zero".into());
                }
                let plus = EigenSignature::new(vec![degree], vec![1])
                    .and_then(|s| eigen_monomial(&s, 2))
                    .map_err(|e| e.to_string())?;
                let minus = EigenSignature::new(vec![degree], vec![-1])
                    .and_then(|s| eigen_monomial(&s, 2))
                    .map_err(|e| e.to_string())?;
                if cli.json {
                    println!(
                        "{}",
                        json!({
                            "degenerate": true,
                            "elements": [poly_json(&plus), poly_json(&minus)],
                        })
                    );
                } else {
                    println!("note: at N = 2 every zonal harmonic of degree {degree} is a combination of the degenerate basis");
                    println!("h+: {plus}");
                    println!("h-: {minus}");
                }
                return Ok(0);
            }
            let (q, h) = zonal_harmonic(&t, &c, degree).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "degenerate": false, "q": unipoly_json(&q), "h": poly_json(&h) })
                );
            } else {
                println!("q: {q}");
                println!("h: {h}");
            }
            Ok(0)
        }
        Command::Eigen { a, eps, n } => {
            let a: Vec<u32> = a
                .split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| format!("bad exponent `{part}`"))
                })
                .collect::<Result<_, _>>()?;
            let eps = parse_sign_list(&eps)?;
            let sig = EigenSignature::new(a, eps).map_err(|e| e.to_string())?;
            let y = eigen_monomial(&sig, n).map_err(|e| e.to_string())?;
            if cli.json {
                println!("{}", json!({ "result": poly_json(&y) }));
            } else {
                println!("{y}");
            }
            Ok(0)
        }
        Command::Rotate { dim, matrix, poly } => {
            let a = load_matrix(&matrix, dim)?;
            let p = parse_poly(&poly, dim).map_err(|e| e.to_string())?;
            let out = rotate(&p, &a);
            if cli.json {
                println!("{}", json!({ "result": poly_json(&out) }));
            } else {
                println!("{out}");
            }
            Ok(0)
        }
        Command::Verify { suite, seed, list } => {
            if list {
                for name in suite_names() {
                    println!("{name}");
                }
                return Ok(0);
            }
            let reports = match suite {
                Some(name) => vec![run_suite(&name, seed).map_err(|e| e.to_string())?],
                None => run_all(seed),
            };
            let total_checks: u64 = reports.iter().map(|r| r.checks).sum();
            let total_failed: u64 = reports.iter().map(|r| r.failed).sum();
            if cli.json {
                let suites: Vec<Value> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "name": r.name,
                            "checks": r.checks,
                            "failed": r.failed,
                            "messages": r.messages,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "seed": seed,
                        "suites": suites,
                        "checks": total_checks,
                        "failed": total_failed,
                        "ok": total_failed == 0,
                    })
                );
            } else {
                for r in &reports {
                    print_suite_line(r);
                }
                println!(
                    "verify: {} suites, {total_checks} checks, {total_failed} failed (seed {seed})",
                    reports.len()
                );
            }
            Ok(if total_failed == 0 { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
