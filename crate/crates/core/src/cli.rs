//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 unsupported input
//! (no explicit model, no alpha value, no host table), 3 a verification
//! or oracle check failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::algebra::{ReductiveAlgebra, SimpleType};
use crate::classify::{self, Outcome, TableSet};
use crate::error::Error;
use crate::invariants;
use crate::matrixrep::{self, StructureConstants};
use crate::repmodel;
use crate::weyl::RootData;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

/// Environment variable naming a directory of extra host tables.
pub const TABLES_ENV: &str = "LIEREP_TABLES";

#[derive(Parser, Debug)]
#[command(name = "lierep", version, about = "Minimal faithful representations of reductive Lie algebras")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal faithful degree mu(g).
    Mu { expr: String },
    /// Maximal abelian subalgebra dimension.
    Alpha {
        expr: String,
        /// Host table file whose `alpha` map extends the built-in values.
        #[arg(long)]
        tables: Option<PathBuf>,
    },
    /// Dimension of g.
    Dim { expr: String },
    /// Build a faithful representation of degree mu(g).
    Construct {
        expr: String,
        /// Write the representation file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a representation file: homomorphism and trivial kernel.
    Verify { file: PathBuf },
    /// All reductive subalgebras of gl_n up to isomorphism.
    Enumerate { n: u64 },
    /// Exhaustive minimum over dimension matrices, compared with mu.
    OracleMinmatrix {
        expr: String,
        /// Largest degree searched (default: mu of the algebra).
        #[arg(long)]
        max_f: Option<u64>,
    },
    /// Minimal nontrivial irreducible degree from the Weyl formula.
    OracleWeyl {
        #[arg(value_name = "TYPE")]
        simple_type: String,
        /// List irreducible degrees up to this bound (default: twice the minimum).
        #[arg(long)]
        up_to: Option<u64>,
        /// Print the root data.
        #[arg(long)]
        roots: bool,
    },
    /// Upper bound p(n, k) for nilpotent algebras.
    Nilbound { n: usize, k: usize },
    /// Alpha-pruning of embeddings into gl_n via maximal reductive subalgebras.
    Prune {
        expr: String,
        #[arg(long)]
        degree: u64,
        /// Extra host tables (one table object or a list).
        #[arg(long)]
        tables: Option<PathBuf>,
    },
}

enum Failure {
    Error(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<crate::error::ParseError> for Failure {
    fn from(e: crate::error::ParseError) -> Self {
        Failure::Error(Error::Parse(e))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(Error::Io(e))
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Unsupported(_) | Error::AlphaUnavailable(_) | Error::MissingTable(_) => {
            EXIT_UNSUPPORTED
        }
        Error::DependentBasis(_) | Error::NonCommuting { .. } => EXIT_CHECK_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Run with process stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Run writing to the given streams; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

fn emit(out: &mut dyn Write, json: bool, value: serde_json::Value, text: &str) -> Result<(), Failure> {
    if json {
        writeln!(out, "{value}")?;
    } else {
        writeln!(out, "{text}")?;
    }
    Ok(())
}

fn parse(expr: &str) -> Result<ReductiveAlgebra, Failure> {
    Ok(crate::algebra::parse_expr(expr)?)
}

fn load_tables(file: Option<&Path>) -> Result<TableSet, Failure> {
    let mut set = TableSet::default();
    if let Some(dir) = std::env::var_os(TABLES_ENV) {
        set.load_dir(Path::new(&dir))?;
    }
    if let Some(f) = file {
        set.load_file(f)?;
    }
    Ok(set)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Mu { expr } => {
            let g = parse(expr)?;
            let mu = invariants::mu(&g);
            emit(out, json, json!({"algebra": g, "mu": mu}), &mu.to_string())
        }
        Command::Alpha { expr, tables } => {
            let g = parse(expr)?;
            let set = load_tables(tables.as_deref())?;
            let a = set
                .alpha_table()
                .alpha(&g)
                .ok_or_else(|| Error::AlphaUnavailable(g.to_string()))?;
            emit(out, json, json!({"algebra": g, "alpha": a}), &a.to_string())
        }
        Command::Dim { expr } => {
            let g = parse(expr)?;
            let d = invariants::dim_of(&g);
            emit(out, json, json!({"algebra": g, "dim": d}), &d.to_string())
        }
        Command::Construct { expr, out: path } => {
            let g = parse(expr)?;
            let r = matrixrep::reductive_min_rep(&g)?;
            match path {
                Some(p) => {
                    matrixrep::write_rep_file(&r, p)?;
                    emit(
                        out,
                        json,
                        json!({"algebra": g, "degree": r.degree(), "file": p}),
                        &format!("wrote {} (degree {})", p.display(), r.degree()),
                    )
                }
                None => {
                    let text = serde_json::to_string_pretty(&matrixrep::rep_to_json(&r))
                        .map_err(Error::from)?;
                    writeln!(out, "{text}")?;
                    Ok(())
                }
            }
        }
        Command::Verify { file } => {
            let r = matrixrep::read_rep_file(file)?;
            let sc = StructureConstants::for_algebra(&r.algebra())?;
            let report = matrixrep::verify_rep(&r, &sc)?;
            if json {
                writeln!(out, "{}", serde_json::to_value(&report).map_err(Error::from)?)?;
            }
            if !report.is_homomorphism() {
                let (a, b) = &report.violations[0];
                return Err(Failure::Check(format!(
                    "bracket of {a} and {b} not preserved ({} violations)",
                    report.violations.len()
                )));
            }
            if report.kernel_dim > 0 {
                return Err(Failure::Check(format!(
                    "not faithful: kernel dimension {}",
                    report.kernel_dim
                )));
            }
            if !json {
                writeln!(out, "faithful, degree {}", report.degree)?;
            }
            Ok(())
        }
        Command::Enumerate { n } => {
            if *n == 0 {
                return Err(Error::InvalidArgument("n must be >= 1".into()).into());
            }
            let list = classify::enumerate_gln(*n);
            if json {
                writeln!(out, "{}", json!(list))?;
            } else {
                for g in &list {
                    writeln!(out, "{g}")?;
                }
            }
            Ok(())
        }
        Command::OracleMinmatrix { expr, max_f } => {
            let g = parse(expr)?;
            if !g.is_semisimple() || g.is_zero() {
                return Err(Error::Unsupported(format!(
                    "oracle-minmatrix needs a nonzero semisimple algebra, got {g}"
                ))
                .into());
            }
            let formula = invariants::mu(&g);
            let bound = max_f.unwrap_or(formula);
            let dim_sets: Vec<_> = g
                .simples()
                .iter()
                .map(|&t| RootData::new(t).irrep_dims_upto(bound))
                .collect();
            if dim_sets.iter().any(|s| s.is_empty()) {
                return Err(Error::UnboundedSearch.into());
            }
            let found = repmodel::min_faithful_value(&dim_sets, g.length(), bound)?;
            emit(
                out,
                json,
                json!({
                    "algebra": g,
                    "min_f": found.value,
                    "mu": formula,
                    "witness": found.witness,
                    "nodes": found.nodes,
                }),
                &format!(
                    "min f = {} (mu = {formula}), witness {:?}",
                    found.value,
                    found.witness.rows()
                ),
            )?;
            if found.value != formula {
                return Err(Failure::Check(format!(
                    "search gives {} but mu({g}) = {formula}",
                    found.value
                )));
            }
            Ok(())
        }
        Command::OracleWeyl {
            simple_type,
            up_to,
            roots,
        } => {
            let t: SimpleType = simple_type.parse()?;
            let data = RootData::new(t);
            let min = data.min_nontrivial_dim();
            let dims = data.irrep_dims_upto(up_to.unwrap_or(2 * min));
            if json {
                let mut v = json!({"type": t, "min": min, "table": t.mu(), "dims": dims});
                if *roots {
                    v["roots"] = serde_json::to_value(&data).map_err(Error::from)?;
                }
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{t}: min nontrivial degree {min} (table {})", t.mu())?;
                let list: Vec<String> = dims.iter().map(u64::to_string).collect();
                writeln!(out, "degrees: {}", list.join(" "))?;
                if *roots {
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&data).map_err(Error::from)?
                    )?;
                }
            }
            if min != t.mu() {
                return Err(Failure::Check(format!(
                    "Weyl minimum {min} differs from table value {} for {t}",
                    t.mu()
                )));
            }
            Ok(())
        }
        Command::Nilbound { n, k } => {
            let p = invariants::p_bound(*n, *k)?;
            emit(out, json, json!({"n": n, "k": k, "p": p.to_string()}), &p.to_string())
        }
        Command::Prune {
            expr,
            degree,
            tables,
        } => {
            let g = parse(expr)?;
            let set = load_tables(tables.as_deref())?;
            let v = classify::embeddability_check(&g, *degree, &set)?;
            if json {
                writeln!(out, "{}", serde_json::to_value(&v).map_err(Error::from)?)?;
                return Ok(());
            }
            let outcome = match v.outcome {
                Outcome::ProvenImpossible => "proven-impossible",
                Outcome::Inconclusive => "inconclusive",
            };
            writeln!(out, "{g} in gl_{degree}: {outcome}")?;
            for e in &v.trace {
                let mark = if e.reason.excludes() { "x" } else { "-" };
                writeln!(out, "  {mark} {} in {}: {}", e.candidate, e.host, e.reason)?;
            }
            let excluded: Vec<String> = v.excluded.iter().map(|h| h.to_string()).collect();
            writeln!(out, "excluded for every candidate: [{}]", excluded.join(", "))?;
            writeln!(
                out,
                "alpha bound: {}",
                if v.alpha_bound_allows { "allows" } else { "violated" }
            )?;
            Ok(())
        }
    }
}
