use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ischur_core::schur::formulas::{generator_matrix, multi_mul, short_mul, Kind};
use ischur_core::tensor::{ui_action_closed, UiGen};
use ischur_core::{
    run_suite, Composition, MultiIndex, SchurAlgebra, SchurElement, Suite, SuiteConfig,
    TensorVector, ThetaMatrix,
};
use serde_json::json;

/// Exact computations in iSchur algebras of type AIII.
#[derive(Parser)]
#[command(name = "ischur", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard basis of S(n, r) as matrices.
    Basis(Grid),
    /// Multiply two basis elements.
    Mult {
        #[command(flatten)]
        grid: Grid,
        /// Left factor as JSON rows, e.g. [[0,1],[1,0]].
        #[arg(long)]
        lhs: String,
        /// Right factor as JSON rows.
        #[arg(long)]
        rhs: String,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// Run a verification suite and print its report.
    Verify {
        /// short, multi, long, triangular, leading, relations, commuting,
        /// divided, kbinom or stability.
        suite: Suite,
        #[command(flatten)]
        grid: Grid,
        /// Weights range over [-jbox, jbox]^{2n}.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(0..=2))]
        jbox: i64,
        /// Corrupt the first case (checks the failure path).
        #[arg(long, hide = true)]
        perturb: bool,
    },
    /// Act by a generator on a basis vector of the tensor space.
    TensorAct {
        #[command(flatten)]
        grid: Grid,
        /// d_j, d_j^-1, e_h, f_h or t.
        #[arg(long)]
        gen: UiGen,
        /// Comma-separated i_1,...,i_r.
        #[arg(long)]
        index: String,
    },
    /// Write all nonzero structure constants of S(n, r) to a file.
    Table {
        #[command(flatten)]
        grid: Grid,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(clap::Args)]
struct Grid {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    n: u8,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    r: u8,
}

impl Grid {
    fn get(&self) -> (usize, usize) {
        (self.n as usize, self.r as usize)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    Formula,
    Both,
}

/// Usage and input problems exit with 2, failed verifications with 1.
enum Outcome {
    Ok,
    Failed,
}

fn threads() -> Result<Option<usize>> {
    match std::env::var("ISCHUR_THREADS") {
        Ok(s) => {
            let k: usize =
                s.parse().ok().filter(|&k| k > 0).ok_or_else(|| {
                    anyhow!("ISCHUR_THREADS must be a positive integer, got {s:?}")
                })?;
            Ok(Some(k))
        }
        Err(_) => Ok(None),
    }
}

fn parse_matrix(s: &str, n: usize, r: usize) -> Result<ThetaMatrix> {
    let rows: Vec<Vec<u32>> =
        serde_json::from_str(s).with_context(|| format!("bad matrix JSON {s:?}"))?;
    let a = ThetaMatrix::from_rows(&rows)?;
    if a.n() != n || a.total() as usize != 2 * r {
        bail!("{a:?} is not a basis matrix of S({n}, {r})");
    }
    Ok(a)
}

/// Reads `A` as `diag(lambda hat) + m E^theta` for some generator.
fn as_generator(a: &ThetaMatrix) -> Option<(Kind, usize, u32, Composition)> {
    let n = a.n();
    let lambda = Composition::new(a.diagonal()[..n].to_vec()).ok()?;
    let half = a.total() / 2;
    let mut shapes: Vec<(Kind, usize)> = (1..n)
        .flat_map(|h| [(Kind::Raise, h), (Kind::Lower, h)])
        .collect();
    shapes.push((Kind::Theta, n));
    for (kind, h) in shapes {
        for m in 1..=half {
            if kind == Kind::Theta && m > 1 {
                continue;
            }
            if generator_matrix(kind, h, m, &lambda) == *a {
                return Some((kind, h, m, lambda));
            }
        }
    }
    None
}

fn formula_product(a: &ThetaMatrix, b: &ThetaMatrix) -> Result<SchurElement> {
    let (kind, h, m, lambda) = as_generator(a).ok_or_else(|| {
        anyhow!("{a:?} is not of the form diag + m E^theta, so no closed formula applies")
    })?;
    let out = if m == 1 {
        short_mul(kind, h, &lambda, b)?
    } else {
        multi_mul(kind, h, m, &lambda, b)?
    };
    Ok(out)
}

fn print(v: &serde_json::Value) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{}", serde_json::to_string_pretty(v)?) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Basis(grid) => {
            let (n, r) = grid.get();
            let alg = SchurAlgebra::get(n, r)?;
            print(&serde_json::to_value(alg.basis_matrices())?)?;
            Ok(Outcome::Ok)
        }
        Command::Mult {
            grid,
            lhs,
            rhs,
            method,
        } => {
            let (n, r) = grid.get();
            let a = parse_matrix(&lhs, n, r)?;
            let b = parse_matrix(&rhs, n, r)?;
            let alg = SchurAlgebra::get(n, r)?;
            match method {
                Method::Oracle => {
                    print(&serde_json::to_value(alg.structure_constant(&a, &b)?)?)?;
                    Ok(Outcome::Ok)
                }
                Method::Formula => {
                    print(&serde_json::to_value(formula_product(&a, &b)?)?)?;
                    Ok(Outcome::Ok)
                }
                Method::Both => {
                    let oracle = alg.structure_constant(&a, &b)?;
                    let formula = formula_product(&a, &b)?;
                    let matched = oracle == formula;
                    print(&json!({"oracle": oracle, "formula": formula, "match": matched}))?;
                    Ok(if matched {
                        Outcome::Ok
                    } else {
                        Outcome::Failed
                    })
                }
            }
        }
        Command::Verify {
            suite,
            grid,
            jbox,
            perturb,
        } => {
            let (n, r) = grid.get();
            let cfg = SuiteConfig {
                n,
                r,
                jbox,
                perturb,
                threads: threads()?,
            };
            let report = run_suite(suite, &cfg)?;
            eprintln!(
                "{suite} (n = {n}, r = {r}): {} cases, {} failures, {:.3} s",
                report.cases,
                report.failures.len(),
                report.wall.as_secs_f64()
            );
            print(&serde_json::to_value(&report)?)?;
            Ok(if report.passed() {
                Outcome::Ok
            } else {
                Outcome::Failed
            })
        }
        Command::TensorAct { grid, gen, index } => {
            let (n, r) = grid.get();
            let entries: Vec<usize> = index
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .with_context(|| format!("bad index list {index:?}"))?;
            if entries.len() != r {
                bail!("index has {} entries but r = {r}", entries.len());
            }
            let i = MultiIndex::new(entries, n)?;
            let out = ui_action_closed(&gen, &TensorVector::basis(n, &i))?;
            print(&serde_json::to_value(&out)?)?;
            Ok(Outcome::Ok)
        }
        Command::Table { grid, out } => {
            let (n, r) = grid.get();
            let alg = SchurAlgebra::get(n, r)?;
            let basis = alg.basis_matrices();
            let mut products = Vec::new();
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    if a.co() != b.ro() {
                        continue;
                    }
                    let row = alg.basis_product(i as u32, j as u32)?;
                    let terms: Vec<_> = row
                        .iter()
                        .map(|(k, c)| json!({"index": k, "coeff": c}))
                        .collect();
                    products.push(json!({"lhs": i, "rhs": j, "terms": terms}));
                }
            }
            let doc = json!({"n": n, "r": r, "basis": basis, "products": products});
            fs::write(&out, serde_json::to_string(&doc)?)
                .with_context(|| format!("writing {}", out.display()))?;
            eprintln!("wrote {} products to {}", products.len(), out.display());
            Ok(Outcome::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
