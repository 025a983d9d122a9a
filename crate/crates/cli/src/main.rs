//! `isoschubert`: Pieri products, Giambelli polynomials and quantum products
//! on IG(n−k, 2n) and OG(n−k, 2n+1), plus the verification suites.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on bad
//! arguments or a domain error.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use isoschubert::verify::{self, CheckReport, GridPoint};
use isoschubert::{
    classical_giambelli, classical_pieri, enumerate_p, qh_multiply, quantum_giambelli, quantum_pieri_ig,
    quantum_pieri_og, Family, GiambelliPolynomial, Partition, QuantumCombination, SpaceContext,
};

#[derive(Parser)]
#[command(name = "isoschubert", version, about = "Exact Schubert calculus on isotropic Grassmannians")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// List P(k, n) in weight-then-reverse-lex order.
    Enumerate {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Classical Pieri product σ_p·σ_λ (τ_p·τ_λ for OG).
    Pieri(PieriArgs),
    /// Quantum Pieri product.
    Qpieri(PieriArgs),
    /// Classical Giambelli polynomial of σ_λ (τ-form for OG).
    Giambelli(ClassArgs),
    /// Quantum Giambelli polynomial of σ_λ.
    Qgiambelli(ClassArgs),
    /// Quantum product σ_λ·σ_μ.
    Multiply {
        #[command(flatten)]
        class: ClassArgs,
        /// Second partition, e.g. `2,1`; `0` or omitted means ∅.
        #[arg(long, default_value = "")]
        mu: Partition,
    },
    /// Run the verification suites over a (k, n) grid.
    Verify {
        /// Comma-separated `k:n` points.
        #[arg(long, default_value = "0:2,0:3,0:4,1:2,1:3,1:4,2:3,2:4,2:5")]
        grid: String,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Worker threads for grid points (default: all cores).
        #[arg(long, env = "ISOSCHUBERT_WORKERS")]
        workers: Option<usize>,
        /// Skip the grid-independent checks.
        #[arg(long)]
        grid_only: bool,
    },
}

#[derive(Args)]
struct ContextArgs {
    #[arg(long, default_value = "IG")]
    family: Family,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
}

impl ContextArgs {
    fn context(&self) -> isoschubert::Result<SpaceContext> {
        SpaceContext::new(self.family, self.n, self.k)
    }

    fn header(&self) -> Value {
        json!({"family": self.family.to_string(), "n": self.n, "k": self.k})
    }
}

#[derive(Args)]
struct ClassArgs {
    #[command(flatten)]
    ctx: ContextArgs,
    /// Partition, e.g. `4,3`; `0` or omitted means ∅.
    #[arg(long, default_value = "")]
    lambda: Partition,
}

#[derive(Args)]
struct PieriArgs {
    #[command(flatten)]
    class: ClassArgs,
    /// Degree of the special class.
    #[arg(long)]
    p: u32,
}

enum Failure {
    Domain(isoschubert::Error),
    Verification,
    Io(io::Error),
}

impl From<isoschubert::Error> for Failure {
    fn from(e: isoschubert::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            drop(out);
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn combination_json(header: Value, extra: &[(&str, Value)], combination: &QuantumCombination) -> Value {
    let mut value = header;
    for (key, v) in extra {
        value[*key] = v.clone();
    }
    value["terms"] = serde_json::to_value(combination.to_records()).expect("records serialize");
    value
}

fn polynomial_json(header: Value, lambda: &Partition, poly: &GiambelliPolynomial) -> Value {
    let mut value = header;
    value["lambda"] = json!(lambda.parts());
    value["polynomial"] = serde_json::to_value(poly).expect("polynomials serialize");
    value
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let text = cli.format == Format::Text;
    match &cli.command {
        Command::Enumerate { k, n } => {
            let list = enumerate_p(*k, *n)?;
            if text {
                for lambda in &list {
                    writeln!(out, "{lambda}")?;
                }
            } else {
                let parts: Vec<&[u32]> = list.iter().map(Partition::parts).collect();
                writeln!(out, "{}", json!({"k": k, "n": n, "count": list.len(), "partitions": parts}))?;
            }
        }
        Command::Pieri(args) | Command::Qpieri(args) => {
            let quantum = matches!(cli.command, Command::Qpieri(_));
            let ctx = args.class.ctx.context()?;
            let lambda = &args.class.lambda;
            let product = match (quantum, ctx.family) {
                (false, _) => QuantumCombination::from(&classical_pieri(&ctx, args.p, lambda)?),
                (true, Family::IG) => quantum_pieri_ig(&ctx, args.p, lambda)?,
                (true, Family::OG) => quantum_pieri_og(&ctx, args.p, lambda)?,
            };
            if text {
                writeln!(out, "{product}")?;
            } else {
                let extra = [("p", json!(args.p)), ("lambda", json!(lambda.parts()))];
                writeln!(out, "{}", combination_json(args.class.ctx.header(), &extra, &product))?;
            }
        }
        Command::Giambelli(args) | Command::Qgiambelli(args) => {
            let ctx = args.ctx.context()?;
            ctx.check(&args.lambda)?;
            let poly = match cli.command {
                Command::Giambelli(_) => classical_giambelli(ctx.family, &args.lambda, ctx.k)?,
                _ => quantum_giambelli(&args.lambda, &ctx)?,
            };
            if text {
                writeln!(out, "{poly}")?;
            } else {
                writeln!(out, "{}", polynomial_json(args.ctx.header(), &args.lambda, &poly))?;
            }
        }
        Command::Multiply { class, mu } => {
            let ctx = class.ctx.context()?;
            let product = qh_multiply(&ctx, &class.lambda, mu)?;
            if text {
                writeln!(out, "{product}")?;
            } else {
                let extra = [("lambda", json!(class.lambda.parts())), ("mu", json!(mu.parts()))];
                writeln!(out, "{}", combination_json(class.ctx.header(), &extra, &product))?;
            }
        }
        Command::Verify { grid, seed, workers, grid_only } => {
            let points = verify::parse_grid(grid)?;
            let reports = run_verification(&points, *seed, *workers, *grid_only)?;
            let failures = reports.iter().filter(|r| !r.ok).count();
            for report in &reports {
                if text {
                    if !report.ok {
                        writeln!(out, "{report}")?;
                    }
                } else {
                    writeln!(out, "{}", serde_json::to_string(report).expect("reports serialize"))?;
                }
            }
            if text {
                writeln!(out, "{} checks, {failures} failed", reports.len())?;
            }
            if failures > 0 {
                out.flush()?;
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

/// Grid points fan out over a rayon pool; results are collected in grid
/// order so the output does not depend on scheduling.
fn run_verification(
    points: &[GridPoint],
    seed: u64,
    workers: Option<usize>,
    grid_only: bool,
) -> isoschubert::Result<Vec<CheckReport>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| isoschubert::Error::Unsupported(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        let per_point: Vec<Vec<CheckReport>> = points
            .par_iter()
            .map(|&point| verify::grid_point_suite(point, seed))
            .collect::<isoschubert::Result<_>>()?;
        let mut reports: Vec<CheckReport> = per_point.into_iter().flatten().collect();
        if !grid_only {
            reports.extend(verify::global_suite(seed));
        }
        Ok(reports)
    })
}
