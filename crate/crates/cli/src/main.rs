use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use species_cli::output::{self, Listing};
use species_cli::{parse, Evaluator};
use species_core::{oracle, Catalog, Rational};

const EVAL_ERROR: u8 = 1;
const PARSE_ERROR: u8 = 2;
const MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "species",
    version,
    about = "Exact cycle index series of combinatorial species"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SeriesArgs {
    /// Species expression, e.g. "E(E+)" or "log(G - 1)"
    expr: String,
    /// Highest degree to print
    #[arg(short = 'n', default_value_t = 10)]
    n: usize,
    /// Refuse degrees above this
    #[arg(long, default_value_t = 30)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Exponential generating series coefficients
    Egf(SeriesArgs),
    /// Type generating series coefficients
    Tgf(SeriesArgs),
    /// Cycle index components, one `degree: poly` line each
    Cis(SeriesArgs),
    /// Labeled structure counts
    Labeled(SeriesArgs),
    /// Unlabeled structure counts
    Unlabeled(SeriesArgs),
    /// Labeled and unlabeled counts of point-determining bipartite graphs
    Table {
        #[arg(value_enum)]
        family: TableFamily,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Compare brute-force enumeration with the algebra
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Print passing checks too
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFamily {
    Pbp,
    Cpbp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Text,
}

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn series_command(args: &SeriesArgs, kind: Listing) -> ExitCode {
    let expr = match parse(&args.expr) {
        Ok(e) => e,
        Err(e) => return fail(PARSE_ERROR, e),
    };
    if args.n > args.cap {
        return fail(
            EVAL_ERROR,
            format!(
                "degree {} exceeds the cap {} (raise with --cap)",
                args.n, args.cap
            ),
        );
    }
    let lines = Evaluator::new()
        .eval(&expr)
        .and_then(|s| output::listing(&s, kind, args.n));
    match lines {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(EVAL_ERROR, e),
    }
}

fn table(family: TableFamily, max_n: usize, format: Format) -> ExitCode {
    let catalog = Catalog::<Rational>::new();
    let series = match family {
        TableFamily::Pbp => catalog.pipeline().pbp(),
        TableFamily::Cpbp => catalog.pipeline().cpbp(),
    };
    match output::table_rows(&series, max_n) {
        Ok(rows) => {
            print!(
                "{}",
                match format {
                    Format::Tsv => output::format_tsv(&rows),
                    Format::Text => output::format_text(&rows),
                }
            );
            ExitCode::SUCCESS
        }
        Err(e) => fail(EVAL_ERROR, e),
    }
}

fn verify(max_n: usize, verbose: bool) -> ExitCode {
    let started = Instant::now();
    let catalog = Catalog::<Rational>::new();
    let report = oracle::verify_families(&catalog, max_n).and_then(|mut r| {
        r.checks
            .extend(oracle::verify_functor_laws(max_n.min(4))?.checks);
        Ok(r)
    });
    let report = match report {
        Ok(r) => r,
        Err(e) => return fail(EVAL_ERROR, e),
    };
    for check in &report.checks {
        if verbose || !check.passed() {
            println!("{check}");
        }
    }
    let failed = report.failures().count();
    println!(
        "{} checks, {} failed, {:.1}s",
        report.checks.len(),
        failed,
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(MISMATCH)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Egf(a) => series_command(&a, Listing::Egf),
        Command::Tgf(a) => series_command(&a, Listing::Tgf),
        Command::Cis(a) => series_command(&a, Listing::Cis),
        Command::Labeled(a) => series_command(&a, Listing::Labeled),
        Command::Unlabeled(a) => series_command(&a, Listing::Unlabeled),
        Command::Table {
            family,
            max_n,
            format,
        } => table(family, max_n, format),
        Command::Verify { max_n, verbose } => verify(max_n, verbose),
    }
}
