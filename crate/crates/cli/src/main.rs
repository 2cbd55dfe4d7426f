use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use invmatch::format::write_cayley;
use invmatch::graphs::{double_cover, incidence_graph, inverse_graph};
use invmatch::green::eggbox_dump;
use invmatch::report::{analyze_loaded, MatchingRecord, Mode, Source};
use invmatch::suites::{run_suite, Suite};
use invmatch::Error;

#[derive(Parser)]
#[command(name = "invmatch", version, about = "Matchings by inverses on finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a semigroup, compute Green's relations and matchings, print a JSON report.
    Analyze {
        /// catalog name, tn:N, ptn:N, opn:N, rees:<file.json> or table:<file>
        #[arg(long)]
        semigroup: String,
        #[arg(long, default_value = "all")]
        mode: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits 1 if any claim fails.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Write a graph, egg-box or table representation.
    Export {
        #[arg(long)]
        semigroup: String,
        #[arg(long, value_enum)]
        emit: Emit,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-validate a matching file (`{"pairs": [[a, f(a)], ...], "flags": {...}}`).
    Check {
        #[arg(long)]
        semigroup: String,
        #[arg(long)]
        matching: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    DotInverse,
    DotCover,
    DotIncidence,
    Eggbox,
    Table,
}

/// Exit status for errors that are the caller's fault: bad names, files, sizes.
fn is_usage_error(err: &anyhow::Error) -> bool {
    err.chain().any(|cause| {
        matches!(
            cause.downcast_ref::<Error>(),
            Some(
                Error::UnsupportedSize(_)
                    | Error::UnknownCatalog(_)
                    | Error::Parse { .. }
                    | Error::InvalidStructure(_)
                    | Error::Io(_)
                    | Error::Json(_)
                    | Error::NotAZero(_)
                    | Error::OutOfRange { .. }
                    | Error::NotRegular
            )
        ) || cause.downcast_ref::<std::io::Error>().is_some()
    })
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { semigroup, mode, out } => {
            let source: Source = semigroup.parse()?;
            let mode: Mode = mode.parse()?;
            let s = source.load()?;
            let report = analyze_loaded(&s, &source, mode)?;
            emit(&report.to_json(), out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_n } => {
            let suite: Suite = suite.parse()?;
            let claims = run_suite(suite, max_n)?;
            let mut failed = 0;
            for c in &claims {
                println!("{} {} {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.detail);
                failed += usize::from(!c.pass);
            }
            println!("{} claims, {} failed", claims.len(), failed);
            Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Export { semigroup, emit: kind, out } => {
            let source: Source = semigroup.parse()?;
            let s = source.load()?;
            let name = s.name().to_string();
            let text = match kind {
                Emit::DotInverse => inverse_graph(&s).to_dot(&name, |a| s.label(a)),
                Emit::DotCover => double_cover(&inverse_graph(&s)).to_dot(
                    &format!("{name}-cover"),
                    |a| s.label(a),
                    |a| format!("{}'", s.label(a)),
                    ("u", "w"),
                ),
                Emit::DotIncidence => incidence_graph(&s)?.to_dot(
                    &format!("{name}-incidence"),
                    |l| format!("L{l}"),
                    |r| format!("R{r}"),
                    ("l", "r"),
                ),
                Emit::Eggbox => eggbox_dump(&s),
                Emit::Table => write_cayley(&s),
            };
            emit(&text, out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { semigroup, matching } => {
            let source: Source = semigroup.parse()?;
            let s = source.load()?;
            let text = std::fs::read_to_string(&matching).with_context(|| format!("reading {}", matching.display()))?;
            let record = MatchingRecord::from_json(&text)?;
            let (report, flags_agree) = record.revalidate(&s);
            let ok = report.ok && report.total && flags_agree;
            println!(
                "{} total={} not_inverse={:?} repeated_images={:?} flags_agree={}",
                if ok { "VALID" } else { "INVALID" },
                report.total,
                report.not_inverse,
                report.repeated_images,
                flags_agree
            );
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(if is_usage_error(&err) { 2 } else { 1 })
        }
    }
}
