//! Command line front end: `verify`, `batch` and `emit`.
//!
//! Exit codes: 0 when π1 is trivial (or the artifact was written), 2 on a
//! mathematical mismatch, 3 when the coset budget overflowed, 4 on invalid
//! arguments or I/O failure.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use log::error;
use serde::Serialize;

use crate::engine::{
    tietze_simplify, verify_with, Strategy, VerificationReport, VerifyOptions, DEFAULT_MAX_COSETS, MAX_COSETS_ENV,
};
use crate::monodromy::{full_factorization, Factorization};
use crate::van_kampen::{presentation_g, presentation_g1, GroupPresentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "conecover",
    version,
    about = "Verify simply-connectedness of Galois covers of cones over stick curves"
)]
pub struct Cli {
    /// Log filter for standard error (error, warn, info, debug, trace)
    #[arg(long, global = true, default_value = "warn")]
    pub log_level: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the full pipeline for one k and write the JSON report
    Verify {
        #[arg(long)]
        k: u32,
        #[arg(long, env = MAX_COSETS_ENV, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Write the report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Hlt)]
        strategy: StrategyArg,
        /// Enumerate the unsimplified G1 presentation
        #[arg(long)]
        raw: bool,
    },
    /// Verify every k in a range; one report per k plus a summary table
    Batch {
        #[arg(long)]
        k_from: u32,
        #[arg(long)]
        k_to: u32,
        #[arg(long, default_value = "reports")]
        out_dir: PathBuf,
        #[arg(long, env = MAX_COSETS_ENV, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Parallel workers (default: available cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Export the factorization or a presentation
    Emit {
        #[arg(value_enum)]
        kind: EmitKind,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = StageArg::Raw)]
        stage: StageArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmitKind {
    Factorization,
    Presentation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StageArg {
    Raw,
    G1,
    Simplified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Hlt,
    Felsch,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Hlt => Strategy::Hlt,
            StrategyArg::Felsch => Strategy::Felsch,
        }
    }
}

/// Exit code a report calls for.
pub fn report_exit_code(r: &VerificationReport) -> i32 {
    match r.pi1_trivial {
        None => EXIT_OVERFLOW,
        Some(true) => EXIT_OK,
        Some(false) => EXIT_MISMATCH,
    }
}

fn write_out(out: Option<&Path>, body: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, body),
        None => stdout.write_all(body.as_bytes()),
    }
}

#[derive(Serialize)]
struct JsonFactor<'a> {
    tag: &'a str,
    core: [String; 2],
    side: String,
    power: u8,
    conj: String,
}

pub fn factorization_json(f: &Factorization) -> String {
    let v: Vec<JsonFactor> = f
        .iter()
        .map(|(x, tag)| JsonFactor {
            tag,
            core: [x.core_a.to_string(), x.core_b.to_string()],
            side: x.side.to_string(),
            power: x.power,
            conj: x.conjugator.to_string(),
        })
        .collect();
    serde_json::to_string_pretty(&v).unwrap() + "\n"
}

pub fn presentation_for(k: u32, stage: StageArg) -> crate::Result<GroupPresentation> {
    let g = presentation_g(&full_factorization(k)?);
    Ok(match stage {
        StageArg::Raw => g,
        StageArg::G1 => presentation_g1(&g)?,
        StageArg::Simplified => tietze_simplify(&presentation_g1(&g)?),
    })
}

/// Summary line: k, k!, |G1|, c1², classification, verdict.
pub fn summary_row(r: &VerificationReport) -> String {
    let verdict = match r.pi1_trivial {
        Some(true) => "pi1_trivial",
        Some(false) => "mismatch",
        None => "overflow",
    };
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}",
        r.k,
        r.expected_order,
        r.g1_order.as_deref().unwrap_or("-"),
        r.c1_squared,
        r.classification,
        verdict
    )
}

pub const SUMMARY_HEADER: &str = "k\tk!\tg1_order\tc1_squared\tclassification\tverdict";

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let _ = env_logger::Builder::new().parse_filters(&cli.log_level).target(env_logger::Target::Stderr).try_init();
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(msg) => {
            error!("{msg}");
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: Command, stdout: &mut dyn Write) -> Result<i32, String> {
    match cmd {
        Command::Verify { k, max_cosets, out, strategy, raw } => {
            if k < 4 {
                return Err(format!("verify needs k >= 4, got {k}"));
            }
            if max_cosets == 0 {
                return Err("--max-cosets must be at least 1".into());
            }
            let opts = VerifyOptions { max_cosets, strategy: strategy.into(), raw };
            let r = verify_with(k, opts).map_err(|e| e.to_string())?;
            write_out(out.as_deref(), &(r.to_json() + "\n"), stdout).map_err(|e| e.to_string())?;
            Ok(report_exit_code(&r))
        }
        Command::Batch { k_from, k_to, out_dir, max_cosets, jobs } => {
            if k_from < 4 || k_from > k_to {
                return Err(format!("need 4 <= k-from <= k-to, got {k_from}..{k_to}"));
            }
            if max_cosets == 0 {
                return Err("--max-cosets must be at least 1".into());
            }
            std::fs::create_dir_all(&out_dir).map_err(|e| e.to_string())?;
            let ks: Vec<u32> = (k_from..=k_to).collect();
            let jobs =
                jobs.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)).max(1);
            let reports = batch_reports(&ks, max_cosets, jobs, &out_dir)?;
            let mut table = String::from(SUMMARY_HEADER);
            table.push('\n');
            for r in &reports {
                table.push_str(&summary_row(r));
                table.push('\n');
            }
            std::fs::write(out_dir.join("summary.tsv"), &table).map_err(|e| e.to_string())?;
            stdout.write_all(table.as_bytes()).map_err(|e| e.to_string())?;
            let codes: Vec<i32> = reports.iter().map(report_exit_code).collect();
            Ok(if codes.contains(&EXIT_MISMATCH) {
                EXIT_MISMATCH
            } else if codes.contains(&EXIT_OVERFLOW) {
                EXIT_OVERFLOW
            } else {
                EXIT_OK
            })
        }
        Command::Emit { kind, k, stage, format, out } => {
            if k < 4 {
                return Err(format!("emit needs k >= 4, got {k}"));
            }
            let body = match kind {
                EmitKind::Factorization => {
                    let f = full_factorization(k).map_err(|e| e.to_string())?;
                    match format {
                        Format::Text => f.to_text(),
                        Format::Json => factorization_json(&f),
                    }
                }
                EmitKind::Presentation => {
                    let p = presentation_for(k, stage).map_err(|e| e.to_string())?;
                    match format {
                        Format::Text => p.to_text(),
                        Format::Json => p.to_json() + "\n",
                    }
                }
            };
            write_out(out.as_deref(), &body, stdout).map_err(|e| e.to_string())?;
            Ok(EXIT_OK)
        }
    }
}

/// Verifies each k on a small worker pool; reports come back in k order.
fn batch_reports(
    ks: &[u32],
    max_cosets: usize,
    jobs: usize,
    out_dir: &Path,
) -> Result<Vec<VerificationReport>, String> {
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results: Vec<std::sync::Mutex<Option<Result<VerificationReport, String>>>> =
        ks.iter().map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..jobs.min(ks.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                let Some(&k) = ks.get(i) else { break };
                let opts = VerifyOptions { max_cosets, ..Default::default() };
                let r = verify_with(k, opts).map_err(|e| e.to_string()).and_then(|r| {
                    let path = out_dir.join(format!("report-k{k}.json"));
                    std::fs::write(&path, r.to_json() + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
                    Ok(r)
                });
                *results[i].lock().unwrap() = Some(r);
            });
        }
    });
    results.into_iter().map(|m| m.into_inner().unwrap().expect("every k is processed")).collect()
}
