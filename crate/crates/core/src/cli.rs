//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 on input
//! errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{f_height, f_rank, f_rank_upper, f_wh, f_wh_upper, f_width, f_width_upper, valid_ranks};
use crate::dataset::{load_dataset, write_report};
use crate::error::{Error, Result};
use crate::exact::format_rational;
use crate::oracle::{verify_closed_forms, Mismatch};
use crate::tuples::all_tuples;
use crate::witness::{BoundMode, Measurement, Unit, Witness, WitnessReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "youngwit", version, about = "Entanglement bounds from Young diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a class bound over its domain as CSV.
    Bounds(BoundsArgs),
    /// Infer w, h, r and excluded tuples from measurements.
    Analyze(AnalyzeArgs),
    /// Inferred Dyson rank per dataset record as CSV.
    RankSummary(RankSummaryArgs),
    /// Check every closed form against brute-force enumeration.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassSelector {
    W,
    H,
    R,
    Wh,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Number of particles.
    #[arg(long)]
    pub n: u32,
    /// Bounded quantity: max width, min height, max rank, or (width, height).
    #[arg(long, value_enum)]
    pub class: ClassSelector,
    /// Use the closed forms that ignore integer block structure.
    #[arg(long)]
    pub simple: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Number of particles.
    #[arg(long, requires = "value")]
    pub n: Option<u32>,
    /// Measured lower bound on the quantum Fisher information.
    #[arg(long, group = "value", allow_hyphen_values = true)]
    pub fq: Option<String>,
    /// Measured squeezing coefficient, linear scale.
    #[arg(long, group = "value", allow_hyphen_values = true)]
    pub xi2: Option<String>,
    /// Measured squeezing coefficient in dB.
    #[arg(long = "xi2-db", group = "value", allow_hyphen_values = true)]
    pub xi2_db: Option<String>,
    /// CSV dataset with header label,n,kind,value,unit,reference.
    #[arg(long, conflicts_with_all = ["n", "value"])]
    pub dataset: Option<PathBuf>,
    /// Label for a single measurement given on the command line.
    #[arg(long, conflicts_with = "dataset")]
    pub label: Option<String>,
    /// Use the simplified bounds instead of the tight ones.
    #[arg(long)]
    pub simple: bool,
    /// Output directory for `<label>/report.json` and `<label>/grid.csv`.
    #[arg(long, default_value = "reports")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct RankSummaryArgs {
    #[arg(long)]
    pub dataset: PathBuf,
    /// Use the simplified bounds instead of the tight ones.
    #[arg(long)]
    pub simple: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest particle number to check.
    #[arg(long, default_value_t = 30)]
    pub nmax: u32,
}

fn io_err(e: std::io::Error) -> Error {
    Error::Dataset(format!("write failed: {e}"))
}

fn mode(simple: bool) -> BoundMode {
    if simple {
        BoundMode::Simple
    } else {
        BoundMode::Tight
    }
}

/// Runs a parsed command, writing its primary output to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    match cli.command {
        Command::Bounds(args) => {
            write_bounds(&args, out)?;
            Ok(EXIT_OK)
        }
        Command::Analyze(args) => {
            let measurements = analyze_inputs(&args)?;
            let reports = analyze(&measurements, mode(args.simple), Some(&args.out))?;
            write_summary(&reports, out)?;
            Ok(EXIT_OK)
        }
        Command::RankSummary(args) => {
            let records = load_dataset(&args.dataset)?;
            rank_summary(&records, mode(args.simple), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            if args.nmax < 2 {
                return Err(Error::Domain {
                    what: "nmax",
                    value: args.nmax.into(),
                    n: 2,
                });
            }
            let mismatches = verify_closed_forms(args.nmax);
            write_mismatches(&mismatches, out)?;
            Ok(verify_exit_code(&mismatches))
        }
    }
}

pub fn verify_exit_code(mismatches: &[Mismatch]) -> u8 {
    if mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

/// JSON lines, one per mismatch.
pub fn write_mismatches(mismatches: &[Mismatch], out: &mut dyn Write) -> Result<()> {
    for m in mismatches {
        let line = serde_json::to_string(m).expect("mismatch serializes");
        writeln!(out, "{line}").map_err(io_err)?;
    }
    Ok(())
}

pub fn write_bounds(args: &BoundsArgs, out: &mut dyn Write) -> Result<()> {
    let n = args.n;
    if n == 0 {
        return Err(Error::Domain {
            what: "n",
            value: 0,
            n,
        });
    }
    let mut text = String::new();
    match args.class {
        ClassSelector::W => {
            text.push_str("x,f\n");
            for w in 1..=n {
                let f = if args.simple { f_width_upper(n, w)? } else { f_width(n, w)? };
                text.push_str(&format!("{w},{f}\n"));
            }
        }
        ClassSelector::H => {
            text.push_str("x,f\n");
            for h in 1..=n {
                text.push_str(&format!("{h},{}\n", f_height(n, h)?));
            }
        }
        ClassSelector::R => {
            text.push_str("x,f\n");
            for r in valid_ranks(n) {
                let f = if args.simple {
                    format_rational(&f_rank_upper(n, r)?)
                } else {
                    f_rank(n, r)?.to_string()
                };
                text.push_str(&format!("{r},{f}\n"));
            }
        }
        ClassSelector::Wh => {
            text.push_str("w,h,f\n");
            for t in all_tuples(n) {
                let f = if args.simple {
                    f_wh_upper(n, t.w, t.h)?
                } else {
                    f_wh(n, t.w, t.h)?
                };
                text.push_str(&format!("{},{},{f}\n", t.w, t.h));
            }
        }
    }
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn analyze_inputs(args: &AnalyzeArgs) -> Result<Vec<Measurement>> {
    if let Some(path) = &args.dataset {
        return load_dataset(path);
    }
    let n = args
        .n
        .ok_or_else(|| Error::Measurement("--n is required without --dataset".into()))?;
    let (m, tag) = if let Some(v) = &args.fq {
        (Measurement::qfi("", n, v)?, format!("fq{v}"))
    } else if let Some(v) = &args.xi2 {
        (Measurement::squeezing("", n, v, Unit::Linear)?, format!("xi2{v}"))
    } else if let Some(v) = &args.xi2_db {
        (Measurement::squeezing("", n, v, Unit::Db)?, format!("xi2db{v}"))
    } else {
        return Err(Error::Measurement(
            "one of --fq, --xi2, --xi2-db or --dataset is required".into(),
        ));
    };
    let label = args.label.clone().unwrap_or_else(|| format!("n{n}-{tag}"));
    Ok(vec![Measurement { label, ..m }])
}

/// Builds one report per measurement, writing files under `out` if given.
pub fn analyze(
    measurements: &[Measurement],
    mode: BoundMode,
    out: Option<&Path>,
) -> Result<Vec<WitnessReport>> {
    let mut reports = Vec::with_capacity(measurements.len());
    for m in measurements {
        let report = Witness::new(m.clone(), mode)?.report()?;
        if let Some(dir) = out {
            write_report(dir, &report)?;
        }
        reports.push(report);
    }
    Ok(reports)
}

pub fn write_summary(reports: &[WitnessReport], out: &mut dyn Write) -> Result<()> {
    let mut text = format!(
        "{:<16} {:>5} {:>4} {:>8} {:>4} {:>4} {:>5} {:>6} {:>6} {:>6} {:>6}\n",
        "label", "n", "kind", "value", "w", "h", "r", "by_w", "by_h", "by_r", "by_wh"
    );
    for r in reports {
        let value = match r.unit {
            Unit::Db => format!("{}dB", r.value),
            _ => r.value.clone(),
        };
        text.push_str(&format!(
            "{:<16} {:>5} {:>4} {:>8} {:>4} {:>4} {:>5} {:>6} {:>6} {:>6} {:>6}\n",
            r.label,
            r.n,
            r.kind.as_str(),
            value,
            r.inferred.w,
            r.inferred.h,
            r.inferred.r,
            r.counts.by_w,
            r.counts.by_h,
            r.counts.by_r,
            r.counts.by_wh
        ));
    }
    out.write_all(text.as_bytes()).map_err(io_err)
}

/// CSV `label,n,r,r_plus_n`.
pub fn rank_summary(records: &[Measurement], mode: BoundMode, out: &mut dyn Write) -> Result<()> {
    let mut text = String::from("label,n,r,r_plus_n\n");
    for m in records {
        let inferred = Witness::new(m.clone(), mode)?.infer()?;
        text.push_str(&format!(
            "{},{},{},{}\n",
            m.label,
            m.n,
            inferred.r,
            i64::from(inferred.r) + i64::from(m.n)
        ));
    }
    out.write_all(text.as_bytes()).map_err(io_err)
}
