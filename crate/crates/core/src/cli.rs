//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification suite fails, 2 on a
//! usage error (bad arguments, malformed or out-of-range labels).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{contragredient, fuse_irreducible, fusion_coefficient};
use crate::labels::{IrrLabel, Level};
use crate::qdim::{global_dimension_with_digits, qdim_numeric};
use crate::vector::FusionVector;
use crate::verify::{Suite, VerificationReport, VerifyConfig, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::weights::weighted_catalog;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Digits used for quantum dimensions in the catalog.
pub const CATALOG_QDIM_DIGITS: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Unit,
    Comm,
    Assoc,
    Dual,
    Qdim,
    Oracle,
    Catalog,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "z3orbifold", version, about = "Modules, fusion rules and quantum dimensions of the Z3-orbifold of affine sl2 at level k")]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every irreducible module with weight, quantum dimension and dual.
    Catalog {
        #[arg(long)]
        level: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Fusion product of two irreducibles.
    Fuse {
        #[arg(long)]
        level: i64,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Fusion rule N_{A,B}^C.
    Coeff {
        #[arg(long)]
        level: i64,
        a: String,
        b: String,
        c: String,
    },
    /// Contragredient module.
    Dual {
        #[arg(long)]
        level: i64,
        a: String,
    },
    /// Quantum dimension to a number of decimal places.
    Qdim {
        #[arg(long)]
        level: i64,
        a: String,
        #[arg(long, default_value_t = 12)]
        digits: u32,
    },
    /// Global dimension, exact residue and numeric value.
    Glob {
        #[arg(long)]
        level: i64,
        #[arg(long, default_value_t = 12)]
        digits: u32,
    },
    /// Run verification suites.
    Verify {
        #[arg(long)]
        level: i64,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Largest level swept exhaustively by the cubic suites.
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Sampled instances beyond the cap; 0 refuses instead.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Parses a label in the `u:<i>:<j>` / `t1:<i>:<j>` / `t2:<i>:<j>` grammar
/// and validates it at level `k`.
pub fn parse_label(text: &str, k: Level) -> Result<IrrLabel> {
    IrrLabel::parse_at(text, k)
}

#[derive(Serialize)]
struct CatalogRow {
    label: IrrLabel,
    pretty: String,
    sector: String,
    i: u32,
    j: u8,
    weight: String,
    qdim: String,
    dual: IrrLabel,
    generator: String,
}

#[derive(Serialize)]
struct CatalogDoc {
    level: u32,
    count: usize,
    modules: Vec<CatalogRow>,
}

fn catalog_rows(k: Level) -> Result<Vec<CatalogRow>> {
    weighted_catalog(k)
        .into_iter()
        .map(|e| {
            Ok(CatalogRow {
                label: e.label,
                pretty: e.label.pretty(k),
                sector: e.label.sector().tag().to_string(),
                i: e.label.i(),
                j: e.label.j(),
                weight: e.weight.to_string(),
                qdim: qdim_numeric(e.label, k, CATALOG_QDIM_DIGITS)?.to_string(),
                dual: contragredient(e.label, k)?,
                generator: e.generator_desc,
            })
        })
        .collect()
}

fn csv_string<I, R>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Output(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn render_catalog(k: Level, format: OutputFormat) -> Result<String> {
    let rows = catalog_rows(k)?;
    Ok(match format {
        OutputFormat::Json => {
            let doc = CatalogDoc { level: k.get(), count: rows.len(), modules: rows };
            serde_json::to_string_pretty(&doc).expect("catalog serializes") + "\n"
        }
        OutputFormat::Csv => csv_string(
            &["label", "pretty", "weight", "qdim", "dual", "generator"],
            rows.iter().map(|r| {
                [r.label.to_string(), r.pretty.clone(), r.weight.clone(), r.qdim.clone(), r.dual.to_string(), r.generator.clone()]
            }),
        )?,
        OutputFormat::Markdown => {
            let mut s = format!("Irreducible modules at k = {k} ({} total)\n\n", rows.len());
            s.push_str("| module | label | ω | qdim | dual | generator |\n");
            s.push_str("|---|---|---|---|---|---|\n");
            for r in &rows {
                s.push_str(&format!(
                    "| ${}$ | `{}` | {} | {} | ${}$ | ${}$ |\n",
                    r.pretty,
                    r.label,
                    r.weight,
                    r.qdim,
                    r.dual.pretty(k),
                    r.generator
                ));
            }
            s
        }
    })
}

/// Compact JSON object with one space after `:` and `,`.
pub fn fusion_json(v: &FusionVector) -> String {
    let body: Vec<String> = v.iter().map(|(l, m)| format!("\"{l}\": {m}")).collect();
    format!("{{{}}}", body.join(", "))
}

fn render_fusion(k: Level, v: &FusionVector, format: OutputFormat) -> Result<String> {
    Ok(match format {
        OutputFormat::Json => fusion_json(v) + "\n",
        OutputFormat::Csv => csv_string(
            &["label", "multiplicity"],
            v.iter().map(|(l, m)| [l.to_string(), m.to_string()]),
        )?,
        OutputFormat::Markdown => {
            let mut s = String::from("| module | multiplicity |\n|---|---|\n");
            for (l, m) in v.iter() {
                s.push_str(&format!("| ${}$ | {m} |\n", l.pretty(k)));
            }
            s
        }
    })
}

enum Outcome {
    Output(String),
    Verified(String, bool),
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let level = |k: i64| Level::new(k);
    Ok(match &cli.command {
        Command::Catalog { level: k, format } => Outcome::Output(render_catalog(level(*k)?, *format)?),
        Command::Fuse { level: k, a, b, format } => {
            let k = level(*k)?;
            let v = fuse_irreducible(parse_label(a, k)?, parse_label(b, k)?, k)?;
            Outcome::Output(render_fusion(k, &v, *format)?)
        }
        Command::Coeff { level: k, a, b, c } => {
            let k = level(*k)?;
            let n = fusion_coefficient(parse_label(a, k)?, parse_label(b, k)?, parse_label(c, k)?, k)?;
            Outcome::Output(format!("{n}\n"))
        }
        Command::Dual { level: k, a } => {
            let k = level(*k)?;
            Outcome::Output(format!("{}\n", contragredient(parse_label(a, k)?, k)?))
        }
        Command::Qdim { level: k, a, digits } => {
            let k = level(*k)?;
            Outcome::Output(format!("{}\n", qdim_numeric(parse_label(a, k)?, k, *digits)?))
        }
        Command::Glob { level: k, digits } => {
            if *digits < 1 {
                return Err(Error::Precision);
            }
            let g = global_dimension_with_digits(level(*k)?, *digits);
            Outcome::Output(format!("exact: {}\nnumeric: {}\n", g.exact.residue(), g.numeric))
        }
        Command::Verify { level: k, suite, cap, seed, samples, json } => {
            let k = level(*k)?;
            let mut config = VerifyConfig { seed: *seed, samples: *samples, ..VerifyConfig::default() };
            if let Some(cap) = cap {
                config.cubic_cap = *cap;
            }
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Unit => vec![Suite::Unit],
                SuiteArg::Comm => vec![Suite::Comm],
                SuiteArg::Assoc => vec![Suite::Assoc],
                SuiteArg::Dual => vec![Suite::Dual],
                SuiteArg::Qdim => vec![Suite::Qdim],
                SuiteArg::Oracle => vec![Suite::Oracle],
                SuiteArg::Catalog => vec![Suite::Catalog],
            };
            let reports: Vec<VerificationReport> =
                suites.iter().map(|s| s.run(k, &config)).collect::<Result<_>>()?;
            let ok = reports.iter().all(VerificationReport::passed);
            let text = if *json {
                serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n"
            } else {
                let mut s = String::new();
                for r in &reports {
                    s.push_str(&format!("{r}\n"));
                    for f in r.failures.iter().take(10) {
                        s.push_str(&format!("  {}: lhs = {}, rhs = {}\n", f.description, f.lhs, f.rhs));
                    }
                }
                s
            };
            Outcome::Verified(text, ok)
        }
    })
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let (text, code) = match execute(&cli) {
        Ok(Outcome::Output(text)) => (text, EXIT_OK),
        Ok(Outcome::Verified(text, ok)) => (text, if ok { EXIT_OK } else { EXIT_FAILED }),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    code
}
