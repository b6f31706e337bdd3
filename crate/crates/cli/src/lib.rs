//! `degsq` command-line front end.
//!
//! Every subcommand writes to stdout unless `--output` is given. Exit status:
//! 0 on success, 1 when `verify` finds a disagreement or output cannot be
//! written, 2 on a usage error or invalid input.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use degsq::density::{density, density_rows};
use degsq::extremal::{value_c, value_s};
use degsq::optimal::optimal_set;
use degsq::oracle::{verify_range_with, OracleConfig};
use degsq::pell::{family_equality_e0, family_four, family_q0_zero, family_three, pell_solutions};
use degsq::sign::profile;

/// Environment variable overriding the oracle caps: `P` or `P,G`.
pub const CAP_ENV: &str = "DEGSQ_ORACLE_CAP";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] degsq::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Three,
    Four,
    #[value(name = "q0zero")]
    Q0Zero,
    #[value(name = "eq-e0")]
    EqE0,
}

#[derive(Debug, Parser)]
#[command(name = "degsq", version, about = "Maximum sum of squared degrees over graphs with v vertices and e edges")]
pub struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// S(v,e), C(v,e), their maximum, and which side attains it.
    Max { v: u64, e: u64 },
    /// The complete set of optimal partitions (default JSON).
    Partitions { v: u64, e: u64 },
    /// S, C and S - C for every e (default CSV).
    Profile {
        v: u64,
        /// Write the JSON summary (classification, q0, R0, segments) here.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Infinite families of classes indexed by Pell solutions (default CSV).
    Families {
        #[arg(long, value_enum)]
        name: FamilyName,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Fraction of v <= t for which the quasi-star value dominates up to the
    /// midpoint. CSV lists one row per v.
    Density { t: u64 },
    /// Compare the closed forms with brute force (default JSON).
    Verify {
        #[arg(long, default_value_t = 14)]
        max_v_partitions: u64,
        #[arg(long, default_value_t = 7)]
        max_v_graphs: u64,
    },
    /// Solutions of V^2 - 2J^2 = P (default CSV).
    Pell {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
}

/// Parses `P` or `P,G`; unset fields keep their defaults.
pub fn parse_caps(value: &str) -> Result<OracleConfig, CliError> {
    let bad = || CliError::Usage(format!("{CAP_ENV} must be `P` or `P,G` with integer caps, got {value:?}"));
    let mut config = OracleConfig::default();
    let mut fields = value.split(',').map(|f| f.trim().parse::<u64>().map_err(|_| bad()));
    config.partition_cap = fields.next().ok_or_else(bad)??;
    if let Some(g) = fields.next() {
        config.graph_cap = g?;
    }
    if fields.next().is_some() {
        return Err(bad());
    }
    Ok(config)
}

fn oracle_config() -> Result<OracleConfig, CliError> {
    match std::env::var(CAP_ENV) {
        Ok(value) => parse_caps(&value),
        Err(std::env::VarError::NotPresent) => Ok(OracleConfig::default()),
        Err(_) => Err(CliError::Usage(format!("{CAP_ENV} is not valid UTF-8"))),
    }
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

fn write_json(out: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Marks every object in a list as carrying big integers as strings.
fn with_bigint_flag(mut value: Value) -> Value {
    if let Value::Array(items) = &mut value {
        for item in items {
            if let Value::Object(map) = item {
                map.insert("bigint".into(), Value::Bool(true));
            }
        }
    }
    value
}

/// Returns the process exit status.
fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        &Command::Max { v, e } => {
            let (s, c) = (value_s(v, e)?, value_c(v, e)?);
            let side = match s.cmp(&c) {
                std::cmp::Ordering::Equal => "both",
                std::cmp::Ordering::Greater => "qs",
                std::cmp::Ordering::Less => "qc",
            };
            match cli.format.unwrap_or(Format::Plain) {
                Format::Plain => writeln!(out, "S={s} C={c} max={} {side}-optimal", s.max(c))?,
                Format::Json => write_json(
                    out,
                    &json!({"v": v, "e": e, "S": s.to_string(), "C": c.to_string(), "max": s.max(c).to_string(), "optimal": side}),
                )?,
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record(["v", "e", "S", "C", "max", "optimal"])?;
                    w.write_record([v.to_string(), e.to_string(), s.to_string(), c.to_string(), s.max(c).to_string(), side.into()])?;
                    w.flush()?;
                }
            }
        }
        &Command::Partitions { v, e } => {
            let report = optimal_set(v, e)?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => write_json(out, &report.to_json())?,
                Format::Plain => {
                    writeln!(out, "S={} C={} max={} count={}", report.s_value, report.c_value, report.max, report.count())?;
                    for o in &report.optimal {
                        let labels: Vec<&str> = o.labels.iter().map(|l| l.as_str()).collect();
                        writeln!(out, "{} {}", labels.join(","), o.parts)?;
                    }
                }
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record(["labels", "partition", "p2"])?;
                    for o in &report.optimal {
                        let labels: Vec<&str> = o.labels.iter().map(|l| l.as_str()).collect();
                        w.write_record([labels.join(" "), o.parts.to_string(), o.p2.to_string()])?;
                    }
                    w.flush()?;
                }
            }
        }
        Command::Profile { v, sidecar } => {
            let p = profile(*v)?;
            if let Some(path) = sidecar {
                write_json(&mut File::create(path)?, &p.to_json())?;
            }
            match cli.format.unwrap_or(Format::Csv) {
                Format::Json => write_json(out, &p.to_json())?,
                Format::Csv | Format::Plain => {
                    let mut w = csv_writer(out);
                    w.write_record(["v", "e", "S", "C", "diff"])?;
                    for r in p.rows() {
                        w.write_record([r.v.to_string(), r.e.to_string(), r.s.to_string(), r.c.to_string(), r.diff.to_string()])?;
                    }
                    w.flush()?;
                }
            }
        }
        &Command::Families { name, count } => {
            if count == 0 {
                return Err(CliError::Usage("--count must be at least 1".into()));
            }
            let (header, rows, value): (&[&str], Vec<Vec<String>>, Value) = match name {
                FamilyName::Three | FamilyName::Four => {
                    let f = if name == FamilyName::Three { family_three(count) } else { family_four(count) };
                    let rows = f
                        .iter()
                        .map(|m| vec![m.v.to_string(), m.k.to_string(), m.e.to_string(), m.expected_optimal_count.to_string()])
                        .collect();
                    (&["v", "k", "e", "expected_optimal_count"], rows, serde_json::to_value(&f)?)
                }
                FamilyName::Q0Zero => {
                    let f = family_q0_zero(count);
                    let rows = f.iter().map(|m| vec![m.v.to_string(), m.k.to_string()]).collect();
                    (&["v", "k"], rows, serde_json::to_value(&f)?)
                }
                FamilyName::EqE0 => {
                    let f = family_equality_e0(count);
                    let rows = f
                        .iter()
                        .map(|m| vec![m.v.to_string(), m.k.to_string(), format!("{:?}", m.variant)])
                        .collect();
                    (&["v", "k", "variant"], rows, serde_json::to_value(&f)?)
                }
            };
            match cli.format.unwrap_or(Format::Csv) {
                Format::Json => write_json(out, &with_bigint_flag(value))?,
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record(header)?;
                    for r in rows {
                        w.write_record(r)?;
                    }
                    w.flush()?;
                }
                Format::Plain => {
                    writeln!(out, "{}", header.join(" "))?;
                    for r in rows {
                        writeln!(out, "{}", r.join(" "))?;
                    }
                }
            }
        }
        &Command::Density { t } => {
            if t == 0 {
                return Err(CliError::Usage("t must be at least 1".into()));
            }
            match cli.format.unwrap_or(Format::Plain) {
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record(["v", "q0_sign", "dominant"])?;
                    for r in density_rows(t) {
                        w.write_record([r.v.to_string(), r.q0_sign.to_string(), r.dominant.to_string()])?;
                    }
                    w.flush()?;
                }
                Format::Json => {
                    let r = density(t);
                    write_json(out, &json!({"t": r.t, "n": r.n, "ratio": r.ratio.to_string(), "ratio_decimal": r.ratio_decimal}))?;
                }
                Format::Plain => {
                    let r = density(t);
                    writeln!(out, "t={} n={} ratio={} ({})", r.t, r.n, r.ratio, r.ratio_decimal)?;
                }
            }
        }
        &Command::Verify { max_v_partitions, max_v_graphs } => {
            let report = verify_range_with(max_v_partitions, max_v_graphs, &oracle_config()?)?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => write_json(out, &serde_json::to_value(&report)?)?,
                Format::Plain => {
                    writeln!(out, "checked={} disagreements={}", report.checked.len(), report.disagreements.len())?;
                    for d in &report.disagreements {
                        writeln!(out, "{:?} v={} e={} brute={} closed_form={}", d.kind, d.v, d.e, d.brute_max, d.closed_form_max)?;
                    }
                }
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record(["kind", "v", "e", "brute_max", "closed_form_max", "argmax_matches"])?;
                    for d in &report.disagreements {
                        w.write_record([
                            format!("{:?}", d.kind).to_lowercase(),
                            d.v.to_string(),
                            d.e.to_string(),
                            d.brute_max.to_string(),
                            d.closed_form_max.to_string(),
                            d.argmax_matches.to_string(),
                        ])?;
                    }
                    w.flush()?;
                }
            }
            if !report.ok() {
                return Ok(1);
            }
        }
        &Command::Pell { p, count } => {
            if count == 0 {
                return Err(CliError::Usage("--count must be at least 1".into()));
            }
            let sols = pell_solutions(p, count)?;
            match cli.format.unwrap_or(Format::Csv) {
                Format::Json => write_json(out, &with_bigint_flag(serde_json::to_value(&sols)?))?,
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record(["V", "J", "P"])?;
                    for s in &sols {
                        w.write_record([s.x.to_string(), s.y.to_string(), s.p.to_string()])?;
                    }
                    w.flush()?;
                }
                Format::Plain => {
                    for s in &sols {
                        writeln!(out, "{} {}", s.x, s.y)?;
                    }
                }
            }
        }
    }
    Ok(0)
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.output {
        Some(path) => File::create(path).map_err(CliError::from).and_then(|mut f| execute(&cli, &mut f)),
        None => execute(&cli, stdout),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            err.exit_code()
        }
    }
}
