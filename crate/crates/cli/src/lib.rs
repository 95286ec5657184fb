//! Command-line driver: `compute`, `crosscheck`, `enumerate`, `table` and
//! `bench`. Everything goes through [`run`] so the binary and the tests
//! share one code path.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schurq::crosscheck::{format_value, run_grid, Grid, Method, Record};
use schurq::formulas::{odd_staircase_count, q_one, QOneMethod};
use schurq::tableaux::{count_marked, enumerate_marked, gf_marked, StrictPartition};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "schurq", version, about = "Exact Schur Q-polynomials at geometric progressions and at 1^n")]
struct Cli {
    /// Emit JSON records.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV rows.
    #[arg(long, global = true)]
    csv: bool,
    /// Record elapsed microseconds (otherwise `micros` is null so output is
    /// reproducible byte for byte).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one method. Counting methods (qc, fdc, kernel, row3f2,
    /// row2f1, count) give Q_λ(1^n); the others give Q_λ(1, q, …, q^n).
    Compute {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "multisum")]
        method: String,
    },
    /// Compare every method with the tableau generating function on a grid.
    Crosscheck {
        #[command(flatten)]
        grid: GridArgs,
        /// Comma-separated method names (default: the grand crosscheck set).
        #[arg(long)]
        methods: Option<String>,
        /// Run every catalogued method instead of the grand set.
        #[arg(long)]
        all: bool,
    },
    /// List the marked shifted tableaux of shape λ with entries ≤ n, or
    /// print their generating function.
    Enumerate {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gf: bool,
    },
    /// Print a table of closed-form values.
    Table {
        kind: TableKind,
        #[arg(long, default_value_t = 4)]
        m_max: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Time each method on a small fixed grid.
    Bench {
        #[command(flatten)]
        grid: BenchGrid,
    },
}

#[derive(Args, Debug)]
struct GridArgs {
    #[arg(long, default_value_t = 6)]
    max_part: usize,
    #[arg(long, default_value_t = 3)]
    max_len: usize,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
}

#[derive(Args, Debug)]
struct BenchGrid {
    #[arg(long, default_value_t = 4)]
    max_part: usize,
    #[arg(long, default_value_t = 3)]
    max_len: usize,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TableKind {
    /// Tableau counts of the odd staircase (2m−1, …, 3, 1) with entries ≤ n.
    Osc,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Parse `argv` (including the program name), run, and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let fmt = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let ctx = Ctx { fmt, timing: cli.timing };
    match dispatch(cli.command, &ctx, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Eval(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_MISMATCH
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_MISMATCH
        }
    }
}

struct Ctx {
    fmt: Format,
    timing: bool,
}

enum Failure {
    Usage(String),
    Eval(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn dispatch(cmd: Command, ctx: &Ctx, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Compute { lambda, n, method } => compute(&lambda, n, &method, ctx, out),
        Command::Crosscheck { grid, methods, all } => {
            let methods = match (methods, all) {
                (Some(list), _) => parse_methods(&list)?,
                (None, true) => Method::all(),
                (None, false) => Method::grand(),
            };
            let grid = Grid { max_part: grid.max_part, max_len: grid.max_len, max_n: grid.max_n };
            crosscheck(&grid, &methods, ctx, out)
        }
        Command::Enumerate { lambda, n, gf } => enumerate(&lambda, n, gf, ctx, out),
        Command::Table { kind: TableKind::Osc, m_max, n_max } => table_osc(m_max, n_max, ctx, out),
        Command::Bench { grid } => {
            let grid = Grid { max_part: grid.max_part, max_len: grid.max_len, max_n: grid.max_n };
            bench(&grid, ctx, out)
        }
    }
}

fn parse_lambda(s: &str) -> std::result::Result<StrictPartition, Failure> {
    s.parse().map_err(|e: schurq::Error| Failure::Usage(format!("--lambda {s:?}: {e}")))
}

fn parse_methods(list: &str) -> std::result::Result<Vec<Method>, Failure> {
    let mut v: Vec<Method> = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        v.push(name.parse().map_err(|e: schurq::Error| Failure::Usage(e.to_string()))?);
    }
    if !v.contains(&Method::Tableaux) {
        v.push(Method::Tableaux);
    }
    v.sort();
    v.dedup();
    Ok(v)
}

fn micros(ctx: &Ctx, m: u128) -> Value {
    if ctx.timing {
        json!(m as u64)
    } else {
        Value::Null
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn lambda_str(l: &StrictPartition) -> String {
    l.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

fn compute(lambda: &str, n: usize, method: &str, ctx: &Ctx, out: &mut dyn Write) -> Outcome {
    let lam = parse_lambda(lambda)?;
    let t = Instant::now();
    let value = if method == "count" {
        count_marked(&lam, n).to_string()
    } else if let Ok(qm) = method.parse::<QOneMethod>() {
        if !qm.applies_to(&lam) {
            return Err(Failure::Usage(format!("method {qm} needs a one-row shape")));
        }
        q_one(&lam, n, qm).map_err(|e| Failure::Eval(e.to_string()))?.to_string()
    } else {
        let m: Method = method.parse().map_err(|e: schurq::Error| Failure::Usage(e.to_string()))?;
        if !m.applies(lam.len(), n) {
            return Err(Failure::Usage(format!("method {m} does not apply to {lam} with n = {n}")));
        }
        format_value(&m.evaluate(&lam, n).map_err(|e| Failure::Eval(e.to_string()))?)
    };
    let us = t.elapsed().as_micros();
    match ctx.fmt {
        Format::Text => writeln!(out, "{value}")?,
        Format::Json => writeln!(
            out,
            "{}",
            json!({"lambda": lambda_str(&lam), "n": n, "method": method, "value": value, "micros": micros(ctx, us)})
        )?,
        Format::Csv => {
            writeln!(out, "lambda,n,method,value,micros")?;
            let us = if ctx.timing { us.to_string() } else { String::new() };
            writeln!(out, "{},{},{},{},{}", csv_field(&lambda_str(&lam)), n, method, csv_field(&value), us)?;
        }
    }
    Ok(EXIT_PASS)
}

fn record_value(r: &Record) -> String {
    match &r.value {
        Ok(v) => format_value(v),
        Err(e) => format!("error: {e}"),
    }
}

fn crosscheck(grid: &Grid, methods: &[Method], ctx: &Ctx, out: &mut dyn Write) -> Outcome {
    let records = run_grid(grid, methods);
    let bad = records.iter().filter(|r| !r.ok).count();
    match ctx.fmt {
        Format::Text => {
            for r in &records {
                let status = if r.ok { "ok" } else { "MISMATCH" };
                writeln!(out, "{}\t{}\t{}\t{}\t{}", r.lambda, r.n, r.method, status, record_value(r))?;
            }
            writeln!(out, "{} records, {} mismatches", records.len(), bad)?;
        }
        Format::Json => {
            let arr: Vec<Value> = records
                .iter()
                .map(|r| {
                    json!({
                        "lambda": lambda_str(&r.lambda),
                        "n": r.n,
                        "method": r.method.to_string(),
                        "value": record_value(r),
                        "micros": micros(ctx, r.micros),
                        "ok": r.ok,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&arr).expect("JSON values serialize"))?;
        }
        Format::Csv => {
            writeln!(out, "lambda,n,method,value,micros,ok")?;
            for r in &records {
                let us = if ctx.timing { r.micros.to_string() } else { String::new() };
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    csv_field(&lambda_str(&r.lambda)),
                    r.n,
                    r.method,
                    csv_field(&record_value(r)),
                    us,
                    r.ok
                )?;
            }
        }
    }
    Ok(if bad == 0 { EXIT_PASS } else { EXIT_MISMATCH })
}

fn enumerate(lambda: &str, n: usize, gf: bool, ctx: &Ctx, out: &mut dyn Write) -> Outcome {
    let lam = parse_lambda(lambda)?;
    if gf {
        let value = gf_marked(&lam, n).display_q(1);
        match ctx.fmt {
            Format::Text => writeln!(out, "{value}")?,
            Format::Json => writeln!(out, "{}", json!({"lambda": lambda_str(&lam), "n": n, "gf": value}))?,
            Format::Csv => {
                writeln!(out, "lambda,n,gf")?;
                writeln!(out, "{},{},{}", csv_field(&lambda_str(&lam)), n, csv_field(&value))?;
            }
        }
        return Ok(EXIT_PASS);
    }
    let tableaux: Vec<Vec<(usize, usize, usize, bool)>> = enumerate_marked(&lam, n)
        .map(|t| t.boxes.iter().zip(&t.symbols).map(|(&(r, c), s)| (r, c, s.letter, s.marked)).collect())
        .collect();
    match ctx.fmt {
        Format::Json => {
            let arr: Vec<Value> = tableaux
                .iter()
                .map(|t| Value::Array(t.iter().map(|&(r, c, v, mk)| json!([r, c, v, mk])).collect()))
                .collect();
            writeln!(out, "{}", Value::Array(arr))?;
        }
        Format::Csv => {
            writeln!(out, "tableau,row,col,symbol,marked")?;
            for (i, t) in tableaux.iter().enumerate() {
                for (r, c, v, mk) in t {
                    writeln!(out, "{i},{r},{c},{v},{mk}")?;
                }
            }
        }
        Format::Text => {
            for t in &tableaux {
                let cells: Vec<String> =
                    t.iter().map(|&(r, c, v, mk)| format!("({r},{c})={v}{}", if mk { "'" } else { "" })).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
            writeln!(out, "{} tableaux", tableaux.len())?;
        }
    }
    Ok(EXIT_PASS)
}

fn table_osc(m_max: usize, n_max: usize, ctx: &Ctx, out: &mut dyn Write) -> Outcome {
    let rows: Vec<(usize, Vec<String>)> = (1..=m_max)
        .map(|m| (m, (0..=n_max).map(|n| odd_staircase_count(m, n).to_string()).collect()))
        .collect();
    match ctx.fmt {
        Format::Text => {
            let header: Vec<String> = (0..=n_max).map(|n| format!("n={n}")).collect();
            writeln!(out, "m\t{}", header.join("\t"))?;
            for (m, vals) in &rows {
                writeln!(out, "{m}\t{}", vals.join("\t"))?;
            }
        }
        Format::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .flat_map(|(m, vals)| vals.iter().enumerate().map(move |(n, v)| json!({"m": m, "n": n, "value": v})))
                .collect();
            writeln!(out, "{}", Value::Array(arr))?;
        }
        Format::Csv => {
            writeln!(out, "m,n,value")?;
            for (m, vals) in &rows {
                for (n, v) in vals.iter().enumerate() {
                    writeln!(out, "{m},{n},{v}")?;
                }
            }
        }
    }
    Ok(EXIT_PASS)
}

fn bench(grid: &Grid, ctx: &Ctx, out: &mut dyn Write) -> Outcome {
    let methods = Method::all();
    let mut rows = Vec::new();
    let mut bad = 0;
    for &m in &methods {
        let t = Instant::now();
        let recs = run_grid(grid, &[m]);
        let us = t.elapsed().as_micros();
        bad += recs.iter().filter(|r| !r.ok).count();
        rows.push((m, recs.len(), us));
    }
    match ctx.fmt {
        Format::Text => {
            for (m, cells, us) in &rows {
                writeln!(out, "{m}\t{cells} cells\t{us} us")?;
            }
        }
        Format::Json => {
            let arr: Vec<Value> =
                rows.iter().map(|(m, c, us)| json!({"method": m.to_string(), "cells": c, "micros": *us as u64})).collect();
            writeln!(out, "{}", Value::Array(arr))?;
        }
        Format::Csv => {
            writeln!(out, "method,cells,micros")?;
            for (m, c, us) in &rows {
                writeln!(out, "{m},{c},{us}")?;
            }
        }
    }
    Ok(if bad == 0 { EXIT_PASS } else { EXIT_MISMATCH })
}
