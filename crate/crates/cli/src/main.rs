//! `hypersolid`: evaluate figurate numbers, print their tables and
//! triangles, check the sum theorems and search for representations.
//!
//! Exit codes: 0 on success, 1 when a verification or consistency check
//! fails, 2 on a usage error.

mod output;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use hypersolid::{
    d_gnomon, hypersolid, n_gnomon, recurrence_sequence, representations, row_sum, sum_report,
    verify, Bounds, EvalMethod, Fixed, IndexTriple, Nat, RepresentationQuery, Suite, SumQuery,
    Triangle,
};
use serde_json::{json, Value};

use crate::output::{aligned, csv, envelope, OutputFormat};

#[derive(Debug, Parser)]
#[command(
    name = "hypersolid",
    version,
    about = "Exact multidimensional figurate numbers"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate S(v, d, n).
    Eval(EvalArgs),
    /// Print the d x n grid of S-numbers for one dimension.
    Table(TableArgs),
    /// Print the arithmetic triangle for one common difference.
    Triangle(TriangleArgs),
    /// Sum the S-numbers of fixed weight s = v + d + n.
    Sums(SumsArgs),
    /// Run invariant sweeps.
    Verify(VerifyArgs),
    /// Find every (v, d, n) with S(v, d, n) equal to a value.
    Represent(RepresentArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Summation,
    Both,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long)]
    v: u32,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "closed")]
    method: MethodArg,
    /// Fault injection for exercising the mismatch path: added to the
    /// summation result before the comparison.
    #[arg(long, hide = true, default_value_t = 0)]
    perturb_summation: u32,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    v: u32,
    #[arg(long = "dmax", default_value_t = 10)]
    d_max: u32,
    #[arg(long = "nmax", default_value_t = 10)]
    n_max: u32,
    /// Append the n-gnomon column and the d-gnomon row.
    #[arg(long)]
    gnomons: bool,
}

#[derive(Debug, Args)]
struct TriangleArgs {
    #[arg(long)]
    d: u32,
    /// Deepest row index c = v + n.
    #[arg(long, default_value_t = 10)]
    rows: u32,
    /// Also print sums along the lines m*v + n = k for this m.
    #[arg(long)]
    diagonals: Option<u32>,
}

#[derive(Debug, Args)]
struct SumsArgs {
    #[arg(long)]
    s: u32,
    /// Fixed coordinate, e.g. `v=2`, `d=0`, `n=4`.
    #[arg(long, default_value = "none")]
    fix: Fixed,
    /// List the contributing nonzero S-numbers.
    #[arg(long)]
    list: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long = "vmax", default_value_t = 8)]
    v_max: u32,
    #[arg(long = "dmax", default_value_t = 10)]
    d_max: u32,
    #[arg(long = "nmax", default_value_t = 12)]
    n_max: u32,
    #[arg(long = "cmax", default_value_t = 24)]
    c_max: u32,
    #[arg(long = "kmax", default_value_t = 30)]
    k_max: u32,
    #[arg(long = "smax", default_value_t = 40)]
    s_max: u32,
    #[arg(long = "lemma-max", default_value_t = 30)]
    lemma_max: u32,
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
}

#[derive(Debug, Args)]
struct RepresentArgs {
    #[arg(long)]
    value: Nat,
    #[arg(long = "vmin", default_value_t = 2)]
    v_min: u32,
    #[arg(long = "vmax", default_value_t = 8)]
    v_max: u32,
    #[arg(long = "dmin", default_value_t = 0)]
    d_min: u32,
    /// Defaults to the value itself.
    #[arg(long = "dmax")]
    d_max: Option<u32>,
    #[arg(long = "nmin", default_value_t = 3)]
    n_min: u32,
    #[arg(long = "nmax")]
    n_max: Option<u32>,
}

/// What a command produced and whether its checks held.
struct Rendered {
    text: String,
    ok: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Rendered { text, ok: true }
    }
}

enum Failure {
    Usage(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let rendered = match dispatch(&cli) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(cli.output.as_ref(), &rendered.text) {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    if rendered.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit(path: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Rendered, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Eval(args) => Ok(cmd_eval(args, format)),
        Command::Table(args) => cmd_table(args, format),
        Command::Triangle(args) => cmd_triangle(args, format),
        Command::Sums(args) => cmd_sums(args, format),
        Command::Verify(args) => Ok(cmd_verify(args, format)),
        Command::Represent(args) => cmd_represent(args, format),
    }
}

fn cmd_eval(args: &EvalArgs, format: OutputFormat) -> Rendered {
    let t = IndexTriple::new(args.v, args.d, args.n);
    let methods: &[EvalMethod] = match args.method {
        MethodArg::Closed => &[EvalMethod::Closed],
        MethodArg::Summation => &[EvalMethod::Summation],
        MethodArg::Both => &[EvalMethod::Closed, EvalMethod::Summation],
    };
    let values: Vec<(EvalMethod, Nat)> = methods
        .iter()
        .map(|&m| match m {
            EvalMethod::Summation => (m, hypersolid(t, m) + args.perturb_summation),
            EvalMethod::Closed => (m, hypersolid(t, m)),
        })
        .collect();
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);

    let text = match format {
        OutputFormat::Text if values.len() == 1 => format!("{}\n", values[0].1),
        OutputFormat::Text => values.iter().map(|(m, v)| format!("{m}: {v}\n")).collect(),
        OutputFormat::Csv => {
            let mut rows = vec![vec!["v", "d", "n", "method", "value"]
                .into_iter()
                .map(String::from)
                .collect()];
            for (m, v) in &values {
                rows.push(vec![
                    t.v.to_string(),
                    t.d.to_string(),
                    t.n.to_string(),
                    m.to_string(),
                    v.to_string(),
                ]);
            }
            csv(&rows)
        }
        OutputFormat::Json => {
            let result: serde_json::Map<String, Value> = values
                .iter()
                .map(|(m, v)| (m.to_string(), json!(v.to_string())))
                .collect();
            let method = format!("{:?}", args.method).to_lowercase();
            envelope(
                json!({ "v": t.v, "d": t.d, "n": t.n, "method": method }),
                Value::Object(result),
                agree,
            )
        }
    };
    if !agree {
        eprintln!("error: closed form and summation disagree at {t}");
    }
    Rendered { text, ok: agree }
}

fn cmd_table(args: &TableArgs, format: OutputFormat) -> Result<Rendered, Failure> {
    if args.v < 2 {
        return Err(usage(format!("--v must be at least 2, got {}", args.v)));
    }
    if args.d_max < 1 || args.n_max < 1 {
        return Err(usage("--dmax and --nmax must be at least 1"));
    }
    let (v, d_max, n_max) = (args.v, args.d_max, args.n_max);
    let value = |d: u32, n: u32| hypersolid(IndexTriple::new(v, d, n), EvalMethod::Closed);
    // S(v-1, d, n_max) is the step from rank n_max - 1 to n_max
    let n_gnomon_at = |d: u32| n_gnomon(IndexTriple::new(v, d, n_max)).expect("v >= 2 and n >= 1");
    let d_gnomon_at = |n: u32| d_gnomon(IndexTriple::new(v, 1, n)).expect("d = 1 and n >= 1");

    if format == OutputFormat::Json {
        let rows: Vec<Value> = (1..=d_max)
            .map(|d| {
                let values: Vec<String> = (1..=n_max).map(|n| value(d, n).to_string()).collect();
                let mut row = json!({ "d": d, "values": values });
                if args.gnomons {
                    row["n_gnomon"] = json!(n_gnomon_at(d).to_string());
                }
                row
            })
            .collect();
        let mut result = json!({ "n": (1..=n_max).collect::<Vec<_>>(), "rows": rows });
        if args.gnomons {
            let row: Vec<String> = (1..=n_max).map(|n| d_gnomon_at(n).to_string()).collect();
            result["d_gnomons"] = json!(row);
        }
        let query = json!({ "v": v, "dmax": d_max, "nmax": n_max, "gnomons": args.gnomons });
        return Ok(Rendered::ok(envelope(query, result, true)));
    }

    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["d\\n".to_string()];
    header.extend((1..=n_max).map(|n| n.to_string()));
    if args.gnomons {
        header.push("(n)".into());
    }
    rows.push(header);
    for d in 1..=d_max {
        let mut row = vec![d.to_string()];
        row.extend((1..=n_max).map(|n| value(d, n).to_string()));
        if args.gnomons {
            row.push(n_gnomon_at(d).to_string());
        }
        rows.push(row);
    }
    if args.gnomons {
        let mut row = vec!["(d)".to_string()];
        row.extend((1..=n_max).map(|n| d_gnomon_at(n).to_string()));
        row.push(String::new());
        rows.push(row);
    }
    let text = match format {
        OutputFormat::Csv => csv(&rows),
        _ => aligned(&rows),
    };
    Ok(Rendered::ok(text))
}

fn cmd_triangle(args: &TriangleArgs, format: OutputFormat) -> Result<Rendered, Failure> {
    let triangle = Triangle::build(args.d, args.rows);
    let diagonals = match args.diagonals {
        None => None,
        Some(m) if m < 2 => return Err(usage(format!("--diagonals must be at least 2, got {m}"))),
        // diagonals k = 2..=rows lie entirely within the printed rows
        Some(m) if args.rows >= 3 => Some((
            m,
            recurrence_sequence(args.d, m, args.rows - 1).map_err(|e| usage(e.to_string()))?,
        )),
        Some(m) => Some((m, Vec::new())),
    };

    let rows = triangle.rows();
    let text = match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for (c, row) in rows.iter().enumerate() {
                let entries: Vec<String> = row.iter().map(ToString::to_string).collect();
                out += &format!("{} | {}\n", entries.join(" "), row_sum(args.d, c as u32));
            }
            if let Some((m, sums)) = &diagonals {
                let sums: Vec<String> = sums.iter().map(ToString::to_string).collect();
                out += &format!("diagonal sums (m={m}): {}\n", sums.join(" "));
            }
            out
        }
        OutputFormat::Csv => {
            let mut table = vec![vec!["c".to_string(), "row_sum".into(), "entries".into()]];
            for (c, row) in rows.iter().enumerate() {
                let mut line = vec![c.to_string(), row_sum(args.d, c as u32).to_string()];
                line.extend(row.iter().map(ToString::to_string));
                table.push(line);
            }
            let mut out = csv(&table);
            if let Some((m, sums)) = &diagonals {
                let mut block = vec![vec!["m".to_string(), "k".into(), "diagonal_sum".into()]];
                for (i, value) in sums.iter().enumerate() {
                    block.push(vec![m.to_string(), (i + 2).to_string(), value.to_string()]);
                }
                out += "\n";
                out += &csv(&block);
            }
            out
        }
        OutputFormat::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .enumerate()
                .map(|(c, row)| {
                    let entries: Vec<String> = row.iter().map(ToString::to_string).collect();
                    json!({ "c": c, "entries": entries, "row_sum": row_sum(args.d, c as u32).to_string() })
                })
                .collect();
            let mut result = json!({ "rows": rows_json });
            if let Some((m, sums)) = &diagonals {
                let sums: Vec<String> = sums.iter().map(ToString::to_string).collect();
                result["diagonals"] = json!({ "m": m, "first_k": 2, "sums": sums });
            }
            let query = json!({ "d": args.d, "rows": args.rows, "diagonals": args.diagonals });
            envelope(query, result, true)
        }
    };
    Ok(Rendered::ok(text))
}

const NO_CLOSED_FORM: &str = "no-closed-form-case";

fn cmd_sums(args: &SumsArgs, format: OutputFormat) -> Result<Rendered, Failure> {
    let query = SumQuery::new(args.s, args.fix).map_err(|e| usage(e.to_string()))?;
    let report = sum_report(query, args.list).map_err(|e| usage(e.to_string()))?;
    let formula_sum = report
        .formula_sum
        .as_ref()
        .map_or(NO_CLOSED_FORM.to_string(), ToString::to_string);
    let formula_multitude = report
        .formula_multitude
        .map_or(NO_CLOSED_FORM.to_string(), |m| m.to_string());

    let text = match format {
        OutputFormat::Text => {
            let mut out = format!("s={} fixed={}\n", query.s, query.fixed);
            out += &format!("formula sum: {formula_sum}\n");
            out += &format!("enumerated sum: {}\n", report.enumerated_sum);
            out += &format!("formula multitude: {formula_multitude}\n");
            out += &format!("enumerated multitude: {}\n", report.enumerated_multitude);
            out += &format!("consistent: {}\n", report.consistent);
            for term in report.triples.iter().flatten() {
                out += &format!("{} = {}\n", term.triple, term.value);
            }
            out
        }
        OutputFormat::Csv => {
            let header = [
                "s",
                "fixed",
                "formula_sum",
                "enumerated_sum",
                "formula_multitude",
                "enumerated_multitude",
                "consistent",
            ];
            let row = vec![
                query.s.to_string(),
                query.fixed.to_string(),
                formula_sum,
                report.enumerated_sum.to_string(),
                formula_multitude,
                report.enumerated_multitude.to_string(),
                report.consistent.to_string(),
            ];
            let mut out = csv(&[header.iter().map(|h| h.to_string()).collect(), row]);
            if let Some(terms) = &report.triples {
                let mut block = vec![vec![
                    "v".to_string(),
                    "d".into(),
                    "n".into(),
                    "value".into(),
                ]];
                for term in terms {
                    let t = term.triple;
                    block.push(vec![
                        t.v.to_string(),
                        t.d.to_string(),
                        t.n.to_string(),
                        term.value.to_string(),
                    ]);
                }
                out += "\n";
                out += &csv(&block);
            }
            out
        }
        OutputFormat::Json => {
            let mut result = serde_json::to_value(&report).context("serializing report")?;
            if let Some(map) = result.as_object_mut() {
                map.remove("query");
                map.remove("consistent");
                for key in ["formula_sum", "formula_multitude"] {
                    if map.get(key).is_some_and(Value::is_null) {
                        map.insert(key.into(), json!(NO_CLOSED_FORM));
                    }
                }
            }
            envelope(
                json!({ "s": query.s, "fixed": query.fixed.to_string() }),
                result,
                report.consistent,
            )
        }
    };
    if !report.verified() {
        eprintln!(
            "error: closed form and enumeration disagree for s={} fixed={}",
            query.s, query.fixed
        );
    }
    Ok(Rendered {
        text,
        ok: report.verified(),
    })
}

fn cmd_verify(args: &VerifyArgs, format: OutputFormat) -> Rendered {
    let bounds = Bounds {
        v_max: args.v_max,
        d_max: args.d_max,
        n_max: args.n_max,
        c_max: args.c_max,
        k_max: args.k_max,
        s_max: args.s_max,
        lemma_max: args.lemma_max,
    };
    let outcomes = verify::run(args.suite, &bounds, args.jobs as usize);
    let ok = outcomes.iter().all(|o| o.passed());
    let text = match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for o in &outcomes {
                out += &format!(
                    "{}: {} cases, {} failures\n",
                    o.suite,
                    o.cases_run,
                    o.failures.len()
                );
                for f in &o.failures {
                    out += &format!(
                        "  FAIL {}: expected {}, got {}\n",
                        f.case, f.expected, f.actual
                    );
                }
            }
            out
        }
        OutputFormat::Csv => {
            let mut rows = vec![vec![
                "suite".to_string(),
                "case".into(),
                "expected".into(),
                "actual".into(),
            ]];
            for o in &outcomes {
                rows.push(vec![
                    o.suite.clone(),
                    format!("{} cases", o.cases_run),
                    String::new(),
                    format!("{} failures", o.failures.len()),
                ]);
                for f in &o.failures {
                    rows.push(vec![
                        o.suite.clone(),
                        f.case.replace(',', ";"),
                        f.expected.clone(),
                        f.actual.clone(),
                    ]);
                }
            }
            csv(&rows)
        }
        OutputFormat::Json => {
            let query = json!({ "suite": args.suite.name(), "bounds": bounds, "jobs": args.jobs });
            envelope(query, json!(outcomes), ok)
        }
    };
    Rendered { text, ok }
}

fn cmd_represent(args: &RepresentArgs, format: OutputFormat) -> Result<Rendered, Failure> {
    if args.value == Nat::from(0u32) {
        return Err(usage("--value must be at least 1"));
    }
    if args.v_min > args.v_max {
        return Err(usage("--vmin exceeds --vmax"));
    }
    let mut query = RepresentationQuery::new(args.value.clone())
        .v_range(args.v_min..=args.v_max)
        .n_min(args.n_min)
        .n_max(args.n_max);
    let d_max = args.d_max.unwrap_or(*query.d_range.end());
    query = query.d_range(args.d_min..=d_max);
    let hits = representations(&query).map_err(|e| usage(e.to_string()))?;

    let text = match format {
        OutputFormat::Text => {
            if hits.is_empty() {
                eprintln!("no representations in the search box");
            }
            hits.iter()
                .map(|h| format!("{} = {}\n", h.triple, h.value))
                .collect()
        }
        OutputFormat::Csv => {
            let mut rows = vec![vec![
                "v".to_string(),
                "d".into(),
                "n".into(),
                "value".into(),
            ]];
            for h in &hits {
                let t = h.triple;
                rows.push(vec![
                    t.v.to_string(),
                    t.d.to_string(),
                    t.n.to_string(),
                    h.value.to_string(),
                ]);
            }
            csv(&rows)
        }
        OutputFormat::Json => {
            let query_json = serde_json::to_value(&query).context("serializing query")?;
            envelope(query_json, json!(hits), true)
        }
    };
    Ok(Rendered::ok(text))
}
