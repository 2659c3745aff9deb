//! `kzint`: compute and verify exact KZ solutions from the command line.

mod render;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kz_core::kzsolve::{
    alt_twist, dual_matrix, fundamental_solution, reflection_phi, reflection_psi, FundamentalMatrix,
    ReflectionSolution, SolveOptions, DEFAULT_BUDGET,
};
use kz_core::shapes::{diagram_stats, enumerate_partitions};
use kz_core::verify::{check_det, check_equivariance, check_pairing, check_reflection, run_suite, CheckReport};
use kz_core::{KzError, Partition};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "kzint",
    version,
    about = "Exact solutions of KZ equations with values in S_N irreps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    /// Worker threads for the residue computations [env: KZ_WORKERS, default 1].
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..), global = true)]
    workers: Option<u32>,
    /// Refuse shapes whose per-entry cost d*|G| exceeds this.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Shape {
    /// Comma-separated parts, e.g. 2,1.
    #[arg(long, value_parser = parse_lambda)]
    lambda: Partition,
    #[arg(long, value_parser = parse_m, allow_hyphen_values = true)]
    m: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fundamental matrix and tabloid table. Negative m gives the dual matrix.
    Solve(Shape),
    /// Run every applicable check.
    Verify {
        #[arg(long, value_parser = parse_lambda, required_unless_present = "all_partitions")]
        lambda: Option<Partition>,
        /// Sweep every partition of N.
        #[arg(long, conflicts_with = "lambda")]
        all_partitions: Option<usize>,
        #[arg(long, value_parser = parse_m, allow_hyphen_values = true)]
        m: i64,
        /// Also check equivariance under every transposition, not just adjacent ones.
        #[arg(long)]
        all: bool,
    },
    /// Closed-form diagram data.
    Stats {
        #[arg(long, value_parser = parse_lambda)]
        lambda: Partition,
        #[arg(long, value_parser = parse_m, allow_hyphen_values = true, default_value_t = 1)]
        m: i64,
    },
    /// Determinant of the fundamental matrix and its constant.
    Det(Shape),
    /// Dual fundamental matrix, the solutions for -m. Negative m gives the fundamental matrix.
    Dual(Shape),
    /// Solutions in the reflection representation; negative m gives the dual basis.
    Reflection {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_m, allow_hyphen_values = true)]
        m: i64,
        /// Also check the pairing between the m and -m bases.
        #[arg(long)]
        pairing: bool,
    },
    /// Sign-twisted solutions with parameter -m.
    Twist(Shape),
}

fn parse_lambda(s: &str) -> Result<Partition, String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("bad part {p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_m(s: &str) -> Result<i64, String> {
    match s.parse::<i64>() {
        Ok(0) => Err("m must be non-zero".into()),
        Ok(m) => Ok(m),
        Err(e) => Err(e.to_string()),
    }
}

const WORKERS_ENV: &str = "KZ_WORKERS";

fn workers_from_env() -> Result<u32, String> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<u32>() {
            Ok(w) if w >= 1 => Ok(w),
            _ => Err(format!("{WORKERS_ENV}={v:?} is not a positive integer")),
        },
    }
}

/// Failures that are not a failed check.
enum Fatal {
    Usage(String),
    Internal(String),
}

impl From<KzError> for Fatal {
    fn from(e: KzError) -> Self {
        match e {
            KzError::ResourceGuard(_) | KzError::ZeroParameter | KzError::Invalid(_) | KzError::Shape(_) => {
                Fatal::Usage(e.to_string())
            }
            _ => Fatal::Internal(e.to_string()),
        }
    }
}

/// Rendered output and whether every check in it passed.
struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn data(json: Value, text: String) -> Self {
        Output { json, text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let workers = match cli.workers.map_or_else(workers_from_env, Ok) {
        Ok(w) => w,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let opts = SolveOptions {
        workers: workers as usize,
        budget: cli.budget,
    };
    let out = match run(&cli.command, &opts) {
        Ok(out) => out,
        Err(Fatal::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Fatal::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            return ExitCode::from(1);
        }
    };
    let mut body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&out.json).expect("json values serialize"),
        Format::Text => out.text,
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cmd: &Command, opts: &SolveOptions) -> Result<Output, Fatal> {
    match cmd {
        Command::Solve(s) if s.m > 0 => solve(&s.lambda, s.m, opts),
        Command::Solve(s) => dual(&s.lambda, -s.m, opts),
        Command::Dual(s) if s.m > 0 => dual(&s.lambda, s.m, opts),
        Command::Dual(s) => solve(&s.lambda, -s.m, opts),
        Command::Verify {
            lambda,
            all_partitions,
            m,
            all,
        } => {
            let shapes = match (lambda, all_partitions) {
                (Some(l), _) => vec![l.clone()],
                (None, Some(n)) if *n >= 1 => enumerate_partitions(*n),
                _ => return Err(Fatal::Usage("--all-partitions needs N >= 1".into())),
            };
            verify(&shapes, *m, *all, opts)
        }
        Command::Stats { lambda, m } => {
            let st = diagram_stats(lambda, *m).map_err(KzError::from)?;
            let json = serde_json::to_value(&st).expect("stats serialize");
            let mut text = String::new();
            for (k, v) in json.as_object().expect("stats is an object") {
                let _ = writeln!(text, "{k}: {v}");
            }
            Ok(Output::data(json, text))
        }
        Command::Det(s) => det(&s.lambda, positive(s.m, "det")?, opts),
        Command::Reflection { n, m, pairing } => reflection(*n, *m, *pairing),
        Command::Twist(s) => twist(&s.lambda, positive(s.m, "twist")?, opts),
    }
}

fn positive(m: i64, what: &str) -> Result<i64, Fatal> {
    if m > 0 {
        Ok(m)
    } else {
        Err(Fatal::Usage(format!(
            "{what} needs m > 0; the -m side is printed by `dual`"
        )))
    }
}

fn header(f: &FundamentalMatrix, text: &mut String) {
    let _ = writeln!(text, "lambda {} m {} degree {}", f.lambda, f.m, f.degree);
    for (i, t) in f.tableaux.iter().enumerate() {
        let _ = writeln!(
            text,
            "cycle {}: {} from tableau {:?}",
            i + 1,
            f.cycles[i],
            t.reading_word()
        );
    }
}

fn solve(lambda: &Partition, m: i64, opts: &SolveOptions) -> Result<Output, Fatal> {
    let f = fundamental_solution(lambda, m, opts)?;
    let mut text = String::new();
    header(&f, &mut text);
    text.push_str("matrix (row = cycle, column = v_T):\n");
    for i in 0..f.dim() {
        for j in 0..f.dim() {
            let _ = writeln!(text, "  [{},{}] {}", i + 1, j + 1, render::poly(&f.matrix[(i, j)]));
        }
    }
    text.push_str("tabloid components:\n");
    for (i, row) in f.table.iter().enumerate() {
        for (u, p) in f.forms.iter().zip(row) {
            let _ = writeln!(text, "  cycle {} {u}: {}", i + 1, render::poly(p));
        }
    }
    Ok(Output::data(f.to_json(), text))
}

fn dual(lambda: &Partition, m: i64, opts: &SolveOptions) -> Result<Output, Fatal> {
    let f = fundamental_solution(lambda, m, opts)?;
    let d = dual_matrix(&f)?;
    let mut text = String::new();
    let _ = writeln!(text, "lambda {} m {}", f.lambda, -m);
    let _ = writeln!(text, "denominator {}", render::poly(&d.det));
    text.push_str("matrix (row = dual solution, column = v_T):\n");
    for i in 0..f.dim() {
        for j in 0..f.dim() {
            let _ = writeln!(text, "  [{},{}] {}", i + 1, j + 1, render::fraction(&d.entry(i, j)));
        }
    }
    let json = json!({
        "lambda": f.lambda,
        "m": -m,
        "denominator": d.det,
        "numerators": d.numerators.to_rows(),
    });
    Ok(Output::data(json, text))
}

fn det(lambda: &Partition, m: i64, opts: &SolveOptions) -> Result<Output, Fatal> {
    let f = fundamental_solution(lambda, m, opts)?;
    let det = f.matrix.det().map_err(KzError::from)?;
    let report = check_det(&f)?;
    let text = format!("det {}\n{report}\n", render::poly(&det));
    Ok(Output {
        ok: report.passed(),
        json: json!({ "lambda": f.lambda, "m": m, "det": det, "report": report.to_json() }),
        text,
    })
}

fn twist(lambda: &Partition, m: i64, opts: &SolveOptions) -> Result<Output, Fatal> {
    let f = fundamental_solution(lambda, m, opts)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let _ = writeln!(text, "lambda {} m {}", f.lambda, -m);
    for s in f.solutions() {
        let t = alt_twist(&s);
        for (k, u) in t.tabloids.iter().enumerate() {
            let _ = writeln!(
                text,
                "  cycle {} {u}: {}",
                s.cycle,
                render::fraction(&t.vector.component(k))
            );
        }
        rows.push(json!({
            "cycle": s.cycle,
            "tabloids": t.tabloids,
            "numerators": t.vector.numerators,
            "denominator": t.vector.denominator,
        }));
    }
    Ok(Output::data(
        json!({ "lambda": f.lambda, "m": -m, "solutions": rows }),
        text,
    ))
}

fn reflection(n: usize, m: i64, pairing: bool) -> Result<Output, Fatal> {
    let sols: Vec<ReflectionSolution> = if m > 0 {
        reflection_psi(n, m)?
    } else {
        reflection_phi(n, -m)?
    };
    let name = if m > 0 { "psi" } else { "phi" };
    let mut text = String::new();
    let mut rows = Vec::new();
    for s in &sols {
        for b in 0..n {
            let _ = writeln!(
                text,
                "{name}_{} e{}: {}",
                s.index,
                b + 1,
                render::fraction(&s.vector.component(b))
            );
        }
        rows.push(json!({
            "index": s.index,
            "numerators": s.vector.numerators,
            "denominator": s.vector.denominator,
        }));
    }
    let mut reports = vec![check_reflection(n, m.abs())?];
    if pairing {
        reports.push(check_pairing(n, m.abs())?);
    }
    for r in &reports {
        let _ = writeln!(text, "{r}");
    }
    Ok(Output {
        ok: reports.iter().all(CheckReport::passed),
        json: json!({
            "n": n,
            "m": m,
            "solutions": rows,
            "reports": reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        }),
        text,
    })
}

fn verify(shapes: &[Partition], m: i64, all: bool, opts: &SolveOptions) -> Result<Output, Fatal> {
    // the suite at |m| covers both sides: the dual rows are checked against the -m system
    let mu = m.abs();
    let mut reports = Vec::new();
    for lambda in shapes {
        reports.extend(run_suite(lambda, mu, opts)?);
        let n = lambda.size();
        if all && n > 2 {
            let f = fundamental_solution(lambda, mu, opts)?;
            for i in 1..=n {
                for j in i + 2..=n {
                    let mut g: Vec<usize> = (1..=n).collect();
                    g.swap(i - 1, j - 1);
                    reports.push(check_equivariance(&f, &g, opts)?);
                }
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{r}");
    }
    let _ = writeln!(text, "{} checks, {failed} failed", reports.len());
    Ok(Output {
        ok: failed == 0,
        json: json!({
            "m": m,
            "checks": reports.len(),
            "failed": failed,
            "reports": reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        }),
        text,
    })
}
