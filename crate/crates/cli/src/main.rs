use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use schur_core::automorphic::aut_lattice_count;
use schur_core::enumeration::{EnumerationResult, Enumerator, Family};
use schur_core::formulas::{self, FormulaShape};
use schur_core::oracle::{self, DEFAULT_LIMIT, HARD_LIMIT};
use schur_core::SchurPartition;

/// Environment variable overriding the oracle's bound on `n`.
const LIMIT_VAR: &str = "SCHUR_ORACLE_LIMIT";

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Count, enumerate and verify Schur rings over cyclic groups.
#[derive(Parser)]
#[command(name = "schur", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of Schur rings over Z_n.
    Count {
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Enumerate)]
        method: Method,
    },
    /// List every Schur ring over Z_n.
    Enumerate {
        n: u32,
        /// Emit JSON instead of brace lists.
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit brace lists (the default).
        #[arg(long)]
        text: bool,
        /// Show the families that generate each ring.
        #[arg(long)]
        tags: bool,
        /// Append the wedge-core census.
        #[arg(long)]
        cores: bool,
    },
    /// Tabulate closed-form counts for Z_pq or Z_4p.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        max: u64,
        /// Re-derive each row by enumeration and flag mismatches.
        #[arg(long)]
        verify: bool,
    },
    /// Run every applicable cross-check for Z_n.
    Verify {
        n: u32,
        /// Compare against the exhaustive search even above the default bound.
        #[arg(long)]
        deep: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Enumerate,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Semiprime,
    Fourp,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count { n, method } => count(n, method),
        Command::Enumerate {
            n,
            json,
            text: _,
            tags,
            cores,
        } => enumerate(n, json, tags, cores),
        Command::Table { kind, max, verify } => table(kind, max, verify),
        Command::Verify { n, deep } => verify(n, deep),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn oracle_limit() -> Result<u32, String> {
    match std::env::var(LIMIT_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| format!("{LIMIT_VAR} must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_LIMIT),
    }
}

fn run_oracle(n: u32, limit: u32) -> Result<Vec<SchurPartition>, String> {
    if n > DEFAULT_LIMIT && n <= limit.min(HARD_LIMIT) {
        eprintln!("warning: exhaustive search for n = {n} may take several minutes");
    }
    oracle::brute_force_schur_rings(n, limit).map_err(|e| e.to_string())
}

fn check_n(n: u32) -> Result<(), String> {
    if n == 0 {
        Err("n must be positive".into())
    } else {
        Ok(())
    }
}

fn count(n: u32, method: Method) -> Result<ExitCode, String> {
    check_n(n)?;
    let (value, name) = match method {
        Method::Formula => (
            formulas::omega_formula(u64::from(n)).map_err(|e| e.to_string())? as usize,
            "formula",
        ),
        Method::Enumerate => (Enumerator::new().omega(n), "enumerate"),
        Method::Oracle => (run_oracle(n, oracle_limit()?)?.len(), "oracle"),
    };
    println!("Omega({n}) = {value} (method: {name})");
    Ok(ExitCode::SUCCESS)
}

fn enumerate(n: u32, json: bool, tags: bool, cores: bool) -> Result<ExitCode, String> {
    check_n(n)?;
    let result = Enumerator::new().enumerate(n);
    let body = if json {
        serde_json::to_string(&result).map_err(|e| e.to_string())? + "\n"
    } else {
        render_text(&result, tags, cores)
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    Ok(ExitCode::SUCCESS)
}

fn render_text(result: &EnumerationResult, tags: bool, cores: bool) -> String {
    let mut out = String::new();
    for (ring, families) in result.rings.iter().zip(&result.tags) {
        write!(out, "{ring}").unwrap();
        if tags {
            let names: Vec<String> = families.iter().map(Family::to_string).collect();
            write!(out, "  [{}]", names.join(",")).unwrap();
        }
        out.push('\n');
    }
    if cores {
        writeln!(out, "# wedge-core census").unwrap();
        for c in &result.core_census {
            writeln!(out, "order {:>3}  count {:>4}  core {}", c.order, c.count, c.core).unwrap();
        }
        let totals: Vec<String> = result
            .census_by_order()
            .iter()
            .map(|(d, c)| format!("{d}:{c}"))
            .collect();
        writeln!(out, "# totals by order {{{}}}", totals.join(",")).unwrap();
    }
    out
}

fn table(kind: TableKind, max: u64, verify: bool) -> Result<ExitCode, String> {
    let rows: Vec<(u64, u64)> = match kind {
        TableKind::Semiprime => formulas::semiprimes_up_to(max)
            .into_iter()
            .map(|(n, p, q)| Ok((n, formulas::omega_pq(p, q)?)))
            .collect::<Result<_, formulas::FormulaError>>(),
        TableKind::Fourp => formulas::four_p_up_to(max)
            .into_iter()
            .map(|(n, p)| Ok((n, formulas::omega_4p(p)?)))
            .collect(),
    }
    .map_err(|e| e.to_string())?;

    let mut enumerator = Enumerator::new();
    let mut mismatches = 0;
    println!("{:>6}  {:>8}", "n", "Omega(n)");
    for (n, value) in rows {
        if verify {
            let n32 = u32::try_from(n).map_err(|_| format!("{n} is too large to enumerate"))?;
            let counted = enumerator.omega(n32) as u64;
            let mark = if counted == value { "ok" } else { "MISMATCH" };
            if counted != value {
                mismatches += 1;
            }
            println!("{n:>6}  {value:>8}  {counted:>8}  {mark}");
        } else {
            println!("{n:>6}  {value:>8}");
        }
    }
    Ok(if mismatches == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}

struct Report {
    lines: Vec<(Option<bool>, String)>,
}

impl Report {
    fn check(&mut self, ok: bool, what: String) {
        self.lines.push((Some(ok), what));
    }

    fn note(&mut self, what: String) {
        self.lines.push((None, what));
    }

    fn finish(self) -> ExitCode {
        let checks = self.lines.iter().filter(|(ok, _)| ok.is_some()).count();
        let failed = self.lines.iter().filter(|(ok, _)| *ok == Some(false)).count();
        for (ok, what) in &self.lines {
            let tag = match ok {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => "SKIP",
            };
            println!("{tag}  {what}");
        }
        if failed == 0 {
            println!("overall: pass ({checks} checks)");
            ExitCode::SUCCESS
        } else {
            println!("overall: FAIL ({failed} of {checks} checks)");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}

fn verify(n: u32, deep: bool) -> Result<ExitCode, String> {
    check_n(n)?;
    let mut report = Report { lines: Vec::new() };
    let mut enumerator = Enumerator::new();
    let result = enumerator.enumerate(n);
    let omega = result.omega as u64;

    let invalid = result.rings.iter().filter(|r| !r.is_schur_ring()).count();
    report.check(
        invalid == 0,
        format!("axioms: {} enumerated rings, {invalid} invalid", result.omega),
    );

    let shape = FormulaShape::of(u64::from(n));
    match shape.map(FormulaShape::omega) {
        Some(Ok(value)) => report.check(
            value == omega,
            format!("formula {value} vs enumerate {omega}"),
        ),
        Some(Err(e)) => report.check(false, format!("formula: {e}")),
        None => report.note(format!("formula: {n} is not prime, semiprime or 4p")),
    }

    let limit = oracle_limit()?;
    let limit = if deep { limit.max(n).min(HARD_LIMIT) } else { limit };
    if n <= limit.min(HARD_LIMIT) {
        let found = run_oracle(n, limit)?;
        report.check(
            found == result.rings,
            format!("oracle {} rings vs enumerate {omega}, identical sets: {}", found.len(), found == result.rings),
        );
    } else {
        report.note(format!("oracle: n = {n} over limit {}", limit.min(HARD_LIMIT)));
    }

    match shape {
        Some(FormulaShape::Semiprime(p, q)) => {
            let lattice = aut_lattice_count(u64::from(n)).map_err(|e| e.to_string())?;
            let x = formulas::omega_prime(p).map_err(|e| e.to_string())?;
            let y = formulas::omega_prime(q).map_err(|e| e.to_string())?;
            let automorphic = result.count_tagged(Family::Automorphic) as u64;
            let trivial = result.count_tagged(Family::Trivial) as u64;
            let wedge_only = result
                .tags
                .iter()
                .filter(|t| t.contains(&Family::Wedge) && !t.contains(&Family::Automorphic))
                .count() as u64;
            report.check(
                automorphic == lattice,
                format!("automorphic {automorphic} = |L(Aut)| {lattice}"),
            );
            report.check(
                wedge_only == 2 * x * y,
                format!("non-automorphic wedges {wedge_only} = 2xy {}", 2 * x * y),
            );
            report.check(trivial == 1, format!("trivial {trivial} = 1"));
            report.check(
                automorphic + wedge_only + trivial == omega,
                format!("{omega} = {automorphic} automorphic + {wedge_only} wedge + {trivial} trivial"),
            );
        }
        Some(FormulaShape::FourP(p)) => {
            let x = formulas::omega_prime(p).map_err(|e| e.to_string())?;
            let lattice = aut_lattice_count(u64::from(n)).map_err(|e| e.to_string())?;
            let by_order = result.census_by_order();
            let p = p as u32;
            let got = |d: u32| by_order.get(&d).copied().unwrap_or(0) as u64;
            let expected = [
                (2, 3 * x + 1),
                (p, 3 * x),
                (4, 3 * x),
                (2 * p, 3 * x + 1),
                (n, lattice + 1),
            ];
            for (d, want) in expected {
                report.check(got(d) == want, format!("core order {d}: {} = {want}", got(d)));
            }
        }
        _ => {}
    }
    Ok(report.finish())
}
