use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gk_cli::{decomposition_text, set_text, GraphDocument};
use gk_core::cocliques::{alt_graph, alt_report, alt_report_exact, report_for, theta_structure, CocliqueError};
use gk_core::numth::NumthError;
use gk_core::refdata::{self, table_specs, verify, Verification, VerifyError};
use gk_core::torus_oracle::{compare, OracleError};
use gk_core::{FactorBudget, GroupSpec, Vertex};
use rayon::prelude::*;

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "gk", version, about = "Prime graphs of finite simple groups and their maximum cocliques")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the compact prime graph of a group.
    Graph {
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Factor every class and print the graph on individual primes.
        #[arg(long)]
        explicit_primes: bool,
    },
    /// Print t(G), and with --all every maximum coclique and Θ, Θ'.
    Coclique {
        group: String,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check computed cocliques against a table over a range of groups.
    Verify {
        #[arg(long, value_enum)]
        table: Table,
        /// Largest degree (alt) or Lie rank; defaults to the coverage bound.
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long, default_value_t = 32)]
        q_max: u64,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// With --table alt, compare against the corrected closed form.
        #[arg(long)]
        exact: bool,
    },
    /// Compare criterion adjacency with maximal-torus orders.
    Oracle {
        group: String,
        /// Also check the prime 2 (odd q only).
        #[arg(long)]
        with_two: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
    Alt,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: EXIT_INPUT, message: message.to_string() }
    }
}

impl From<NumthError> for Failure {
    fn from(e: NumthError) -> Self {
        let code = if matches!(e, NumthError::BudgetExceeded { .. }) { EXIT_BUDGET } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

impl From<CocliqueError> for Failure {
    fn from(e: CocliqueError) -> Self {
        let code = match e {
            CocliqueError::Data(_) => EXIT_INPUT,
            _ => EXIT_MISMATCH,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Numth(n) => n.into(),
            other => Failure::input(other),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Coclique(c) => c.into(),
            VerifyError::Data(d) => Failure::input(d),
        }
    }
}

fn parse_group(text: &str) -> Result<GroupSpec, Failure> {
    GroupSpec::parse(text).map_err(Failure::input)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("gk: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<u8, Failure> {
    match command {
        Command::Graph { group, format, explicit_primes } => {
            let spec = parse_group(&group)?;
            let (g, report) = theta_structure(&spec)?;
            let doc = if explicit_primes {
                GraphDocument::explicit(&g, &report, FactorBudget::from_env())?
            } else {
                GraphDocument::compact(&g, &report)
            };
            out.push_str(&match format {
                Format::Json => doc.to_json() + "\n",
                Format::Dot => doc.to_dot(),
                Format::Text => doc.to_text(),
            });
            Ok(0)
        }
        Command::Coclique { group, all, format } => {
            let spec = parse_group(&group)?;
            let (g, report) = theta_structure(&spec)?;
            match format {
                Format::Json => out.push_str(&(GraphDocument::compact(&g, &report).to_json() + "\n")),
                Format::Dot => return Err(Failure::input("coclique has no dot output")),
                Format::Text => {
                    let l = |v: &[Vertex]| v.iter().map(Vertex::label).collect::<Vec<_>>();
                    out.push_str(&format!("{}: t = {}\n", report.group, report.t));
                    if all {
                        out.push_str(&format!("maximum cocliques ({}):\n", report.cocliques.len()));
                        for c in &report.cocliques {
                            out.push_str(&format!("  {}\n", set_text(&l(c))));
                        }
                        let tp: Vec<Vec<String>> = report.theta_prime.iter().map(|s| l(s)).collect();
                        out.push_str(&decomposition_text(report.t, &l(&report.theta), &tp));
                    } else {
                        out.push_str(&format!("{}\n", set_text(&l(&report.cocliques[0]))));
                    }
                }
            }
            Ok(0)
        }
        Command::Verify { table, n_max, q_max, jobs, exact } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Failure::input(format!("thread pool: {e}")))?;
            pool.install(|| match table {
                Table::Alt => verify_alt(n_max.unwrap_or(1000), exact, out),
                Table::One => verify_table(1, 0, 0, out),
                Table::Two => verify_table(2, n_max.unwrap_or(refdata::COVERAGE_N_LINEAR), q_max, out),
                Table::Three => verify_table(3, n_max.unwrap_or(refdata::COVERAGE_N_ORTHOSYMPLECTIC), q_max, out),
                Table::Four => verify_table(4, 0, q_max, out),
            })
        }
        Command::Oracle { group, with_two } => {
            let spec = parse_group(&group)?;
            let report = compare(&spec, with_two, FactorBudget::from_env())?;
            for d in &report.disagreements {
                out.push_str(&format!(
                    "disagree {} -- {} (primes {}, {}): criterion {} [{:?}], tori {}\n",
                    d.a, d.b, d.r, d.s, adj(d.criterion.adjacent), d.criterion.basis, adj(d.oracle)
                ));
            }
            let verdict = if report.disagreements.is_empty() { "agree" } else { "disagree" };
            out.push_str(&format!(
                "{}: {verdict} ({} prime pairs, {} torus orders, {} disagreements)\n",
                report.spec,
                report.pairs_checked,
                report.torus_orders,
                report.disagreements.len()
            ));
            Ok(if report.disagreements.is_empty() { 0 } else { EXIT_MISMATCH })
        }
    }
}

fn adj(a: bool) -> &'static str {
    if a {
        "adjacent"
    } else {
        "nonadjacent"
    }
}

fn verify_alt(n_max: u64, exact: bool, out: &mut String) -> Result<u8, Failure> {
    if n_max < 5 {
        return Err(Failure::input("--n-max must be at least 5 for alternating groups"));
    }
    let results: Vec<(u64, Result<bool, CocliqueError>)> = (5..=n_max)
        .into_par_iter()
        .map(|n| {
            let closed = if exact { alt_report_exact(n) } else { alt_report(n) };
            (n, report_for(&alt_graph(n)).map(|brute| brute == closed))
        })
        .collect();
    let mut failed = Vec::new();
    for (n, r) in results {
        if !r? {
            failed.push(n);
        }
    }
    let form = if exact { "exact closed form" } else { "closed form" };
    for &n in &failed {
        let brute = report_for(&alt_graph(n))?;
        let l = |v: &[Vertex]| v.iter().map(Vertex::label).collect::<Vec<_>>();
        let tp: Vec<String> = brute.theta_prime.iter().map(|s| set_text(&l(s))).collect();
        out.push_str(&format!(
            "FAIL Alt:{n}: brute force t={} Θ={} Θ'={}\n",
            brute.t,
            set_text(&l(&brute.theta)),
            if tp.is_empty() { "∅".into() } else { tp.join(" ") }
        ));
    }
    let total = n_max - 4;
    out.push_str(&format!(
        "alternating 5..={n_max}: {form} matches brute force for {} of {total}\n",
        total - failed.len() as u64
    ));
    if let Some(n) = failed.first() {
        out.push_str(&format!("first counterexample: Alt:{n}\n"));
        return Ok(EXIT_MISMATCH);
    }
    Ok(0)
}

fn verify_table(table: u8, n_max: u64, q_max: u64, out: &mut String) -> Result<u8, Failure> {
    if q_max > refdata::COVERAGE_Q {
        return Err(Failure::input(format!("--q-max is limited to {}", refdata::COVERAGE_Q)));
    }
    let limit = match table {
        2 => refdata::COVERAGE_N_LINEAR,
        3 => refdata::COVERAGE_N_ORTHOSYMPLECTIC,
        _ => u64::MAX,
    };
    if n_max > limit {
        return Err(Failure::input(format!("--n-max is limited to {limit} for table {table}")));
    }
    let specs = table_specs(table, n_max, q_max);
    let results: Vec<Result<Verification, VerifyError>> = specs.par_iter().map(verify).collect();
    // (table, row) -> (condition, passed, failed groups)
    let mut rows: BTreeMap<(u8, u16), (&'static str, usize, Vec<Verification>)> = BTreeMap::new();
    for r in results {
        let v = r?;
        let entry = rows.entry((v.table, v.row)).or_insert((v.condition, 0, Vec::new()));
        if v.passed() {
            entry.1 += 1;
        } else {
            entry.2.push(v);
        }
    }
    let mut bad = 0;
    let mut first: Option<Verification> = None;
    for ((t, row), (condition, passed, failed)) in rows {
        let status = if failed.is_empty() { "pass" } else { "FAIL" };
        let condition = if condition.is_empty() { String::new() } else { format!(" [{condition}]") };
        out.push_str(&format!("{status} table {t} row {row}{condition}: {passed}/{} groups\n", passed + failed.len()));
        for v in &failed {
            out.push_str(&format!("     {}\n", v.summary()));
            for m in &v.mismatches {
                out.push_str(&format!("       {m}\n"));
            }
        }
        bad += failed.len();
        if first.is_none() {
            first = failed.into_iter().next();
        }
    }
    out.push_str(&format!("table {table}: {} of {} groups match\n", specs.len() - bad, specs.len()));
    match first {
        Some(v) => {
            out.push_str(&format!("first counterexample: {}\n", v.group));
            Ok(EXIT_MISMATCH)
        }
        None => Ok(0),
    }
}
