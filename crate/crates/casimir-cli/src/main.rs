//! Command-line front end: exact Casimir eigenvalues, stable-sequence
//! closed forms, adjoint-power decompositions, and theorem verification.

mod batch;
mod output;
mod record;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use casimir::{
    ad_power_decompose_with_cap, casimir_direct, casimir_stable, verify_decomposition,
    DynkinLabels, StableRep, DEFAULT_SUMMAND_CAP,
};
use clap::{Parser, Subcommand, ValueEnum};

use output::{csv_row, print_table, record_row, universal_string, CSV_HEADER, RECORD_HEADERS};
use record::{DecomposeDoc, EigDoc, RepRecord, VerifyDoc};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "casimir",
    version,
    about = "Exact su(N) Casimir eigenvalues, stable sequences, and adjoint-power verification",
    after_help = "Exit codes: 0 success/pass, 1 verification failure, 2 usage or input error, \
                  3 resource cap exceeded.\n\
                  All printed values are exact rationals (p/q in lowest terms); decimals appear \
                  only behind --decimal and are not authoritative."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Append an inexact decimal approximation where applicable.
    #[arg(long, global = true)]
    decimal: bool,

    /// Summand cap for adjoint-power decompositions.
    #[arg(long, global = true, default_value_t = DEFAULT_SUMMAND_CAP)]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Casimir eigenvalue of concrete Dynkin labels, e.g. `eig --n 4 1 0 0`.
    Eig {
        /// The N of su(N).
        #[arg(long)]
        n: usize,
        /// The N-1 Dynkin labels.
        #[arg(num_args = 0.., value_name = "LABEL")]
        labels: Vec<u32>,
    },

    /// Eigenvalue of a stable sequence as an exact polynomial in N.
    StableEig {
        /// Window width.
        #[arg(long)]
        k: usize,
        /// The first k Dynkin labels.
        #[arg(long, num_args = 1.., value_name = "LABEL")]
        head: Vec<u32>,
        /// The last k Dynkin labels, read from the right end inward.
        #[arg(long, num_args = 1.., value_name = "LABEL")]
        tail: Vec<u32>,
    },

    /// Decompose ad^k of su(N) and verify every constituent.
    ///
    /// Requires the stable range N >= 2k + 1 for reporting; the resource cap
    /// is enforced while the decomposition is computed.
    Decompose {
        /// The N of su(N).
        #[arg(long)]
        n: usize,
        /// The tensor power.
        #[arg(long)]
        k: usize,
    },

    /// Exhaustive sweep over stable representations: closed form vs direct
    /// route, linearity iff balance, perfect squares, universal form, and
    /// per-(N, k) adjoint-power verification.
    Verify {
        /// Largest stable window to sweep.
        #[arg(long)]
        k_max: usize,
        /// Ranks to evaluate at, comma-separated; each must be >= 2*k_max + 1.
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        /// Largest label value in the sweep.
        #[arg(long)]
        label_bound: u32,
    },

    /// Process a file of stable representations, one `k | head / tail` line
    /// each; `#` starts a comment.
    Batch {
        /// Input path.
        input: PathBuf,
    },
}

struct Ctx {
    format: Format,
    decimal: bool,
    cap: u64,
}

enum CmdError {
    Usage(String),
    Violation(String),
    Cap(String),
}

impl CmdError {
    fn message(&self) -> &str {
        match self {
            CmdError::Usage(m) | CmdError::Violation(m) | CmdError::Cap(m) => m,
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CmdError::Violation(_) => EXIT_VIOLATION,
            CmdError::Usage(_) => EXIT_USAGE,
            CmdError::Cap(_) => EXIT_CAP,
        }
    }
}

fn from_lib(e: casimir::Error) -> CmdError {
    match e {
        casimir::Error::CapExceeded { .. } => CmdError::Cap(e.to_string()),
        _ => CmdError::Usage(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        format: cli.format,
        decimal: cli.decimal,
        cap: cli.cap,
    };
    let result = match cli.command {
        Command::Eig { n, labels } => cmd_eig(n, labels, &ctx),
        Command::StableEig { k, head, tail } => cmd_stable_eig(k, head, tail, &ctx),
        Command::Decompose { n, k } => cmd_decompose(n, k, &ctx),
        Command::Verify {
            k_max,
            n_list,
            label_bound,
        } => cmd_verify(k_max, &n_list, label_bound, &ctx),
        Command::Batch { input } => cmd_batch(&input, &ctx),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn cmd_eig(n: usize, labels: Vec<u32>, ctx: &Ctx) -> Result<(), CmdError> {
    let labels = DynkinLabels::new(n, labels).map_err(|e| CmdError::Usage(e.to_string()))?;
    let value = casimir_direct(&labels);
    match ctx.format {
        Format::Text => {
            if ctx.decimal {
                println!("{value} ~= {} (inexact)", value.to_f64());
            } else {
                println!("{value}");
            }
        }
        Format::Json => {
            let doc = EigDoc {
                n,
                labels: labels.labels().to_vec(),
                casimir: value.to_string(),
                decimal: ctx.decimal.then(|| value.to_f64()),
            };
            println!("{}", serde_json::to_string(&doc).expect("serializable"));
        }
        Format::Csv => {
            let labels_field = output::join_labels(labels.labels());
            if ctx.decimal {
                println!("n,labels,casimir,decimal");
                println!("{n},{labels_field},{value},{}", value.to_f64());
            } else {
                println!("n,labels,casimir");
                println!("{n},{labels_field},{value}");
            }
        }
    }
    Ok(())
}

fn cmd_stable_eig(k: usize, head: Vec<u32>, tail: Vec<u32>, ctx: &Ctx) -> Result<(), CmdError> {
    if head.len() != k || tail.len() != k {
        return Err(CmdError::Usage(format!(
            "expected {k} head and {k} tail labels, got {} and {}",
            head.len(),
            tail.len()
        )));
    }
    let rep = StableRep::new(head, tail).map_err(|e| CmdError::Usage(e.to_string()))?;
    let poly = casimir_stable(&rep);
    let record = RepRecord::from_stable(&rep, &poly);
    match ctx.format {
        Format::Text => {
            println!("C(N) = {poly}");
            println!("balanced: {}", rep.is_balanced());
            println!(
                "areas: head={} tail={}",
                rep.area_head(),
                rep.area_tail()
            );
            println!("universal: {}", universal_string(&record));
        }
        Format::Json => println!("{}", serde_json::to_string(&record).expect("serializable")),
        Format::Csv => {
            println!("{CSV_HEADER}");
            println!("{}", csv_row(&record));
        }
    }
    Ok(())
}

fn cmd_decompose(n: usize, k: usize, ctx: &Ctx) -> Result<(), CmdError> {
    // Cap enforcement happens while computing, before the stable-range
    // check, so runaway inputs exit 3 even when they are also out of range.
    let decomposition = ad_power_decompose_with_cap(n, k, ctx.cap).map_err(from_lib)?;
    let report =
        verify_decomposition(&decomposition, k).map_err(|e| CmdError::Usage(e.to_string()))?;

    let records: Vec<RepRecord> = report
        .constituents()
        .iter()
        .filter_map(RepRecord::from_constituent)
        .collect();
    let pass = report.pass();
    let failures = if pass { Vec::new() } else { report.failures() };

    match ctx.format {
        Format::Text => {
            let rows: Vec<Vec<String>> = records.iter().map(record_row).collect();
            print_table(&RECORD_HEADERS, &rows);
            println!("checksum: {} = ({n}^2-1)^{k}", report.total_dimension());
            println!("verification: {}", if pass { "PASS" } else { "FAIL" });
            for failure in &failures {
                println!("violation: {failure}");
            }
        }
        Format::Json => {
            let doc = DecomposeDoc {
                n,
                k,
                records,
                checksum: report.total_dimension().to_string(),
                pass,
            };
            println!("{}", serde_json::to_string(&doc).expect("serializable"));
        }
        Format::Csv => {
            println!("{CSV_HEADER}");
            for record in &records {
                println!("{}", csv_row(record));
            }
            println!("# checksum: {}", report.total_dimension());
            println!("# pass: {pass}");
        }
    }
    if pass {
        Ok(())
    } else {
        Err(CmdError::Violation(format!(
            "{} verification failure(s) in ad^{k} of su({n})",
            failures.len()
        )))
    }
}

fn cmd_verify(k_max: usize, n_list: &[usize], label_bound: u32, ctx: &Ctx) -> Result<(), CmdError> {
    if k_max == 0 {
        return Err(CmdError::Usage("k-max must be at least 1".into()));
    }
    if n_list.is_empty() {
        return Err(CmdError::Usage("n-list must not be empty".into()));
    }
    for &n in n_list {
        if n < 2 * k_max + 1 {
            return Err(CmdError::Usage(format!(
                "n = {n} is below the stable range for k-max = {k_max} (need n >= {})",
                2 * k_max + 1
            )));
        }
    }
    let outcome = sweep::run(k_max, n_list, label_bound, ctx.cap).map_err(from_lib)?;
    let pass = outcome.violations.is_empty();
    let n_joined = n_list
        .iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(", ");

    match ctx.format {
        Format::Text => {
            println!("stable reps checked: {}", outcome.reps_checked);
            println!(
                "eigenvalue checks: {} (N in {n_joined})",
                outcome.eigenvalue_checks
            );
            println!("ad-power runs:");
            for run in &outcome.ad_power_runs {
                println!(
                    "  su({}) ad^{}: {} constituents, {}",
                    run.n,
                    run.k,
                    run.constituents,
                    if run.pass { "pass" } else { "FAIL" }
                );
            }
            for violation in &outcome.violations {
                println!("violation: {violation}");
            }
            println!(
                "{} ({} reps checked)",
                if pass { "PASS" } else { "FAIL" },
                outcome.reps_checked
            );
        }
        Format::Json => {
            let doc = VerifyDoc {
                k_max,
                n_list: n_list.to_vec(),
                label_bound,
                reps_checked: outcome.reps_checked,
                eigenvalue_checks: outcome.eigenvalue_checks,
                ad_power_runs: outcome.ad_power_runs,
                violations: outcome.violations.clone(),
                pass,
            };
            println!("{}", serde_json::to_string(&doc).expect("serializable"));
        }
        Format::Csv => {
            println!("key,value");
            println!("reps_checked,{}", outcome.reps_checked);
            println!("eigenvalue_checks,{}", outcome.eigenvalue_checks);
            for run in &outcome.ad_power_runs {
                println!("ad_power_su{}_k{},{}", run.n, run.k, run.pass);
            }
            println!("pass,{pass}");
        }
    }
    if pass {
        Ok(())
    } else {
        Err(CmdError::Violation(format!(
            "{} violation(s) found",
            outcome.violations.len()
        )))
    }
}

fn cmd_batch(input: &PathBuf, ctx: &Ctx) -> Result<(), CmdError> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CmdError::Usage(format!("cannot read {}: {e}", input.display())))?;
    let mut failed = 0usize;
    let mut csv_header_printed = false;
    for (idx, line) in text.lines().enumerate() {
        match batch::parse_line(line) {
            batch::Line::Empty => {}
            batch::Line::Error(e) => {
                eprintln!("line {}: {e}", idx + 1);
                failed += 1;
            }
            batch::Line::Rep(rep) => {
                let poly = casimir_stable(&rep);
                let record = RepRecord::from_stable(&rep, &poly);
                match ctx.format {
                    Format::Text => println!(
                        "{rep}  ->  {poly}  balanced={} areas={}/{} universal={}",
                        rep.is_balanced(),
                        rep.area_head(),
                        rep.area_tail(),
                        universal_string(&record)
                    ),
                    Format::Json => {
                        println!("{}", serde_json::to_string(&record).expect("serializable"))
                    }
                    Format::Csv => {
                        if !csv_header_printed {
                            println!("{CSV_HEADER}");
                            csv_header_printed = true;
                        }
                        println!("{}", csv_row(&record));
                    }
                }
            }
        }
    }
    if failed > 0 {
        Err(CmdError::Usage(format!("{failed} malformed line(s)")))
    } else {
        Ok(())
    }
}
