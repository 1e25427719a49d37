use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use skewcat::io::load_document;
use skewcat::suites::{action_labels, SuiteConfig, SUITES};
use skewcat::{run_suite, HarnessError};

#[derive(Parser)]
#[command(name = "skewcat", version, about = "Check the coherence laws of semidirect products of skew monoidal categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite, or `all`
    Run {
        #[arg(long)]
        suite: String,
        /// Keep only checks involving this action
        #[arg(long)]
        action: Option<String>,
        /// Cap on instantiations per law; larger families are sampled
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        /// Per-suite cap, as `suite=N`; repeatable
        #[arg(long = "suite-budget", value_parser = parse_suite_budget)]
        suite_budgets: Vec<(String, usize)>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON document: a GMS, lattice, monoid action or category
        #[arg(long)]
        load: Option<PathBuf>,
        /// Write the JSON report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest monoid order for `monoid-oracle`
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        /// Worker threads (0: one per core)
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// List suites and actions
    List,
}

fn parse_suite_budget(s: &str) -> Result<(String, usize), String> {
    let (name, n) = s.split_once('=').ok_or("expected suite=N")?;
    Ok((name.to_string(), n.parse().map_err(|e| format!("{e}"))?))
}

fn run(cli: Cli) -> Result<bool, HarnessError> {
    match cli.command {
        Command::List => {
            println!("suites:");
            println!("  {:<16} every suite below", "all");
            for (name, about) in SUITES {
                println!("  {name:<16} {about}");
            }
            println!("actions:");
            for a in action_labels() {
                println!("  {a}");
            }
            Ok(true)
        }
        Command::Run { suite, action, budget, suite_budgets, seed, load, out, max_order, workers } => {
            let load = load.as_deref().map(load_document).transpose()?;
            let cfg = SuiteConfig {
                suites: vec![suite],
                action,
                budget,
                budgets: suite_budgets.into_iter().collect::<BTreeMap<_, _>>(),
                seed,
                workers,
                max_order,
                load,
                out: out.clone(),
                ..Default::default()
            };
            let report = run_suite(&cfg)?;
            if out.is_none() {
                print!("{}", report.to_json());
            }
            for e in report.failing() {
                eprintln!("FAIL {}", e.check);
            }
            let s = &report.summary;
            eprintln!("{} checks, {} passed, {} failed", s.checks, s.passed, s.failed);
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
