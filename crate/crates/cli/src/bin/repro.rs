//! Run the named computations and compare them against the golden table.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use fourfold::scenes::{registry, run_all_with, run_scene_with, GoldenTable, DEFAULT_SEED, REFERENCE_PRIME};
use fourfold_cli::{report_line, write_report, EXIT_ERROR, EXIT_GOLDEN, EXIT_OK};

#[derive(Parser)]
#[command(name = "repro", about = "Run scenes and compare against golden values")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one scene (its dependencies are computed on demand).
    Run {
        scene: String,
        #[arg(long, default_value_t = REFERENCE_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Soft time limit in seconds, checked after the scene finishes.
        #[arg(long)]
        budget: Option<u64>,
        /// Compare against this golden table instead of the built-in one.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Run every registered scene in dependency order.
    All {
        /// Only scenes whose name matches this glob.
        #[arg(long)]
        filter: Option<String>,
        /// Include the scenes tagged long.
        #[arg(long)]
        long: bool,
        #[arg(long, default_value_t = REFERENCE_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write one `<scene>.json` report per scene into this directory.
        #[arg(long)]
        report_dir: Option<PathBuf>,
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// List the registered scenes.
    List,
}

fn load_table(path: Option<&PathBuf>) -> Result<GoldenTable, String> {
    let Some(path) = path else { return Ok(GoldenTable::builtin()) };
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let table = GoldenTable::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let problems = table.lint();
    if problems.is_empty() {
        Ok(table)
    } else {
        Err(format!("{}: {}", path.display(), problems.join("; ")))
    }
}

fn main() -> ExitCode {
    let code = match Cli::parse().cmd {
        Cmd::Run { scene, prime, seed, report, budget, golden } => {
            let table = match load_table(golden.as_ref()) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_ERROR as u8);
                }
            };
            match run_scene_with(&scene, prime, seed, budget.map(Duration::from_secs), &table) {
                Ok(r) => {
                    eprintln!("{}", report_line(&r));
                    match report {
                        Some(path) => {
                            if let Err(e) = write_report(&path, &r) {
                                eprintln!("error: cannot write {}: {e}", path.display());
                                return ExitCode::from(EXIT_ERROR as u8);
                            }
                        }
                        None => println!("{}", serde_json::to_string_pretty(&r).expect("report serializes")),
                    }
                    if r.passed() {
                        EXIT_OK
                    } else {
                        EXIT_GOLDEN
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_ERROR
                }
            }
        }
        Cmd::All { filter, long, prime, seed, report_dir, golden } => match load_table(golden.as_ref())
            .and_then(|t| run_all_with(prime, seed, filter.as_deref(), long, &t).map_err(|e| e.to_string()))
        {
            Ok(summary) => {
                if let Some(dir) = &report_dir {
                    if let Err(e) = std::fs::create_dir_all(dir) {
                        eprintln!("error: cannot create {}: {e}", dir.display());
                        return ExitCode::from(EXIT_ERROR as u8);
                    }
                }
                for r in &summary.reports {
                    println!("{}", report_line(r));
                    if let Some(dir) = &report_dir {
                        let path = dir.join(format!("{}.json", r.scene));
                        if let Err(e) = write_report(&path, r) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return ExitCode::from(EXIT_ERROR as u8);
                        }
                    }
                }
                for (name, e) in &summary.errors {
                    println!("{name:<22} ERROR {e}");
                }
                println!(
                    "{} passed, {} failed, {} errors",
                    summary.passed(),
                    summary.failed(),
                    summary.errors.len()
                );
                summary.exit_code()
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_ERROR
            }
        },
        Cmd::List => {
            for s in registry() {
                let deps = if s.depends_on.is_empty() { String::new() } else { format!(" [after {}]", s.depends_on.join(", ")) };
                let tag = if s.long { " (long)" } else { "" };
                println!("{:<22} {}{}{}", s.name, s.summary, tag, deps);
            }
            EXIT_OK
        }
    };
    ExitCode::from(code as u8)
}
