//! Groebner bases of ideals read from a text file.
//!
//! The input starts with a header `ring p=<prime> vars=<n>` and declares
//! ideals as `ideal <name> = <poly>; <poly>; ...`. Variables are `x0..x{n-1}`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fourfold::groebner::buchberger;
use fourfold::mpoly::{parse_ideal_file, print_ideal, MonomialOrder};
use fourfold_cli::{EXIT_ERROR, EXIT_OK};

#[derive(Parser)]
#[command(name = "gb", about = "Groebner bases over GF(p)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the reduced Groebner basis of every ideal in the file.
    Compute {
        #[arg(long)]
        input: PathBuf,
        /// grevlex, lex or elim:K (eliminate the first K variables)
        #[arg(long, default_value = "grevlex", value_parser = parse_order)]
        order: MonomialOrder,
    },
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    MonomialOrder::parse(s).ok_or_else(|| format!("unknown order '{s}' (expected grevlex, lex or elim:K)"))
}

fn run(input: &PathBuf, order: MonomialOrder) -> Result<String, String> {
    let text = std::fs::read_to_string(input).map_err(|e| format!("{}: {e}", input.display()))?;
    let file = parse_ideal_file(&text).map_err(|e| format!("{}: {e}", input.display()))?;
    let elim = match &order {
        MonomialOrder::Elim { k, .. } => Some(*k),
        _ => None,
    };
    let ring = file.ring.with_order(order).map_err(|e| e.to_string())?;
    let mut out = String::new();
    for (name, gens) in &file.ideals {
        let gens: Vec<_> = gens.iter().map(|g| g.to_ring(&ring)).collect();
        let gb = buchberger(&ring, &gens).map_err(|e| format!("ideal {name}: {e}"))?;
        let elems = gb.elements();
        out.push_str(&print_ideal(&format!("{name}_gb"), &elems));
        out.push('\n');
        if let Some(k) = elim {
            let kept: Vec<_> =
                elems.into_iter().filter(|g| g.terms().iter().all(|t| (0..k).all(|v| t.m.exp(v) == 0))).collect();
            out.push_str(&print_ideal(&format!("{name}_elim"), &kept));
            out.push('\n');
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let Cmd::Compute { input, order } = Cli::parse().cmd;
    match run(&input, order) {
        Ok(text) => {
            print!("{text}");
            ExitCode::from(EXIT_OK as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
