//! Enumerate curve classes on the degree-one del Pezzo surface.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fourfold::lattice::{enumerate_classes, export_classes, ClassKind};
use fourfold_cli::{EXIT_ERROR, EXIT_OK};

#[derive(Parser)]
#[command(name = "lattice", about = "Picard lattice tools")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write all classes of one kind, one coefficient row per line.
    Enum {
        /// minus-one, conics or cubics
        #[arg(value_parser = parse_kind)]
        kind: ClassKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> Result<ClassKind, String> {
    ClassKind::parse(s).ok_or_else(|| format!("unknown class kind '{s}' (expected minus-one, conics or cubics)"))
}

fn main() -> ExitCode {
    let Cmd::Enum { kind, out } = Cli::parse().cmd;
    let classes = enumerate_classes(kind);
    let written = match &out {
        Some(path) => std::fs::File::create(path).and_then(|f| {
            let mut w = std::io::BufWriter::new(f);
            export_classes(&mut w, kind, &classes)?;
            w.flush()
        }),
        None => export_classes(&mut std::io::stdout().lock(), kind, &classes),
    };
    match written {
        Ok(()) => {
            eprintln!("{} classes of kind {}", classes.len(), kind.name());
            ExitCode::from(EXIT_OK as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
