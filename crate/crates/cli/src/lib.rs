//! Command-line front end for `canonframe`: link files in, tables or JSON out.

pub mod catalog;
pub mod commands;
pub mod document;
pub mod error;

use std::path::PathBuf;

use canonframe::dhplane::TotalDefect;
use canonframe::exactmath::Rational;
use canonframe::quotients::FiniteSubgroup;
use clap::{Parser, Subcommand};

pub use commands::Output;
pub use document::LinkDocument;
pub use error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(
    name = "canonframe",
    version,
    about = "Canonical framings of 3-manifolds",
    allow_negative_numbers = true
)]
pub struct Cli {
    /// Print JSON instead of a table
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of the manifold obtained by surgery on a framed link
    Invariants { file: PathBuf },
    /// Canonical framings of a link's spin structure, or of a λ class
    Canonical {
        #[arg(required_unless_present = "lambda", conflicts_with = "lambda")]
        file: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<i64>,
    },
    /// Spherical space form S³/G; G is one of C<m>, D<m>, T, O, I
    Quotient { group: FiniteSubgroup },
    /// Circle bundle over a closed surface
    Bundle {
        #[arg(long)]
        genus: u32,
        #[arg(long, allow_hyphen_values = true)]
        euler: i64,
    },
    /// Pull a total defect back along a finite cover
    Cover {
        /// Total defect as `d,h`
        #[arg(long, value_parser = parse_defect, allow_hyphen_values = true)]
        defect: TotalDefect,
        #[arg(long)]
        degree: i64,
        /// Signature defect of the cover, `p` or `p/q`
        #[arg(long, allow_hyphen_values = true)]
        sigma_pi: Rational,
    },
    /// Reference values, recomputed
    Catalog,
}

pub fn parse_defect(s: &str) -> std::result::Result<TotalDefect, String> {
    let (d, h) = s
        .split_once(',')
        .ok_or_else(|| format!("expected d,h, got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
    Ok(TotalDefect::new(parse(d)?, parse(h)?))
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Invariants { file } => commands::invariants(&LinkDocument::load(file)?),
        Command::Canonical {
            file: Some(file), ..
        } => commands::canonical_for_link(&LinkDocument::load(file)?),
        Command::Canonical {
            lambda: Some(k), ..
        } => Ok(commands::canonical_for_lambda(*k)),
        Command::Canonical { .. } => Err(CliError::Invalid("give a link file or --lambda".into())),
        Command::Quotient { group } => commands::quotient(*group),
        Command::Bundle { genus, euler } => commands::bundle(*genus, *euler),
        Command::Cover {
            defect,
            degree,
            sigma_pi,
        } => commands::cover(*defect, *degree, sigma_pi),
        Command::Catalog => catalog::catalog(),
    }
}

/// Renders the chosen format; JSON is pretty-printed with sorted keys.
pub fn render(out: &Output, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&out.json).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        out.text.clone()
    }
}
