//! `qhalg` command-line tool: reports on quasi-hereditary structure as JSON.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::{error_object, exit_code};

#[derive(Parser, Debug)]
#[command(name = "qhalg", version, about = "Heredity chains, rejective subcategories and endomorphism algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Algebra file (.qalg.json)
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    pub algebra: Option<std::path::PathBuf>,
    /// Built-in fixture name
    #[arg(long)]
    pub fixture: Option<String>,
    /// Bound on resolution length (default 2·dim A)
    #[arg(long)]
    pub cap: Option<usize>,
    /// Include wall-clock timing in the report
    #[arg(long)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimensions, radical, projectives and global dimension
    Info(Input),
    /// Classify the chain of a vertex order and its subcategory chain
    Chain {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex labels, smallest first
        #[arg(long)]
        order: String,
        /// heredity | right-strong | left-strong | strong
        #[arg(long)]
        kind: Option<String>,
    },
    /// Search all vertex orders for chains of a given kind
    Search {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        kind: String,
        /// Stop after this many hits
        #[arg(long)]
        limit: Option<usize>,
        /// Largest vertex count searched
        #[arg(long, default_value_t = qhalg::chains::DEFAULT_SEARCH_BOUND)]
        bound: usize,
    },
    /// Construct a right-strong (or left-strong) order for global dimension at most two
    Gl2 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        left: bool,
    },
    /// Auslander algebra of a Nakayama or type-A path algebra
    Auslander {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = qhalg::chains::DEFAULT_SEARCH_BOUND)]
        bound: usize,
    },
    /// Endomorphism algebra of the radical layers of a module (regular by default)
    Iyama {
        #[command(flatten)]
        input: Input,
        /// Module file (.qmod.json)
        #[arg(long)]
        module: Option<std::path::PathBuf>,
    },
    /// Endomorphism algebra of the quotients A/J^k
    Ajk {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = qhalg::chains::DEFAULT_SEARCH_BOUND)]
        bound: usize,
    },
    /// Graphviz rendering of the quiver
    Dot(Input),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = std::panic::catch_unwind(|| commands::run(&cli));
    let result = match outcome {
        Ok(r) => r,
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(qhalg::Error::InternalDefect(msg))
        }
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", error_object(&e));
            ExitCode::from(exit_code(&e))
        }
    }
}
