use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use linkage_cli::{run, Format, Invocation};

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Linkage computations over quotients of polynomial rings.
#[derive(Parser)]
#[command(name = "linkage", version)]
struct Cli {
    /// Session file declaring rings, ideals, modules and sheaves.
    session: std::path::PathBuf,
    /// Command to run, e.g. `link-pair`.
    command: String,
    /// Names of declared objects the command acts on.
    args: Vec<String>,
    /// Seed for the randomized homomorphism search.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random trials per search before giving up.
    #[arg(long, default_value_t = 64)]
    trials: usize,
    /// Run additional internal consistency checks.
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Number of maps computed by `resolve`.
    #[arg(long, default_value_t = 4)]
    length: usize,
    /// Zero divisors `f|g` certifying that a chart ring is not a domain.
    #[arg(long)]
    witness: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let inv = Invocation {
        command: cli.command,
        args: cli.args,
        seed: cli.seed,
        trials: cli.trials,
        verify: cli.verify,
        length: cli.length,
        witness: cli.witness,
    };
    let (out, code) = match std::fs::read_to_string(&cli.session) {
        Ok(text) => run(&text, &inv, format),
        Err(e) => {
            (linkage_cli::report::render_error(&inv.echo(), &format!("{}: {e}", cli.session.display()), format), 1)
        }
    };
    if code == 1 && format == Format::Text {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(code as u8)
}
