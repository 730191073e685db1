use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use burnside::commands::{self, Action, Method};
use burnside::output::ErrorJson;
use burnside::{limits_from_env, CliError, CommandResult, Payload, Status};
use burnside_core::Partition;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

/// Exact λ-operations on the Burnside ring of the symmetric groups.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
/// The group-order cap can be set with BURNSIDE_GROUP_CAP.
#[derive(Debug, Parser)]
#[command(name = "burnside", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// λ^i of the natural S_n-set {1..n}.
    Lambda {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
        #[arg(long)]
        i: u16,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// σ^i of {1..n}.
    Sigma {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
        #[arg(long)]
        i: u16,
    },
    /// Product of two basis classes, each padded to n.
    Mul {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
        #[arg(long)]
        a: Partition,
        #[arg(long)]
        b: Partition,
    },
    /// Table of marks of the basis classes at every cycle type.
    Marks {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
    },
    /// Full verification sweep up to n-max.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: u16,
        #[arg(long)]
        i_max: Option<u16>,
    },
    /// Closed formula against the recursion for a group read from a file.
    Oracle {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, value_enum, default_value_t = Action::Natural)]
        action: Action,
        #[arg(long)]
        i: Option<u16>,
    },
    /// Induction after restriction from S_i to S_n.
    Indres {
        #[arg(long)]
        i: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Lambda { .. } => "lambda",
            Command::Sigma { .. } => "sigma",
            Command::Mul { .. } => "mul",
            Command::Marks { .. } => "marks",
            Command::Verify { .. } => "verify",
            Command::Oracle { .. } => "oracle",
            Command::Indres { .. } => "indres",
        }
    }

    fn run(&self) -> Result<CommandResult, CliError> {
        let limits = limits_from_env()?;
        match *self {
            Command::Lambda { n, i, method } => commands::lambda(n.into(), i.into(), method),
            Command::Sigma { n, i } => commands::sigma_cmd(n.into(), i.into()),
            Command::Mul { n, ref a, ref b } => commands::mul(n.into(), a, b),
            Command::Marks { n } => commands::marks(n.into()),
            Command::Verify { n_max, i_max } => commands::verify(n_max.into(), i_max.map(Into::into)),
            Command::Oracle { ref group, action, i } => commands::oracle(group, action, i.map(Into::into), limits),
            Command::Indres { i, n } => commands::indres(i.into(), n.into(), limits),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, code) = match cli.command.run() {
        Ok(r) => {
            let code = if r.status == Status::Ok { 0 } else { 1 };
            (r, code)
        }
        Err(e) => {
            let r = CommandResult {
                command: cli.command.name().to_string(),
                status: Status::Error,
                payload: Payload::Error(ErrorJson { kind: e.kind().to_string(), message: e.to_string() }),
                diagnostics: Vec::new(),
            };
            (r, e.exit_code())
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let written = match cli.format {
        Format::Structured => out.write_all(result.to_json().as_bytes()),
        Format::Text => {
            let mut err = std::io::stderr().lock();
            for d in &result.diagnostics {
                let _ = writeln!(err, "{}", d);
            }
            if let Payload::Error(e) = &result.payload {
                let _ = writeln!(err, "error: {}", e.message);
                Ok(())
            } else {
                out.write_all(result.to_text().as_bytes())
            }
        }
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
