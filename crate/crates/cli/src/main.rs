mod args;
mod commands;
mod output;
mod repro;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, ReproCmd};
use commands::CliError;

#[derive(Serialize)]
struct ErrorRecord<'a> {
    error: &'a str,
    message: &'a str,
}

fn dispatch(cli: &Cli) -> commands::CmdResult {
    let g = &cli.global;
    match &cli.command {
        Command::Psi { cmd } => commands::psi_cmd(g, cmd),
        Command::Coeff { cmd } => commands::coeff_cmd(g, cmd),
        Command::Verify { suite } => commands::verify_cmd(g, suite),
        Command::Mersenne { cmd } => commands::mersenne_cmd(g, cmd),
        Command::Bridges { cmd } => commands::bridges_cmd(g, cmd),
        Command::Identities { cmd } => commands::identities_cmd(g, cmd),
        Command::Repro { cmd: ReproCmd::All { out } } => repro::repro_all(g, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    psi_core::psi::set_symbolic_cap(cli.global.symbolic_cap);
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(CliError { code, reason, message }) => {
            let rec = ErrorRecord {
                error: reason,
                message: &message,
            };
            eprintln!("{}", serde_json::to_string(&rec).expect("serializable"));
            ExitCode::from(code as u8)
        }
    }
}
