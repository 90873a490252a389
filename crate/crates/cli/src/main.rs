mod args;
mod commands;
mod error;
mod input;
mod output;
mod verify;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{CatalogCommand, Cli, Command};
use error::{exit, CliResult};

fn dispatch(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Eval(a) => commands::eval(a),
        Command::Coeffs(a) => commands::coeffs(a),
        Command::Generator(a) => commands::generator(a),
        Command::CycleGraph(a) => commands::cycle_graph(a),
        Command::Landau(a) => commands::landau_table(a),
        Command::Verify(a) => verify::verify(a),
        Command::Catalog(CatalogCommand::List { fmt }) => commands::catalog_list(*fmt),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp
            | ErrorKind::DisplayVersion
            | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            _ => {
                let msg = e.to_string();
                let first = msg.lines().next().unwrap_or("invalid arguments");
                let first = first.strip_prefix("error: ").unwrap_or(first);
                eprintln!("error:usage: {first}");
                for line in msg.lines().skip(1).filter(|l| !l.trim().is_empty()) {
                    eprintln!("  {}", line.trim_end());
                }
                return ExitCode::from(exit::USAGE as u8);
            }
        },
    };
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code as u8)
        }
    }
}
