use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = ccgmap::cli::Cli::parse();
    let code = ccgmap::cli::run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code)
}
