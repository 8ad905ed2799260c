use std::io;

use clap::Parser;
use one_radical_cli::{exit, run, Cli};

fn main() {
    // clap's usage-error status (2) would collide with "unknown"
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { exit::ERROR } else { 0 });
        }
    };
    let code = run(cli, &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
