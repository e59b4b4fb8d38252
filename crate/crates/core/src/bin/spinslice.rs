use clap::Parser;
use spinslice::cli::{run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = std::panic::catch_unwind(|| run(cli)).unwrap_or(2);
    std::process::exit(code);
}
