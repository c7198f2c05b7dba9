use clap::Parser;
use picard::cli::{run, Cli, Io};

fn main() {
    let cli = Cli::parse();
    let code = run(
        &cli,
        &mut Io {
            stdin: &mut std::io::stdin().lock(),
            stdout: &mut std::io::stdout().lock(),
            stderr: &mut std::io::stderr().lock(),
        },
    );
    std::process::exit(code);
}
