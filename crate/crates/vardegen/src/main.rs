use clap::Parser;
use vardegen::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (code, out) = run(&cli);
    print!("{out}");
    std::process::exit(code);
}
