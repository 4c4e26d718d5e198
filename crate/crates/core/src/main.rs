use clap::Parser;

fn main() {
    let cli = hexoct::cli::Cli::parse();
    std::process::exit(hexoct::cli::run(&cli));
}
