use clap::Parser;

fn main() {
    let cli = svapprox::cli::Cli::parse();
    match svapprox::cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}
