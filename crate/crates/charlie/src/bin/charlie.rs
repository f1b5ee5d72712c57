fn main() {
    std::process::exit(charlie::cli::run(std::env::args()));
}
