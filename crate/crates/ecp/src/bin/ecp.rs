fn main() {
    std::process::exit(ecp::cli::run(std::env::args().collect()));
}
