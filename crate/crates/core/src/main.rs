fn main() {
    std::process::exit(quiver_cm::cli::main_with_args(std::env::args().collect()));
}
