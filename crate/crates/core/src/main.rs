fn main() {
    std::process::exit(rankmetric::cli::main_with_args(std::env::args_os()));
}
