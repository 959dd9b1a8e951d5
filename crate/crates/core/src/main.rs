fn main() {
    std::process::exit(srclab::cli::run_cli(std::env::args_os()));
}
