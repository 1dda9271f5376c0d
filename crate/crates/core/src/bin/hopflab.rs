fn main() {
    std::process::exit(hopflab::cli::cli_main(std::env::args_os()));
}
