fn main() {
    std::process::exit(paprlab::cli::main_with_args(std::env::args_os()));
}
