fn main() {
    std::process::exit(elastiq::cli::main_with_args(std::env::args_os()));
}
