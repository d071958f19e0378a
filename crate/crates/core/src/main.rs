fn main() {
    std::process::exit(classnum::cli::main_with_args(std::env::args_os()));
}
