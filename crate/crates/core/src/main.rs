fn main() {
    std::process::exit(mubasis::cli::main_with_args(std::env::args_os()));
}
