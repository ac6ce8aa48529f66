fn main() {
    std::process::exit(hurwitz_gw::cli::main_with_args(std::env::args_os()));
}
