fn main() {
    std::process::exit(motif_kit::cli::main_with_args(std::env::args_os()));
}
