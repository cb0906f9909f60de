fn main() {
    std::process::exit(steiner_core::cli::run(std::env::args_os()));
}
