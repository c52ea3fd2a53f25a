fn main() {
    std::process::exit(qtw_core::cli::run(std::env::args_os()));
}
