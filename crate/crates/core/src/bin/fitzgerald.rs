fn main() {
    std::process::exit(fitzgerald::cli::run(std::env::args_os()));
}
