fn main() {
    std::process::exit(homlie::cli::execute(std::env::args_os()));
}
