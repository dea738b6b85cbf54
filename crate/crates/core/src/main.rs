fn main() {
    std::process::exit(lierep::cli::run(std::env::args_os()));
}
