fn main() {
    std::process::exit(simson::cli::run(std::env::args_os()));
}
