fn main() {
    std::process::exit(wellcover::cli::run(std::env::args_os()));
}
