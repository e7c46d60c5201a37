fn main() {
    std::process::exit(qforms::cli::run(std::env::args_os()));
}
