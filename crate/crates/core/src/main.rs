fn main() {
    std::process::exit(tablescout::cli::run(std::env::args_os()));
}
