fn main() {
    std::process::exit(edgesym::cli::run(std::env::args_os()));
}
