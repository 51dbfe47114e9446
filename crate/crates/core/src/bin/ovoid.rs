fn main() {
    std::process::exit(ovoid::cli::run(std::env::args_os()));
}
