fn main() {
    std::process::exit(epl_cli::run(std::env::args_os()));
}
