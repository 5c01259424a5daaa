fn main() {
    std::process::exit(goedelsim_cli::run(std::env::args_os()));
}
