fn main() {
    std::process::exit(regauto_cli::run_cli(std::env::args_os()));
}
