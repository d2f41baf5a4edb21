fn main() {
    std::process::exit(cheeger_cli::run(std::env::args_os()));
}
