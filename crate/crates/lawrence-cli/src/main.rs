fn main() {
    std::process::exit(lawrence_cli::run());
}
