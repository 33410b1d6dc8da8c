fn main() {
    std::process::exit(cozero::cli::main());
}
