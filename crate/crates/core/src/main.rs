fn main() {
    std::process::exit(fusionkit::cli::main());
}
