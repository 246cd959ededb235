fn main() {
    std::process::exit(shallow_well::cli::run(std::env::args_os()));
}
