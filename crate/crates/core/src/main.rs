fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(rook_harmonics::cli::run(&args));
}
