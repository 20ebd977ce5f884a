fn main() {
    std::process::exit(zigzag_hstar::cli::run(std::env::args_os()));
}
