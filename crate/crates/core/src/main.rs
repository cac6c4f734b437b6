fn main() {
    std::process::exit(qarr::cli::run());
}
