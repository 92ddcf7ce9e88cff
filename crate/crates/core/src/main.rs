fn main() {
    std::process::exit(horocycle::cli::run());
}
