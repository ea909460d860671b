fn main() {
    std::process::exit(lieosc::cli::run());
}
