fn main() {
    std::process::exit(cil::cli::run());
}
