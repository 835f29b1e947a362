fn main() {
    std::process::exit(qgv_core::cli::main());
}
