fn main() {
    std::process::exit(fusioncell::cli::main());
}
