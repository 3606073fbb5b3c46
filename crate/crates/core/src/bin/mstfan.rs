fn main() {
    std::process::exit(mstfan::cli::main());
}
