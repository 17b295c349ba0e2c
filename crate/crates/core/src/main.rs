fn main() {
    std::process::exit(hyperpencil::cli::main_with_args());
}
