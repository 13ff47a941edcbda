fn main() {
    let code = lusztig_fock::cli::main_with_args(std::env::args_os());
    std::process::exit(code);
}
