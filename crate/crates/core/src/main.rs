fn main() {
    std::process::exit(bv_ehrhart::cli::run(std::env::args_os()));
}
