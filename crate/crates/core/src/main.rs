fn main() {
    std::process::exit(hollowlat::cli::main_with_args(std::env::args_os()));
}
