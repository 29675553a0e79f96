fn main() {
    std::process::exit(lat_core::cli::main_with_env());
}
