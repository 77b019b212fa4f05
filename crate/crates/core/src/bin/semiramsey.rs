fn main() {
    std::process::exit(semiramsey::cli::run(std::env::args_os()));
}
