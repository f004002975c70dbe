fn main() {
    std::process::exit(graded_rigidity::cli::run(std::env::args_os()));
}
