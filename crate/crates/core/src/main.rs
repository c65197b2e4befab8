fn main() -> std::process::ExitCode {
    indcomplex::cli::run(std::env::args_os())
}
