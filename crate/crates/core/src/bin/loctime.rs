fn main() -> std::process::ExitCode {
    loctime::cli::main_with(std::env::args_os())
}
