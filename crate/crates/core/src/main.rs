fn main() -> std::process::ExitCode {
    tridet::cli::main()
}
