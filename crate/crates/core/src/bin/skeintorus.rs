fn main() -> std::process::ExitCode {
    skeintorus::cli::main()
}
