fn main() -> std::process::ExitCode {
    molperc::cli::main()
}
