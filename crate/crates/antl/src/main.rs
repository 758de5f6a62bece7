fn main() -> std::process::ExitCode {
    antl::cli::main()
}
