use std::process::ExitCode;

fn main() -> ExitCode {
    rieszhull::cli::main_entry()
}
