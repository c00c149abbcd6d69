use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(loctower_cli::run(std::env::args_os()))
}
