use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(umbra::cli::run(std::env::args()) as u8)
}
