use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = ivhfss::cli::run_from(std::env::args_os(), &mut stdout(), &mut stderr());
    ExitCode::from(u8::try_from(code).unwrap_or(2))
}
