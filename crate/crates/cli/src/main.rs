use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stderr = std::io::stderr();
    let outcome = olympiad_cli::run(std::env::args_os(), &mut stderr.lock());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.output.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(outcome.code as u8)
}
