use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (status, out) = wall_cf::cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = stdout
        .write_all(out.as_bytes())
        .and_then(|()| stdout.flush());
    ExitCode::from(status as u8)
}
