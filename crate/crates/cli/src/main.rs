use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = diter_cli::run_cli(&args, &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}
