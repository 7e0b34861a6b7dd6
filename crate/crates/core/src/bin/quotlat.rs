use std::io::Write;
use std::process::ExitCode;

use quotlat::cli::{parse_args, run};

fn main() -> ExitCode {
    let req = match parse_args(std::env::args_os()) {
        Ok(r) => r,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let out = run(&req);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.status as u8)
}
