use std::io::{self, BufWriter, IsTerminal};
use std::process::ExitCode;

fn main() -> ExitCode {
    let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
    let color = !no_color && io::stdout().is_terminal();
    let stdin = io::stdin();
    let mut stdout = BufWriter::new(io::stdout().lock());
    let mut stderr = io::stderr();
    let code = ncpart_cli::run(std::env::args_os(), &mut stdin.lock(), &mut stdout, &mut stderr, color);
    ExitCode::from(code as u8)
}
