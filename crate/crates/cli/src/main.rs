use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = wittgauge_cli::run_args(std::env::args_os().skip(1));
    if outcome.code == wittgauge_cli::EXIT_PASS || outcome.code == wittgauge_cli::EXIT_VERIFY {
        print!("{}", outcome.report);
    } else {
        eprint!("{}", outcome.report);
    }
    ExitCode::from(outcome.code as u8)
}
