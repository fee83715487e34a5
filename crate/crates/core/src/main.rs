use std::io::Write;

fn main() {
    let outcome = higgs_betti::cli::run_args(std::env::args_os());
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let mut out = std::io::stdout().lock();
    out.write_all(outcome.stdout.as_bytes()).ok();
    out.flush().ok();
    std::io::stderr().write_all(outcome.stderr.as_bytes()).ok();
    std::process::exit(outcome.code);
}
