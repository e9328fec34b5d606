use std::io::Write;

fn main() {
    let out = coregroup::cli::run_from_args(std::env::args_os());
    // one write per stream, so concurrent runs do not interleave
    let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
