use std::io::Write;

fn main() {
    let out = leibniz_cli::run_command(std::env::args().skip(1));
    if !out.stdout.is_empty() {
        print!("{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        let _ = write!(std::io::stderr(), "{}", out.stderr);
    }
    std::process::exit(out.code);
}
