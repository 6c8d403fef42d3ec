//! Runs the verification suite, or the groups named on the command line,
//! and prints the CSV table.
//!
//! cargo run --release --example verify_suite -- heawood,star

use loctime::verify::{run_suite, to_csv, VerifyConfig};

fn main() {
    let only = std::env::args().nth(1);
    let checks = run_suite("paper", only.as_deref(), &VerifyConfig::default()).unwrap();
    print!("{}", to_csv(&checks));
    let failed = checks.iter().filter(|c| !c.pass).count();
    eprintln!("{} checks, {failed} failed", checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
