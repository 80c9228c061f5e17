//! Runs the complete verification pipeline -- every claim the library
//! makes, recomputed from scratch -- and prints the report.

use kscert::report::{run_verification, VerifyOptions};

fn main() {
    let report = run_verification(&VerifyOptions::default());
    print!("{}", report.render_text());
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
