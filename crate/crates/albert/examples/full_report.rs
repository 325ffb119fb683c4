//! Build the complete verification report (the same one the
//! `albert verify-paper` subcommand prints) and summarize it.
//!
//! ```bash
//! cargo run --release -p albert --example full_report
//! ```

use albert::report;

fn main() {
    let rep = report::verify_paper(42);
    print!("{}", rep.render_text());
    std::process::exit(if rep.has_failures() { 1 } else { 0 });
}
