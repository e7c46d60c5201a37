//! Run a verification suite and print one line per check.
//!
//! ```bash
//! QFORMS_THREADS=4 cargo run --release --example verification_suite -- shuffle
//! ```

use qforms::verify::suite::{all_passed, run_suite, Suite, SuiteConfig};

fn main() -> qforms::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("summation").parse()?;
    let reports = run_suite(suite, &SuiteConfig::default());
    for r in &reports {
        println!("{}", r.summary());
    }
    println!("all passed: {}", all_passed(&reports));
    Ok(())
}
