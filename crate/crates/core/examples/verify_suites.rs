//! Runs every verification suite for A1 and A2 and prints the tables.

use qdouble::rootdata::RootDatum;
use qdouble::verify::{run_suite, Suite, VerifyOptions};

fn main() -> qdouble::Result<()> {
    for name in ["A1", "A2"] {
        let datum = RootDatum::from_type(name)?;
        for suite in Suite::EACH {
            let report = run_suite(&datum, suite, &VerifyOptions::default())?;
            println!("{name} {suite}\n{}", report.table());
        }
    }
    Ok(())
}
