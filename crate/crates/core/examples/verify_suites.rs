//! Runs the quick verification suites and summarizes them.

use repfn::verify::{run_suite, Suite, VerifyOptions};

fn main() -> repfn::Result<()> {
    let options = VerifyOptions::default();
    for suite in [
        Suite::Lemma,
        Suite::Identities,
        Suite::Thm11a,
        Suite::Thm11b,
        Suite::Blocks,
        Suite::Thm12,
        Suite::Diagram,
    ] {
        let outcomes = run_suite(suite, &options)?;
        let failed: Vec<_> = outcomes.iter().filter(|c| !c.passed).collect();
        println!(
            "{suite:<10} {}/{} checks pass",
            outcomes.len() - failed.len(),
            outcomes.len()
        );
        for c in failed.iter().take(3) {
            println!("  {}: {}", c.check, c.detail);
        }
    }
    Ok(())
}
