//! Greedily thin out [0, N] while r3 stays non-decreasing. Dropping a prefix
//! only shifts the set, so the greedy pass always takes the smallest integers
//! first.

use repfn::theorems::r3_monotone_greedy_search;

fn main() -> repfn::Result<()> {
    for (max, limit) in [(3, 1), (60, 8), (200, 20)] {
        let found = r3_monotone_greedy_search(max, limit)?;
        println!("N = {max}, at most {limit} exclusions: {}", found.set());
        println!(
            "  r3 tail: {:?}",
            &found.r3[found.r3.len().saturating_sub(8)..]
        );
    }
    Ok(())
}
