//! Predicting where r2 drops from the first few missing integers.

use repfn::theorems::{first_r2_decrease_bruteforce, predict_r2_decrease};
use repfn::IntegerSet;

fn main() -> repfn::Result<()> {
    for spec in [
        "complement(finite:3,5,9)",
        "complement(finite:2,5)",
        "complement(finite:2,4,5)",
        "complement(finite:2,4,9)",
        "complement(finite:0,1,2,5,7)",
        "periodic:011;01101",
    ] {
        let set: IntegerSet = spec.parse()?;
        let w = predict_r2_decrease(&set, 10_000)?;
        let first = first_r2_decrease_bruteforce(&set, w.n + 1);
        println!(
            "{spec}: {} at n = {} ({} -> {}), first drop {first:?}",
            w.case.tag(),
            w.n,
            w.before,
            w.after
        );
        println!("  {}", w.to_json());
    }
    Ok(())
}
