//! The closed form for r1 of N0 minus the powers of two on each block
//! (2^j, 2^{j+1}], with the points where direct counting disagrees.

use repfn::theorems::block_formula_check;

fn main() -> repfn::Result<()> {
    for j in 1..=10 {
        let check = block_formula_check(j)?;
        let bad: Vec<String> = check
            .mismatches
            .iter()
            .map(|m| format!("n = {}: formula {}, count {}", m.n, m.claimed, m.actual))
            .collect();
        println!(
            "j = {j:>2}: {} values, {}",
            check.checked,
            if bad.is_empty() {
                "all match".into()
            } else {
                bad.join("; ")
            }
        );
    }
    Ok(())
}
