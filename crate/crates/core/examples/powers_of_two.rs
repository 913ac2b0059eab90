//! r1 on the powers of two and on their complement: how often it fails to
//! grow, against the logarithmic bounds.

use repfn::monotonicity::find_violations;
use repfn::theorems::{construct_thm11, thm11_bound, Thm11Variant};
use repfn::{batch_table, RepKind, Strategy};

fn main() -> repfn::Result<()> {
    for (variant, strict) in [
        (Thm11Variant::PowersOfTwo, false),
        (Thm11Variant::PowersOfTwoRemoved, true),
    ] {
        let set = construct_thm11(variant);
        let max = 1 << 20;
        let table = batch_table(&set, max, Strategy::Sparse)?;
        let report = find_violations(&table, RepKind::R1, strict);
        println!("{set} ({}):", if strict { "strict" } else { "non-strict" });
        for shift in [10, 14, 17, 20] {
            let n = 1u64 << shift;
            let bound = thm11_bound(variant, n)?.bound;
            println!(
                "  N = 2^{shift:<2}  violations {:>4}  bound {bound:>4}",
                report.count_below(n)
            );
        }
    }
    Ok(())
}
