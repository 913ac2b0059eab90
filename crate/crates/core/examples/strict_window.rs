//! r2 and r3 cannot grow on every step of [N, 2N + 3].

use repfn::theorems::{construct_thm11, thm13_refute_strict, Thm11Variant};
use repfn::{IntegerSet, RepKind};

fn main() -> repfn::Result<()> {
    let sets = [
        IntegerSet::nat(),
        construct_thm11(Thm11Variant::PowersOfTwoRemoved),
        "periodic:1;110".parse()?,
    ];
    for set in &sets {
        for kind in [RepKind::R2, RepKind::R3] {
            for start in [0, 5, 40] {
                let r = thm13_refute_strict(set, start, kind)?;
                println!(
                    "{set} {kind} N = {start:>2}: step at {:>2} ({} -> {}), {kind}({}) = {} <= {}",
                    r.witness,
                    r.before,
                    r.after,
                    2 * start + 3,
                    r.value_at_end,
                    r.lemma_cap
                );
            }
        }
    }
    Ok(())
}
