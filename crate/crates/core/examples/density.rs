//! Exact finite-window densities.

use repfn::monotonicity::natural_density_estimate;
use repfn::theorems::{construct_thm11, Thm11Variant};

fn main() -> repfn::Result<()> {
    for set in [
        construct_thm11(Thm11Variant::PowersOfTwo),
        construct_thm11(Thm11Variant::PowersOfTwoRemoved),
        "periodic:;011".parse()?,
    ] {
        for n in [10, 1000, 1_000_000] {
            let d = natural_density_estimate(&set, n)?;
            println!(
                "{set:<22} N = {n:>7}: {}/{} = {:.6}",
                d.member_count,
                n,
                *d.ratio.numer() as f64 / *d.ratio.denom() as f64
            );
        }
    }
    Ok(())
}
