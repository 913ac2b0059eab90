//! Whole tables with each strategy, then CSV and JSON export.

use std::time::Instant;

use repfn::{batch_table, IntegerSet, RepKind, Strategy};

fn main() -> repfn::Result<()> {
    let set: IntegerSet = "periodic:1101;0110101".parse()?;
    let max = 1 << 14;
    for strategy in [Strategy::Naive, Strategy::WordParallel, Strategy::Auto] {
        let start = Instant::now();
        let t = batch_table(&set, max, strategy)?;
        println!(
            "{strategy:?}: r1({max}) = {} in {:.1?}",
            t.get(RepKind::R1, max).unwrap(),
            start.elapsed()
        );
    }

    let cofinite: IntegerSet = "complement(finite:2,4,8)".parse()?;
    let t = batch_table(&cofinite, 1 << 16, Strategy::Sparse)?;
    println!(
        "sparse: r1({cofinite}, 10) = {}",
        t.get(RepKind::R1, 10).unwrap()
    );

    let small = batch_table(&set, 6, Strategy::Auto)?;
    print!("{}", small.to_csv());
    println!("{}", small.to_json());
    Ok(())
}
