//! r1, r2, r3 of the full set N0 next to their closed forms.

use repfn::{closed_form, IntegerSet, RepKind};

fn main() {
    let nat = IntegerSet::nat();
    println!("  n   r1 form   r2 form   r3 form");
    for n in 0..=12 {
        let cells: Vec<String> = RepKind::ALL
            .iter()
            .map(|&k| format!("{:>4} {:>4}", k.at(&nat, n), closed_form(k, n)))
            .collect();
        println!("{n:>3} {}", cells.join(" "));
    }
}
