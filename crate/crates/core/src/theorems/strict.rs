use serde::Serialize;

use crate::error::{Error, Result};
use crate::monotonicity::window_nonstrict_step;
use crate::rep::{closed_form, RepKind};
use crate::set::IntegerSet;

/// A step in `[N, 2N + 2]` where r2 or r3 does not grow, with the cap
/// `r2(N0, 2N + 3) = N + 2` that makes such a step unavoidable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictRefutation {
    #[serde(rename = "set")]
    pub set_spec: String,
    pub kind: RepKind,
    #[serde(rename = "N")]
    pub start: u64,
    pub witness: u64,
    pub before: u64,
    pub after: u64,
    pub lemma_cap: u64,
    /// `r(A, 2N + 3)`, never above the cap.
    pub value_at_end: u64,
}

pub fn thm13_refute_strict(
    set: &IntegerSet,
    start: u64,
    kind: RepKind,
) -> Result<StrictRefutation> {
    let witness = window_nonstrict_step(set, start, kind)?;
    let end = 2 * start + 3;
    let lemma_cap = closed_form(RepKind::R2, end);
    debug_assert_eq!(lemma_cap, start + 2);
    let value_at_end = kind.at(set, end);
    if value_at_end > lemma_cap {
        return Err(Error::TheoremViolated(format!(
            "{kind}({set}, {end}) = {value_at_end} exceeds r2(N0, {end}) = {lemma_cap}"
        )));
    }
    Ok(StrictRefutation {
        set_spec: set.to_string(),
        kind,
        start,
        witness,
        before: kind.at(set, witness),
        after: kind.at(set, witness + 1),
        lemma_cap,
        value_at_end,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::{construct_thm11, Thm11Variant};

    fn set(s: &str) -> IntegerSet {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let r = thm13_refute_strict(&set("nat"), 0, RepKind::R3).unwrap();
        assert_eq!((r.witness, r.before, r.after, r.lemma_cap), (1, 1, 1, 2));

        let a = construct_thm11(Thm11Variant::PowersOfTwoRemoved);
        let r = thm13_refute_strict(&a, 5, RepKind::R2).unwrap();
        assert!((5..=12).contains(&r.witness));
        assert!(r.after <= r.before);

        let r = thm13_refute_strict(&set("empty"), 7, RepKind::R2).unwrap();
        assert_eq!(r.witness, 7);
        assert_eq!(r.lemma_cap, 9);
    }
}
