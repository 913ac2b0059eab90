//! Locating a drop `r2(A, n) > r2(A, n + 1)` from the first missing integers
//! `c1 < c2 < c3` of a nonempty set with infinite complement.
//!
//! | case          | condition                      | drop at      |
//! |---------------|--------------------------------|--------------|
//! | `C1_ODD`      | `c1` odd                       | `c1 - 1`     |
//! | `C2_ODD`      | `c1 = 2x > 0`, `c2` odd        | `c2 - 1`     |
//! | `C3_ADJACENT` | `c2` even, `c3 = c2 + 1`       | `c2`         |
//! | `C3_GAP`      | `c2` even, `c3 > c2 + 1`       | `c1 + c2`    |
//! | `SHIFTED`     | `c1 = 0`, `m = min(A)`         | `2m + n'`    |
//!
//! In the shifted case `n'` is the drop of `A - m`, which contains 0 and so
//! resolves in one of the first four cases.

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::rep::r2_at;
use crate::set::IntegerSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseTrace {
    C1Odd,
    C2Odd,
    C3Adjacent,
    C3Gap,
    Shifted {
        shift: u64,
        inner: Box<DecreaseWitness>,
    },
}

impl CaseTrace {
    pub fn tag(&self) -> &'static str {
        match self {
            CaseTrace::C1Odd => "C1_ODD",
            CaseTrace::C2Odd => "C2_ODD",
            CaseTrace::C3Adjacent => "C3_ADJACENT",
            CaseTrace::C3Gap => "C3_GAP",
            CaseTrace::Shifted { .. } => "SHIFTED",
        }
    }
}

/// A verified index `n` with `r2(A, n) > r2(A, n + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecreaseWitness {
    pub set_spec: String,
    pub n: u64,
    pub case: CaseTrace,
    /// The missing integers that fixed the case; for `SHIFTED` those of the shifted set.
    pub c_values: Vec<u64>,
    pub before: u64,
    pub after: u64,
}

impl DecreaseWitness {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }

    /// The innermost case, looking through a shift.
    pub fn base_case(&self) -> &CaseTrace {
        match &self.case {
            CaseTrace::Shifted { inner, .. } => inner.base_case(),
            case => case,
        }
    }
}

impl Serialize for DecreaseWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("set", &self.set_spec)?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("case_trace", self.case.tag())?;
        if let CaseTrace::Shifted { shift, inner } = &self.case {
            map.serialize_entry("shift", shift)?;
            map.serialize_entry("inner", inner.as_ref())?;
        }
        map.serialize_entry("c_values", &self.c_values)?;
        map.serialize_entry("before", &self.before)?;
        map.serialize_entry("after", &self.after)?;
        map.end()
    }
}

/// Predicts a drop of r2 from the complement prefix within `scan_bound` and
/// verifies it by recomputing r2 at `n` and `n + 1`.
///
/// When `c2` is even and no third missing integer lies within the scan
/// bound, `c3 > c2 + 1` is known as soon as the bound reaches `c2 + 1`, and
/// the `C3_GAP` argument applies.
pub fn predict_r2_decrease(set: &IntegerSet, scan_bound: u64) -> Result<DecreaseWitness> {
    let min = set.min_element()?;
    let prefix = set.complement_prefix(3, scan_bound);
    let c = &prefix.elements;
    let insufficient = || Error::InsufficientComplement {
        found: c.clone(),
        scan_bound: prefix.scan_bound,
    };

    let c1 = *c.first().ok_or_else(insufficient)?;
    let (n, case, c_values) = if c1 == 0 {
        let shifted = set.shift_down(min)?;
        let inner = predict_r2_decrease(&shifted, scan_bound.saturating_sub(min))?;
        if let CaseTrace::Shifted { .. } = inner.case {
            return Err(Error::TheoremViolated(format!(
                "{shifted} contains 0 yet needed a second shift"
            )));
        }
        let c_values = inner.c_values.clone();
        (
            2 * min + inner.n,
            CaseTrace::Shifted {
                shift: min,
                inner: Box::new(inner),
            },
            c_values,
        )
    } else if c1 % 2 == 1 {
        (c1 - 1, CaseTrace::C1Odd, vec![c1])
    } else {
        let c2 = *c.get(1).ok_or_else(insufficient)?;
        if c2 % 2 == 1 {
            (c2 - 1, CaseTrace::C2Odd, vec![c1, c2])
        } else {
            match c.get(2) {
                Some(&c3) if c3 == c2 + 1 => (c2, CaseTrace::C3Adjacent, vec![c1, c2, c3]),
                Some(&c3) => (c1 + c2, CaseTrace::C3Gap, vec![c1, c2, c3]),
                None if prefix.exhausted && prefix.scan_bound > c2 => {
                    (c1 + c2, CaseTrace::C3Gap, vec![c1, c2])
                }
                None => return Err(insufficient()),
            }
        }
    };

    let before = r2_at(set, n);
    let after = r2_at(set, n + 1);
    if before <= after {
        return Err(Error::TheoremViolated(format!(
            "predicted r2 drop of {set} at {n} ({}) but r2 goes {before} -> {after}",
            case.tag()
        )));
    }
    Ok(DecreaseWitness {
        set_spec: set.to_string(),
        n,
        case,
        c_values,
        before,
        after,
    })
}

/// Least `n < scan_bound` with `r2(A, n) > r2(A, n + 1)`, by direct counting.
pub fn first_r2_decrease_bruteforce(set: &IntegerSet, scan_bound: u64) -> Option<u64> {
    let mut prev = r2_at(set, 0);
    for n in 0..scan_bound {
        let next = r2_at(set, n + 1);
        if prev > next {
            return Some(n);
        }
        prev = next;
    }
    None
}

/// For a `C3_GAP` witness with `c1 = 2x`, `c2 = 2y` and no other missing
/// integer up to `c1 + c2 + 1`, the drop is exactly `x + y -> x + y - 1`.
/// Returns that expected pair, or `None` when the witness is not of this shape.
pub fn clean_gap_values(set: &IntegerSet, witness: &DecreaseWitness) -> Option<(u64, u64)> {
    if witness.case != CaseTrace::C3Gap {
        return None;
    }
    let (c1, c2) = (witness.c_values[0], witness.c_values[1]);
    if set.nonmembers_in(0, c1 + c2 + 1).count() != 2 {
        return None;
    }
    let (x, y) = (c1 / 2, c2 / 2);
    Some((x + y, x + y - 1))
}
