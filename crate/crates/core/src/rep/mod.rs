//! Additive representation functions.
//!
//! For a set `A` and `n >= 0`:
//!
//! * `r1(A, n)` counts ordered pairs `(a, b)` in `A x A` with `a + b = n`,
//! * `r2(A, n)` counts those with `a <= b`,
//! * `r3(A, n)` counts those with `a < b`.
//!
//! All counts are exact `u64`. The pointwise functions here are the direct
//! definitions; [`batch_table`] evaluates whole windows with faster kernels
//! that must agree with them entry for entry.

mod batch;
mod bits;

pub use batch::{batch_table, batch_table_with, RepTable, Strategy, TableConfig};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{ComplementPrefix, IntegerSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RepKind {
    #[serde(rename = "r1")]
    R1,
    #[serde(rename = "r2")]
    R2,
    #[serde(rename = "r3")]
    R3,
}

impl RepKind {
    pub const ALL: [RepKind; 3] = [RepKind::R1, RepKind::R2, RepKind::R3];

    /// Pointwise value by the definition.
    pub fn at(self, set: &IntegerSet, n: u64) -> u64 {
        match self {
            RepKind::R1 => r1_at(set, n),
            RepKind::R2 => r2_at(set, n),
            RepKind::R3 => r3_at(set, n),
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepKind::R1 => "r1",
            RepKind::R2 => "r2",
            RepKind::R3 => "r3",
        })
    }
}

impl FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r1" => Ok(RepKind::R1),
            "r2" => Ok(RepKind::R2),
            "r3" => Ok(RepKind::R3),
            other => Err(Error::InvalidArgument(format!("unknown kind `{other}`"))),
        }
    }
}

pub fn r1_at(set: &IntegerSet, n: u64) -> u64 {
    (0..=n)
        .filter(|&a| set.contains(a) && set.contains(n - a))
        .count() as u64
}

pub fn r2_at(set: &IntegerSet, n: u64) -> u64 {
    (0..=n / 2)
        .filter(|&a| set.contains(a) && set.contains(n - a))
        .count() as u64
}

pub fn r3_at(set: &IntegerSet, n: u64) -> u64 {
    (0..n.div_ceil(2))
        .filter(|&a| set.contains(a) && set.contains(n - a))
        .count() as u64
}

/// 1 when the pair `(n/2, n/2)` exists in `A x A`, the exact difference `r2 - r3`.
pub fn diagonal(set: &IntegerSet, n: u64) -> u64 {
    u64::from(n.is_multiple_of(2) && set.contains(n / 2))
}

/// Closed forms for the full set N0: `n + 1`, `floor(n/2) + 1` and
/// `floor((n-1)/2) + 1`, the last one read with floor toward minus infinity so
/// that it is 0 at `n = 0`.
pub fn closed_form(kind: RepKind, n: u64) -> u64 {
    match kind {
        RepKind::R1 => n + 1,
        RepKind::R2 => n / 2 + 1,
        RepKind::R3 if n == 0 => 0,
        RepKind::R3 => (n - 1) / 2 + 1,
    }
}

/// `r1` of the set whose complement is listed in `prefix`, by inclusion and
/// exclusion over the complement:
/// `(n + 1) - 2 |C ∩ [0, n]| + #{(c, c') in C x C : c + c' = n}`.
pub fn r1_via_complement(prefix: &ComplementPrefix, n: u64) -> Result<u64> {
    if !prefix.covers(n) {
        return Err(Error::PrefixNotExhaustive { n });
    }
    let c = &prefix.elements;
    let upto = c.partition_point(|&x| x <= n);
    let low = &c[..upto];
    let pairs = low
        .iter()
        .filter(|&&x| low.binary_search(&(n - x)).is_ok())
        .count() as u64;
    Ok(n + 1 - 2 * upto as u64 + pairs)
}
