//! r1 on the powers of two `{2, 4, 8, ...}` and on their complement.
//!
//! The first set has natural density 0, yet r1 drops only at the few `n`
//! that are sums of two powers; the second has density 1 and r1 fails to grow
//! strictly only near the powers themselves.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep::{batch_table_with, RepKind, RepTable, Strategy, TableConfig};
use crate::set::IntegerSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Thm11Variant {
    /// `A = {2^i : i >= 1}`, r1 non-decreasing almost everywhere.
    #[serde(rename = "1")]
    PowersOfTwo,
    /// `A = N0 \ {2^i : i >= 1}`, r1 strictly increasing almost everywhere.
    #[serde(rename = "2")]
    PowersOfTwoRemoved,
}

impl TryFrom<u8> for Thm11Variant {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Thm11Variant::PowersOfTwo),
            2 => Ok(Thm11Variant::PowersOfTwoRemoved),
            other => Err(Error::InvalidArgument(format!(
                "variant must be 1 or 2, got {other}"
            ))),
        }
    }
}

pub fn construct_thm11(variant: Thm11Variant) -> IntegerSet {
    match variant {
        Thm11Variant::PowersOfTwo => IntegerSet::powers_of_two(),
        Thm11Variant::PowersOfTwoRemoved => IntegerSet::powers_of_two().complement(),
    }
}

/// `A_j = N0 \ {2, 4, ..., 2^j}`; `A_0` is N0.
pub fn construct_removed_powers(j: u32) -> Result<IntegerSet> {
    if j >= 63 {
        return Err(Error::InvalidArgument(format!("j = {j} overflows u64")));
    }
    let removed = (1..=j).map(|i| 1u64 << i).collect();
    Ok(IntegerSet::finite(removed)?.complement())
}

/// Upper bound on the number of r1 violations below `N` for one variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Thm11Bound {
    pub variant: Thm11Variant,
    #[serde(rename = "N")]
    pub window: u64,
    pub bound: u64,
}

/// Variant 1: `floor(log2 N)^2`, the count of pairwise sums of the powers up
/// to `N`. Variant 2: `ceil(2 + (log2 N + 3)^2)` with the real logarithm.
pub fn thm11_bound(variant: Thm11Variant, window: u64) -> Result<Thm11Bound> {
    if window == 0 {
        return Err(Error::InvalidArgument(
            "bound window must be at least 1".into(),
        ));
    }
    let bound = match variant {
        Thm11Variant::PowersOfTwo => {
            let l = u64::from(window.ilog2());
            l * l
        }
        Thm11Variant::PowersOfTwoRemoved => {
            let l = (window as f64).log2() + 3.0;
            (2.0 + l * l).ceil() as u64
        }
    };
    Ok(Thm11Bound {
        variant,
        window,
        bound,
    })
}

/// True if `n = 2^j + 2^i` for some `1 <= i <= j`.
pub fn is_power_pair_sum(n: u64, j: u32) -> bool {
    let top = 1u64 << j;
    n > top && {
        let rest = n - top;
        rest >= 2 && rest.is_power_of_two() && rest <= top
    }
}

/// The closed form claimed for `r1(N0 \ {2^i}, n)` on the block `(2^j, 2^{j+1}]`:
/// `n + 1 - 2(j - 1)` when `n = 2^j + 2^i` with `1 <= i <= j`, else `n + 1 - 2j`.
pub fn block_formula(j: u32, n: u64) -> u64 {
    let j = u64::from(j);
    if is_power_pair_sum(n, j as u32) {
        n + 1 - 2 * (j - 1)
    } else {
        n + 1 - 2 * j
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockMismatch {
    pub n: u64,
    pub claimed: u64,
    pub actual: u64,
}

/// Outcome of comparing [`block_formula`] with computed r1 on one block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCheck {
    pub j: u32,
    pub checked: u64,
    pub mismatches: Vec<BlockMismatch>,
}

impl BlockCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks the block closed form on every `n` in `(2^j, 2^{j+1}]` against a
/// naive table of `r1(N0 \ {2^i}, n)`.
pub fn block_formula_check(j: u32) -> Result<BlockCheck> {
    let max_n = block_end(j)?;
    let table = batch_table_with(
        &construct_thm11(Thm11Variant::PowersOfTwoRemoved),
        max_n,
        Strategy::Naive,
        &TableConfig::default(),
    )?;
    block_formula_check_on(j, &table)
}

/// As [`block_formula_check`], reading r1 from a table that covers the block.
pub fn block_formula_check_on(j: u32, table: &RepTable) -> Result<BlockCheck> {
    let end = block_end(j)?;
    if table.max_n() < end {
        return Err(Error::InvalidArgument(format!(
            "table ends at {} but block {j} needs {end}",
            table.max_n()
        )));
    }
    let r1 = table.values(RepKind::R1);
    let start = (1u64 << j) + 1;
    let mismatches = (start..=end)
        .filter_map(|n| {
            let claimed = block_formula(j, n);
            let actual = r1[n as usize];
            (claimed != actual).then_some(BlockMismatch { n, claimed, actual })
        })
        .collect();
    Ok(BlockCheck {
        j,
        checked: end - start + 1,
        mismatches,
    })
}

/// Interior points `n` in `[2^j + 1, 2^{j+1} - 2]`, not of the form `2^j + 2^i`,
/// where `r1(n) < r1(n + 1)` fails in `table`.
pub fn block_interior_failures(j: u32, table: &RepTable) -> Result<Vec<u64>> {
    let end = block_end(j)?;
    if table.max_n() < end {
        return Err(Error::InvalidArgument(format!(
            "table ends at {} but block {j} needs {end}",
            table.max_n()
        )));
    }
    let r1 = table.values(RepKind::R1);
    Ok(((1u64 << j) + 1..=end - 2)
        .filter(|&n| !is_power_pair_sum(n, j))
        .filter(|&n| r1[n as usize] >= r1[n as usize + 1])
        .collect())
}

fn block_end(j: u32) -> Result<u64> {
    if j == 0 || j >= 62 {
        return Err(Error::InvalidArgument(format!(
            "block index j = {j} must be in 1..=61"
        )));
    }
    Ok(1u64 << (j + 1))
}
