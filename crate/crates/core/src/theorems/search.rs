//! Greedy exploration for sets whose r3 is non-decreasing from 0 on.
//!
//! Start from all of `[0, max_n]` (r3 of N0 is non-decreasing) and walk
//! `n = 0, 1, ..., max_n`, dropping `n` whenever r3 of the resulting set
//! stays non-decreasing on the whole window. Every accepted state is a valid
//! set, so the final one is too. No optimality is claimed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monotonicity::find_violations;
use crate::rep::{batch_table, closed_form, RepKind, Strategy};
use crate::set::IntegerSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreedyR3Search {
    pub max_n: u64,
    pub budget: usize,
    pub excluded: Vec<u64>,
    /// r3 of the resulting set on `[0, max_n]`.
    pub r3: Vec<u64>,
}

impl GreedyR3Search {
    /// The resulting set: everything except the exclusions.
    pub fn set(&self) -> IntegerSet {
        IntegerSet::finite(self.excluded.clone())
            .expect("exclusions ascend")
            .complement()
    }
}

pub fn r3_monotone_greedy_search(max_n: u64, budget: usize) -> Result<GreedyR3Search> {
    if budget == 0 {
        return Err(Error::InvalidArgument(
            "exclusion budget must be at least 1".into(),
        ));
    }
    let len = usize::try_from(max_n)
        .ok()
        .and_then(|m| m.checked_add(1))
        .ok_or_else(|| Error::InvalidArgument(format!("window {max_n} too large")))?;
    let mut member = vec![true; len];
    let mut r3: Vec<u64> = (0..len as u64)
        .map(|n| closed_form(RepKind::R3, n))
        .collect();
    let mut excluded = Vec::new();

    for n in 0..len {
        if excluded.len() == budget {
            break;
        }
        // dropping n removes the pairs {n, b}, b != n, from r3(n + b)
        let partners: Vec<usize> = (0..len - n)
            .filter(|&b| b != n && member[b])
            .map(|b| n + b)
            .collect();
        for &s in &partners {
            r3[s] -= 1;
        }
        if r3.windows(2).all(|w| w[0] <= w[1]) {
            member[n] = false;
            excluded.push(n as u64);
        } else {
            for &s in &partners {
                r3[s] += 1;
            }
        }
    }

    let out = GreedyR3Search {
        max_n,
        budget,
        excluded,
        r3,
    };
    let table = batch_table(&out.set(), max_n, Strategy::Naive)?;
    if table.values(RepKind::R3) != out.r3.as_slice()
        || find_violations(&table, RepKind::R3, false).count != 0
    {
        return Err(Error::TheoremViolated(
            "greedy r3 search produced a set whose r3 decreases".into(),
        ));
    }
    Ok(out)
}
