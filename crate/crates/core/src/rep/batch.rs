use std::io;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bits::BitVec;
use super::RepKind;
use crate::error::{Error, Result};
use crate::set::IntegerSet;

/// How a [`RepTable`] is computed. Every strategy yields identical tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Direct summation of the defining pair counts for every `n`; r1, r2 and
    /// r3 are each summed separately.
    Naive,
    /// r1 as the overlap of the membership bit vector with its reversal;
    /// r2 and r3 derived from r1 and the diagonal.
    WordParallel,
    /// Pair enumeration over whichever of the set or its complement is small
    /// inside the window. Fails if neither is.
    Sparse,
    /// Naive for small windows, sparse when one side is small, else word-parallel.
    Auto,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Strategy::Naive),
            "word" | "word_parallel" | "word-parallel" => Ok(Strategy::WordParallel),
            "sparse" => Ok(Strategy::Sparse),
            "auto" => Ok(Strategy::Auto),
            other => Err(Error::InvalidArgument(format!(
                "unknown strategy `{other}`"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableConfig {
    /// Upper limit on the bytes a table computation may allocate.
    pub memory_budget: u64,
    /// `Auto` stays naive up to and including this window bound.
    pub naive_threshold: u64,
    /// A side of the window with at most this many elements counts as sparse.
    pub sparse_limit: usize,
}

impl Default for TableConfig {
    fn default() -> Self {
        TableConfig {
            memory_budget: 1 << 30,
            naive_threshold: 4096,
            sparse_limit: 2048,
        }
    }
}

impl TableConfig {
    /// Fails with [`Error::Budget`] if a table over `[0, max_n]` would not fit.
    pub fn check_budget(&self, max_n: u64) -> Result<()> {
        // three u64 columns, two bit vectors, one byte per entry of slack
        let needed = max_n
            .checked_add(1)
            .and_then(|len| len.checked_mul(3 * 8 + 1))
            .and_then(|b| b.checked_add(64))
            .unwrap_or(u64::MAX);
        if needed > self.memory_budget {
            return Err(Error::Budget {
                needed,
                budget: self.memory_budget,
            });
        }
        Ok(())
    }
}

/// r1, r2, r3 over the window `[0, max_n]` for one set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepTable {
    #[serde(rename = "set")]
    set_spec: String,
    max_n: u64,
    r1: Vec<u64>,
    r2: Vec<u64>,
    r3: Vec<u64>,
}

impl RepTable {
    /// Assembles a table from raw columns; only the shape is validated.
    pub fn from_values(set_spec: String, r1: Vec<u64>, r2: Vec<u64>, r3: Vec<u64>) -> Result<Self> {
        if r1.is_empty() || r1.len() != r2.len() || r1.len() != r3.len() {
            return Err(Error::InvalidArgument(
                "table columns must be nonempty and of equal length".into(),
            ));
        }
        let max_n = r1.len() as u64 - 1;
        Ok(RepTable {
            set_spec,
            max_n,
            r1,
            r2,
            r3,
        })
    }

    pub fn set_spec(&self) -> &str {
        &self.set_spec
    }

    pub fn max_n(&self) -> u64 {
        self.max_n
    }

    pub fn values(&self, kind: RepKind) -> &[u64] {
        match kind {
            RepKind::R1 => &self.r1,
            RepKind::R2 => &self.r2,
            RepKind::R3 => &self.r3,
        }
    }

    pub fn get(&self, kind: RepKind, n: u64) -> Option<u64> {
        self.values(kind).get(usize::try_from(n).ok()?).copied()
    }

    pub(crate) fn values_mut(&mut self, kind: RepKind) -> &mut [u64] {
        match kind {
            RepKind::R1 => &mut self.r1,
            RepKind::R2 => &mut self.r2,
            RepKind::R3 => &mut self.r3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    /// CSV with header `n,r1,r2,r3`, one row per `n` ascending.
    pub fn write_csv<W: io::Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n", "r1", "r2", "r3"])?;
        for n in 0..self.r1.len() {
            w.serialize((n, self.r1[n], self.r2[n], self.r3[n]))?;
        }
        w.flush()
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

pub fn batch_table(set: &IntegerSet, max_n: u64, strategy: Strategy) -> Result<RepTable> {
    batch_table_with(set, max_n, strategy, &TableConfig::default())
}

pub fn batch_table_with(
    set: &IntegerSet,
    max_n: u64,
    strategy: Strategy,
    config: &TableConfig,
) -> Result<RepTable> {
    config.check_budget(max_n)?;
    let len = usize::try_from(max_n + 1).map_err(|_| Error::Budget {
        needed: u64::MAX,
        budget: config.memory_budget,
    })?;
    let (r1, r2, r3) = match strategy {
        Strategy::Naive => naive(set, len),
        Strategy::WordParallel => word_parallel(set, len),
        Strategy::Sparse => match sparse_side(set, max_n, config.sparse_limit) {
            Some(side) => sparse(set, len, side),
            None => {
                return Err(Error::InvalidArgument(format!(
                    "neither the set nor its complement has at most {} elements in [0, {max_n}]",
                    config.sparse_limit
                )))
            }
        },
        Strategy::Auto => {
            if max_n <= config.naive_threshold {
                naive(set, len)
            } else if let Some(side) = sparse_side(set, max_n, config.sparse_limit) {
                sparse(set, len, side)
            } else {
                word_parallel(set, len)
            }
        }
    };
    Ok(RepTable {
        set_spec: set.to_string(),
        max_n,
        r1,
        r2,
        r3,
    })
}

type Columns = (Vec<u64>, Vec<u64>, Vec<u64>);

fn naive(set: &IntegerSet, len: usize) -> Columns {
    // 0/1 indicator and its reversal, so that member[n - a] = rev[last - n + a]
    let member: Vec<u8> = (0..len as u64).map(|k| u8::from(set.contains(k))).collect();
    let rev: Vec<u8> = member.iter().rev().copied().collect();
    let last = len - 1;
    let rows: Vec<(u64, u64, u64)> = (0..len)
        .into_par_iter()
        .map(|n| {
            let base = last - n;
            // a in [0, n]; a <= n - a; a < n - a
            let r1 = indicator_dot(&member[..=n], &rev[base..=base + n]);
            let r2 = indicator_dot(&member[..=n / 2], &rev[base..=base + n / 2]);
            let half = n.div_ceil(2);
            let r3 = indicator_dot(&member[..half], &rev[base..base + half]);
            (r1, r2, r3)
        })
        .collect();
    unzip3(rows)
}

const LANES: usize = 32;

/// `sum x[i] * y[i]` over 0/1 bytes. Each byte lane takes at most 255 terms
/// per block, so the wrapping adds are exact and the inner loop vectorizes
/// even with overflow checks on.
fn indicator_dot(x: &[u8], y: &[u8]) -> u64 {
    let mut total = 0;
    for (bx, by) in x.chunks(LANES * 255).zip(y.chunks(LANES * 255)) {
        let mut lanes = [0u8; LANES];
        let mut cx = bx.chunks_exact(LANES);
        let mut cy = by.chunks_exact(LANES);
        for (wx, wy) in (&mut cx).zip(&mut cy) {
            for i in 0..LANES {
                lanes[i] = lanes[i].wrapping_add(wx[i] & wy[i]);
            }
        }
        total += lanes.iter().map(|&l| u64::from(l)).sum::<u64>();
        total += cx
            .remainder()
            .iter()
            .zip(cy.remainder())
            .map(|(a, b)| u64::from(a & b))
            .sum::<u64>();
    }
    total
}

fn word_parallel(set: &IntegerSet, len: usize) -> Columns {
    let bits = BitVec::membership(set, len);
    let rev = bits.reversed();
    let r1: Vec<u64> = (0..len)
        .into_par_iter()
        .map(|n| bits.self_overlap(&rev, n))
        .collect();
    derive_from_r1(r1, |n| n % 2 == 0 && bits.get(n / 2))
}

enum SparseSide {
    Members(Vec<u64>),
    Complement(Vec<u64>),
}

fn sparse_side(set: &IntegerSet, max_n: u64, limit: usize) -> Option<SparseSide> {
    let members: Vec<u64> = set.members_in(0, max_n).take(limit + 1).collect();
    if members.len() <= limit {
        return Some(SparseSide::Members(members));
    }
    let missing: Vec<u64> = set.nonmembers_in(0, max_n).take(limit + 1).collect();
    if missing.len() <= limit {
        return Some(SparseSide::Complement(missing));
    }
    None
}

fn sparse(set: &IntegerSet, len: usize, side: SparseSide) -> Columns {
    let r1 = match side {
        SparseSide::Members(m) => {
            let mut r1 = vec![0u64; len];
            for &a in &m {
                for &b in &m {
                    let s = (a + b) as usize;
                    if s >= len {
                        break;
                    }
                    r1[s] += 1;
                }
            }
            r1
        }
        SparseSide::Complement(c) => {
            // (n + 1) - 2 |C ∩ [0, n]| + #{(c, c') : c + c' = n}
            let mut pair_sums = vec![0u64; len];
            for &a in &c {
                for &b in &c {
                    let s = (a + b) as usize;
                    if s >= len {
                        break;
                    }
                    pair_sums[s] += 1;
                }
            }
            let mut below = 0usize;
            (0..len)
                .map(|n| {
                    while below < c.len() && c[below] as usize <= n {
                        below += 1;
                    }
                    n as u64 + 1 - 2 * below as u64 + pair_sums[n]
                })
                .collect()
        }
    };
    derive_from_r1(r1, |n| n % 2 == 0 && set.contains(n as u64 / 2))
}

/// `r1 = 2 r3 + d` and `r2 = r3 + d`, with `d` the diagonal indicator.
fn derive_from_r1(r1: Vec<u64>, diagonal: impl Fn(usize) -> bool) -> Columns {
    let mut r2 = Vec::with_capacity(r1.len());
    let mut r3 = Vec::with_capacity(r1.len());
    for (n, &v) in r1.iter().enumerate() {
        let d = u64::from(diagonal(n));
        let off = (v - d) / 2;
        r3.push(off);
        r2.push(off + d);
    }
    (r1, r2, r3)
}

fn unzip3(rows: Vec<(u64, u64, u64)>) -> Columns {
    let mut out = (
        Vec::with_capacity(rows.len()),
        Vec::with_capacity(rows.len()),
        Vec::with_capacity(rows.len()),
    );
    for (a, b, c) in rows {
        out.0.push(a);
        out.1.push(b);
        out.2.push(c);
    }
    out
}
