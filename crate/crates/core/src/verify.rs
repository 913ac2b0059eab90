//! Named verification suites. Each suite recomputes its claims with an
//! independent direct count and reports one [`CheckOutcome`] per check.
//!
//! In self-test mode every suite corrupts one entry of a table it is about
//! to check, so a working suite must report a failure.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::diagram::LatticeDiagram;
use crate::error::{Error, Result};
use crate::monotonicity::find_violations;
use crate::pool;
use crate::rep::{batch_table, closed_form, diagonal, RepKind, RepTable, Strategy};
use crate::set::IntegerSet;
use crate::theorems::decrease::clean_gap_values;
use crate::theorems::powers::{block_formula_check_on, block_interior_failures};
use crate::theorems::{
    construct_thm11, first_r2_decrease_bruteforce, predict_r2_decrease, thm11_bound,
    thm13_refute_strict, CaseTrace, Thm11Variant,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lemma,
    Identities,
    Strategies,
    Thm11a,
    Thm11b,
    Blocks,
    Thm12,
    Thm13,
    Diagram,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const EACH: [Suite; 9] = [
        Suite::Lemma,
        Suite::Identities,
        Suite::Strategies,
        Suite::Thm11a,
        Suite::Thm11b,
        Suite::Blocks,
        Suite::Thm12,
        Suite::Thm13,
        Suite::Diagram,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma => "lemma",
            Suite::Identities => "identities",
            Suite::Strategies => "strategies",
            Suite::Thm11a => "thm11a",
            Suite::Thm11b => "thm11b",
            Suite::Blocks => "blocks",
            Suite::Thm12 => "thm12",
            Suite::Thm13 => "thm13",
            Suite::Diagram => "diagram",
            Suite::All => "all",
        }
    }

    /// Largest `n` (or window start, for thm13) a suite examines by default.
    pub fn default_max(self) -> u64 {
        match self {
            Suite::Lemma => 5000,
            Suite::Identities => 2000,
            Suite::Strategies | Suite::Blocks => 1 << 15,
            Suite::Thm11a | Suite::Thm11b => 1 << 20,
            Suite::Thm12 => 10_000,
            Suite::Thm13 => 64,
            Suite::Diagram => 50,
            Suite::All => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Overrides [`Suite::default_max`]. Ignored by `all`.
    pub max: Option<u64>,
    pub self_test: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: pool::DEFAULT_SEED,
            max: None,
            self_test: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub check: String,
    pub passed: bool,
    pub detail: Value,
}

/// Runs one suite, or every suite for [`Suite::All`], in order.
pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    if suite == Suite::All {
        let each = VerifyOptions {
            max: None,
            ..*options
        };
        let mut out = Vec::new();
        for s in Suite::EACH {
            out.extend(run_suite(s, &each)?);
        }
        return Ok(out);
    }
    let max = options.max.unwrap_or(suite.default_max());
    let mut ctx = Ctx {
        suite,
        seed: options.seed,
        tamper: options.self_test,
        out: Vec::new(),
    };
    match suite {
        Suite::Lemma => lemma(&mut ctx, max)?,
        Suite::Identities => identities(&mut ctx, max)?,
        Suite::Strategies => strategies(&mut ctx, max)?,
        Suite::Thm11a => thm11(&mut ctx, Thm11Variant::PowersOfTwo, max)?,
        Suite::Thm11b => thm11(&mut ctx, Thm11Variant::PowersOfTwoRemoved, max)?,
        Suite::Blocks => blocks(&mut ctx, max)?,
        Suite::Thm12 => thm12(&mut ctx, max)?,
        Suite::Thm13 => thm13(&mut ctx, max)?,
        Suite::Diagram => diagram(&mut ctx, max)?,
        Suite::All => unreachable!(),
    }
    Ok(ctx.out)
}

pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|c| c.passed)
}

struct Ctx {
    suite: Suite,
    seed: u64,
    tamper: bool,
    out: Vec<CheckOutcome>,
}

impl Ctx {
    fn record(&mut self, check: impl Into<String>, passed: bool, detail: Value) {
        self.out.push(CheckOutcome {
            suite: self.suite,
            check: check.into(),
            passed,
            detail,
        });
    }

    /// Corrupts `kind` at `n` once per suite run, in self-test mode only.
    fn corrupt(&mut self, table: &mut RepTable, kind: RepKind, n: usize, value: u64) {
        if self.tamper {
            table.values_mut(kind)[n] = value;
            self.tamper = false;
        }
    }
}

fn lemma(ctx: &mut Ctx, max: u64) -> Result<()> {
    let mut table = batch_table(&IntegerSet::nat(), max, Strategy::Naive)?;
    let first = table.values(RepKind::R1)[0];
    ctx.corrupt(&mut table, RepKind::R1, 0, first + 1);
    for kind in RepKind::ALL {
        let mismatches: Vec<u64> = (0..=max)
            .filter(|&n| table.values(kind)[n as usize] != closed_form(kind, n))
            .collect();
        ctx.record(
            format!("{kind} closed form on [0, {max}]"),
            mismatches.is_empty(),
            json!({ "max_n": max, "mismatches": head(&mismatches) }),
        );
    }
    Ok(())
}

fn identities(ctx: &mut Ctx, max: u64) -> Result<()> {
    let sets = pool::periodic_sets(ctx.seed, 100);
    let tables = tables(&sets, max, Strategy::Naive)?;
    for (i, (set, mut table)) in sets.iter().zip(tables).enumerate() {
        if i == 0 {
            let at = 1.min(max as usize);
            let v = table.values(RepKind::R2)[at];
            ctx.corrupt(&mut table, RepKind::R2, at, v + 1);
        }
        let (r1, r2, r3) = columns(&table);
        let split: Vec<u64> = (0..=max as usize)
            .filter(|&n| r1[n] != r2[n] + r3[n])
            .map(|n| n as u64)
            .collect();
        let diag: Vec<u64> = (0..=max)
            .filter(|&n| r2[n as usize].checked_sub(r3[n as usize]) != Some(diagonal(set, n)))
            .collect();
        ctx.record(
            format!("r1 = r2 + r3 and r2 - r3 = diagonal for {set}"),
            split.is_empty() && diag.is_empty(),
            json!({ "set": set.to_string(), "max_n": max, "sum_mismatches": head(&split), "diagonal_mismatches": head(&diag) }),
        );
    }
    Ok(())
}

fn strategies(ctx: &mut Ctx, max: u64) -> Result<()> {
    let sets = pool::mixed_sets(ctx.seed, 20);
    for (i, set) in sets.iter().enumerate() {
        let naive = batch_table(set, max, Strategy::Naive)?;
        let mut word = batch_table(set, max, Strategy::WordParallel)?;
        if i == 0 {
            let v = word.values(RepKind::R1)[max as usize];
            ctx.corrupt(&mut word, RepKind::R1, max as usize, v + 1);
        }
        let differing: Vec<u64> = (0..=max)
            .filter(|&n| {
                RepKind::ALL
                    .iter()
                    .any(|&k| naive.get(k, n) != word.get(k, n))
            })
            .collect();
        ctx.record(
            format!("word-parallel equals naive for {set}"),
            differing.is_empty(),
            json!({ "set": set.to_string(), "max_n": max, "differing": head(&differing) }),
        );
    }
    Ok(())
}

/// Window bounds checked besides the full window.
const THM11_WINDOWS: [u64; 4] = [1 << 10, 1 << 14, 1 << 17, 1 << 20];
/// Prefix on which the large table is compared with a direct count.
const CROSS_CHECK: u64 = 4096;
const MAX_BLOCK: u32 = 14;

fn thm11(ctx: &mut Ctx, variant: Thm11Variant, max: u64) -> Result<()> {
    let set = construct_thm11(variant);
    let mut table = batch_table(&set, max, Strategy::Auto)?;
    let prefix = max.min(CROSS_CHECK);
    let oracle = batch_table(&set, prefix, Strategy::Naive)?;
    let at = 1.min(max as usize);
    let v = table.values(RepKind::R1)[at];
    ctx.corrupt(&mut table, RepKind::R1, at, v + 1);
    let differing: Vec<u64> = (0..=prefix)
        .filter(|&n| {
            RepKind::ALL
                .iter()
                .any(|&k| table.get(k, n) != oracle.get(k, n))
        })
        .collect();
    ctx.record(
        format!("table agrees with direct counting on [0, {prefix}]"),
        differing.is_empty(),
        json!({ "set": set.to_string(), "differing": head(&differing) }),
    );

    let strict = variant == Thm11Variant::PowersOfTwoRemoved;
    let report = find_violations(&table, RepKind::R1, strict);
    let r1 = table.values(RepKind::R1);
    let mut windows: Vec<u64> = THM11_WINDOWS.iter().copied().filter(|&w| w < max).collect();
    windows.push(max.max(1));
    for window in windows {
        let bound = thm11_bound(variant, window)?.bound;
        let violations = report.count_below(window);
        let mut detail = json!({
            "set": set.to_string(),
            "N": window,
            "strict": strict,
            "violations": violations,
            "bound": bound,
        });
        let mut passed = violations <= bound;
        if variant == Thm11Variant::PowersOfTwo {
            let positive = r1[..=window.min(max) as usize]
                .iter()
                .filter(|&&x| x > 0)
                .count() as u64;
            detail["positive"] = json!(positive);
            passed &= positive <= bound;
        }
        let what = if strict {
            "strict-increase failures"
        } else {
            "decreases"
        };
        ctx.record(
            format!("{what} of r1 below N = {window} within bound"),
            passed,
            detail,
        );
    }

    if strict {
        for j in (1..=MAX_BLOCK).filter(|&j| 1u64 << (j + 1) <= max) {
            let failures = block_interior_failures(j, &table)?;
            ctx.record(
                format!("r1 strictly increases inside block {j}"),
                failures.is_empty(),
                json!({ "j": j, "failures": head(&failures) }),
            );
        }
    }
    Ok(())
}

fn blocks(ctx: &mut Ctx, max: u64) -> Result<()> {
    let set = construct_thm11(Thm11Variant::PowersOfTwoRemoved);
    let mut table = batch_table(&set, max, Strategy::Naive)?;
    let at = 3.min(max as usize);
    let v = table.values(RepKind::R1)[at];
    ctx.corrupt(&mut table, RepKind::R1, at, v + 1);
    for j in (1..=MAX_BLOCK).filter(|&j| 1u64 << (j + 1) <= max) {
        let check = block_formula_check_on(j, &table)?;
        ctx.record(
            format!("block formula on (2^{j}, 2^{}]", j + 1),
            check.passed(),
            json!({ "j": j, "checked": check.checked, "mismatches": head(&check.mismatches) }),
        );
    }
    Ok(())
}

fn thm12(ctx: &mut Ctx, scan_bound: u64) -> Result<()> {
    let sets = pool::resolvable_sets(ctx.seed, 500, scan_bound);
    let predictions: Vec<Result<_>> = sets
        .par_iter()
        .map(|s| predict_r2_decrease(s, scan_bound))
        .collect();
    for (set, prediction) in sets.iter().zip(predictions) {
        let witness = match prediction {
            Ok(w) => w,
            Err(e @ Error::Budget { .. }) => return Err(e),
            Err(e) => {
                ctx.record(
                    format!("r2 drop predicted for {set}"),
                    false,
                    json!({ "set": set.to_string(), "error": e.to_string() }),
                );
                continue;
            }
        };
        let n = witness.n;
        let mut table = batch_table(set, n + 1, Strategy::Naive)?;
        let before = table.values(RepKind::R2)[n as usize];
        ctx.corrupt(&mut table, RepKind::R2, n as usize + 1, before);
        let after = table.values(RepKind::R2)[n as usize + 1];
        let first = first_r2_decrease_bruteforce(set, n + 1);
        let clean = clean_gap_values(set, &witness);
        let passed = before > after
            && (before, after) == (witness.before, witness.after)
            && first.is_some_and(|f| f <= n)
            && clean.is_none_or(|pair| pair == (before, after));
        let shift = match &witness.case {
            CaseTrace::Shifted { shift, .. } => Some(*shift),
            _ => None,
        };
        ctx.record(
            format!("r2 drop predicted for {set}"),
            passed,
            json!({
                "set": set.to_string(),
                "n": n,
                "case_trace": witness.case.tag(),
                "base_case": witness.base_case().tag(),
                "shift": shift,
                "c_values": witness.c_values,
                "before": before,
                "after": after,
                "first_decrease": first,
                "clean_gap": clean,
            }),
        );
    }
    Ok(())
}

fn thm13(ctx: &mut Ctx, max_start: u64) -> Result<()> {
    let sets = pool::mixed_sets(ctx.seed, 200);
    let end = 2 * max_start + 3;
    let tables = tables(&sets, end, Strategy::Naive)?;
    for (set, mut table) in sets.iter().zip(tables) {
        let mut failures = Vec::new();
        for kind in [RepKind::R2, RepKind::R3] {
            for start in 0..=max_start {
                let refutation = match thm13_refute_strict(set, start, kind) {
                    Ok(r) => r,
                    Err(e @ Error::Budget { .. }) => return Err(e),
                    Err(e) => {
                        failures.push(json!({ "kind": kind, "N": start, "error": e.to_string() }));
                        continue;
                    }
                };
                let w = refutation.witness as usize;
                let v = table.values(kind)[w];
                ctx.corrupt(&mut table, kind, w + 1, v + 1);
                let r = table.values(kind);
                let window_end = 2 * start as usize + 3;
                let least = (start as usize..w).all(|m| r[m + 1] > r[m]);
                let ok = (start as usize..window_end).contains(&w)
                    && r[w + 1] <= r[w]
                    && least
                    && refutation.lemma_cap == start + 2
                    && r[window_end] == refutation.value_at_end
                    && r[window_end] <= refutation.lemma_cap;
                if !ok {
                    failures.push(json!({ "kind": kind, "N": start, "witness": w, "before": r[w], "after": r[w + 1] }));
                }
            }
        }
        ctx.record(
            format!("non-strict r2 and r3 steps in every [N, 2N + 2], N <= {max_start}, for {set}"),
            failures.is_empty(),
            json!({ "set": set.to_string(), "failures": head(&failures) }),
        );
    }
    Ok(())
}

fn diagram(ctx: &mut Ctx, max_sum: u64) -> Result<()> {
    let sets = pool::mixed_sets(ctx.seed, 10);
    for set in &sets {
        let mut table = batch_table(set, max_sum, Strategy::Naive)?;
        let v = table.values(RepKind::R1)[0];
        ctx.corrupt(&mut table, RepKind::R1, 0, v + 1);
        let d = LatticeDiagram::new(set, max_sum);
        let counts = d.column_counts();
        let columns_ok = counts.as_slice() == table.values(RepKind::R1);
        let svg = d.to_svg();
        let (xml_ok, circles) = match roxmltree::Document::parse(&svg) {
            Ok(doc) => (
                true,
                doc.descendants()
                    .filter(|n| n.has_tag_name("circle"))
                    .count(),
            ),
            Err(_) => (false, 0),
        };
        ctx.record(
            format!("diagram columns and SVG for {set}"),
            columns_ok && xml_ok && circles == d.points.len(),
            json!({
                "set": set.to_string(),
                "max_sum": max_sum,
                "columns_match_r1": columns_ok,
                "well_formed": xml_ok,
                "circles": circles,
                "points": d.points.len(),
            }),
        );
    }
    Ok(())
}

fn tables(sets: &[IntegerSet], max: u64, strategy: Strategy) -> Result<Vec<RepTable>> {
    sets.par_iter()
        .map(|s| batch_table(s, max, strategy))
        .collect()
}

fn columns(table: &RepTable) -> (&[u64], &[u64], &[u64]) {
    (
        table.values(RepKind::R1),
        table.values(RepKind::R2),
        table.values(RepKind::R3),
    )
}

/// The first few entries of a failure list, enough to reproduce it.
fn head<T: Serialize>(items: &[T]) -> Value {
    json!(&items[..items.len().min(10)])
}
