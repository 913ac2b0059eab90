//! Acceptance criteria, one test each. Every test recomputes its claims with
//! a direct pair count written here, independent of the library's table code,
//! and prints a single PASS/FAIL line to standard error.
//!
//! Tests share a lock so that the timed criteria never compete for the CPU.

use std::io::Write;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use repfn::diagram::{render_diagram, DiagramFormat};
use repfn::pool::{mixed_sets, periodic_sets, resolvable_sets, DEFAULT_SEED};
use repfn::rep::diagonal;
use repfn::theorems::powers::block_formula_check;
use repfn::theorems::{
    construct_thm11, predict_r2_decrease, thm11_bound, thm13_refute_strict, CaseTrace, Thm11Variant,
};
use repfn::verify::{all_passed, run_suite, Suite, VerifyOptions};
use repfn::{batch_table, closed_form, IntegerSet, RepKind, Strategy};

static SERIAL: Mutex<()> = Mutex::new(());

type Outcome = Result<String, String>;

fn criterion(id: u32, name: &str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let mut outcome = body();
    let elapsed = start.elapsed();
    if let (Ok(detail), Some(limit)) = (&outcome, limit) {
        if elapsed > limit {
            outcome = Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}"));
        }
    }
    let line = match &outcome {
        Ok(detail) => format!("PASS [{id:02}] {name}: {detail} ({elapsed:.2?})"),
        Err(detail) => format!("FAIL [{id:02}] {name}: {detail} ({elapsed:.2?})"),
    };
    // straight to the process stream so the line shows even for passing tests
    let _ = writeln!(std::io::stderr(), "{line}");
    if let Err(detail) = outcome {
        panic!("criterion {id} ({name}) failed: {detail}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn membership(set: &IntegerSet, max: u64) -> Vec<bool> {
    (0..=max).map(|k| set.contains(k)).collect()
}

/// (r1, r2, r3) at `n` by walking every split `a + (n - a)`.
fn count_pairs(member: &[bool], n: usize) -> (u64, u64, u64) {
    let (mut r1, mut r2, mut r3) = (0, 0, 0);
    for a in 0..=n {
        let b = n - a;
        if member[a] && member[b] {
            r1 += 1;
            if a <= b {
                r2 += 1;
            }
            if a < b {
                r3 += 1;
            }
        }
    }
    (r1, r2, r3)
}

fn oracle_columns(member: &[bool]) -> [Vec<u64>; 3] {
    let mut cols = [Vec::new(), Vec::new(), Vec::new()];
    for n in 0..member.len() {
        let (r1, r2, r3) = count_pairs(member, n);
        cols[0].push(r1);
        cols[1].push(r2);
        cols[2].push(r3);
    }
    cols
}

fn suite_passes(suite: Suite) -> Result<(), String> {
    let outcomes = run_suite(suite, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    let failed: Vec<_> = outcomes
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.check.clone())
        .collect();
    ensure(all_passed(&outcomes), || {
        format!("suite {suite} failed: {failed:?}")
    })
}

#[test]
fn criterion_01_closed_forms_for_all_of_n0() {
    criterion(
        1,
        "closed forms match direct counts on N0, n <= 5000",
        Some(Duration::from_secs(10)),
        || {
            let member = vec![true; 5001];
            for n in 0..=5000u64 {
                let (r1, r2, r3) = count_pairs(&member, n as usize);
                for (kind, direct) in [(RepKind::R1, r1), (RepKind::R2, r2), (RepKind::R3, r3)] {
                    let formula = closed_form(kind, n);
                    ensure(formula == direct, || {
                        format!("{kind}({n}): formula {formula}, direct {direct}")
                    })?;
                }
            }
            suite_passes(Suite::Lemma)?;
            Ok("15003 values exact".into())
        },
    );
}

#[test]
fn criterion_02_split_and_diagonal_identities() {
    criterion(
        2,
        "r1 = r2 + r3 and r2 - r3 = diagonal",
        Some(Duration::from_secs(10)),
        || {
            let sets = periodic_sets(DEFAULT_SEED, 100);
            for set in &sets {
                let member = membership(set, 2000);
                let table = batch_table(set, 2000, Strategy::Naive).map_err(|e| e.to_string())?;
                let [r1, r2, r3] = oracle_columns(&member);
                for n in 0..=2000usize {
                    let diag = u64::from(n % 2 == 0 && member[n / 2]);
                    ensure(r1[n] == r2[n] + r3[n], || {
                        format!("{set} n={n}: {} != {} + {}", r1[n], r2[n], r3[n])
                    })?;
                    ensure(r2[n] - r3[n] == diag, || {
                        format!("{set} n={n}: r2 - r3 = {}, diagonal {diag}", r2[n] - r3[n])
                    })?;
                    ensure(diagonal(set, n as u64) == diag, || {
                        format!("{set} n={n}: library diagonal differs")
                    })?;
                }
                for (kind, col) in RepKind::ALL.into_iter().zip([&r1, &r2, &r3]) {
                    ensure(table.values(kind) == col.as_slice(), || {
                        format!("{set}: library {kind} table differs")
                    })?;
                }
            }
            suite_passes(Suite::Identities)?;
            Ok("100 sets x 2001 values".into())
        },
    );
}

#[test]
fn criterion_03_word_parallel_equals_naive() {
    criterion(
        3,
        "word-parallel equals naive at N = 2^15",
        Some(Duration::from_secs(5)),
        || {
            let max = 1u64 << 15;
            let sets = mixed_sets(DEFAULT_SEED, 20);
            for (i, set) in sets.iter().enumerate() {
                let naive = batch_table(set, max, Strategy::Naive).map_err(|e| e.to_string())?;
                let word =
                    batch_table(set, max, Strategy::WordParallel).map_err(|e| e.to_string())?;
                ensure(naive == word, || format!("{set}: tables differ"))?;
                // spot checks against the direct count
                let member = membership(set, max);
                for n in (0..=max).step_by(4093 + i).chain([max]) {
                    let (r1, r2, r3) = count_pairs(&member, n as usize);
                    ensure(
                        [r1, r2, r3] == RepKind::ALL.map(|k| word.get(k, n).unwrap()),
                        || format!("{set} n={n}: direct ({r1}, {r2}, {r3})"),
                    )?;
                }
            }
            Ok("20 sets, 32769 entries each".into())
        },
    );
}

/// r1 of the powers `{2, 4, 8, ...}` on `[0, max]` from the pairs of powers.
fn powers_r1(max: u64) -> Vec<u64> {
    let powers: Vec<u64> = (1..64)
        .map(|i| 1u64 << i)
        .take_while(|&p| p <= max)
        .collect();
    let mut r1 = vec![0; max as usize + 1];
    for &p in &powers {
        for &q in &powers {
            if p + q <= max {
                r1[(p + q) as usize] += 1;
            }
        }
    }
    r1
}

/// r1 of `N0 \ {2, 4, 8, ...}` on `[0, max]`: all `n + 1` splits, minus those
/// hitting a removed power on either side, plus those hitting one on both.
fn removed_powers_r1(max: u64) -> Vec<u64> {
    let both = powers_r1(max);
    let mut removed_below = 0u64;
    (0..=max)
        .map(|n| {
            if n >= 2 && n.is_power_of_two() {
                removed_below += 1;
            }
            n + 1 - 2 * removed_below + both[n as usize]
        })
        .collect()
}

#[test]
fn criterion_04_powers_of_two_rarely_decrease() {
    criterion(
        4,
        "powers of two at N = 2^20: positives and decreases <= 400",
        Some(Duration::from_secs(10)),
        || {
            let max = 1u64 << 20;
            let set = construct_thm11(Thm11Variant::PowersOfTwo);
            let table = batch_table(&set, max, Strategy::Sparse).map_err(|e| e.to_string())?;
            let direct = powers_r1(max);
            ensure(table.values(RepKind::R1) == direct.as_slice(), || {
                "r1 table differs from pair enumeration".into()
            })?;
            let positive = direct.iter().filter(|&&x| x > 0).count() as u64;
            let decreases = direct.windows(2).filter(|w| w[1] < w[0]).count() as u64;
            let bound = thm11_bound(Thm11Variant::PowersOfTwo, max).unwrap().bound;
            ensure(bound == 400, || format!("bound {bound}"))?;
            ensure(positive <= 400, || format!("{positive} positive values"))?;
            ensure(decreases <= 400, || format!("{decreases} decreases"))?;
            suite_passes(Suite::Thm11a)?;
            Ok(format!(
                "{positive} positive, {decreases} decreases, density {:.2e}",
                decreases as f64 / max as f64
            ))
        },
    );
}

#[test]
fn criterion_05_removed_powers_almost_strictly_increase() {
    criterion(
        5,
        "N0 minus powers of two at N = 2^20: strict failures <= 531",
        Some(Duration::from_secs(30)),
        || {
            let max = 1u64 << 20;
            let set = construct_thm11(Thm11Variant::PowersOfTwoRemoved);
            let table = batch_table(&set, max, Strategy::Sparse).map_err(|e| e.to_string())?;
            let direct = removed_powers_r1(max);
            ensure(table.values(RepKind::R1) == direct.as_slice(), || {
                "r1 table differs from inclusion-exclusion".into()
            })?;
            let failures = direct.windows(2).filter(|w| w[1] <= w[0]).count() as u64;
            let bound = thm11_bound(Thm11Variant::PowersOfTwoRemoved, max)
                .unwrap()
                .bound;
            ensure(bound == 531, || format!("bound {bound}"))?;
            ensure(failures <= 531, || format!("{failures} strict failures"))?;
            for j in 1..=14u32 {
                let top = 1u64 << j;
                for n in top + 1..=2 * top - 2 {
                    let rest = n - top;
                    let pair_sum = rest >= 2 && rest.is_power_of_two();
                    let (a, b) = (direct[n as usize], direct[n as usize + 1]);
                    ensure(pair_sum || a < b, || {
                        format!("block {j}: r1({n}) = {a}, r1({}) = {b}", n + 1)
                    })?;
                }
            }
            suite_passes(Suite::Thm11b)?;
            Ok(format!(
                "{failures} strict failures; block interiors strictly increasing for j <= 14"
            ))
        },
    );
}

#[test]
fn criterion_06_block_closed_forms() {
    criterion(6, "block closed forms for 1 <= j <= 14", None, || {
        let set = construct_thm11(Thm11Variant::PowersOfTwoRemoved);
        let member = membership(&set, 1 << 15);
        let mut mismatches = Vec::new();
        for j in 1..=14u32 {
            let top = 1u64 << j;
            let check = block_formula_check(j).map_err(|e| e.to_string())?;
            let mut own = Vec::new();
            for n in top + 1..=2 * top {
                let rest = n - top;
                let claimed = if rest >= 2 && rest.is_power_of_two() && rest <= top {
                    n + 1 - 2 * (u64::from(j) - 1)
                } else {
                    n + 1 - 2 * u64::from(j)
                };
                let (direct, _, _) = count_pairs(&member, n as usize);
                if direct != claimed {
                    own.push((n, claimed, direct));
                }
            }
            let library: Vec<_> = check
                .mismatches
                .iter()
                .map(|m| (m.n, m.claimed, m.actual))
                .collect();
            ensure(library == own, || {
                format!("j={j}: library reports {library:?}, direct count {own:?}")
            })?;
            mismatches.extend(own);
        }
        ensure(mismatches.is_empty(), || {
            let shown: Vec<String> = mismatches
                .iter()
                .map(|(n, c, d)| format!("n={n} formula {c} direct {d}"))
                .collect();
            format!("{} mismatches: {}", mismatches.len(), shown.join(", "))
        })?;
        Ok("all blocks match".into())
    });
}

#[test]
fn criterion_07_predicted_r2_drops() {
    criterion(
        7,
        "predicted r2 drops on 500 sets",
        Some(Duration::from_secs(10)),
        || {
            let scan = 10_000;
            let sets = resolvable_sets(DEFAULT_SEED, 500, scan);
            ensure(sets.len() == 500, || {
                format!("pool has {} sets", sets.len())
            })?;
            let mut clean = 0;
            for set in &sets {
                let w = predict_r2_decrease(set, scan).map_err(|e| format!("{set}: {e}"))?;
                let n = w.n as usize;
                let member = membership(set, w.n + 1);
                let r2: Vec<u64> = (0..=n + 1).map(|k| count_pairs(&member, k).1).collect();
                ensure(r2[n] > r2[n + 1], || {
                    format!("{set}: r2 {} -> {} at {n}", r2[n], r2[n + 1])
                })?;
                ensure((w.before, w.after) == (r2[n], r2[n + 1]), || {
                    format!("{set}: witness values differ")
                })?;
                let first = r2.windows(2).position(|p| p[0] > p[1]);
                ensure(first.is_some_and(|f| f <= n), || {
                    format!("{set}: first drop {first:?} after {n}")
                })?;
                if w.case == CaseTrace::C3Gap {
                    let (c1, c2) = (w.c_values[0], w.c_values[1]);
                    let missing = (0..=c1 + c2 + 1).filter(|&k| !set.contains(k)).count();
                    if missing == 2 {
                        let (x, y) = (c1 / 2, c2 / 2);
                        ensure((r2[n], r2[n + 1]) == (x + y, x + y - 1), || {
                            format!("{set}: clean gap values")
                        })?;
                        clean += 1;
                    }
                }
            }
            Ok(format!(
                "500 verified witnesses, {clean} clean gap instances"
            ))
        },
    );
}

#[test]
fn criterion_08_short_window_steps() {
    criterion(
        8,
        "non-strict r2 and r3 steps in [N, 2N + 2] for N <= 64",
        None,
        || {
            let sets = mixed_sets(DEFAULT_SEED, 200);
            for set in &sets {
                let member = membership(set, 131);
                let [_, r2, r3] = oracle_columns(&member);
                for (kind, r) in [(RepKind::R2, &r2), (RepKind::R3, &r3)] {
                    for start in 0..=64usize {
                        let end = 2 * start + 3;
                        let least = (start..end).find(|&m| r[m + 1] <= r[m]);
                        ensure(least.is_some(), || {
                            format!("{set} {kind} N={start}: no step")
                        })?;
                        ensure(r[end] <= start as u64 + 2, || {
                            format!("{set} {kind}: {} above cap", r[end])
                        })?;
                        let got = thm13_refute_strict(set, start as u64, kind)
                            .map_err(|e| e.to_string())?;
                        ensure(got.witness as usize == least.unwrap(), || {
                            format!(
                                "{set} {kind} N={start}: witness {} vs {least:?}",
                                got.witness
                            )
                        })?;
                        ensure(got.lemma_cap == start as u64 + 2, || {
                            format!("cap {}", got.lemma_cap)
                        })?;
                    }
                }
            }
            Ok("200 sets x 65 windows x 2 functions".into())
        },
    );
}

#[test]
fn criterion_09_diagram_matches_r1() {
    criterion(
        9,
        "diagram columns equal r1 and SVG is well-formed",
        None,
        || {
            for set in mixed_sets(DEFAULT_SEED, 10) {
                let member = membership(&set, 50);
                let [r1, _, _] = oracle_columns(&member);
                let svg =
                    render_diagram(&set, 50, DiagramFormat::Svg).map_err(|e| e.to_string())?;
                let doc = roxmltree::Document::parse(&svg).map_err(|e| format!("{set}: {e}"))?;
                let mut columns = vec![0u64; 51];
                for node in doc.descendants().filter(|n| n.has_tag_name("circle")) {
                    let x: usize = node
                        .attribute("data-sum")
                        .and_then(|v| v.parse().ok())
                        .ok_or("circle without data-sum")?;
                    columns[x] += 1;
                }
                ensure(columns == r1, || format!("{set}: SVG columns {columns:?}"))?;

                let ascii =
                    render_diagram(&set, 50, DiagramFormat::Ascii).map_err(|e| e.to_string())?;
                let mut stars = vec![0u64; 51];
                for line in ascii.lines() {
                    for (x, ch) in line.chars().enumerate() {
                        stars[x] += u64::from(ch == '*');
                    }
                }
                ensure(stars == r1, || format!("{set}: ASCII columns {stars:?}"))?;
            }
            suite_passes(Suite::Diagram)?;
            Ok("10 sets, 51 columns each".into())
        },
    );
}

fn repfn(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_repfn"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn criterion_10_cli_exit_codes() {
    criterion(10, "CLI exit codes", None, || {
        let mut problems = Vec::new();
        let (code, stdout, stderr) = repfn(&["verify", "all"]);
        if code != 0 {
            let failed: Vec<&str> = stderr.lines().filter(|l| l.contains("failed:")).collect();
            problems.push(format!("`verify all` exited {code}; {}", failed.join("; ")));
        }
        if serde_json::from_str::<serde_json::Value>(&stdout).is_err() {
            problems.push("`verify all` stdout is not one JSON document".into());
        }
        for suite in [
            "lemma",
            "identities",
            "thm11a",
            "thm11b",
            "blocks",
            "thm12",
            "thm13",
        ] {
            let (code, _, _) = repfn(&["verify", suite, "--self-test"]);
            if code != 1 {
                problems.push(format!("`verify {suite} --self-test` exited {code}"));
            }
        }
        for spec in [
            "finite:3,1",
            "periodic:1;",
            "shift(5,finite:2,9)",
            "complement(nat",
        ] {
            let (code, stdout, _) = repfn(&["table", "--set", spec, "--max", "4"]);
            if code != 2 || !stdout.is_empty() {
                problems.push(format!("malformed `{spec}` exited {code}"));
            }
        }
        ensure(problems.is_empty(), || problems.join(" | "))?;
        Ok("verify all 0, self-tests 1, malformed specs 2".into())
    });
}
