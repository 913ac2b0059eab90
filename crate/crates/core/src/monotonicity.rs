//! Where representation functions fail to be (strictly) increasing.

use std::io;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rep::{batch_table, RepKind, RepTable, Strategy};
use crate::set::IntegerSet;

/// The steps `n -> n + 1` inside a table window where one r-function fails
/// to increase (non-strict: drops; strict: does not grow).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    #[serde(rename = "set")]
    pub set_spec: String,
    pub kind: RepKind,
    pub strict: bool,
    pub max_n: u64,
    pub count: u64,
    /// `count / max_n`, reduced.
    #[serde(serialize_with = "ratio_json")]
    pub density_upper: Ratio<u64>,
    pub violations: Vec<u64>,
}

impl ViolationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One violation index per row under an `n` header.
    pub fn write_csv<W: io::Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n"])?;
        for &n in &self.violations {
            w.serialize([n])?;
        }
        w.flush()
    }

    /// Violations at indices `< n`.
    pub fn count_below(&self, n: u64) -> u64 {
        self.violations.partition_point(|&v| v < n) as u64
    }
}

/// Exact `|A ∩ [1, N]| / N`. Zero is never counted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityEstimate {
    #[serde(rename = "N")]
    pub window: u64,
    pub member_count: u64,
    #[serde(serialize_with = "ratio_json")]
    pub ratio: Ratio<u64>,
}

fn ratio_json<S: Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Fraction {
        num: u64,
        den: u64,
    }
    Fraction {
        num: *r.numer(),
        den: *r.denom(),
    }
    .serialize(s)
}

/// Scans every step `n -> n + 1` with `n + 1 <= max_n`.
pub fn find_violations(table: &RepTable, kind: RepKind, strict: bool) -> ViolationReport {
    let v = table.values(kind);
    let violations: Vec<u64> = v
        .windows(2)
        .enumerate()
        .filter(|(_, w)| if strict { w[1] <= w[0] } else { w[1] < w[0] })
        .map(|(n, _)| n as u64)
        .collect();
    let count = violations.len() as u64;
    ViolationReport {
        set_spec: table.set_spec().to_string(),
        kind,
        strict,
        max_n: table.max_n(),
        count,
        density_upper: Ratio::new(count, table.max_n().max(1)),
        violations,
    }
}

pub fn natural_density_estimate(set: &IntegerSet, window: u64) -> Result<DensityEstimate> {
    if window == 0 {
        return Err(Error::InvalidArgument(
            "density window must be at least 1".into(),
        ));
    }
    let member_count = set.members_in(1, window).count() as u64;
    Ok(DensityEstimate {
        window,
        member_count,
        ratio: Ratio::new(member_count, window),
    })
}

/// Least `n` in `[N, 2N + 2]` with `r(n + 1) <= r(n)`, for `r` = r2 or r3.
///
/// Such an `n` always exists: otherwise `r` would gain at least `N + 3` across
/// the window and exceed `r2(N0, 2N + 3) = N + 2` at `2N + 3`. A miss is
/// reported as [`Error::TheoremViolated`].
pub fn window_nonstrict_step(set: &IntegerSet, start: u64, kind: RepKind) -> Result<u64> {
    if kind == RepKind::R1 {
        return Err(Error::InvalidArgument(
            "the window step applies to r2 and r3 only".into(),
        ));
    }
    let end = start
        .checked_mul(2)
        .and_then(|x| x.checked_add(3))
        .ok_or_else(|| Error::InvalidArgument(format!("window start {start} too large")))?;
    let table = batch_table(set, end, Strategy::Auto)?;
    let v = table.values(kind);
    (start..end)
        .find(|&n| v[n as usize + 1] <= v[n as usize])
        .ok_or_else(|| {
            Error::TheoremViolated(format!(
                "{kind} of {set} increases strictly on every step of [{start}, {end}]"
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> IntegerSet {
        s.parse().unwrap()
    }

    fn table(s: &str, n: u64) -> RepTable {
        batch_table(&set(s), n, Strategy::Naive).unwrap()
    }

    #[test]
    fn violation_examples() {
        let r = find_violations(&table("nat", 10), RepKind::R2, false);
        assert!(r.violations.is_empty());
        assert_eq!(r.density_upper, Ratio::new(0, 1));

        let r = find_violations(&table("nat", 6), RepKind::R2, true);
        assert_eq!(r.violations, vec![0, 2, 4]);
        assert_eq!(r.count, 3);
        assert_eq!(r.density_upper, Ratio::new(1, 2));

        // r1(pow2) on [0, 10] is 0,0,0,0,1,0,2,0,1,0,2
        let r = find_violations(&table("pow2", 10), RepKind::R1, false);
        assert_eq!(r.violations, vec![4, 6, 8]);
    }

    #[test]
    fn last_index_has_no_step() {
        let r = find_violations(&table("finite:1", 2), RepKind::R1, false);
        assert!(r.violations.is_empty());
        let r = find_violations(&table("finite:1", 3), RepKind::R1, false);
        assert_eq!(r.violations, vec![2]);
        let r = find_violations(&table("nat", 0), RepKind::R1, true);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn report_json() {
        let r = find_violations(&table("nat", 6), RepKind::R2, true);
        assert_eq!(
            r.to_json(),
            r#"{"set":"nat","kind":"r2","strict":true,"max_n":6,"count":3,"density_upper":{"num":1,"den":2},"violations":[0,2,4]}"#
        );
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n\n0\n2\n4\n");
    }

    #[test]
    fn density_examples() {
        let d = natural_density_estimate(&set("pow2"), 1024).unwrap();
        assert_eq!(d.member_count, 10);
        assert_eq!(d.ratio, Ratio::new(10, 1024));
        let d = natural_density_estimate(&set("nat"), 7).unwrap();
        assert_eq!(d.ratio, Ratio::from_integer(1));
        let d = natural_density_estimate(&set("complement(pow2)"), 1024).unwrap();
        assert_eq!(d.member_count, 1014);
        // 0 is outside the window
        let d = natural_density_estimate(&set("finite:0"), 5).unwrap();
        assert_eq!(d.member_count, 0);
        assert!(natural_density_estimate(&set("nat"), 0).is_err());
    }

    #[test]
    fn window_step_examples() {
        assert_eq!(window_nonstrict_step(&set("nat"), 3, RepKind::R2), Ok(4));
        assert_eq!(window_nonstrict_step(&set("empty"), 0, RepKind::R2), Ok(0));
        assert_eq!(
            window_nonstrict_step(&set("complement(finite:1)"), 0, RepKind::R2),
            Ok(0)
        );
        assert_eq!(window_nonstrict_step(&set("nat"), 0, RepKind::R3), Ok(1));
        assert!(window_nonstrict_step(&set("nat"), 0, RepKind::R1).is_err());
    }
}
