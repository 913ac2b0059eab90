//! Decidable subsets of the non-negative integers.
//!
//! A set is always given by a finite descriptor, so membership, the next
//! member and the next missing integer are all computable without any
//! unbounded search. The textual form is parsed by [`IntegerSet::parse`] and
//! produced by the `Display` impl; the two round-trip.

mod parse;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The structural description behind an [`IntegerSet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    /// Strictly increasing list of members.
    Finite(Vec<u64>),
    /// Bit `k` of `preperiod ++ period ++ period ++ ...` is the membership of `k`.
    Periodic {
        preperiod: Vec<bool>,
        period: Vec<bool>,
    },
    /// `{2^i : i >= 1}`; 1 is not a member.
    PowersOfTwo,
    Complement(Box<IntegerSet>),
    /// `{a - offset : a in inner}`, with `offset <= min(inner)`.
    Shift {
        offset: u64,
        inner: Box<IntegerSet>,
    },
}

/// A possibly infinite set of non-negative integers with decidable membership.
///
/// Values are immutable; every query is pure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerSet {
    desc: Descriptor,
}

impl IntegerSet {
    pub fn empty() -> Self {
        IntegerSet {
            desc: Descriptor::Finite(Vec::new()),
        }
    }

    /// All of N0.
    pub fn nat() -> Self {
        Self::empty().complement()
    }

    pub fn powers_of_two() -> Self {
        IntegerSet {
            desc: Descriptor::PowersOfTwo,
        }
    }

    pub fn finite(elements: Vec<u64>) -> Result<Self> {
        for w in elements.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::NotIncreasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        Ok(IntegerSet {
            desc: Descriptor::Finite(elements),
        })
    }

    pub fn periodic(preperiod: Vec<bool>, period: Vec<bool>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(IntegerSet {
            desc: Descriptor::Periodic { preperiod, period },
        })
    }

    /// Complement in N0. A double complement collapses to the inner set.
    pub fn complement(self) -> Self {
        match self.desc {
            Descriptor::Complement(inner) => *inner,
            desc => IntegerSet {
                desc: Descriptor::Complement(Box::new(IntegerSet { desc })),
            },
        }
    }

    /// The set `{a - m : a in self}`.
    ///
    /// Fails on an empty set or when `m` exceeds the minimum. A zero shift
    /// returns the set unchanged and nested shifts are merged.
    pub fn shift_down(&self, m: u64) -> Result<Self> {
        let min = self.min_element()?;
        if m > min {
            return Err(Error::ShiftTooLarge { offset: m, min });
        }
        if m == 0 {
            return Ok(self.clone());
        }
        Ok(match &self.desc {
            Descriptor::Shift { offset, inner } => IntegerSet {
                desc: Descriptor::Shift {
                    offset: offset + m,
                    inner: inner.clone(),
                },
            },
            _ => IntegerSet {
                desc: Descriptor::Shift {
                    offset: m,
                    inner: Box::new(self.clone()),
                },
            },
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse::parse(text)
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.desc
    }

    pub fn contains(&self, n: u64) -> bool {
        match &self.desc {
            Descriptor::Finite(v) => v.binary_search(&n).is_ok(),
            Descriptor::Periodic { preperiod, period } => periodic_bit(preperiod, period, n),
            Descriptor::PowersOfTwo => n >= 2 && n.is_power_of_two(),
            Descriptor::Complement(inner) => !inner.contains(n),
            Descriptor::Shift { offset, inner } => {
                n.checked_add(*offset).is_some_and(|k| inner.contains(k))
            }
        }
    }

    /// Least member `>= from`, or `None` if there is none.
    pub fn next_member(&self, from: u64) -> Option<u64> {
        self.next_with(from, true)
    }

    /// Least non-member `>= from`, or `None` if every integer from there on is a member.
    pub fn next_nonmember(&self, from: u64) -> Option<u64> {
        self.next_with(from, false)
    }

    fn next_with(&self, from: u64, member: bool) -> Option<u64> {
        match &self.desc {
            Descriptor::Finite(v) => {
                let mut idx = v.partition_point(|&x| x < from);
                if member {
                    return v.get(idx).copied();
                }
                let mut k = from;
                while idx < v.len() && v[idx] == k {
                    k = k.checked_add(1)?;
                    idx += 1;
                }
                Some(k)
            }
            Descriptor::Periodic { preperiod, period } => {
                periodic_next(preperiod, period, from, member)
            }
            Descriptor::PowersOfTwo => {
                if member {
                    if from <= 2 {
                        Some(2)
                    } else {
                        from.checked_next_power_of_two()
                    }
                } else if self.contains(from) {
                    // from >= 2 is a power of two, so from + 1 is not
                    from.checked_add(1)
                } else {
                    Some(from)
                }
            }
            Descriptor::Complement(inner) => inner.next_with(from, !member),
            Descriptor::Shift { offset, inner } => inner
                .next_with(from.checked_add(*offset)?, member)
                .map(|k| k - offset),
        }
    }

    /// Least member.
    pub fn min_element(&self) -> Result<u64> {
        self.next_member(0).ok_or(Error::EmptySet)
    }

    pub fn is_empty(&self) -> bool {
        self.next_member(0).is_none()
    }

    /// Members in `[from, to]`, ascending.
    pub fn members_in(&self, from: u64, to: u64) -> Members<'_> {
        Members {
            set: self,
            next: from,
            to,
            member: true,
            done: false,
        }
    }

    /// Non-members in `[from, to]`, ascending.
    pub fn nonmembers_in(&self, from: u64, to: u64) -> Members<'_> {
        Members {
            set: self,
            next: from,
            to,
            member: false,
            done: false,
        }
    }

    /// The first `count` missing integers that are `<= scan_bound`.
    pub fn complement_prefix(&self, count: usize, scan_bound: u64) -> ComplementPrefix {
        let mut elements = Vec::with_capacity(count.min(64));
        let mut it = self.nonmembers_in(0, scan_bound);
        if count == 0 {
            let exhausted = it.next().is_none();
            return ComplementPrefix {
                elements,
                exhausted,
                scan_bound,
            };
        }
        for c in it.by_ref() {
            elements.push(c);
            if elements.len() == count {
                break;
            }
        }
        let exhausted = elements.len() < count || it.next().is_none();
        ComplementPrefix {
            elements,
            exhausted,
            scan_bound,
        }
    }

    /// Whether the complement is infinite, decided from the descriptor.
    pub fn complement_is_infinite(&self) -> bool {
        self.tail_state(false)
    }

    /// Whether the set itself is infinite, decided from the descriptor.
    pub fn is_infinite(&self) -> bool {
        self.tail_state(true)
    }

    fn tail_state(&self, member: bool) -> bool {
        match &self.desc {
            Descriptor::Finite(_) => !member,
            Descriptor::Periodic { period, .. } => period.contains(&member),
            Descriptor::PowersOfTwo => true,
            Descriptor::Complement(inner) => inner.tail_state(!member),
            Descriptor::Shift { inner, .. } => inner.tail_state(member),
        }
    }
}

fn periodic_bit(pre: &[bool], period: &[bool], n: u64) -> bool {
    let p = pre.len() as u64;
    if n < p {
        pre[n as usize]
    } else {
        period[((n - p) % period.len() as u64) as usize]
    }
}

fn periodic_next(pre: &[bool], period: &[bool], from: u64, want: bool) -> Option<u64> {
    let p = pre.len() as u64;
    let mut k = from;
    while k < p {
        if pre[k as usize] == want {
            return Some(k);
        }
        k += 1;
    }
    let len = period.len() as u64;
    let phase = (k - p) % len;
    (0..len)
        .find(|&t| period[((phase + t) % len) as usize] == want)
        .and_then(|t| k.checked_add(t))
}

/// Iterator over members (or non-members) of a set inside a closed window.
pub struct Members<'a> {
    set: &'a IntegerSet,
    next: u64,
    to: u64,
    member: bool,
    done: bool,
}

impl Iterator for Members<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done || self.next > self.to {
            return None;
        }
        match self
            .set
            .next_with(self.next, self.member)
            .filter(|&k| k <= self.to)
        {
            Some(k) => {
                match k.checked_add(1) {
                    Some(n) => self.next = n,
                    None => self.done = true,
                }
                Some(k)
            }
            None => {
                self.done = true;
                None
            }
        }
    }
}

/// The first missing integers of a set, c1 < c2 < ... < ck, all within a scan bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementPrefix {
    pub elements: Vec<u64>,
    /// No complement element `<= scan_bound` exists beyond those listed.
    pub exhausted: bool,
    pub scan_bound: u64,
}

impl ComplementPrefix {
    /// Builds a prefix from an explicit complement, e.g. for a cofinite set.
    pub fn from_elements(elements: Vec<u64>, scan_bound: u64) -> Result<Self> {
        for w in elements.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::NotIncreasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        if let Some(&last) = elements.last() {
            if last > scan_bound {
                return Err(Error::InvalidArgument(format!(
                    "complement element {last} lies beyond the scan bound {scan_bound}"
                )));
            }
        }
        Ok(ComplementPrefix {
            elements,
            exhausted: true,
            scan_bound,
        })
    }

    /// True when every complement element `<= n` is listed.
    pub fn covers(&self, n: u64) -> bool {
        (self.exhausted && self.scan_bound >= n) || self.elements.last().is_some_and(|&c| c >= n)
    }
}

impl FromStr for IntegerSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse(s)
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.desc {
            Descriptor::Finite(v) if v.is_empty() => f.write_str("empty"),
            Descriptor::Finite(v) => {
                f.write_str("finite:")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Descriptor::Periodic { preperiod, period } => {
                f.write_str("periodic:")?;
                for &b in preperiod {
                    f.write_str(if b { "1" } else { "0" })?;
                }
                f.write_str(";")?;
                for &b in period {
                    f.write_str(if b { "1" } else { "0" })?;
                }
                Ok(())
            }
            Descriptor::PowersOfTwo => f.write_str("pow2"),
            Descriptor::Complement(inner) => match &inner.desc {
                Descriptor::Finite(v) if v.is_empty() => f.write_str("nat"),
                _ => write!(f, "complement({inner})"),
            },
            Descriptor::Shift { offset, inner } => write!(f, "shift({offset},{inner})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> IntegerSet {
        s.parse().unwrap()
    }

    #[test]
    fn powers_of_two_start_at_two() {
        let p = set("pow2");
        assert!(p.contains(2));
        assert!(!p.contains(1));
        assert!(!p.contains(0));
        assert!(p.contains(1 << 40));
        assert_eq!(p.members_in(0, 20).collect::<Vec<_>>(), vec![2, 4, 8, 16]);
        assert!(set("complement(pow2)").contains(0));
    }

    #[test]
    fn periodic_membership_follows_unrolled_bits() {
        let s = set("periodic:110;10");
        let unrolled = [true, true, false, true, false, true, false, true];
        for (k, &b) in unrolled.iter().enumerate() {
            assert_eq!(s.contains(k as u64), b, "index {k}");
        }
        // index 5 is the first period bit of the second repetition
        assert!(s.contains(5));
    }

    #[test]
    fn complement_of_finite_list() {
        let s = set("complement(finite:2,5)");
        let brute: Vec<u64> = (0..=100).filter(|n| *n != 2 && *n != 5).collect();
        assert_eq!(s.members_in(0, 100).collect::<Vec<_>>(), brute);
    }

    #[test]
    fn complement_prefix_examples() {
        let p = set("complement(finite:2,5)").complement_prefix(2, 100);
        assert_eq!(p.elements, vec![2, 5]);
        assert!(p.exhausted);

        let p = set("nat").complement_prefix(3, 100);
        assert!(p.elements.is_empty());
        assert!(p.exhausted);

        let p = set("complement(pow2)").complement_prefix(3, 100);
        assert_eq!(p.elements, vec![2, 4, 8]);
        assert!(!p.exhausted);

        let p = set("complement(pow2)").complement_prefix(10, 20);
        assert_eq!(p.elements, vec![2, 4, 8, 16]);
        assert!(p.exhausted);
    }

    #[test]
    fn shift_down_examples() {
        let s = set("finite:3,5,9").shift_down(3).unwrap();
        assert_eq!(s.members_in(0, 50).collect::<Vec<_>>(), vec![0, 2, 6]);

        let a = set("complement(pow2)");
        assert_eq!(a.shift_down(0).unwrap(), a);

        let a = set("complement(finite:0,3,8)");
        assert_eq!(a.min_element().unwrap(), 1);
        let shifted = a.shift_down(1).unwrap();
        assert_eq!(shifted.complement_prefix(2, 100).elements, vec![2, 7]);
    }

    #[test]
    fn shift_down_errors() {
        assert_eq!(
            set("pow2").shift_down(3),
            Err(Error::ShiftTooLarge { offset: 3, min: 2 })
        );
        assert_eq!(set("empty").shift_down(0), Err(Error::EmptySet));
    }

    #[test]
    fn min_element_examples() {
        assert_eq!(set("pow2").min_element(), Ok(2));
        assert_eq!(set("finite:0,4").min_element(), Ok(0));
        assert_eq!(set("complement(finite:0,1,2)").min_element(), Ok(3));
        assert_eq!(set("empty").min_element(), Err(Error::EmptySet));
        assert_eq!(set("periodic:000;0").min_element(), Err(Error::EmptySet));
        assert_eq!(set("periodic:000;01").min_element(), Ok(4));
    }

    #[test]
    fn double_complement_normalizes() {
        let a = set("periodic:1;10");
        assert_eq!(a.clone().complement().complement(), a);
        assert_eq!(set("complement(complement(pow2))"), set("pow2"));
    }

    #[test]
    fn infinitude_from_structure() {
        assert!(set("complement(pow2)").complement_is_infinite());
        assert!(!set("complement(finite:1,2)").complement_is_infinite());
        assert!(set("periodic:;10").complement_is_infinite());
        assert!(!set("periodic:0;1").complement_is_infinite());
        assert!(set("pow2").is_infinite());
        assert!(!set("finite:1,2").is_infinite());
    }

    #[test]
    fn window_iterators_stop_at_bounds() {
        let a = set("nat");
        assert_eq!(a.members_in(5, 7).collect::<Vec<_>>(), vec![5, 6, 7]);
        assert_eq!(a.nonmembers_in(0, 1000).count(), 0);
        assert_eq!(a.members_in(u64::MAX - 1, u64::MAX).count(), 2);
        assert_eq!(set("empty").members_in(0, u64::MAX).count(), 0);
    }
}
