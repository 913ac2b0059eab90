//! Seeded pools of test sets. The same seed always yields the same pool.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::set::IntegerSet;

pub const DEFAULT_SEED: u64 = 20_240_917;

/// Nonempty eventually periodic sets with at least one 0 in the period, so
/// the complement is infinite.
pub fn periodic_sets(seed: u64, count: usize) -> Vec<IntegerSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_periodic(&mut rng)).collect()
}

/// Sets missing between `min_missing` and `min_missing + 5` integers, all below 48.
pub fn finite_complement_sets(seed: u64, count: usize, min_missing: usize) -> Vec<IntegerSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(min_missing..=min_missing + 5).min(48);
            let mut missing = rand::seq::index::sample(&mut rng, 48, k)
                .into_iter()
                .map(|x| x as u64)
                .collect::<Vec<_>>();
            missing.sort_unstable();
            IntegerSet::finite(missing)
                .expect("sorted distinct")
                .complement()
        })
        .collect()
}

/// Alternates periodic sets and finite-complement sets with at least three gaps.
pub fn mixed_sets(seed: u64, count: usize) -> Vec<IntegerSet> {
    let periodic = periodic_sets(seed, count.div_ceil(2));
    let finite = finite_complement_sets(seed, count / 2, 3);
    let mut out = Vec::with_capacity(count);
    let mut p = periodic.into_iter();
    let mut f = finite.into_iter();
    for i in 0..count {
        let next = if i % 2 == 0 { p.next() } else { f.next() };
        out.extend(next);
    }
    out
}

/// Mixed sets whose first three missing integers, and those of the set
/// shifted down by its minimum when 0 is missing, all lie within `scan_bound`.
pub fn resolvable_sets(seed: u64, count: usize, scan_bound: u64) -> Vec<IntegerSet> {
    let mut drawn = count;
    loop {
        let pool: Vec<IntegerSet> = mixed_sets(seed, drawn)
            .into_iter()
            .filter(|s| three_missing(s, scan_bound))
            .take(count)
            .collect();
        if pool.len() == count {
            return pool;
        }
        drawn *= 2;
    }
}

fn three_missing(set: &IntegerSet, scan_bound: u64) -> bool {
    let Ok(min) = set.min_element() else {
        return false;
    };
    let enough = |s: &IntegerSet, bound| s.complement_prefix(3, bound).elements.len() == 3;
    enough(set, scan_bound)
        && (min == 0
            || set
                .shift_down(min)
                .is_ok_and(|s| enough(&s, scan_bound.saturating_sub(min))))
}

fn random_periodic(rng: &mut ChaCha8Rng) -> IntegerSet {
    let density: f64 = rng.gen_range(0.3..0.9);
    let pre_len = rng.gen_range(0..=6);
    let period_len = rng.gen_range(1..=8);
    let mut preperiod: Vec<bool> = (0..pre_len).map(|_| rng.gen_bool(density)).collect();
    let mut period: Vec<bool> = (0..period_len).map(|_| rng.gen_bool(density)).collect();
    let zero = rng.gen_range(0..period_len);
    period[zero] = false;
    if !preperiod.contains(&true) && !period.contains(&true) {
        if period_len > 1 {
            period[(zero + 1) % period_len] = true;
        } else {
            preperiod.push(true);
        }
    }
    IntegerSet::periodic(preperiod, period).expect("nonempty period")
}
