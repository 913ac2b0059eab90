//! Executable forms of the monotonicity results for r1, r2 and r3.
//!
//! * [`powers`]: the two power-of-two constructions for r1, their violation
//!   bounds, and the per-block closed forms on `(2^j, 2^{j+1}]`.
//! * [`decrease`]: locating a drop of r2 from the first missing integers.
//! * [`strict`]: r2 and r3 cannot increase strictly on `[N, 2N + 3]`.
//! * [`search`]: a greedy exploration of sets with non-decreasing r3.

pub mod decrease;
pub mod powers;
pub mod search;
pub mod strict;

pub use decrease::{first_r2_decrease_bruteforce, predict_r2_decrease, CaseTrace, DecreaseWitness};
pub use powers::{
    block_formula_check, construct_removed_powers, construct_thm11, thm11_bound, BlockCheck,
    Thm11Bound, Thm11Variant,
};
pub use search::{r3_monotone_greedy_search, GreedyR3Search};
pub use strict::{thm13_refute_strict, StrictRefutation};
