//! Additive representation functions over decidable sets of non-negative integers.
//!
//! * [`set`]: sets given by finite descriptors and the set-spec mini-language.
//! * [`rep`]: r1, r2, r3 pointwise, in closed form for N0, and as whole tables.
//! * [`monotonicity`]: violation reports, natural density, the short-window step.
//! * [`theorems`]: executable constructions, bounds and decrease predictors.
//! * [`diagram`]: the `(a + b, a)` lattice picture as SVG or ASCII.
//! * [`verify`]: named verification suites, also reachable from the `repfn` binary.

pub mod cli;
pub mod diagram;
pub mod error;
pub mod monotonicity;
pub mod pool;
pub mod rep;
pub mod set;
pub mod theorems;
pub mod verify;

pub use error::{Error, Result};
pub use rep::{batch_table, closed_form, r1_at, r2_at, r3_at, RepKind, RepTable, Strategy};
pub use set::{ComplementPrefix, IntegerSet};
