//! Finite q-cycle sets and the left non-degenerate set-theoretic solutions of
//! the Yang-Baxter equation they encode.
//!
//! Carriers are always `{0, …, n−1}`. A q-cycle set stores its two operations
//! as full tables; `σ_x(y) = x·y` and `δ_x(y) = x:y`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod enumeration;
pub mod error;
pub mod extensions;
pub mod fixtures;
pub mod group;
pub mod iso;
pub mod perm;
pub mod qcs;
pub mod report;
pub mod solution;
pub mod table;

pub use error::{Error, Result};
pub use group::{GenLabel, GenPermGroup};
pub use perm::Perm;
pub use qcs::{satisfies_axioms, verify_qcycle, QCycleSet};
pub use report::{Law, VerificationReport, Violation};
pub use solution::{verify_solution, SolutionMap};
pub use table::OpTable;
