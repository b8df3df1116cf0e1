//! Counts produced by the unpruned oracle in [`super::oracle`] and frozen
//! here so tests can compare the search engine against fixed numbers.
//! None of these come from outside this repository.
//!
//! Regenerate a row with, for example,
//! `qcycle enumerate --oracle --n 3 --regular`
//! (add `--cycle-set`, `--nondeg` as needed), or all rows at once with
//! `qcycle enumerate --oracle --frozen`.

use super::EnumFilter;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrozenCount {
    pub n: usize,
    pub regular: bool,
    pub nondegenerate: bool,
    pub cycle_set_only: bool,
    pub labeled: usize,
    pub up_to_iso: usize,
}

impl FrozenCount {
    /// The filter this row was counted under, with `up_to_iso` as given.
    pub fn filter(&self, up_to_iso: bool) -> EnumFilter {
        EnumFilter {
            regular: self.regular,
            nondegenerate: self.nondegenerate,
            cycle_set_only: self.cycle_set_only,
            up_to_iso,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrozenSolutionCount {
    pub n: usize,
    pub require_bijective: bool,
    pub count: usize,
}

const fn c(n: usize, regular: bool, nondegenerate: bool, cycle_set_only: bool, labeled: usize, up_to_iso: usize) -> FrozenCount {
    FrozenCount {
        n,
        regular,
        nondegenerate,
        cycle_set_only,
        labeled,
        up_to_iso,
    }
}

const fn s(n: usize, require_bijective: bool, count: usize) -> FrozenSolutionCount {
    FrozenSolutionCount {
        n,
        require_bijective,
        count,
    }
}

// generated by `qcycle enumerate --oracle --frozen`
// columns: n, regular, nondeg, cycle-set, labeled, up to isomorphism
pub const QCS_COUNTS: &[FrozenCount] = &[
    c(1, false, false, false, 1, 1),
    c(1, true, false, false, 1, 1),
    c(1, false, true, false, 1, 1),
    c(1, true, true, false, 1, 1),
    c(2, false, false, false, 14, 10),
    c(2, true, false, false, 4, 4),
    c(2, false, true, false, 4, 4),
    c(2, true, true, false, 4, 4),
    c(3, false, false, false, 354, 90),
    c(3, true, false, false, 66, 26),
    c(3, false, true, false, 66, 26),
    c(3, true, true, false, 66, 26),
    c(1, false, false, true, 1, 1),
    c(1, true, false, true, 1, 1),
    c(1, false, true, true, 1, 1),
    c(1, true, true, true, 1, 1),
    c(2, false, false, true, 2, 2),
    c(2, true, false, true, 2, 2),
    c(2, false, true, true, 2, 2),
    c(2, true, true, true, 2, 2),
    c(3, false, false, true, 12, 5),
    c(3, true, false, true, 12, 5),
    c(3, false, true, true, 12, 5),
    c(3, true, true, true, 12, 5),
    c(4, false, false, true, 168, 23),
    c(4, true, false, true, 168, 23),
    c(4, false, true, true, 168, 23),
    c(4, true, true, true, 168, 23),
];

// generated by `qcycle enumerate --oracle --frozen`
// columns: n, bijective only, count (labeled)
pub const SOLUTION_COUNTS: &[FrozenSolutionCount] = &[
    s(1, false, 1),
    s(1, true, 1),
    s(2, false, 14),
    s(2, true, 4),
    s(3, false, 354),
    s(3, true, 66),
];

pub fn lookup(n: usize, f: &EnumFilter) -> Option<&'static FrozenCount> {
    QCS_COUNTS.iter().find(|r| {
        r.n == n && r.regular == f.regular && r.nondegenerate == f.nondegenerate && r.cycle_set_only == f.cycle_set_only
    })
}

pub fn lookup_solutions(n: usize, require_bijective: bool) -> Option<&'static FrozenSolutionCount> {
    SOLUTION_COUNTS
        .iter()
        .find(|r| r.n == n && r.require_bijective == require_bijective)
}
