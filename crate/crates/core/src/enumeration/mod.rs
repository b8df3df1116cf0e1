//! Exhaustive enumeration of small q-cycle sets and of the left
//! non-degenerate solutions they encode.

pub mod frozen;
pub mod oracle;
mod search;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::all_perms;
use crate::qcs::QCycleSet;
use crate::solution::SolutionMap;

/// No enumeration is allowed beyond this order, whatever the caps say.
pub const HARD_MAX_ORDER: usize = 6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct EnumFilter {
    pub regular: bool,
    pub nondegenerate: bool,
    pub cycle_set_only: bool,
    pub up_to_iso: bool,
}

impl EnumFilter {
    pub fn up_to_iso() -> Self {
        EnumFilter {
            up_to_iso: true,
            ..Self::default()
        }
    }

    /// Post-check of the structural flags (`up_to_iso` is not a property).
    pub fn accepts(&self, x: &QCycleSet) -> bool {
        (!self.regular || x.is_regular())
            && (!self.nondegenerate || x.is_nondegenerate())
            && (!self.cycle_set_only || x.is_cycle_set())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub dot_prunes: u64,
    pub colon_prunes: u64,
    /// Valid structures rejected by a post-check flag.
    pub filtered: u64,
    /// Labeled structures accepted before isomorphism rejection.
    pub labeled: u64,
}

impl SearchStats {
    fn add(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.dot_prunes += o.dot_prunes;
        self.colon_prunes += o.colon_prunes;
        self.filtered += o.filtered;
        self.labeled += o.labeled;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumResult {
    pub order: usize,
    pub filter: EnumFilter,
    /// Sorted; canonical forms when `up_to_iso`.
    pub structures: Vec<QCycleSet>,
    pub stats: SearchStats,
}

impl EnumResult {
    pub fn count(&self) -> usize {
        self.structures.len()
    }
}

/// Largest orders allowed without an explicit override.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub general: usize,
    pub cycle_sets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            general: 4,
            cycle_sets: 5,
        }
    }
}

impl Caps {
    pub fn check(&self, n: usize, f: &EnumFilter) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let cap = if f.cycle_set_only { self.cycle_sets } else { self.general };
        let cap = cap.min(HARD_MAX_ORDER);
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        Ok(())
    }
}

/// A subtree of the search with its first `·` rows fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkUnit {
    pub n: usize,
    pub filter: EnumFilter,
    pub prefix: Vec<Vec<usize>>,
}

pub fn enumerate_qcs(n: usize, f: EnumFilter) -> Result<EnumResult> {
    enumerate_qcs_capped(n, f, &Caps::default())
}

pub fn enumerate_qcs_capped(n: usize, f: EnumFilter, caps: &Caps) -> Result<EnumResult> {
    caps.check(n, &f)?;
    let unit = WorkUnit {
        n,
        filter: f,
        prefix: Vec::new(),
    };
    Ok(run_unit(&unit))
}

/// One unit per choice of the first `prefix_depth` rows of `·`.
pub fn split_search(n: usize, f: EnumFilter, prefix_depth: usize) -> Vec<WorkUnit> {
    let perms: Vec<Vec<usize>> = all_perms(n).into_iter().map(|p| p.into_images()).collect();
    let mut prefixes: Vec<Vec<Vec<usize>>> = alloc::vec![Vec::new()];
    for _ in 0..prefix_depth.min(n) {
        prefixes = prefixes
            .into_iter()
            .flat_map(|pre| {
                perms.iter().map(move |p| {
                    let mut next = pre.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    prefixes
        .into_iter()
        .map(|prefix| WorkUnit { n, filter: f, prefix })
        .collect()
}

pub fn run_unit(unit: &WorkUnit) -> EnumResult {
    let mut engine = search::Engine::new(unit.n, unit.filter);
    engine.run(&unit.prefix);
    EnumResult {
        order: unit.n,
        filter: unit.filter,
        structures: engine.found.into_iter().collect(),
        stats: engine.stats,
    }
}

/// Union of unit results, independent of their order.
pub fn merge_units(n: usize, f: EnumFilter, results: impl IntoIterator<Item = EnumResult>) -> EnumResult {
    let mut all: BTreeSet<QCycleSet> = BTreeSet::new();
    let mut stats = SearchStats::default();
    for r in results {
        stats.add(&r.stats);
        all.extend(r.structures);
    }
    EnumResult {
        order: n,
        filter: f,
        structures: all.into_iter().collect(),
        stats,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionEnumResult {
    pub order: usize,
    pub require_bijective: bool,
    /// Sorted by table.
    pub solutions: Vec<SolutionMap>,
    pub stats: SearchStats,
}

impl SolutionEnumResult {
    pub fn count(&self) -> usize {
        self.solutions.len()
    }
}

/// Every left non-degenerate solution of order `n`, through the q-cycle sets
/// that encode them.
pub fn enumerate_solutions(n: usize, require_bijective: bool) -> Result<SolutionEnumResult> {
    let r = enumerate_qcs(n, EnumFilter::default())?;
    let mut solutions: Vec<SolutionMap> = r
        .structures
        .iter()
        .map(QCycleSet::to_solution)
        .filter(|s| !require_bijective || s.is_bijective())
        .collect();
    solutions.sort();
    Ok(SolutionEnumResult {
        order: n,
        require_bijective,
        solutions,
        stats: r.stats,
    })
}
