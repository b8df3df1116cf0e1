//! Unpruned enumeration used as an independent check on the search engine:
//! every table is generated and tested in full, and isomorphism classes are
//! counted by minimizing over all `n!` relabelings.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::EnumFilter;
use crate::error::{Error, Result};
use crate::perm::{all_perms, Perm};
use crate::qcs::{satisfies_axioms, QCycleSet};
use crate::solution::SolutionMap;
use crate::table::OpTable;

pub const ORACLE_MAX_GENERAL: usize = 3;
pub const ORACLE_MAX_CYCLE_SETS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCount {
    pub labeled: usize,
    pub up_to_iso: usize,
}

/// Counts `0..radix^len` as digit vectors, last digit fastest.
fn odometer(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Every labeled q-cycle set of order `n` (cycle sets only if asked), by
/// testing all `(n!)ⁿ` dot tables against all `n^(n²)` colon tables.
pub fn naive_structures(n: usize, cycle_sets_only: bool) -> Result<Vec<QCycleSet>> {
    let cap = if cycle_sets_only {
        ORACLE_MAX_CYCLE_SETS
    } else {
        ORACLE_MAX_GENERAL
    };
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let perms: Vec<Vec<usize>> = all_perms(n).into_iter().map(Perm::into_images).collect();
    let mut out = Vec::new();
    let mut rows = vec![0; n];
    loop {
        let flat: Vec<usize> = rows.iter().flat_map(|&r| perms[r].iter().copied()).collect();
        let dot = OpTable::from_flat(n, flat).expect("in range");
        if cycle_sets_only {
            if satisfies_axioms(&dot, &dot) {
                out.push(QCycleSet::new(dot.clone(), dot).expect("checked"));
            }
        } else {
            let mut cells = vec![0; n * n];
            loop {
                let colon = OpTable::from_flat(n, cells.clone()).expect("in range");
                if satisfies_axioms(&dot, &colon) {
                    out.push(QCycleSet::new(dot.clone(), colon).expect("checked"));
                }
                if !odometer(&mut cells, n) {
                    break;
                }
            }
        }
        if !odometer(&mut rows, perms.len()) {
            break;
        }
    }
    out.sort();
    Ok(out)
}

/// Least `(dot, colon)` entry sequence over every relabeling.
pub fn brute_force_canonical(x: &QCycleSet) -> (Vec<usize>, Vec<usize>) {
    all_perms(x.n())
        .iter()
        .map(|p| {
            let y = x.relabel(p);
            (y.dot_table().entries().to_vec(), y.colon_table().entries().to_vec())
        })
        .min()
        .expect("n ≥ 1")
}

pub fn count(structures: &[QCycleSet], f: &EnumFilter) -> OracleCount {
    let kept: Vec<&QCycleSet> = structures.iter().filter(|x| f.accepts(x)).collect();
    let classes: BTreeSet<(Vec<usize>, Vec<usize>)> =
        kept.iter().map(|x| brute_force_canonical(x)).collect();
    OracleCount {
        labeled: kept.len(),
        up_to_iso: classes.len(),
    }
}

pub fn naive_count(n: usize, f: &EnumFilter) -> Result<OracleCount> {
    Ok(count(&naive_structures(n, f.cycle_set_only)?, f))
}

fn braided(n: usize, r: &[(usize, usize)]) -> bool {
    let at = |a: usize, b: usize| r[a * n + b];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // r₁r₂r₁
                let (a, b) = at(x, y);
                let (b, c) = at(b, z);
                let (a, b) = at(a, b);
                // r₂r₁r₂
                let (q, w) = at(y, z);
                let (p, q) = at(x, q);
                let (q, w) = at(q, w);
                if (a, b, c) != (p, q, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every braided `r` with bijective `λ_x`, generated directly as tables.
pub fn naive_solutions(n: usize, require_bijective: bool) -> Result<Vec<SolutionMap>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > ORACLE_MAX_GENERAL {
        return Err(Error::CapExceeded {
            n,
            cap: ORACLE_MAX_GENERAL,
        });
    }
    let perms: Vec<Vec<usize>> = all_perms(n).into_iter().map(Perm::into_images).collect();
    let mut out = Vec::new();
    let mut lambda = vec![0; n];
    let mut r = vec![(0, 0); n * n];
    loop {
        let mut rho = vec![0; n * n];
        loop {
            for x in 0..n {
                for y in 0..n {
                    r[x * n + y] = (perms[lambda[x]][y], rho[x * n + y]);
                }
            }
            if braided(n, &r) {
                let s = SolutionMap::from_flat(n, r.clone()).expect("in range");
                if !require_bijective || s.is_bijective() {
                    out.push(s);
                }
            }
            if !odometer(&mut rho, n) {
                break;
            }
        }
        if !odometer(&mut lambda, perms.len()) {
            break;
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_and_two_by_hand() {
        assert_eq!(naive_structures(1, false).unwrap().len(), 1);
        let two = naive_structures(2, false).unwrap();
        for x in &two {
            assert!(satisfies_axioms(x.dot_table(), x.colon_table()));
        }
        assert!(two.contains(&QCycleSet::trivial(2)));
    }

    #[test]
    fn caps() {
        assert!(naive_structures(4, false).is_err());
        assert!(naive_solutions(4, false).is_err());
    }

    #[test]
    fn brute_canonical_is_invariant() {
        let x = crate::fixtures::z3_alpha();
        let p = Perm::from_cycles(3, &[&[0, 2]]).unwrap();
        assert_eq!(brute_force_canonical(&x), brute_force_canonical(&x.relabel(&p)));
    }
}
