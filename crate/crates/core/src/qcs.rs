//! Finite q-cycle sets.
//!
//! A q-cycle set is a carrier with two operations `·` and `:` such that every
//! `σ_x = (y ↦ x·y)` is a bijection and
//!
//! ```text
//! (1)  (x·y)·(x·z) = (y:x)·(y·z)
//! (2)  (x:y):(x:z) = (y·x):(y:z)
//! (3)  (x·y):(x·z) = (y:x)·(y:z)
//! ```
//!
//! hold for all `x, y, z`. We write `δ_x = (y ↦ x:y)`, which need not be
//! bijective.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{is_bijection, Perm};
use crate::report::{Law, VerificationReport, Violation};
use crate::table::OpTable;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QCycleSet {
    dot: OpTable,
    colon: OpTable,
    // dot_inv[x * n + y] = σ_x⁻¹(y)
    dot_inv: Vec<usize>,
}

/// Checks every row and every axiom instance, collecting all violations.
pub fn verify_qcycle(dot: &OpTable, colon: &OpTable) -> Result<VerificationReport> {
    if dot.degree() != colon.degree() {
        return Err(Error::DegreeMismatch {
            left: dot.degree(),
            right: colon.degree(),
        });
    }
    let n = dot.degree();
    let mut report = VerificationReport::new();
    for x in 0..n {
        if !dot.row_is_bijective(x) {
            report.push(Violation::new(Law::RowBijectivity, &[x], dot.row(x), &[]));
        }
    }
    let d = |a, b| dot.get(a, b);
    let c = |a, b| colon.get(a, b);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let w = [x, y, z];
                let (l, r) = (d(d(x, y), d(x, z)), d(c(y, x), d(y, z)));
                if l != r {
                    report.push(Violation::new(Law::Axiom1, &w, &[l], &[r]));
                }
                let (l, r) = (c(c(x, y), c(x, z)), c(d(y, x), c(y, z)));
                if l != r {
                    report.push(Violation::new(Law::Axiom2, &w, &[l], &[r]));
                }
                let (l, r) = (c(d(x, y), d(x, z)), d(c(y, x), c(y, z)));
                if l != r {
                    report.push(Violation::new(Law::Axiom3, &w, &[l], &[r]));
                }
            }
        }
    }
    Ok(report)
}

/// Early-exit form of [`verify_qcycle`] for callers that only need a verdict.
pub fn satisfies_axioms(dot: &OpTable, colon: &OpTable) -> bool {
    let n = dot.degree();
    if colon.degree() != n || !(0..n).all(|x| dot.row_is_bijective(x)) {
        return false;
    }
    let d = |a, b| dot.get(a, b);
    let c = |a, b| colon.get(a, b);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if d(d(x, y), d(x, z)) != d(c(y, x), d(y, z))
                    || c(c(x, y), c(x, z)) != c(d(y, x), c(y, z))
                    || c(d(x, y), d(x, z)) != d(c(y, x), c(y, z))
                {
                    return false;
                }
            }
        }
    }
    true
}

impl QCycleSet {
    pub fn new(dot: OpTable, colon: OpTable) -> Result<Self> {
        let report = verify_qcycle(&dot, &colon)?;
        if !report.ok() {
            return Err(Error::InvalidQCycleSet(report));
        }
        Ok(Self::assemble(dot, colon))
    }

    pub fn from_rows(dot: &[Vec<usize>], colon: &[Vec<usize>]) -> Result<Self> {
        Self::new(OpTable::from_rows(dot)?, OpTable::from_rows(colon)?)
    }

    pub fn from_fns(
        n: usize,
        dot: impl Fn(usize, usize) -> usize,
        colon: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        Self::new(OpTable::from_fn(n, dot)?, OpTable::from_fn(n, colon)?)
    }

    /// Skips axiom verification. The caller guarantees validity; only used on
    /// tables that were checked by other means (relabelings, search leaves).
    pub(crate) fn assemble(dot: OpTable, colon: OpTable) -> Self {
        let n = dot.degree();
        let mut dot_inv = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                dot_inv[x * n + dot.get(x, y)] = y;
            }
        }
        QCycleSet {
            dot,
            colon,
            dot_inv,
        }
    }

    /// `x·y = x:y = y`.
    pub fn trivial(n: usize) -> Self {
        let t = OpTable::right_projection(n);
        Self::assemble(t.clone(), t)
    }

    pub fn n(&self) -> usize {
        self.dot.degree()
    }

    #[inline]
    pub fn dot(&self, x: usize, y: usize) -> usize {
        self.dot.get(x, y)
    }

    #[inline]
    pub fn colon(&self, x: usize, y: usize) -> usize {
        self.colon.get(x, y)
    }

    /// `σ_x⁻¹(y)`
    #[inline]
    pub fn dot_inv(&self, x: usize, y: usize) -> usize {
        self.dot_inv[x * self.n() + y]
    }

    pub fn dot_table(&self) -> &OpTable {
        &self.dot
    }

    pub fn colon_table(&self) -> &OpTable {
        &self.colon
    }

    pub fn sigma(&self, x: usize) -> Perm {
        self.dot.row_perm(x).expect("σ rows are bijective")
    }

    /// `δ_x` as a permutation, if it is one.
    pub fn delta(&self, x: usize) -> Option<Perm> {
        self.colon.row_perm(x)
    }

    /// `(q, q′)` with `q(x) = x·x` and `q′(x) = x:x`.
    pub fn squaring_maps(&self) -> (Vec<usize>, Vec<usize>) {
        (self.dot.diagonal(), self.colon.diagonal())
    }

    pub fn is_regular(&self) -> bool {
        (0..self.n()).all(|x| self.colon.row_is_bijective(x))
    }

    pub fn first_irregular_row(&self) -> Option<usize> {
        (0..self.n()).find(|&x| !self.colon.row_is_bijective(x))
    }

    pub fn is_nondegenerate(&self) -> bool {
        let (q, q2) = self.squaring_maps();
        self.is_regular() && is_bijection(&q) && is_bijection(&q2)
    }

    pub fn is_cycle_set(&self) -> bool {
        self.dot == self.colon
    }

    /// The structure transported along `pi`; `pi` is then an isomorphism
    /// from `self` onto the result.
    pub fn relabel(&self, pi: &Perm) -> QCycleSet {
        Self::assemble(self.dot.relabel(pi), self.colon.relabel(pi))
    }

    /// True if `map` preserves both operations from `self` into `target`.
    pub fn is_homomorphism_to(&self, target: &QCycleSet, map: &[usize]) -> bool {
        let n = self.n();
        map.len() == n
            && map.iter().all(|&v| v < target.n())
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    map[self.dot(x, y)] == target.dot(map[x], map[y])
                        && map[self.colon(x, y)] == target.colon(map[x], map[y])
                })
            })
    }
}
