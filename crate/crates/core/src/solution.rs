//! Set-theoretic solutions `r: X×X → X×X` stored as full tables.
//!
//! Writing `r(x, y) = (λ_x(y), ρ_y(x))`, a left non-degenerate solution
//! corresponds to the q-cycle set with `x·y = λ_x⁻¹(y)` and
//! `x:y = ρ_{λ_y⁻¹(x)}(y)`; conversely a q-cycle set gives
//! `r(x, y) = (σ_x⁻¹(y), σ_x⁻¹(y):x)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::is_bijection;
use crate::qcs::QCycleSet;
use crate::report::{Law, VerificationReport, Violation};
use crate::table::OpTable;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SolutionMap {
    n: usize,
    r: Vec<(usize, usize)>,
}

impl SolutionMap {
    pub fn new(table: &[Vec<(usize, usize)>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut r = Vec::with_capacity(n * n);
        for row in table {
            if row.len() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            r.extend_from_slice(row);
        }
        Self::from_flat(n, r)
    }

    pub fn from_flat(n: usize, r: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if r.len() != n * n {
            return Err(Error::ShapeMismatch {
                expected: n * n,
                found: r.len(),
            });
        }
        for &(a, b) in &r {
            let value = a.max(b);
            if value >= n {
                return Err(Error::OutOfRange { value, degree: n });
            }
        }
        Ok(SolutionMap { n, r })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        let mut r = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                r.push(f(x, y));
            }
        }
        Self::from_flat(n, r)
    }

    /// `r(x, y) = (y, x)`.
    pub fn swap(n: usize) -> Self {
        Self::from_fn(n, |x, y| (y, x)).expect("n > 0")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.r[x * self.n + y]
    }

    pub fn to_rows(&self) -> Vec<Vec<(usize, usize)>> {
        self.r.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    /// `λ_x` as an image sequence.
    pub fn lambda(&self, x: usize) -> Vec<usize> {
        (0..self.n).map(|y| self.apply(x, y).0).collect()
    }

    /// `ρ_y` as an image sequence.
    pub fn rho(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.apply(x, y).1).collect()
    }

    /// Checks `r₁r₂r₁ = r₂r₁r₂` on every triple.
    pub fn verify(&self) -> VerificationReport {
        verify_solution(self)
    }

    pub fn is_braided(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let (l, r) = braid_sides(self, x, y, z);
                    l == r
                })
            })
        })
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.n;
        let flat: Vec<usize> = self.r.iter().map(|&(a, b)| a * n + b).collect();
        is_bijection(&flat)
    }

    pub fn is_left_nondegenerate(&self) -> bool {
        (0..self.n).all(|x| is_bijection(&self.lambda(x)))
    }

    pub fn is_right_nondegenerate(&self) -> bool {
        (0..self.n).all(|y| is_bijection(&self.rho(y)))
    }

    /// `rᵏ` as a map on pair indices `x·n + y`; `r⁰` is the identity.
    pub fn power(&self, k: u32) -> Vec<usize> {
        let n = self.n;
        let step: Vec<usize> = self.r.iter().map(|&(a, b)| a * n + b).collect();
        let mut current: Vec<usize> = (0..n * n).collect();
        for _ in 0..k {
            for p in current.iter_mut() {
                *p = step[*p];
            }
        }
        current
    }

    /// True iff `rᵃ = rᵇ` as maps on `X×X`.
    pub fn power_eq(&self, a: u32, b: u32) -> bool {
        self.power(a) == self.power(b)
    }

    /// The associated q-cycle set. Fails unless every `λ_x` is bijective and
    /// the resulting tables satisfy the q-cycle set axioms.
    pub fn to_qcycle_set(&self) -> Result<QCycleSet> {
        let n = self.n;
        let mut lambda_inv = vec![0; n * n];
        for x in 0..n {
            let row = self.lambda(x);
            if !is_bijection(&row) {
                return Err(Error::NotLeftNonDegenerate { x });
            }
            for (y, &v) in row.iter().enumerate() {
                lambda_inv[x * n + v] = y;
            }
        }
        let dot = OpTable::from_fn(n, |x, y| lambda_inv[x * n + y])?;
        let colon = OpTable::from_fn(n, |x, y| self.apply(y, lambda_inv[y * n + x]).1)?;
        match QCycleSet::new(dot, colon) {
            Err(Error::InvalidQCycleSet(_)) => Err(Error::InvalidSolution(self.verify())),
            other => other,
        }
    }
}

impl QCycleSet {
    /// `r(x, y) = (σ_x⁻¹(y), σ_x⁻¹(y):x)`.
    pub fn to_solution(&self) -> SolutionMap {
        SolutionMap::from_fn(self.n(), |x, y| {
            let w = self.dot_inv(x, y);
            (w, self.colon(w, x))
        })
        .expect("entries in range")
    }
}

// (r₁r₂r₁(x,y,z), r₂r₁r₂(x,y,z))
fn braid_sides(s: &SolutionMap, x: usize, y: usize, z: usize) -> ([usize; 3], [usize; 3]) {
    let r1 = |t: [usize; 3]| {
        let (a, b) = s.apply(t[0], t[1]);
        [a, b, t[2]]
    };
    let r2 = |t: [usize; 3]| {
        let (a, b) = s.apply(t[1], t[2]);
        [t[0], a, b]
    };
    (r1(r2(r1([x, y, z]))), r2(r1(r2([x, y, z]))))
}

/// Braid relation over all `n³` triples; each violation carries both images.
pub fn verify_solution(s: &SolutionMap) -> VerificationReport {
    let n = s.n();
    let mut report = VerificationReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (l, r) = braid_sides(s, x, y, z);
                if l != r {
                    report.push(Violation::new(Law::Braid, &[x, y, z], &l, &r));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn shift_example_values() {
        let x = fixtures::shift(4, 1).unwrap();
        let r = x.to_solution();
        assert_eq!(r.apply(0, 2), (1, 0));
        // r(x,y) = (y−k, x) everywhere
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(r.apply(a, b), ((b + 3) % 4, a));
            }
        }
    }

    #[test]
    fn trivial_gives_swap() {
        assert_eq!(QCycleSet::trivial(3).to_solution(), SolutionMap::swap(3));
    }

    #[test]
    fn constant_k_value() {
        let r = fixtures::constant_k(3, 0).unwrap().to_solution();
        assert_eq!(r.apply(1, 2), (2, 0));
    }

    #[test]
    fn swap_to_trivial() {
        assert_eq!(SolutionMap::swap(3).to_qcycle_set().unwrap(), QCycleSet::trivial(3));
    }

    #[test]
    fn shift_solution_to_qcs() {
        let s = SolutionMap::from_fn(4, |x, y| ((y + 3) % 4, x)).unwrap();
        assert_eq!(s.to_qcycle_set().unwrap(), fixtures::shift(4, 1).unwrap());
    }

    #[test]
    fn roundtrip_simple_four() {
        let x = fixtures::simple_four();
        assert_eq!(x.to_solution().to_qcycle_set().unwrap(), x);
    }

    #[test]
    fn not_left_nondegenerate() {
        let s = SolutionMap::from_fn(2, |_, _| (0, 0)).unwrap();
        assert_eq!(s.to_qcycle_set(), Err(Error::NotLeftNonDegenerate { x: 0 }));
    }

    #[test]
    fn left_nondegenerate_but_not_braided() {
        // λ_x = id, ρ arbitrary non-braided choice
        let s = SolutionMap::from_fn(2, |x, y| (y, if (x, y) == (0, 1) { 1 } else { 0 })).unwrap();
        if !s.verify().ok() {
            assert!(matches!(s.to_qcycle_set(), Err(Error::InvalidSolution(_))));
        }
    }

    #[test]
    fn swap_checks() {
        let s = SolutionMap::swap(3);
        assert!(s.verify().ok());
        assert!(s.is_bijective());
        assert!(s.is_left_nondegenerate());
        assert!(s.is_right_nondegenerate());
    }

    #[test]
    fn semilattice_solution_checks() {
        // r(x,y) = (y, xy) on ({0,1}, min)
        let s = SolutionMap::from_fn(2, |x, y| (y, x.min(y))).unwrap();
        assert!(s.verify().ok());
        assert!(s.is_left_nondegenerate());
        assert!(!s.is_right_nondegenerate());
        assert!(!s.is_bijective());
        assert!(s.power_eq(5, 3));
    }

    #[test]
    fn constant_solution_checks() {
        let s = SolutionMap::from_fn(3, |_, y| (y, 1)).unwrap();
        assert!(s.verify().ok());
        assert!(!s.is_bijective());
        assert!(s.power_eq(3, 2));
    }

    #[test]
    fn z3_fourth_power_is_identity() {
        let s = fixtures::z3_alpha().to_solution();
        assert!(s.power_eq(4, 0));
        assert!(!s.power_eq(2, 0));
    }

    #[test]
    fn braid_violation_has_witness() {
        // r(x,y) = (x, x) is not braided on two points
        let s = SolutionMap::from_fn(2, |x, y| (1 - y, x)).unwrap();
        let report = s.verify();
        for v in &report.violations {
            assert_eq!(v.law, Law::Braid);
            assert_eq!(v.witness.len(), 3);
            assert_ne!(v.lhs, v.rhs);
        }
        assert_eq!(report.ok(), s.is_braided());
    }
}
