//! Permutations of `{0, …, n−1}`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, …, n−1}` stored by its image sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if !is_bijection(&images) {
            return Err(Error::NotAPermutation);
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles, e.g.
    /// `[[0, 1, 3]]` for `0 ↦ 1 ↦ 3 ↦ 0`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= n {
                    return Err(Error::OutOfRange { value: a, degree: n });
                }
                if seen[a] {
                    return Err(Error::NotAPermutation);
                }
                seen[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    /// Transposition `(a b)` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(n, &[&[a, b]])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycle lengths in non-increasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// True if `images` is a bijection of `{0, …, images.len()−1}`.
pub fn is_bijection(images: &[usize]) -> bool {
    let n = images.len();
    let mut seen = vec![false; n];
    for &j in images {
        if j >= n || seen[j] {
            return false;
        }
        seen[j] = true;
    }
    true
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// All permutations of degree `n` in lexicographic order of image sequences.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm {
            images: current.clone(),
        });
        if !next_permutation(&mut current) {
            return out;
        }
    }
}

/// Advances `v` to its lexicographic successor; false once `v` was the last one.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_with_identity() {
        let p = Perm::from_cycles(4, &[&[0, 1, 3]]).unwrap();
        assert_eq!(Perm::identity(4).compose(&p).unwrap(), p);
        assert_eq!(p.compose(&Perm::identity(4)).unwrap(), p);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let p = Perm::transposition(3, 0, 1).unwrap();
        let q = Perm::transposition(3, 1, 2).unwrap();
        // (p∘q)(1) = p(2) = 2
        assert_eq!(p.compose(&q).unwrap().apply(1), 2);
        assert_eq!(q.compose(&p).unwrap().apply(1), 0);
    }

    #[test]
    fn involution_is_its_own_inverse() {
        let p = Perm::transposition(3, 0, 1).unwrap();
        assert_eq!(p.inverse(), p);
    }

    #[test]
    fn three_cycle_order() {
        let p = Perm::from_cycles(4, &[&[0, 1, 3]]).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(p.cycle_type(), vec![3, 1]);
        assert_eq!(alloc::format!("{p}"), "(0 1 3)");
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let p = Perm::identity(2);
        let q = Perm::identity(3);
        assert_eq!(
            p.compose(&q),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(Perm::from_images(vec![0, 0]), Err(Error::NotAPermutation));
        assert_eq!(Perm::from_images(vec![0, 2]), Err(Error::NotAPermutation));
        assert!(Perm::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn all_perms_counts() {
        assert_eq!(all_perms(1).len(), 1);
        assert_eq!(all_perms(3).len(), 6);
        assert_eq!(all_perms(4).len(), 24);
        let ps = all_perms(3);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
    }
}
