//! Binary operation tables on `{0, …, n−1}`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{is_bijection, Perm};

/// `entries[x * n + y]` is the result of the operation with left argument `x`
/// and right argument `y`. No bijectivity is assumed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpTable {
    n: usize,
    entries: Vec<usize>,
}

impl OpTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_flat(n, entries)
    }

    pub fn from_flat(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if entries.len() != n * n {
            return Err(Error::ShapeMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        if let Some(&value) = entries.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange { value, degree: n });
        }
        Ok(OpTable { n, entries })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                entries.push(f(x, y));
            }
        }
        Self::from_flat(n, entries)
    }

    /// Right projection `x ∘ y = y`.
    pub fn right_projection(n: usize) -> Self {
        Self::from_fn(n, |_, y| y).expect("n > 0")
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.entries[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.entries.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn row_is_bijective(&self, x: usize) -> bool {
        is_bijection(self.row(x))
    }

    pub fn row_perm(&self, x: usize) -> Option<Perm> {
        Perm::from_images(self.row(x).to_vec()).ok()
    }

    pub fn diagonal(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.get(x, x)).collect()
    }

    /// The table transported along `pi`: `new[π(x)][π(y)] = π(old[x][y])`.
    pub fn relabel(&self, pi: &Perm) -> OpTable {
        let n = self.n;
        let mut entries = alloc::vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[pi.apply(x) * n + pi.apply(y)] = pi.apply(self.get(x, y));
            }
        }
        OpTable { n, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn shape_and_range_checks() {
        assert_eq!(OpTable::from_rows(&[]), Err(Error::EmptyCarrier));
        assert!(matches!(
            OpTable::from_rows(&[vec![0, 1], vec![0]]),
            Err(Error::ShapeMismatch { .. })
        ));
        assert_eq!(
            OpTable::from_rows(&[vec![0, 2], vec![0, 1]]),
            Err(Error::OutOfRange { value: 2, degree: 2 })
        );
    }

    #[test]
    fn relabel_by_identity_is_noop() {
        let t = OpTable::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(t.relabel(&Perm::identity(2)), t);
        let swapped = t.relabel(&Perm::transposition(2, 0, 1).unwrap());
        assert_eq!(swapped.to_rows(), vec![vec![1, 1], vec![1, 0]]);
    }
}
