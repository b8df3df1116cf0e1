use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::is_bijection;
use crate::qcs::{verify_qcycle, QCycleSet};
use crate::report::{Law, VerificationReport, Violation};
use crate::table::OpTable;

/// Fiber data `α_{(x,y)}(s, t)` and `α′_{(x,y)}(s, t)` over a base q-cycle
/// set. Every `α_{(x,y)}(s, ·)` is a permutation of the fiber; `α′` rows are
/// arbitrary maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynamicalPair {
    base: QCycleSet,
    m: usize,
    alpha: Vec<usize>,
    alpha_prime: Vec<usize>,
}

type Nested = Vec<Vec<Vec<Vec<usize>>>>;

impl DynamicalPair {
    /// Flat tables indexed by `((x·n + y)·m + s)·m + t`.
    pub fn new(base: QCycleSet, m: usize, alpha: Vec<usize>, alpha_prime: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyCarrier);
        }
        let n = base.n();
        let len = n * n * m * m;
        for table in [&alpha, &alpha_prime] {
            if table.len() != len {
                return Err(Error::ShapeMismatch {
                    expected: len,
                    found: table.len(),
                });
            }
            if let Some(&value) = table.iter().find(|&&v| v >= m) {
                return Err(Error::OutOfRange { value, degree: m });
            }
        }
        for (i, row) in alpha.chunks(m).enumerate() {
            if !is_bijection(row) {
                let (xy, s) = (i / m, i % m);
                return Err(Error::AlphaNotPermutation {
                    x: xy / n,
                    y: xy % n,
                    s,
                });
            }
        }
        Ok(DynamicalPair {
            base,
            m,
            alpha,
            alpha_prime,
        })
    }

    pub fn from_fns(
        base: QCycleSet,
        m: usize,
        alpha: impl Fn(usize, usize, usize, usize) -> usize,
        alpha_prime: impl Fn(usize, usize, usize, usize) -> usize,
    ) -> Result<Self> {
        let n = base.n();
        let mut a = Vec::with_capacity(n * n * m * m);
        let mut ap = Vec::with_capacity(n * n * m * m);
        for x in 0..n {
            for y in 0..n {
                for s in 0..m {
                    for t in 0..m {
                        a.push(alpha(x, y, s, t));
                        ap.push(alpha_prime(x, y, s, t));
                    }
                }
            }
        }
        Self::new(base, m, a, ap)
    }

    /// From `alpha[x][y][s]` image sequences.
    pub fn from_nested(base: QCycleSet, m: usize, alpha: &Nested, alpha_prime: &Nested) -> Result<Self> {
        let n = base.n();
        let flatten = |t: &Nested| -> Result<Vec<usize>> {
            let mut out = Vec::with_capacity(n * n * m * m);
            check_len(t.len(), n)?;
            for xs in t {
                check_len(xs.len(), n)?;
                for ys in xs {
                    check_len(ys.len(), m)?;
                    for row in ys {
                        check_len(row.len(), m)?;
                        out.extend_from_slice(row);
                    }
                }
            }
            Ok(out)
        };
        Self::new(base, m, flatten(alpha)?, flatten(alpha_prime)?)
    }

    pub fn to_nested(&self) -> (Nested, Nested) {
        let (n, m) = (self.base.n(), self.m);
        let nest = |t: &[usize]| -> Nested {
            t.chunks(n * m * m)
                .map(|xs| {
                    xs.chunks(m * m)
                        .map(|ys| ys.chunks(m).map(<[usize]>::to_vec).collect())
                        .collect()
                })
                .collect()
        };
        (nest(&self.alpha), nest(&self.alpha_prime))
    }

    pub fn base(&self) -> &QCycleSet {
        &self.base
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    fn index(&self, x: usize, y: usize, s: usize, t: usize) -> usize {
        ((x * self.base.n() + y) * self.m + s) * self.m + t
    }

    #[inline]
    pub fn alpha(&self, x: usize, y: usize, s: usize, t: usize) -> usize {
        self.alpha[self.index(x, y, s, t)]
    }

    #[inline]
    pub fn alpha_prime(&self, x: usize, y: usize, s: usize, t: usize) -> usize {
        self.alpha_prime[self.index(x, y, s, t)]
    }

    /// True iff every `α′_{(x,y)}(s, ·)` is a permutation.
    pub fn alpha_prime_rows_bijective(&self) -> bool {
        self.alpha_prime.chunks(self.m).all(is_bijection)
    }

    pub fn verify(&self) -> VerificationReport {
        verify_dynamical_pair(self)
    }
}

fn check_len(found: usize, expected: usize) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::ShapeMismatch { expected, found })
    }
}

/// `α_{(x,y)}(s, t) = α′_{(x,y)}(s, t) = t`.
pub fn trivial_pair(base: QCycleSet, m: usize) -> Result<DynamicalPair> {
    DynamicalPair::from_fns(base, m, |_, _, _, t| t, |_, _, _, t| t)
}

/// Checks the three pair equations over all `(x, y, z, s, t, u)`.
pub fn verify_dynamical_pair(d: &DynamicalPair) -> VerificationReport {
    let (n, m) = (d.base.n(), d.m);
    let b = &d.base;
    let mut report = VerificationReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (xy, xz, yx_c, yz) = (b.dot(x, y), b.dot(x, z), b.colon(y, x), b.dot(y, z));
                let (xy_c, xz_c, yx, yz_c) = (b.colon(x, y), b.colon(x, z), b.dot(y, x), b.colon(y, z));
                for s in 0..m {
                    for t in 0..m {
                        for u in 0..m {
                            let w = [x, y, z, s, t, u];
                            let l1 = d.alpha(xy, xz, d.alpha(x, y, s, t), d.alpha(x, z, s, u));
                            let r1 = d.alpha(yx_c, yz, d.alpha_prime(y, x, t, s), d.alpha(y, z, t, u));
                            if l1 != r1 {
                                report.push(Violation::new(Law::Ugd1, &w, &[l1], &[r1]));
                            }
                            let l2 = d.alpha_prime(
                                xy_c,
                                xz_c,
                                d.alpha_prime(x, y, s, t),
                                d.alpha_prime(x, z, s, u),
                            );
                            let r2 = d.alpha_prime(yx, yz_c, d.alpha(y, x, t, s), d.alpha_prime(y, z, t, u));
                            if l2 != r2 {
                                report.push(Violation::new(Law::Ugd2, &w, &[l2], &[r2]));
                            }
                            let l3 = d.alpha_prime(xy, xz, d.alpha(x, y, s, t), d.alpha(x, z, s, u));
                            let r3 = d.alpha(
                                yx_c,
                                b.colon(y, z),
                                d.alpha_prime(y, x, t, s),
                                d.alpha_prime(y, z, t, u),
                            );
                            if l3 != r3 {
                                report.push(Violation::new(Law::Ugd3, &w, &[l3], &[r3]));
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Product tables on `X × S`, pair `(x, s)` stored at `x·m + s`. No check.
pub fn extension_tables(d: &DynamicalPair) -> (OpTable, OpTable) {
    let (n, m) = (d.base.n(), d.m);
    let nm = n * m;
    let split = |p: usize| (p / m, p % m);
    let dot = OpTable::from_fn(nm, |p, q| {
        let ((x, s), (y, t)) = (split(p), split(q));
        d.base.dot(x, y) * m + d.alpha(x, y, s, t)
    })
    .expect("in range");
    let colon = OpTable::from_fn(nm, |p, q| {
        let ((x, s), (y, t)) = (split(p), split(q));
        d.base.colon(x, y) * m + d.alpha_prime(x, y, s, t)
    })
    .expect("in range");
    (dot, colon)
}

/// `X ×_{α,α′} S`. Fails with the pair report if the equations do not hold.
pub fn build_extension(d: &DynamicalPair) -> Result<QCycleSet> {
    let report = verify_dynamical_pair(d);
    if !report.ok() {
        return Err(Error::InvalidPair(report));
    }
    let (dot, colon) = extension_tables(d);
    Ok(QCycleSet::assemble(dot, colon))
}

/// True iff the pair equations hold exactly when the product tables satisfy
/// the q-cycle set axioms. Both sides are computed independently.
pub fn extension_equivalence(d: &DynamicalPair) -> bool {
    let pair_ok = verify_dynamical_pair(d).ok();
    let (dot, colon) = extension_tables(d);
    let product_ok = verify_qcycle(&dot, &colon).map(|r| r.ok()).unwrap_or(false);
    pair_ok == product_ok
}
