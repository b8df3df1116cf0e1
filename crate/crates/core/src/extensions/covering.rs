use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::extensions::congruence::CongruencePartition;
use crate::extensions::dynamical::DynamicalPair;
use crate::perm::Perm;
use crate::qcs::QCycleSet;
use crate::report::{Law, VerificationReport, Violation};

/// A point map `p: Y → X` between q-cycle sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringMap {
    pub source: QCycleSet,
    pub target: QCycleSet,
    pub p: Vec<usize>,
}

impl CoveringMap {
    pub fn new(source: QCycleSet, target: QCycleSet, p: Vec<usize>) -> Result<Self> {
        if p.len() != source.n() {
            return Err(Error::ShapeMismatch {
                expected: source.n(),
                found: p.len(),
            });
        }
        if let Some(&value) = p.iter().find(|&&v| v >= target.n()) {
            return Err(Error::OutOfRange {
                value,
                degree: target.n(),
            });
        }
        Ok(CoveringMap { source, target, p })
    }

    /// The canonical projection onto the quotient by a congruence.
    pub fn from_congruence(source: &QCycleSet, c: &CongruencePartition) -> Option<Self> {
        let target = c.quotient(source)?;
        Some(CoveringMap {
            source: source.clone(),
            target,
            p: c.block_of().to_vec(),
        })
    }

    /// Points of each fiber in increasing order.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.target.n()];
        for (y, &x) in self.p.iter().enumerate() {
            out[x].push(y);
        }
        out
    }
}

/// Homomorphism for both operations, surjectivity, equal fiber sizes.
pub fn verify_covering(c: &CoveringMap) -> VerificationReport {
    let (y, x, p) = (&c.source, &c.target, &c.p);
    let mut report = VerificationReport::new();
    for a in 0..y.n() {
        for b in 0..y.n() {
            let (l, r) = (p[y.dot(a, b)], x.dot(p[a], p[b]));
            if l != r {
                report.push(Violation::new(Law::Homomorphism, &[a, b], &[l], &[r]));
            }
            let (l, r) = (p[y.colon(a, b)], x.colon(p[a], p[b]));
            if l != r {
                report.push(Violation::new(Law::Homomorphism, &[a, b], &[l], &[r]));
            }
        }
    }
    let fibers = c.fibers();
    for (t, f) in fibers.iter().enumerate() {
        if f.is_empty() {
            report.push(Violation::new(Law::Surjectivity, &[t], &[], &[]));
        }
    }
    let size = fibers[0].len();
    for (t, f) in fibers.iter().enumerate() {
        if f.len() != size {
            report.push(Violation::new(Law::UniformFibers, &[t], &[f.len()], &[size]));
        }
    }
    report
}

pub fn kernel_partition(c: &CoveringMap) -> CongruencePartition {
    CongruencePartition::from_labels(&c.p)
}

/// Data recovered from a covering `p: Y → X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub m: usize,
    pub pair: DynamicalPair,
    /// `φ(y) = (p(y), f_{p(y)}(y))` flattened to `p(y)·m + f_{p(y)}(y)`.
    pub phi: Perm,
}

/// Rebuilds the source as an extension of the target, with `f_x` numbering
/// each fiber in increasing order.
pub fn factor_covering(c: &CoveringMap) -> Result<Factorization> {
    let report = verify_covering(c);
    if !report.ok() {
        return Err(Error::InvalidCovering(report));
    }
    let (y, x) = (&c.source, &c.target);
    let fibers = c.fibers();
    let m = fibers[0].len();
    let mut f = vec![0; y.n()];
    for fiber in &fibers {
        for (i, &pt) in fiber.iter().enumerate() {
            f[pt] = i;
        }
    }
    let pair = DynamicalPair::from_fns(
        x.clone(),
        m,
        |a, b, s, t| f[y.dot(fibers[a][s], fibers[b][t])],
        |a, b, s, t| f[y.colon(fibers[a][s], fibers[b][t])],
    )?;
    let phi = Perm::from_images((0..y.n()).map(|pt| c.p[pt] * m + f[pt]).collect())?;
    Ok(Factorization { m, pair, phi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::dynamical::build_extension;
    use crate::fixtures;

    #[test]
    fn identity_covering() {
        let x = fixtures::simple_four();
        let c = CoveringMap::new(x.clone(), x.clone(), (0..4).collect()).unwrap();
        assert!(verify_covering(&c).ok());
        assert!(kernel_partition(&c).is_discrete());
        let fac = factor_covering(&c).unwrap();
        assert_eq!(fac.m, 1);
        assert!(fac.phi.is_identity());
        assert!(fac.pair.verify().ok());
    }

    #[test]
    fn parity_covering() {
        let c = CoveringMap::new(QCycleSet::trivial(4), QCycleSet::trivial(2), vec![0, 1, 0, 1]).unwrap();
        assert!(verify_covering(&c).ok());
        assert_eq!(kernel_partition(&c).blocks(), &[vec![0, 2], vec![1, 3]]);
        let fac = factor_covering(&c).unwrap();
        assert_eq!(fac.m, 2);
        let e = build_extension(&fac.pair).unwrap();
        assert_eq!(c.source.relabel(&fac.phi), e);
    }

    #[test]
    fn retraction_map_is_not_a_covering() {
        let c = CoveringMap::new(fixtures::z3_alpha(), QCycleSet::trivial(2), vec![0, 0, 1]).unwrap();
        let report = verify_covering(&c);
        assert_eq!(report.of_law(Law::Homomorphism).count(), 0);
        assert_eq!(report.of_law(Law::UniformFibers).count(), 1);
        assert!(matches!(factor_covering(&c), Err(Error::InvalidCovering(_))));
    }

    #[test]
    fn non_homomorphism_reported() {
        let c = CoveringMap::new(fixtures::z3_alpha(), QCycleSet::trivial(3), vec![0, 1, 2]).unwrap();
        assert!(verify_covering(&c).of_law(Law::Homomorphism).count() > 0);
    }
}
