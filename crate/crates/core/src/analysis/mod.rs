//! The permutation group `𝒢(X) = ⟨σ_x, δ_x⟩` of a regular q-cycle set, its
//! orbits and invariant subsets, and retraction.

mod retract;

pub use retract::{
    retract, retract_classes, retract_matches_lambda_rho, retract_solution, retract_tower,
    RetractQuotient, RetractTower,
};

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{GenLabel, GenPermGroup, DEFAULT_ELEMENT_BUDGET};
use crate::perm::{is_bijection, Perm};
use crate::qcs::QCycleSet;
use crate::solution::SolutionMap;
use crate::table::OpTable;

/// The generators `σ_x` and `δ_x` of `𝒢(X)`.
pub fn group_generators(x: &QCycleSet) -> Result<Vec<(GenLabel, Perm)>> {
    let mut gens = Vec::with_capacity(2 * x.n());
    for p in 0..x.n() {
        gens.push((GenLabel::Sigma(p), x.sigma(p)));
    }
    for p in 0..x.n() {
        gens.push((GenLabel::Delta(p), x.delta(p).ok_or(Error::NotRegular { x: p })?));
    }
    Ok(gens)
}

pub fn perm_group(x: &QCycleSet) -> Result<GenPermGroup> {
    perm_group_with_budget(x, DEFAULT_ELEMENT_BUDGET)
}

pub fn perm_group_with_budget(x: &QCycleSet, budget: usize) -> Result<GenPermGroup> {
    GenPermGroup::from_generators(x.n(), group_generators(x)?, budget)
}

/// `η_x(y) = ρ_{λ_y⁻¹(x)}(y)` for every `x`, as image sequences.
pub fn eta_maps(s: &SolutionMap) -> Result<Vec<Vec<usize>>> {
    let n = s.n();
    let mut lambda_inv = vec![0; n * n];
    for y in 0..n {
        let row = s.lambda(y);
        if !is_bijection(&row) {
            return Err(Error::NotLeftNonDegenerate { x: y });
        }
        for (z, &v) in row.iter().enumerate() {
            lambda_inv[y * n + v] = z;
        }
    }
    Ok((0..n)
        .map(|x| (0..n).map(|y| s.apply(y, lambda_inv[y * n + x]).1).collect())
        .collect())
}

/// `⟨λ_x, η_x⟩`, defined when every `η_x` is a permutation.
pub fn lambda_eta_group(s: &SolutionMap, budget: usize) -> Result<GenPermGroup> {
    let etas = eta_maps(s)?;
    let mut gens = Vec::with_capacity(2 * s.n());
    for x in 0..s.n() {
        let l = Perm::from_images(s.lambda(x)).map_err(|_| Error::NotLeftNonDegenerate { x })?;
        gens.push((GenLabel::Lambda(x), l));
    }
    for (x, eta) in etas.into_iter().enumerate() {
        let e = Perm::from_images(eta).map_err(|_| Error::NotRegular { x })?;
        gens.push((GenLabel::Eta(x), e));
    }
    GenPermGroup::from_generators(s.n(), gens, budget)
}

/// The substructure induced on a `𝒢(X)`-invariant subset, relabeled in
/// increasing order of the original points.
pub fn restrict_to_invariant(x: &QCycleSet, subset: &[usize]) -> Result<QCycleSet> {
    let n = x.n();
    if subset.is_empty() {
        return Err(Error::InvalidSubset("empty"));
    }
    let mut members = vec![false; n];
    for &p in subset {
        if p >= n {
            return Err(Error::OutOfRange { value: p, degree: n });
        }
        if members[p] {
            return Err(Error::InvalidSubset("repeated point"));
        }
        members[p] = true;
    }
    for (label, g) in group_generators(x)? {
        for &p in subset {
            let image = g.apply(p);
            if !members[image] {
                return Err(Error::NotInvariant {
                    generator: label,
                    point: p,
                    image,
                });
            }
        }
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    let mut index = vec![usize::MAX; n];
    for (i, &p) in sorted.iter().enumerate() {
        index[p] = i;
    }
    let m = sorted.len();
    let dot = OpTable::from_fn(m, |a, b| index[x.dot(sorted[a], sorted[b])])?;
    let colon = OpTable::from_fn(m, |a, b| index[x.colon(sorted[a], sorted[b])])?;
    QCycleSet::new(dot, colon)
}
