use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{GenLabel, GenPermGroup};
use crate::iso::automorphisms;
use crate::qcs::{verify_qcycle, QCycleSet};
use crate::table::OpTable;

/// Default cap on the number of distinct congruences explored.
pub const DEFAULT_CONGRUENCE_BUDGET: usize = 100_000;

/// A partition of the carrier; blocks are sorted and indexed by least member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CongruencePartition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl CongruencePartition {
    /// Normalizes arbitrary labels so that blocks are numbered by least member.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap: Vec<Option<usize>> = vec![None; labels.iter().max().map_or(0, |&m| m + 1)];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = Vec::with_capacity(labels.len());
        for (p, &l) in labels.iter().enumerate() {
            let b = *remap[l].get_or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(p);
            block_of.push(b);
        }
        CongruencePartition { block_of, blocks }
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn total(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.block_of.len()
    }

    pub fn is_total(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn is_uniform(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == self.blocks[0].len())
    }

    /// `u∼v ∧ w∼z ⇒ u·w ∼ v·z ∧ u:w ∼ v:z`.
    pub fn is_compatible(&self, x: &QCycleSet) -> bool {
        let n = x.n();
        let c = &self.block_of;
        (0..n).all(|u| {
            (0..n).all(|v| {
                c[u] != c[v]
                    || (0..n).all(|w| {
                        c[x.dot(u, w)] == c[x.dot(v, w)]
                            && c[x.dot(w, u)] == c[x.dot(w, v)]
                            && c[x.colon(u, w)] == c[x.colon(v, w)]
                            && c[x.colon(w, u)] == c[x.colon(w, v)]
                    })
            })
        })
    }

    /// Quotient tables on blocks; `None` unless the partition is compatible.
    pub fn quotient_tables(&self, x: &QCycleSet) -> Option<(OpTable, OpTable)> {
        if !self.is_compatible(x) {
            return None;
        }
        let (b, c) = (&self.blocks, &self.block_of);
        let k = b.len();
        let dot = OpTable::from_fn(k, |i, j| c[x.dot(b[i][0], b[j][0])]).ok()?;
        let colon = OpTable::from_fn(k, |i, j| c[x.colon(b[i][0], b[j][0])]).ok()?;
        Some((dot, colon))
    }

    /// The quotient q-cycle set, when the partition is compatible and the
    /// quotient `·` rows are bijective.
    pub fn quotient(&self, x: &QCycleSet) -> Option<QCycleSet> {
        let (dot, colon) = self.quotient_tables(x)?;
        QCycleSet::new(dot, colon).ok()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.0[a.max(b)] = a.min(b);
        true
    }

    fn labels(&mut self) -> Vec<usize> {
        (0..self.0.len()).map(|i| self.find(i)).collect()
    }
}

/// Smallest congruence containing the given pairs: the equivalence closure
/// under left and right translations by both operations.
pub fn generated_congruence(x: &QCycleSet, pairs: &[(usize, usize)]) -> CongruencePartition {
    let n = x.n();
    let mut uf = UnionFind((0..n).collect());
    let mut pending: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = pending.pop() {
        if !uf.union(a, b) {
            continue;
        }
        for w in 0..n {
            pending.push((x.dot(a, w), x.dot(b, w)));
            pending.push((x.dot(w, a), x.dot(w, b)));
            pending.push((x.colon(a, w), x.colon(b, w)));
            pending.push((x.colon(w, a), x.colon(w, b)));
        }
    }
    CongruencePartition::from_labels(&uf.labels())
}

fn join(x: &QCycleSet, a: &CongruencePartition, b: &CongruencePartition) -> CongruencePartition {
    let pairs: Vec<(usize, usize)> = a
        .blocks
        .iter()
        .chain(&b.blocks)
        .flat_map(|blk| blk.windows(2).map(|w| (w[0], w[1])))
        .collect();
    generated_congruence(x, &pairs)
}

/// All congruences whose quotient is a q-cycle set, sorted by block labels.
pub fn enumerate_congruences(x: &QCycleSet) -> Result<Vec<CongruencePartition>> {
    enumerate_congruences_with_budget(x, DEFAULT_CONGRUENCE_BUDGET)
}

pub fn enumerate_congruences_with_budget(
    x: &QCycleSet,
    budget: usize,
) -> Result<Vec<CongruencePartition>> {
    let n = x.n();
    let mut principal: BTreeSet<CongruencePartition> = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            principal.insert(generated_congruence(x, &[(a, b)]));
        }
    }
    let principal: Vec<CongruencePartition> = principal.into_iter().collect();
    let mut all: BTreeSet<CongruencePartition> = BTreeSet::new();
    all.insert(CongruencePartition::discrete(n));
    let mut frontier: Vec<CongruencePartition> = Vec::new();
    for p in &principal {
        if all.insert(p.clone()) {
            frontier.push(p.clone());
        }
    }
    // every congruence is a join of principal ones
    while let Some(c) = frontier.pop() {
        for p in &principal {
            let j = join(x, &c, p);
            if !all.contains(&j) {
                if all.len() >= budget {
                    return Err(Error::CongruenceBudgetExceeded { budget });
                }
                all.insert(j.clone());
                frontier.push(j);
            }
        }
    }
    Ok(all
        .into_iter()
        .filter(|c| {
            c.quotient_tables(x)
                .and_then(|(d, k)| verify_qcycle(&d, &k).ok())
                .is_some_and(|r| r.ok())
        })
        .collect())
}

/// True iff the only congruences with equal-size blocks are the discrete and
/// the total one.
pub fn is_simple(x: &QCycleSet) -> Result<bool> {
    Ok(enumerate_congruences(x)?
        .iter()
        .all(|c| !c.is_uniform() || c.is_discrete() || c.is_total()))
}

pub fn automorphism_group(x: &QCycleSet, budget: usize) -> Result<GenPermGroup> {
    let elements = automorphisms(x, budget)?;
    let generators = elements
        .iter()
        .filter(|p| !p.is_identity())
        .enumerate()
        .map(|(i, p)| (GenLabel::Automorphism(i), p.clone()))
        .collect();
    Ok(GenPermGroup::from_closed(x.n(), generators, elements))
}
