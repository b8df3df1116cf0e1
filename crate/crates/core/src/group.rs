//! Permutation groups given by labeled generators, with full element closure.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the number of group elements a closure may produce.
pub const DEFAULT_ELEMENT_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenLabel {
    Sigma(usize),
    Delta(usize),
    Lambda(usize),
    Eta(usize),
    Automorphism(usize),
}

impl fmt::Display for GenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenLabel::Sigma(x) => write!(f, "sigma_{x}"),
            GenLabel::Delta(x) => write!(f, "delta_{x}"),
            GenLabel::Lambda(x) => write!(f, "lambda_{x}"),
            GenLabel::Eta(x) => write!(f, "eta_{x}"),
            GenLabel::Automorphism(i) => write!(f, "aut_{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenPermGroup {
    degree: usize,
    generators: Vec<(GenLabel, Perm)>,
    elements: Vec<Perm>,
    orbits: Vec<Vec<usize>>,
}

impl GenPermGroup {
    /// Closes `generators` under composition by breadth-first multiplication.
    pub fn from_generators(
        degree: usize,
        generators: Vec<(GenLabel, Perm)>,
        budget: usize,
    ) -> Result<Self> {
        for (_, g) in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Perm::identity(degree);
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut frontier = alloc::vec![identity];
        while let Some(e) = frontier.pop() {
            for (_, g) in &generators {
                let p = g.compose(&e).expect("degrees checked");
                if !seen.contains(&p) {
                    if seen.len() >= budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                    seen.insert(p.clone());
                    frontier.push(p);
                }
            }
        }
        let orbits = orbits_of(degree, generators.iter().map(|(_, g)| g));
        Ok(GenPermGroup {
            degree,
            generators,
            elements: seen.into_iter().collect(),
            orbits,
        })
    }

    /// A group whose element list is already known to be closed.
    pub(crate) fn from_closed(
        degree: usize,
        generators: Vec<(GenLabel, Perm)>,
        mut elements: Vec<Perm>,
    ) -> Self {
        elements.sort();
        let orbits = orbits_of(degree, generators.iter().map(|(_, g)| g));
        GenPermGroup {
            degree,
            generators,
            elements,
            orbits,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[(GenLabel, Perm)] {
        &self.generators
    }

    /// Elements in increasing order of image sequence.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    /// Orbits, each sorted, listed by least point.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn same_elements(&self, other: &GenPermGroup) -> bool {
        self.elements == other.elements
    }
}

/// Connected components of the action of `gens` on `{0, …, n−1}`.
pub fn orbits_of<'a>(n: usize, gens: impl Iterator<Item = &'a Perm>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for g in gens {
        for i in 0..n {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut index = alloc::vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if index[r] == usize::MAX {
            index[r] = out.len();
            out.push(Vec::new());
        }
        out[index[r]].push(i);
    }
    out
}
