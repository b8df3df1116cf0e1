use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::qcs::{verify_qcycle, QCycleSet};
use crate::report::{Law, VerificationReport, Violation};
use crate::solution::SolutionMap;
use crate::table::OpTable;

/// `Ret(X)`: classes of `x ∼ y ⇔ σ_x = σ_y ∧ δ_x = δ_y` and the induced
/// structure on them. Class indices follow least representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractQuotient {
    pub classes: Vec<Vec<usize>>,
    pub quotient: QCycleSet,
    pub class_of: Vec<usize>,
}

impl RetractQuotient {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_irretractable(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }
}

/// Groups points whose `·` rows and `:` rows coincide.
pub fn retract_classes(x: &QCycleSet) -> (Vec<Vec<usize>>, Vec<usize>) {
    partition_by(x.n(), |a, b| {
        x.dot_table().row(a) == x.dot_table().row(b)
            && x.colon_table().row(a) == x.colon_table().row(b)
    })
}

pub(crate) fn partition_by(
    n: usize,
    same: impl Fn(usize, usize) -> bool,
) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for p in 0..n {
        match classes.iter().position(|c| same(c[0], p)) {
            Some(i) => {
                classes[i].push(p);
                class_of[p] = i;
            }
            None => {
                class_of[p] = classes.len();
                classes.push(vec![p]);
            }
        }
    }
    (classes, class_of)
}

/// Builds `Ret(X)` for a regular `X`, re-checking that the quotient operations
/// are independent of representatives and that the quotient is a q-cycle set.
pub fn retract(x: &QCycleSet) -> Result<RetractQuotient> {
    if let Some(row) = x.first_irregular_row() {
        return Err(Error::NotRegular { x: row });
    }
    let (classes, class_of) = retract_classes(x);
    let k = classes.len();
    let dot = OpTable::from_fn(k, |a, b| class_of[x.dot(classes[a][0], classes[b][0])])?;
    let colon = OpTable::from_fn(k, |a, b| class_of[x.colon(classes[a][0], classes[b][0])])?;

    let mut report = VerificationReport::new();
    for p in 0..x.n() {
        for q in 0..x.n() {
            let (a, b) = (class_of[p], class_of[q]);
            let got = class_of[x.dot(p, q)];
            if got != dot.get(a, b) {
                report.push(Violation::new(Law::WellDefined, &[p, q], &[got], &[dot.get(a, b)]));
            }
            let got = class_of[x.colon(p, q)];
            if got != colon.get(a, b) {
                report.push(Violation::new(Law::WellDefined, &[p, q], &[got], &[colon.get(a, b)]));
            }
        }
    }
    report.extend(verify_qcycle(&dot, &colon)?);
    if !report.ok() {
        return Err(Error::QuotientNotQCycleSet(report));
    }
    Ok(RetractQuotient {
        classes,
        quotient: QCycleSet::assemble(dot, colon),
        class_of,
    })
}

/// Iterated retraction; `levels[0]` is the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractTower {
    pub levels: Vec<QCycleSet>,
    /// True once a retraction step preserved the size.
    pub stabilized: bool,
}

impl RetractTower {
    pub fn is_irretractable(&self) -> bool {
        self.stabilized && self.levels.len() == 1
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(QCycleSet::n).collect()
    }
}

pub fn retract_tower(x: &QCycleSet, max_steps: usize) -> Result<RetractTower> {
    let mut levels = vec![x.clone()];
    let mut stabilized = false;
    for _ in 0..max_steps {
        let last = levels.last().expect("non-empty");
        let q = retract(last)?;
        if q.quotient.n() == last.n() {
            stabilized = true;
            break;
        }
        levels.push(q.quotient);
    }
    Ok(RetractTower { levels, stabilized })
}

fn require_nondegenerate(s: &SolutionMap) -> Result<QCycleSet> {
    if !(s.is_bijective() && s.is_left_nondegenerate() && s.is_right_nondegenerate()) {
        return Err(Error::NotNonDegenerate);
    }
    s.to_qcycle_set()
}

/// The induced solution `r̄(x̄, ȳ) = (‾λ_x(y)‾, ‾λ_x(y):x‾)` on the retract
/// classes of a bijective non-degenerate solution.
pub fn retract_solution(s: &SolutionMap) -> Result<SolutionMap> {
    let q = require_nondegenerate(s)?;
    let ret = retract(&q)?;
    let (classes, class_of) = (&ret.classes, &ret.class_of);
    let k = classes.len();
    let image = |x: usize, y: usize| {
        let (a, b) = s.apply(x, y);
        (class_of[a], class_of[b])
    };
    for x in 0..s.n() {
        for y in 0..s.n() {
            let (rx, ry) = (classes[class_of[x]][0], classes[class_of[y]][0]);
            if image(x, y) != image(rx, ry) {
                return Err(Error::IllDefined { x: rx, y: ry, x2: x, y2: y });
            }
        }
    }
    SolutionMap::from_fn(k, |a, b| image(classes[a][0], classes[b][0]))
}

/// True iff the retract relation coincides with `λ_x = λ_y ∧ ρ_x = ρ_y`.
pub fn retract_matches_lambda_rho(s: &SolutionMap) -> Result<bool> {
    let q = require_nondegenerate(s)?;
    let (_, by_rows) = retract_classes(&q);
    let lambdas: Vec<Vec<usize>> = (0..s.n()).map(|x| s.lambda(x)).collect();
    let rhos: Vec<Vec<usize>> = (0..s.n()).map(|x| s.rho(x)).collect();
    let (_, by_maps) = partition_by(s.n(), |a, b| lambdas[a] == lambdas[b] && rhos[a] == rhos[b]);
    Ok(by_rows == by_maps)
}
