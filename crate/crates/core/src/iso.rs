//! Isomorphism testing, canonical forms and automorphisms.
//!
//! Points are first split into iso-invariant color classes (cycle types of
//! `σ_x`, the shape of `δ_x`, fixed points of the squaring maps, refined by
//! the colors of neighbours until stable). The canonical form is the
//! lexicographically least relabeling among those that give the classes
//! consecutive label ranges in color order. The key compares cells shell by
//! shell (all cells with `max(i, j) = k` before shell `k + 1`), `·` before `:`
//! within a cell.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::qcs::QCycleSet;

const SEP: usize = usize::MAX;
const UNSET: usize = usize::MAX;

fn map_shape(row: &[usize]) -> Vec<usize> {
    let n = row.len();
    let mut counts = vec![0usize; n];
    for &v in row {
        counts[v] += 1;
    }
    if counts.iter().all(|&c| c == 1) {
        let mut out = vec![1];
        out.extend(Perm::from_images(row.to_vec()).expect("bijective").cycle_type());
        out
    } else {
        let mut out = vec![0];
        counts.sort_unstable();
        out.extend(counts);
        out
    }
}

fn recolor(sigs: &[Vec<usize>]) -> Vec<usize> {
    let mut distinct: Vec<&Vec<usize>> = sigs.iter().collect();
    distinct.sort();
    distinct.dedup();
    sigs.iter()
        .map(|s| distinct.binary_search(&s).expect("present"))
        .collect()
}

fn class_count(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

/// Stable iso-invariant coloring of the points, colors numbered `0..k`.
pub fn point_colors(x: &QCycleSet) -> Vec<usize> {
    let n = x.n();
    let sigs: Vec<Vec<usize>> = (0..n)
        .map(|p| {
            let mut s = map_shape(x.dot_table().row(p));
            s.push(SEP);
            s.extend(map_shape(x.colon_table().row(p)));
            s.push(SEP);
            s.push(usize::from(x.dot(p, p) == p));
            s.push(usize::from(x.colon(p, p) == p));
            s
        })
        .collect();
    let mut colors = recolor(&sigs);
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|p| {
                let c = &colors;
                let mut nb: Vec<[usize; 5]> = (0..n)
                    .map(|y| {
                        [
                            c[y],
                            c[x.dot(p, y)],
                            c[x.colon(p, y)],
                            c[x.dot(y, p)],
                            c[x.colon(y, p)],
                        ]
                    })
                    .collect();
                nb.sort_unstable();
                let mut s = vec![c[p], c[x.dot(p, p)], c[x.colon(p, p)]];
                s.extend(nb.into_iter().flatten());
                s
            })
            .collect();
        let next = recolor(&sigs);
        if class_count(&next) == class_count(&colors) {
            return colors;
        }
        colors = next;
    }
}

struct Canon<'a> {
    x: &'a QCycleSet,
    n: usize,
    colors: Vec<usize>,
    class_lo: Vec<usize>,
    class_hi: Vec<usize>,
    slot_color: Vec<usize>,
    label_of: Vec<usize>,
    point_at: Vec<usize>,
    best: Option<Vec<usize>>,
    best_point_at: Vec<usize>,
    auts: Vec<Vec<usize>>,
}

// Cell coordinates (row label, column label) of shell-order cell `ci`.
fn cell(ci: usize) -> (usize, usize) {
    let k = isqrt(ci);
    let off = ci - k * k;
    if off == 2 * k {
        (k, k)
    } else if off.is_multiple_of(2) {
        (k, off / 2)
    } else {
        (off / 2, k)
    }
}

fn isqrt(v: usize) -> usize {
    let mut k = 0;
    while (k + 1) * (k + 1) <= v {
        k += 1;
    }
    k
}

enum Cmp {
    Prune,
    Less,
    Tie,
}

impl<'a> Canon<'a> {
    fn new(x: &'a QCycleSet) -> Self {
        let n = x.n();
        let colors = point_colors(x);
        let k = class_count(&colors);
        let mut sizes = vec![0; k];
        for &c in &colors {
            sizes[c] += 1;
        }
        let mut class_lo = vec![0; k];
        let mut class_hi = vec![0; k];
        let mut slot_color = Vec::with_capacity(n);
        let mut next = 0;
        for c in 0..k {
            class_lo[c] = next;
            class_hi[c] = next + sizes[c] - 1;
            next += sizes[c];
            slot_color.extend(core::iter::repeat_n(c, sizes[c]));
        }
        Canon {
            x,
            n,
            colors,
            class_lo,
            class_hi,
            slot_color,
            label_of: vec![UNSET; n],
            point_at: Vec::with_capacity(n),
            best: None,
            best_point_at: Vec::new(),
            auts: Vec::new(),
        }
    }

    fn value(&self, pos: usize) -> usize {
        let (i, j) = cell(pos / 2);
        let (a, b) = (self.point_at[i], self.point_at[j]);
        if pos.is_multiple_of(2) {
            self.x.dot(a, b)
        } else {
            self.x.colon(a, b)
        }
    }

    // Compares the determined prefix of the current partial labeling with the
    // best key found so far.
    fn compare(&self) -> Cmp {
        let Some(best) = &self.best else {
            return Cmp::Less;
        };
        let k = self.point_at.len();
        for pos in 0..2 * k * k {
            let v = self.value(pos);
            let b = best[pos];
            let l = self.label_of[v];
            if l != UNSET {
                if l < b {
                    return Cmp::Less;
                }
                if l > b {
                    return Cmp::Prune;
                }
            } else {
                let c = self.colors[v];
                let lo = self.class_lo[c].max(k);
                let hi = self.class_hi[c];
                if b < lo {
                    return Cmp::Prune;
                }
                if b > hi {
                    return Cmp::Less;
                }
                return Cmp::Tie;
            }
        }
        Cmp::Tie
    }

    fn stabilizer_orbit_rep(&self, fixed: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for g in &self.auts {
            if fixed.iter().all(|&f| g[f] == f) {
                for i in 0..self.n {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, g[i]));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..self.n).map(|i| find(&mut parent, i)).collect()
    }

    fn search(&mut self) {
        let k = self.point_at.len();
        if k == self.n {
            let key: Vec<usize> = (0..2 * self.n * self.n)
                .map(|pos| self.label_of[self.value(pos)])
                .collect();
            match &self.best {
                Some(best) if *best == key => {
                    // π_best⁻¹ ∘ π_current
                    let g: Vec<usize> = (0..self.n)
                        .map(|p| self.best_point_at[self.label_of[p]])
                        .collect();
                    if g.iter().enumerate().any(|(i, &j)| i != j) {
                        self.auts.push(g);
                    }
                }
                Some(best) if *best < key => {}
                _ => {
                    self.best = Some(key);
                    self.best_point_at = self.point_at.clone();
                }
            }
            return;
        }
        let color = self.slot_color[k];
        let mut tried: Vec<usize> = Vec::new();
        for p in 0..self.n {
            if self.colors[p] != color || self.label_of[p] != UNSET {
                continue;
            }
            if !tried.is_empty() {
                let rep = self.stabilizer_orbit_rep(&self.point_at);
                if tried.iter().any(|&t| rep[t] == rep[p]) {
                    continue;
                }
            }
            tried.push(p);
            self.label_of[p] = k;
            self.point_at.push(p);
            if !matches!(self.compare(), Cmp::Prune) {
                self.search();
            }
            self.point_at.pop();
            self.label_of[p] = UNSET;
        }
    }
}

/// Canonical form together with the relabeling `π` (original point ↦
/// canonical label) that produces it.
pub fn canonical_labeling(x: &QCycleSet) -> (QCycleSet, Perm) {
    let mut canon = Canon::new(x);
    canon.search();
    let n = x.n();
    let mut label = vec![0; n];
    for (l, &p) in canon.best_point_at.iter().enumerate() {
        label[p] = l;
    }
    let pi = Perm::from_images(label).expect("labeling is a bijection");
    (x.relabel(&pi), pi)
}

pub fn canonical_form(x: &QCycleSet) -> QCycleSet {
    canonical_labeling(x).0
}

/// An isomorphism `π: X → Y` with `π(x·y) = π(x)·π(y)` and
/// `π(x:y) = π(x):π(y)`, if one exists.
pub fn are_isomorphic(x: &QCycleSet, y: &QCycleSet) -> Option<Perm> {
    if x.n() != y.n() {
        return None;
    }
    let (cx, px) = canonical_labeling(x);
    let (cy, py) = canonical_labeling(y);
    if cx != cy {
        return None;
    }
    Some(py.inverse().compose(&px).expect("same degree"))
}

pub fn is_automorphism(x: &QCycleSet, p: &Perm) -> bool {
    p.degree() == x.n() && x.is_homomorphism_to(x, p.images())
}

/// Every automorphism of `x`, by color-respecting backtracking. Fails once
/// more than `budget` automorphisms have been found.
pub fn automorphisms(x: &QCycleSet, budget: usize) -> Result<Vec<Perm>> {
    let n = x.n();
    let colors = point_colors(x);
    let mut img = vec![UNSET; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();

    fn consistent(x: &QCycleSet, img: &[usize], k: usize) -> bool {
        // only pairs involving the newest point k need checking
        for a in 0..=k {
            for (u, v) in [(a, k), (k, a)] {
                let d = x.dot(u, v);
                if d <= k && img[d] != x.dot(img[u], img[v]) {
                    return false;
                }
                let c = x.colon(u, v);
                if c <= k && img[c] != x.colon(img[u], img[v]) {
                    return false;
                }
            }
        }
        // products of earlier pairs that land on k
        for u in 0..k {
            for v in 0..k {
                if x.dot(u, v) == k && img[k] != x.dot(img[u], img[v]) {
                    return false;
                }
                if x.colon(u, v) == k && img[k] != x.colon(img[u], img[v]) {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        x: &QCycleSet,
        colors: &[usize],
        k: usize,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Perm>,
        budget: usize,
    ) -> Result<()> {
        let n = x.n();
        if k == n {
            if out.len() >= budget {
                return Err(Error::BudgetExceeded { budget });
            }
            out.push(Perm::from_images(img.clone()).expect("injective"));
            return Ok(());
        }
        for t in 0..n {
            if used[t] || colors[t] != colors[k] {
                continue;
            }
            img[k] = t;
            used[t] = true;
            if consistent(x, img, k) {
                rec(x, colors, k + 1, img, used, out, budget)?;
            }
            used[t] = false;
            img[k] = UNSET;
        }
        Ok(())
    }

    rec(x, &colors, 0, &mut img, &mut used, &mut out, budget)?;
    debug_assert!(out.iter().all(|p| is_automorphism(x, p)));
    Ok(out)
}
