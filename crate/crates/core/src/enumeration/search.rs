//! Backtracking over `·` rows (permutations) and then `:` cells.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{EnumFilter, SearchStats};
use crate::iso::canonical_form;
use crate::perm::all_perms;
use crate::qcs::QCycleSet;
use crate::table::OpTable;

const UNSET: usize = usize::MAX;

/// Position of a permutation in lexicographic order (Lehmer code).
pub(crate) fn perm_rank(images: &[usize]) -> usize {
    let n = images.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = images[i + 1..].iter().filter(|&&v| v < images[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

pub(crate) struct Engine {
    n: usize,
    filter: EnumFilter,
    perms: Vec<Vec<usize>>,
    comp: Vec<usize>,
    inv: Vec<usize>,
    dot: Vec<usize>,
    colon: Vec<usize>,
    domains: Vec<Vec<usize>>,
    used: Vec<u64>,
    pub found: BTreeSet<QCycleSet>,
    pub stats: SearchStats,
}

impl Engine {
    pub fn new(n: usize, filter: EnumFilter) -> Self {
        let perms: Vec<Vec<usize>> = all_perms(n).into_iter().map(|p| p.into_images()).collect();
        let k = perms.len();
        let mut comp = vec![0; k * k];
        let mut inv = vec![0; k];
        for a in 0..k {
            for b in 0..k {
                let c: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
                comp[a * k + b] = perm_rank(&c);
            }
            let mut ai = vec![0; n];
            for (i, &v) in perms[a].iter().enumerate() {
                ai[v] = i;
            }
            inv[a] = perm_rank(&ai);
        }
        Engine {
            n,
            filter,
            perms,
            comp,
            inv,
            dot: vec![UNSET; n],
            colon: vec![UNSET; n * n],
            domains: vec![Vec::new(); n * n],
            used: vec![0; n],
            found: BTreeSet::new(),
            stats: SearchStats::default(),
        }
    }

    /// Runs the search below fixed first rows, given as permutation images.
    pub fn run(&mut self, prefix: &[Vec<usize>]) {
        for (x, row) in prefix.iter().enumerate() {
            self.dot[x] = perm_rank(row);
        }
        if self.dot_consistent(prefix.len()) {
            self.dot_phase(prefix.len());
        } else {
            self.stats.dot_prunes += 1;
        }
    }

    #[inline]
    fn compose(&self, a: usize, b: usize) -> usize {
        self.comp[a * self.perms.len() + b]
    }

    #[inline]
    fn d(&self, x: usize, y: usize) -> usize {
        self.perms[self.dot[x]][y]
    }

    /// `σ_{x·y} σ_x σ_y⁻¹`, the row `σ_{y:x}` must equal.
    #[inline]
    fn required(&self, x: usize, y: usize) -> usize {
        let xy = self.d(x, y);
        self.compose(self.compose(self.dot[xy], self.dot[x]), self.inv[self.dot[y]])
    }

    fn dot_consistent(&self, assigned: usize) -> bool {
        let n = self.n;
        if self.filter.cycle_set_only {
            for x in 0..assigned {
                for y in 0..assigned {
                    let (a, b) = (self.d(x, y), self.d(y, x));
                    if a < assigned
                        && b < assigned
                        && self.compose(self.dot[a], self.dot[x]) != self.compose(self.dot[b], self.dot[y])
                    {
                        return false;
                    }
                }
            }
            return true;
        }
        let rows: BTreeSet<usize> = self.dot[..assigned].iter().copied().collect();
        let mut missing: BTreeSet<usize> = BTreeSet::new();
        for x in 0..assigned {
            for y in 0..assigned {
                if self.d(x, y) < assigned {
                    let p = self.required(x, y);
                    if !rows.contains(&p) {
                        missing.insert(p);
                        if missing.len() > n - assigned {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn dot_phase(&mut self, row: usize) {
        self.stats.nodes += 1;
        if row == self.n {
            if self.filter.cycle_set_only {
                self.colon.clone_from(&self.full_dot());
                self.emit();
            } else if self.build_domains() {
                self.colon_phase(0);
            } else {
                self.stats.colon_prunes += 1;
            }
            return;
        }
        for p in 0..self.perms.len() {
            self.dot[row] = p;
            if self.dot_consistent(row + 1) {
                self.dot_phase(row + 1);
            } else {
                self.stats.dot_prunes += 1;
            }
        }
        self.dot[row] = UNSET;
    }

    fn full_dot(&self) -> Vec<usize> {
        let n = self.n;
        (0..n * n).map(|i| self.d(i / n, i % n)).collect()
    }

    /// The value of `y:x` is pinned to points `w` with `σ_w = σ_{x·y} σ_x σ_y⁻¹`.
    fn build_domains(&mut self) -> bool {
        let n = self.n;
        for y in 0..n {
            for x in 0..n {
                let p = self.required(x, y);
                let dom: Vec<usize> = (0..n).filter(|&w| self.dot[w] == p).collect();
                if dom.is_empty() {
                    return false;
                }
                self.domains[y * n + x] = dom;
            }
        }
        true
    }

    fn colon_phase(&mut self, cell: usize) {
        self.stats.nodes += 1;
        let n = self.n;
        if cell == n * n {
            self.emit();
            return;
        }
        let row = cell / n;
        for i in 0..self.domains[cell].len() {
            let w = self.domains[cell][i];
            if self.filter.regular && self.used[row] & (1 << w) != 0 {
                continue;
            }
            self.colon[cell] = w;
            self.used[row] |= 1 << w;
            if self.colon_consistent() {
                self.colon_phase(cell + 1);
            } else {
                self.stats.colon_prunes += 1;
            }
            self.used[row] &= !(1 << w);
        }
        self.colon[cell] = UNSET;
    }

    #[inline]
    fn c(&self, x: usize, y: usize) -> usize {
        if x == UNSET || y == UNSET {
            UNSET
        } else {
            self.colon[x * self.n + y]
        }
    }

    /// Checks every instance of the `:`-valued axioms whose operands are all
    /// assigned; the `·`-valued one holds by choice of domains.
    fn colon_consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let cxy = self.c(x, y);
                let cyx = self.c(y, x);
                let (dxy, dyx) = (self.d(x, y), self.d(y, x));
                for z in 0..n {
                    let cyz = self.c(y, z);
                    // (x·y):(x·z) = (y:x)·(y:z)
                    if cyx != UNSET && cyz != UNSET {
                        let l = self.c(dxy, self.d(x, z));
                        if l != UNSET && l != self.d(cyx, cyz) {
                            return false;
                        }
                    }
                    // (x:y):(x:z) = (y·x):(y:z)
                    let l = self.c(cxy, self.c(x, z));
                    if l != UNSET {
                        let r = self.c(dyx, cyz);
                        if r != UNSET && l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn emit(&mut self) {
        let n = self.n;
        let dot = OpTable::from_flat(n, self.full_dot()).expect("in range");
        let colon = OpTable::from_flat(n, self.colon.clone()).expect("in range");
        let x = QCycleSet::new(dot, colon).expect("search emits only valid structures");
        if !self.filter.accepts(&x) {
            self.stats.filtered += 1;
            return;
        }
        self.stats.labeled += 1;
        if self.filter.up_to_iso {
            self.found.insert(canonical_form(&x));
        } else {
            self.found.insert(x);
        }
    }
}
