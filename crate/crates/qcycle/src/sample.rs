//! Seeded sampling of fiber tables `(α, α′)` for falsification runs.

use qcycle_core::enumeration::{enumerate_qcs, EnumFilter};
use qcycle_core::extensions::{build_extension, extension_equivalence, verify_dynamical_pair, DynamicalPair};
use qcycle_core::QCycleSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SampleMode {
    /// `α` rows uniform permutations, `α′` entries uniform.
    Random,
    /// A direct-product pair relabeled by random fiber permutations.
    Conjugated,
    /// A conjugated pair with one entry changed.
    Mutated,
    /// Cycles through the three modes above.
    Mixed,
}

pub struct Sampler {
    rng: ChaCha8Rng,
    /// Labeled structures by order, index 0 unused.
    pool: Vec<Vec<QCycleSet>>,
}

impl Sampler {
    /// Bases and fibers are drawn from all labeled structures of order up to
    /// `max_order`.
    pub fn new(seed: u64, max_order: usize) -> Self {
        let mut pool = vec![Vec::new()];
        for n in 1..=max_order {
            pool.push(enumerate_qcs(n, EnumFilter::default()).expect("order within caps").structures);
        }
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool,
        }
    }

    fn structure(&mut self, n: usize) -> QCycleSet {
        let k = self.rng.random_range(0..self.pool[n].len());
        self.pool[n][k].clone()
    }

    fn shuffled(&mut self, m: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..m).collect();
        v.shuffle(&mut self.rng);
        v
    }

    pub fn random_pair(&mut self, base: QCycleSet, m: usize) -> DynamicalPair {
        let n = base.n();
        let mut alpha = Vec::with_capacity(n * n * m * m);
        for _ in 0..n * n * m {
            alpha.extend(self.shuffled(m));
        }
        let alpha_prime = (0..n * n * m * m).map(|_| self.rng.random_range(0..m)).collect();
        DynamicalPair::new(base, m, alpha, alpha_prime).expect("rows are permutations")
    }

    /// `X × S` with `α = ·_S`, `α′ = :_S`, transported along independent
    /// random permutations of each fiber. Always a valid pair.
    pub fn conjugated_pair(&mut self, base: QCycleSet, m: usize) -> DynamicalPair {
        let s = self.structure(m);
        let n = base.n();
        let g: Vec<Vec<usize>> = (0..n).map(|_| self.shuffled(m)).collect();
        let mut g_inv = vec![vec![0; m]; n];
        for (x, gx) in g.iter().enumerate() {
            for (i, &v) in gx.iter().enumerate() {
                g_inv[x][v] = i;
            }
        }
        let b = base.clone();
        DynamicalPair::from_fns(
            base,
            m,
            |x, y, s1, t| g[b.dot(x, y)][s.dot(g_inv[x][s1], g_inv[y][t])],
            |x, y, s1, t| g[b.colon(x, y)][s.colon(g_inv[x][s1], g_inv[y][t])],
        )
        .expect("conjugated rows are permutations")
    }

    /// A conjugated pair with one `α′` entry reassigned or two entries of one
    /// `α` row swapped.
    pub fn mutated_pair(&mut self, base: QCycleSet, m: usize) -> DynamicalPair {
        let d = self.conjugated_pair(base, m);
        let n = d.base().n();
        let (mut alpha, mut alpha_prime) = d.to_nested();
        let (x, y, s) = (
            self.rng.random_range(0..n),
            self.rng.random_range(0..n),
            self.rng.random_range(0..m),
        );
        if self.rng.random_bool(0.5) {
            let t = self.rng.random_range(0..m);
            alpha_prime[x][y][s][t] = self.rng.random_range(0..m);
        } else {
            let (t, u) = (self.rng.random_range(0..m), self.rng.random_range(0..m));
            alpha[x][y][s].swap(t, u);
        }
        DynamicalPair::from_nested(d.base().clone(), m, &alpha, &alpha_prime).expect("rows stay permutations")
    }

    /// Base order and fiber size uniform in `1..=max_n` and `1..=max_m`.
    pub fn sample(&mut self, mode: SampleMode, index: usize, max_n: usize, max_m: usize) -> DynamicalPair {
        let n = self.rng.random_range(1..=max_n);
        let m = self.rng.random_range(1..=max_m);
        let base = self.structure(n);
        let mode = match mode {
            SampleMode::Mixed => [SampleMode::Random, SampleMode::Conjugated, SampleMode::Mutated][index % 3],
            other => other,
        };
        match mode {
            SampleMode::Random => self.random_pair(base, m),
            SampleMode::Conjugated => self.conjugated_pair(base, m),
            _ => self.mutated_pair(base, m),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SampleSummary {
    pub samples: usize,
    pub valid_pairs: usize,
    pub regular_extensions: usize,
    pub equivalence_failures: usize,
    pub regularity_failures: usize,
}

impl SampleSummary {
    pub fn ok(&self) -> bool {
        self.equivalence_failures == 0 && self.regularity_failures == 0
    }
}

/// Checks both directions of the pair/product equivalence and, on valid
/// pairs, that the extension is regular iff the base is and every `α′` row
/// is a permutation.
pub fn check_samples(seed: u64, count: usize, mode: SampleMode, max_n: usize, max_m: usize) -> SampleSummary {
    let mut sampler = Sampler::new(seed, max_n.max(max_m));
    let mut out = SampleSummary::default();
    for i in 0..count {
        let d = sampler.sample(mode, i, max_n, max_m);
        out.samples += 1;
        if !extension_equivalence(&d) {
            out.equivalence_failures += 1;
        }
        if verify_dynamical_pair(&d).ok() {
            out.valid_pairs += 1;
            let e = build_extension(&d).expect("pair verified");
            out.regular_extensions += usize::from(e.is_regular());
            if e.is_regular() != (d.base().is_regular() && d.alpha_prime_rows_bijective()) {
                out.regularity_failures += 1;
            }
        }
    }
    out
}
