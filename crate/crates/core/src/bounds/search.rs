//! Random-restart local search for weightings with few non-negative eigenvalues.

use std::cmp::Ordering;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::graph::Graph;
use crate::seed::derive_seed;
use crate::spectral::{default_tau, eigenvalues, random_weighting, HermitianWeighting, WeightLaw};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchOptions {
    pub seed: u64,
    pub restarts: usize,
    pub steps: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { seed: 0, restarts: 20, steps: 200 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub weighting: HermitianWeighting,
    pub nonneg: usize,
    /// Restart that produced the returned weighting.
    pub restart: usize,
}

/// Lexicographic score: `n≥0`, then the smallest non-negative eigenvalue
/// relative to `‖A‖_F`, which the search pushes below zero.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Score {
    nonneg: usize,
    edge: f64,
}

impl Score {
    fn of(m: &nalgebra::DMatrix<Complex64>) -> Score {
        let values = eigenvalues(m);
        let tau = default_tau(m);
        let nonneg = values.iter().filter(|&&x| x >= -tau).count();
        let norm = m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let edge = match nonneg {
            0 => f64::NEG_INFINITY,
            k if norm > 0.0 => values[k - 1] / norm,
            _ => 0.0,
        };
        Score { nonneg, edge }
    }

    fn cmp(&self, other: &Score) -> Ordering {
        self.nonneg.cmp(&other.nonneg).then(self.edge.total_cmp(&other.edge))
    }
}

/// Restart 0 starts from the plain adjacency matrix; restart `r > 0` from a
/// random weighting with law `WeightLaw::ALL[r % 3]` and seed
/// `derive_seed(seed, r)`. Each step perturbs one edge weight (real part,
/// imaginary part, or sign) and keeps strict improvements of the score.
/// Restarts run in parallel; ties go to the lowest restart index.
pub fn weight_search(g: &Graph, opts: &SearchOptions) -> SearchResult {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() || opts.restarts == 0 {
        let weighting = HermitianWeighting::zero(g.clone());
        return SearchResult { weighting, nonneg: g.n(), restart: 0 };
    }
    let best = (0..opts.restarts)
        .into_par_iter()
        .map(|r| {
            let (w, score) = run_restart(g, &edges, r, opts);
            (r, w, score)
        })
        .min_by(|a, b| a.2.cmp(&b.2).then(a.0.cmp(&b.0)))
        .expect("at least one restart");
    SearchResult { nonneg: best.2.nonneg, weighting: best.1, restart: best.0 }
}

fn run_restart(g: &Graph, edges: &[(usize, usize)], r: usize, opts: &SearchOptions) -> (HermitianWeighting, Score) {
    let stream = derive_seed(opts.seed, r as u64);
    let start = if r == 0 {
        HermitianWeighting::unweighted(g.clone())
    } else {
        random_weighting(g, stream, WeightLaw::ALL[r % 3])
    };
    let mut rng = ChaCha8Rng::seed_from_u64(stream ^ 0x5eed);
    let mut m = start.into_matrix();
    let mut score = Score::of(&m);
    for _ in 0..opts.steps {
        if score.nonneg <= 1 {
            break;
        }
        let (i, j) = edges[rng.random_range(0..edges.len())];
        let old = m[(i, j)];
        let scale = (m.iter().map(|z| z.norm_sqr()).sum::<f64>() / (2 * edges.len()) as f64).sqrt().max(1e-3);
        let delta: f64 = rng.sample::<f64, _>(StandardNormal) * 0.5 * scale;
        let new = match rng.random_range(0..3) {
            0 => old + Complex64::new(delta, 0.0),
            1 => old + Complex64::new(0.0, delta),
            _ => -old,
        };
        m[(i, j)] = new;
        m[(j, i)] = new.conj();
        let candidate = Score::of(&m);
        if candidate.cmp(&score) == Ordering::Less {
            score = candidate;
        } else {
            m[(i, j)] = old;
            m[(j, i)] = old.conj();
        }
    }
    let w = HermitianWeighting::new(g.clone(), m).expect("search stays on the host support");
    (w, score)
}
