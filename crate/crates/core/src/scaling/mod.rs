//! Symmetric diagonal scaling of the squared-modulus matrix `M_ij = |A_ij|²`.
//!
//! Either every support entry of `M` lies on a permutation of support entries
//! (total support), in which case a positive `d` with `diag(d) M diag(d)` doubly
//! stochastic exists and is found by symmetric Sinkhorn iteration, or there are
//! nonempty `S`, `T` with `M[S, T] = 0` and `|S| + |T| ≥ n`.

mod matching;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral::HermitianWeighting;
use matching::{edge_outside_perfect_matchings, Bipartite};

pub const DEFAULT_SINKHORN_TOL: f64 = 1e-12;
pub const DEFAULT_SINKHORN_MAX_ITER: usize = 100_000;

/// Symmetric, non-negative, zero-diagonal matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SupportMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl SupportMatrix {
    /// `entries` is row-major `n × n`.
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Dimension { expected: n * n, got: entries.len() });
        }
        for i in 0..n {
            if entries[i * n + i] != 0.0 {
                return Err(Error::InvalidInput(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                let x = entries[i * n + j];
                if !(x >= 0.0 && x.is_finite()) {
                    return Err(Error::InvalidInput(format!("entry ({i}, {j}) = {x} is not a finite non-negative value")));
                }
                if x != entries[j * n + i] {
                    return Err(Error::InvalidInput(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SupportMatrix { n, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension { expected: n, got: r.len() });
        }
        SupportMatrix::new(n, rows.concat())
    }

    /// `M_ij = |A_ij|²`.
    pub fn from_weighting(a: &HermitianWeighting) -> Self {
        let n = a.n();
        let entries = (0..n * n).map(|k| a.get(k / n, k % n).norm_sqr()).collect();
        SupportMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    fn support_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| (0..self.n).filter(|&j| self.get(i, j) != 0.0).collect())
            .collect()
    }

    /// Row sums of `diag(d) M diag(d)`.
    pub fn scaled_row_sums(&self, d: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| d[i] * self.row(i).iter().zip(d).map(|(m, dj)| m * dj).sum::<f64>())
            .collect()
    }

    /// `true` iff `M[S, T]` is identically zero.
    pub fn block_is_zero(&self, s: &[usize], t: &[usize]) -> bool {
        s.iter().all(|&i| t.iter().all(|&j| self.get(i, j) == 0.0))
    }
}

/// Nonempty `S`, `T` with `M[S, T] = 0` and `|S| + |T| ≥ n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violator {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportVerdict {
    TotalSupport,
    Violator(Violator),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum ScalingOutcome {
    Scaled { d: Vec<f64> },
    Violator(Violator),
}

/// Decides total support of `M`, or returns the first violating pair under a
/// fixed ordering:
///
/// 1. the first all-zero row `i` gives `({i}, [n])`;
/// 2. without a perfect matching of the support, `S` is the set of left
///    vertices alternating-reachable from unmatched ones and `T` the complement
///    of `N(S)`;
/// 3. otherwise, for the first support entry `(a, b)` on no perfect matching,
///    the same construction in the support graph with `a` and `b` deleted,
///    `T` taken inside `[n] ∖ {b}`.
pub fn support_check(m: &SupportMatrix) -> SupportVerdict {
    let n = m.n();
    if let Some(i) = (0..n).find(|&i| m.row(i).iter().all(|&x| x == 0.0)) {
        return SupportVerdict::Violator(Violator { s: vec![i], t: (0..n).collect() });
    }
    let adj = m.support_lists();
    let full = Bipartite::new(&adj);
    let matching = full.max_matching();
    let violator = if matching.size() < n {
        let (s, ns) = full.deficient_set(&matching);
        Violator { s, t: complement(n, &ns, None) }
    } else {
        match edge_outside_perfect_matchings(&adj, &matching) {
            None => return SupportVerdict::TotalSupport,
            Some((a, b)) => {
                let reduced = Bipartite::without(&adj, a, b);
                let rm = reduced.max_matching();
                debug_assert!(rm.size() < n - 1);
                let (s, ns) = reduced.deficient_set(&rm);
                Violator { s, t: complement(n, &ns, Some(b)) }
            }
        }
    };
    debug_assert!(m.block_is_zero(&violator.s, &violator.t));
    debug_assert!(violator.s.len() + violator.t.len() >= n);
    SupportVerdict::Violator(violator)
}

fn complement(n: usize, set: &[usize], also_skip: Option<usize>) -> Vec<usize> {
    let mut member = vec![false; n];
    set.iter().for_each(|&y| member[y] = true);
    (0..n).filter(|&y| !member[y] && Some(y) != also_skip).collect()
}

/// Symmetric Sinkhorn iteration `d_i ← d_i / √r_i`, `r` the row sums of
/// `diag(d) M diag(d)`, until `max |r_i − 1| ≤ tol`.
///
/// Converges when `M` has total support; run [`support_check`] first.
pub fn sinkhorn(m: &SupportMatrix, tol: f64, max_iter: usize) -> Result<Vec<f64>> {
    let n = m.n();
    let mut d: Vec<f64> = (0..n)
        .map(|i| {
            let s: f64 = m.row(i).iter().sum();
            if s > 0.0 { 1.0 / s.sqrt() } else { 1.0 }
        })
        .collect();
    let mut deviation = f64::INFINITY;
    for _ in 0..=max_iter {
        let r = m.scaled_row_sums(&d);
        deviation = r.iter().map(|x| (x - 1.0).abs()).fold(0.0, f64::max);
        if deviation <= tol {
            return Ok(d);
        }
        if !deviation.is_finite() || r.iter().any(|&x| x <= 0.0) {
            break;
        }
        for (di, ri) in d.iter_mut().zip(&r) {
            *di /= ri.sqrt();
        }
    }
    Err(Error::SinkhornDiverged { iterations: max_iter, deviation })
}

/// [`support_check`] followed, on total support, by [`sinkhorn`].
pub fn scale(m: &SupportMatrix, tol: f64, max_iter: usize) -> Result<ScalingOutcome> {
    match support_check(m) {
        SupportVerdict::Violator(v) => Ok(ScalingOutcome::Violator(v)),
        SupportVerdict::TotalSupport => sinkhorn(m, tol, max_iter).map(|d| ScalingOutcome::Scaled { d }),
    }
}

/// `B = Z A Z` with `Z = diag(√d)`. When `d` scales `|A|²` to doubly
/// stochastic, every row of `B` has unit `L²` norm.
pub fn normalize_weighting(a: &HermitianWeighting, d: &[f64]) -> Result<HermitianWeighting> {
    if d.len() != a.n() {
        return Err(Error::Dimension { expected: a.n(), got: d.len() });
    }
    if let Some(x) = d.iter().find(|&&x| !(x > 0.0 && x.is_finite())) {
        return Err(Error::InvalidInput(format!("scaling entry {x} is not positive")));
    }
    let z: Vec<f64> = d.iter().map(|x| x.sqrt()).collect();
    let entries: Vec<_> = a.upper_entries().map(|(i, j, w)| (i, j, w * (z[i] * z[j]))).collect();
    HermitianWeighting::from_entries(a.host().clone(), entries)
}
