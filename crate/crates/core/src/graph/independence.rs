//! Exact independence number by branch and bound.
//!
//! Branches on a vertex of maximum degree inside the candidate set. The pruning
//! bound is a greedy partition of the candidates into cliques of `G` (a greedy
//! colouring of the complement); vertices of candidate-degree at most one are
//! taken without branching.

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_EXACT_LIMIT: usize = 64;

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn and_assign(&mut self, other: &Bits) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a &= b);
    }

    fn difference_assign(&mut self, other: &Bits) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a &= !b);
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    k * 64 + t
                })
            })
        })
    }
}

struct Solver {
    neighbors: Vec<Bits>,
    closed: Vec<Bits>,
    best: usize,
}

impl Solver {
    fn clique_cover_size(&self, cand: &Bits) -> usize {
        let mut remaining = cand.clone();
        let mut blocks = 0;
        while let Some(u) = remaining.first() {
            remaining.remove(u);
            let mut pool = remaining.clone();
            pool.and_assign(&self.neighbors[u]);
            while let Some(w) = pool.first() {
                remaining.remove(w);
                pool.remove(w);
                pool.and_assign(&self.neighbors[w]);
            }
            blocks += 1;
        }
        blocks
    }

    fn search(&mut self, mut cand: Bits, mut size: usize) {
        loop {
            let low = cand.iter().find(|&v| cand.and_count(&self.neighbors[v]) <= 1);
            match low {
                Some(v) => {
                    size += 1;
                    cand.difference_assign(&self.closed[v]);
                }
                None => break,
            }
        }
        if cand.is_empty() {
            self.best = self.best.max(size);
            return;
        }
        if size + self.clique_cover_size(&cand) <= self.best {
            return;
        }
        let mut pivot = usize::MAX;
        let mut pivot_degree = 0;
        for v in cand.iter() {
            let d = cand.and_count(&self.neighbors[v]);
            if pivot == usize::MAX || d > pivot_degree {
                pivot = v;
                pivot_degree = d;
            }
        }
        let mut with = cand.clone();
        with.difference_assign(&self.closed[pivot]);
        self.search(with, size + 1);
        cand.remove(pivot);
        self.search(cand, size);
    }
}

/// Exact `α(G)` with the default size limit.
pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_with_limit(g, DEFAULT_EXACT_LIMIT)
}

pub fn independence_number_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.n();
    if n > limit {
        return Err(Error::ExactSolverLimit { n, limit });
    }
    let neighbors: Vec<Bits> = (0..n)
        .map(|v| {
            let mut b = Bits::empty(n);
            g.neighbors(v).iter().for_each(|&w| b.insert(w));
            b
        })
        .collect();
    let closed = neighbors
        .iter()
        .enumerate()
        .map(|(v, b)| {
            let mut c = b.clone();
            c.insert(v);
            c
        })
        .collect();
    let mut solver = Solver { neighbors, closed, best: 0 };
    solver.search(Bits::full(n), 0);
    debug_assert!(solver.best <= Bits::full(n).count());
    Ok(solver.best)
}
