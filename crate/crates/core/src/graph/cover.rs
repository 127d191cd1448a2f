use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Partition of the vertex set into cliques.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    blocks: Vec<Vec<usize>>,
}

impl CliqueCover {
    /// Validates that `blocks` partition `0..g.n()` and that each block is a clique of `g`.
    pub fn new(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; g.n()];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidCover("empty block".into()));
            }
            for &v in block {
                if v >= g.n() {
                    return Err(Error::InvalidCover(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidCover(format!("vertex {v} covered twice")));
                }
            }
            if !g.is_clique(block) {
                return Err(Error::InvalidCover(format!("block {block:?} is not a clique")));
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidCover(format!("vertex {v} uncovered")));
        }
        Ok(CliqueCover { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Greedy clique cover. Vertices are visited by decreasing degree (lowest label
/// first on ties); each uncovered vertex seeds a clique that absorbs, in the same
/// order, every uncovered vertex adjacent to all current members.
pub fn greedy_clique_cover(g: &Graph) -> CliqueCover {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut covered = vec![false; g.n()];
    let mut blocks = Vec::new();
    for &seed in &order {
        if covered[seed] {
            continue;
        }
        covered[seed] = true;
        let mut block = vec![seed];
        for &v in &order {
            if !covered[v] && block.iter().all(|&u| g.has_edge(u, v)) {
                covered[v] = true;
                block.push(v);
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    CliqueCover { blocks }
}
