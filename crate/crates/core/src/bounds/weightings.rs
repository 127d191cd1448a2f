//! Explicit weightings whose inertia is known in closed form.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{CliqueCover, Graph};
use crate::spectral::HermitianWeighting;

/// Unit weights on the edges inside each cover block, zero elsewhere. The
/// result is the adjacency matrix of a disjoint union of cliques, so `n≥0`
/// equals the number of blocks.
pub fn clique_cover_weighting(g: &Graph, cover: &CliqueCover) -> Result<HermitianWeighting> {
    let cover = CliqueCover::new(g, cover.blocks().to_vec())?;
    let entries = cover.blocks().iter().flat_map(|block| {
        block.iter().enumerate().flat_map(move |(k, &u)| {
            block[k + 1..].iter().map(move |&v| (u.min(v), u.max(v), Complex64::ONE))
        })
    });
    HermitianWeighting::from_entries(g.clone(), entries.collect::<Vec<_>>())
}

/// Weighting for disjoint unions of complete and complete bipartite graphs.
///
/// Cliques get unit weights (one non-negative eigenvalue each). A complete
/// bipartite `K_{a,b}` component gets unit weights on a matching of size
/// `min(a, b)` pairing the parts in label order, which contributes `max(a, b)`
/// non-negative eigenvalues. Components are classified as cliques first.
pub fn bipartite_block_weighting(g: &Graph) -> Result<HermitianWeighting> {
    let mut entries = Vec::new();
    for comp in g.components() {
        if g.is_clique(&comp) {
            for (k, &u) in comp.iter().enumerate() {
                entries.extend(comp[k + 1..].iter().map(|&v| (u, v, Complex64::ONE)));
            }
        } else if let Some((p, q)) = complete_bipartition(g, &comp) {
            entries.extend(p.iter().zip(&q).map(|(&u, &v)| (u.min(v), u.max(v), Complex64::ONE)));
        } else {
            return Err(Error::UnsupportedComponent { component: comp });
        }
    }
    HermitianWeighting::from_entries(g.clone(), entries)
}

/// Parts of a connected component that is complete bipartite.
fn complete_bipartition(g: &Graph, comp: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut side = vec![None; g.n()];
    side[comp[0]] = Some(false);
    let mut queue = vec![comp[0]];
    while let Some(u) = queue.pop() {
        let su = side[u].expect("visited");
        for &w in g.neighbors(u) {
            match side[w] {
                None => {
                    side[w] = Some(!su);
                    queue.push(w);
                }
                Some(sw) if sw == su => return None,
                Some(_) => {}
            }
        }
    }
    let (p, q): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&v| side[v] == Some(false));
    let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    (edges == p.len() * q.len()).then_some((p, q))
}
