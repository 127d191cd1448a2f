use std::collections::HashMap;
use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // Cycles through this root found later cannot be shorter.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// A 4-cycle `[a, b, c, d]` (consecutive vertices adjacent, `d ~ a`), if one exists.
///
/// Found as two distinct vertices sharing two common neighbours.
pub fn find_c4(g: &Graph) -> Option<[usize; 4]> {
    let mut first_centre: HashMap<(usize, usize), usize> = HashMap::new();
    for u in 0..g.n() {
        let nb = g.neighbors(u);
        for (k, &v) in nb.iter().enumerate() {
            for &w in &nb[k + 1..] {
                if let Some(&c) = first_centre.get(&(v, w)) {
                    return Some([v, c, w, u]);
                }
                first_centre.insert((v, w), u);
            }
        }
    }
    None
}

pub fn is_c4_free(g: &Graph) -> bool {
    find_c4(g).is_none()
}

/// Result of [`extract_girth5`].
#[derive(Clone, Debug, PartialEq)]
pub struct Girth5Extraction {
    pub graph: Graph,
    /// Vertex `k` of `graph` is vertex `retained[k]` of the input.
    pub retained: Vec<usize>,
    pub removed: Vec<usize>,
}

impl Girth5Extraction {
    pub fn retained_fraction(&self) -> f64 {
        let total = self.retained.len() + self.removed.len();
        if total == 0 {
            1.0
        } else {
            self.retained.len() as f64 / total as f64
        }
    }
}

/// Greedy induced subgraph of girth at least 5 of a `C4`-free graph.
///
/// Repeatedly takes the lexicographically first triangle and deletes its vertex of
/// largest current degree (lowest label on ties). No retention guarantee.
pub fn extract_girth5(g: &Graph) -> Result<Girth5Extraction> {
    if let Some(cycle) = find_c4(g) {
        return Err(Error::ContainsC4 { cycle });
    }
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree = g.degrees();
    let mut removed = Vec::new();
    while let Some(tri) = first_triangle(g, &alive) {
        let victim = *tri
            .iter()
            .max_by(|&&a, &&b| degree[a].cmp(&degree[b]).then(b.cmp(&a)))
            .expect("triangle has three vertices");
        alive[victim] = false;
        for &w in g.neighbors(victim) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
        removed.push(victim);
    }
    let retained: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    Ok(Girth5Extraction { graph: g.induced(&retained), retained, removed })
}

fn first_triangle(g: &Graph, alive: &[bool]) -> Option<[usize; 3]> {
    for i in (0..g.n()).filter(|&i| alive[i]) {
        let ni = g.neighbors(i);
        for &j in ni.iter().filter(|&&j| j > i && alive[j]) {
            // Both lists are sorted; merge for a common neighbour above j.
            let nj = g.neighbors(j);
            let (mut a, mut b) = (0, 0);
            while a < ni.len() && b < nj.len() {
                match ni[a].cmp(&nj[b]) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        let k = ni[a];
                        if k > j && alive[k] {
                            return Some([i, j, k]);
                        }
                        a += 1;
                        b += 1;
                    }
                }
            }
        }
    }
    None
}
