//! Bipartite matchings on the support of a square matrix: maximum matchings,
//! Hall-deficient sets, and the edges that lie in no perfect matching.

/// Bipartite graph with left and right copies of `0..n`, optionally with one
/// left and one right vertex deleted.
pub(crate) struct Bipartite<'a> {
    adj: &'a [Vec<usize>],
    skip_left: Option<usize>,
    skip_right: Option<usize>,
}

pub(crate) struct Matching {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left.iter().flatten().count()
    }
}

impl<'a> Bipartite<'a> {
    pub fn new(adj: &'a [Vec<usize>]) -> Self {
        Bipartite { adj, skip_left: None, skip_right: None }
    }

    pub fn without(adj: &'a [Vec<usize>], left: usize, right: usize) -> Self {
        Bipartite { adj, skip_left: Some(left), skip_right: Some(right) }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn lefts(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&x| Some(x) != self.skip_left)
    }

    fn rights_of(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[x].iter().copied().filter(move |&y| Some(y) != self.skip_right)
    }

    /// Maximum matching by augmenting paths, left vertices in increasing order.
    pub fn max_matching(&self) -> Matching {
        let n = self.n();
        let mut m = Matching { left: vec![None; n], right: vec![None; n] };
        let mut visited = vec![false; n];
        for x in self.lefts().collect::<Vec<_>>() {
            visited.fill(false);
            self.augment(x, &mut m, &mut visited);
        }
        m
    }

    fn augment(&self, x: usize, m: &mut Matching, visited: &mut [bool]) -> bool {
        for y in self.rights_of(x).collect::<Vec<_>>() {
            if visited[y] {
                continue;
            }
            visited[y] = true;
            let free = match m.right[y] {
                None => true,
                Some(x2) => self.augment(x2, m, visited),
            };
            if free {
                m.left[x] = Some(y);
                m.right[y] = Some(x);
                return true;
            }
        }
        false
    }

    /// Left vertices reachable by alternating paths from the free left vertices,
    /// and their neighbourhood. For a maximum matching that leaves `k` left
    /// vertices free, `|N(S)| = |S| - k`.
    pub fn deficient_set(&self, m: &Matching) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut in_s = vec![false; n];
        let mut in_ns = vec![false; n];
        let mut queue: Vec<usize> = self.lefts().filter(|&x| m.left[x].is_none()).collect();
        for &x in &queue {
            in_s[x] = true;
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for y in self.rights_of(x) {
                if in_ns[y] {
                    continue;
                }
                in_ns[y] = true;
                let mate = m.right[y].expect("maximum matching has no augmenting path");
                if !in_s[mate] {
                    in_s[mate] = true;
                    queue.push(mate);
                }
            }
        }
        let s = (0..n).filter(|&x| in_s[x]).collect();
        let ns = (0..n).filter(|&y| in_ns[y]).collect();
        (s, ns)
    }
}

/// First support edge `(a, b)` in row-major order that lies in no perfect
/// matching, given a perfect matching `m` of the full bipartite graph.
///
/// A non-matching edge `(a, b)` lies in some perfect matching iff it closes an
/// alternating cycle, i.e. iff left `a` and right `b` share a strongly
/// connected component once non-matching edges are oriented left→right and
/// matching edges right→left.
pub(crate) fn edge_outside_perfect_matchings(adj: &[Vec<usize>], m: &Matching) -> Option<(usize, usize)> {
    let n = adj.len();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    for (x, ys) in adj.iter().enumerate() {
        for &y in ys {
            if m.left[x] == Some(y) {
                out[n + y].push(x);
            } else {
                out[x].push(n + y);
            }
        }
    }
    let comp = strongly_connected_components(&out);
    adj.iter().enumerate().find_map(|(a, ys)| {
        ys.iter()
            .find(|&&b| m.left[a] != Some(b) && comp[a] != comp[n + b])
            .map(|&b| (a, b))
    })
}

/// Component id per node (iterative Tarjan).
fn strongly_connected_components(out: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = out.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    // (node, position in its adjacency list)
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < out[v].len() {
                let w = out[v][*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scc_of_two_cycles() {
        // 0 -> 1 -> 0, 1 -> 2, 2 -> 3 -> 2
        let out = vec![vec![1], vec![0, 2], vec![3], vec![2]];
        let c = strongly_connected_components(&out);
        assert_eq!(c[0], c[1]);
        assert_eq!(c[2], c[3]);
        assert_ne!(c[0], c[2]);
    }

    #[test]
    fn deficient_set_of_star() {
        // star K_{1,4} support: centre 0, leaves 1..4
        let adj = vec![vec![1, 2, 3, 4], vec![0], vec![0], vec![0], vec![0]];
        let b = Bipartite::new(&adj);
        let m = b.max_matching();
        assert_eq!(m.size(), 2);
        let (s, ns) = b.deficient_set(&m);
        assert_eq!(s, vec![1, 2, 3, 4]);
        assert_eq!(ns, vec![0]);
    }

    #[test]
    fn edge_outside_matchings_detected() {
        // path 0-1-2 plus isolated? use symmetric support of path P4: 0-1-2-3
        let adj = vec![vec![1], vec![0, 2], vec![1, 3], vec![2]];
        let m = Bipartite::new(&adj).max_matching();
        assert_eq!(m.size(), 4);
        // The middle edge (1,2) can never be used: row 0 forces 0->1, row 3 forces 3->2.
        assert_eq!(edge_outside_perfect_matchings(&adj, &m), Some((1, 2)));
    }
}
