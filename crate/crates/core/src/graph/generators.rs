//! Graph families: finite-field constructions over prime fields, random graphs
//! and a handful of small named graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn require_prime(q: u64) -> Result<usize> {
    if !is_prime(q) {
        return Err(Error::NotPrime { q });
    }
    usize::try_from(q).map_err(|_| Error::InvalidInput(format!("q = {q} too large")))
}

/// Paley graph on the prime field `F_q`: `i ~ j` iff `i - j` is a nonzero square.
pub fn paley(q: u64) -> Result<Graph> {
    let q = require_prime(q)?;
    if q % 4 != 1 {
        return Err(Error::PaleyModulus { q: q as u64 });
    }
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    let edges = (0..q).flat_map(|i| (i + 1..q).map(move |j| (i, j)));
    Graph::from_edges(q, edges.filter(|&(i, j)| square[(j - i) % q]))
}

/// Points of `PG(2, q)` as normalized triples: the first nonzero coordinate is 1.
/// Ordered `(0,0,1)`, then `(0,1,z)`, then `(1,y,z)`, each lexicographically.
pub fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = vec![[0, 0, 1]];
    pts.extend((0..q).map(|z| [0, 1, z]));
    pts.extend((0..q).flat_map(|y| (0..q).map(move |z| [1, y, z])));
    pts
}

/// Polarity (Erdős–Rényi) graph of `PG(2, q)` under the standard orthogonal polarity:
/// distinct points `x ~ y` iff `x · y = 0`.
pub fn polarity(q: u64) -> Result<Graph> {
    let q = require_prime(q)?;
    let pts = projective_points(q);
    let dot = |a: &[usize; 3], b: &[usize; 3]| (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q;
    let n = pts.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if dot(&pts[i], &pts[j]) == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Binomial random graph `G(n, p)`, pairs visited in lexicographic order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidInput(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Uniform random recursive tree: vertex `v > 0` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    positive(n, "tree size")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_edges(n, (1..n).map(|v| (rng.random_range(0..v), v)))
}

fn positive(x: usize, what: &str) -> Result<()> {
    if x == 0 {
        Err(Error::InvalidInput(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    positive(n, "clique size")?;
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    positive(a, "part size")?;
    positive(b, "part size")?;
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph> {
    complete_bipartite(1, leaves)
}

/// Petersen graph as the Kneser graph `K(5,2)`: 2-subsets adjacent iff disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> =
        (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        for (j, r) in pairs.iter().enumerate().skip(i + 1) {
            if p.0 != r.0 && p.0 != r.1 && p.1 != r.0 && p.1 != r.1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, edges).expect("Kneser edges are valid")
}

/// Disjoint union, relabeling the parts consecutively.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in parts {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Graph::from_edges(offset, edges).expect("union of valid graphs")
}

/// `K_{d,d}` plus `d` disjoint copies of `K_{d+1}`: a `d`-regular graph on
/// `2d + d(d+1)` vertices with independence number `2d`.
pub fn remark_graph(d: usize) -> Result<Graph> {
    positive(d, "d")?;
    let mut parts = vec![complete_bipartite(d, d)?];
    parts.extend(std::iter::repeat_n(complete(d + 1)?, d));
    Ok(disjoint_union(&parts))
}

/// Named structured families, for callers that select a family at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum Structured {
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Union(Vec<Structured>),
}

impl Structured {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Structured::Cycle(n) => cycle(*n),
            Structured::Complete(n) => complete(*n),
            Structured::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            Structured::Petersen => Ok(petersen()),
            Structured::Union(parts) => {
                if parts.is_empty() {
                    return Err(Error::InvalidInput("empty disjoint union".into()));
                }
                let built = parts.iter().map(Structured::build).collect::<Result<Vec<_>>>()?;
                Ok(disjoint_union(&built))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paley_5_is_the_pentagon() {
        let g = paley(5).unwrap();
        assert_eq!(g, cycle(5).unwrap());
    }

    #[test]
    fn paley_degrees() {
        for q in [5u64, 13, 17, 29] {
            let g = paley(q).unwrap();
            assert_eq!(g.regular_degree(), Some((q as usize - 1) / 2));
        }
    }

    #[test]
    fn paley_rejects_bad_moduli() {
        assert_eq!(paley(15), Err(Error::NotPrime { q: 15 }));
        assert_eq!(paley(7), Err(Error::PaleyModulus { q: 7 }));
    }

    #[test]
    fn polarity_counts() {
        for q in [2u64, 3, 5, 7, 11, 13] {
            let g = polarity(q).unwrap();
            let q = q as usize;
            assert_eq!(g.n(), q * q + q + 1);
            let degs = g.degrees();
            assert_eq!(degs.iter().filter(|&&d| d == q).count(), q + 1);
            assert!(degs.iter().all(|&d| d == q || d == q + 1));
        }
        assert!(polarity(4).is_err());
    }

    #[test]
    fn polarity_2_has_nine_edges() {
        let g = polarity(2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 9));
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(gnp(5, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gnp(5, 1.0, 1).unwrap(), complete(5).unwrap());
        assert_eq!(gnp(40, 0.5, 7).unwrap(), gnp(40, 0.5, 7).unwrap());
        assert_ne!(gnp(40, 0.5, 7).unwrap(), gnp(40, 0.5, 8).unwrap());
        assert!(gnp(5, 1.5, 1).is_err());
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!((g.n(), g.edge_count(), g.regular_degree()), (10, 15, Some(3)));
    }

    #[test]
    fn remark_graph_is_regular() {
        let g = remark_graph(3).unwrap();
        assert_eq!(g.n(), 18);
        assert_eq!(g.regular_degree(), Some(3));
    }

    #[test]
    fn structured_rejects_zero_sizes() {
        assert!(Structured::Complete(0).build().is_err());
        assert!(Structured::CompleteBipartite(2, 0).build().is_err());
        assert!(Structured::Union(vec![]).build().is_err());
        let g = Structured::Union(vec![Structured::Cycle(5), Structured::Petersen]).build();
        assert_eq!(g.unwrap().n(), 15);
    }

    #[test]
    fn random_tree_is_a_tree() {
        let t = random_tree(30, 3).unwrap();
        assert_eq!(t.edge_count(), 29);
        assert_eq!(t.components().len(), 1);
    }
}
