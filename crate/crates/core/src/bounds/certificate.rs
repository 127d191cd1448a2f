//! Recursive lower-bound certificate for `n≥0(A)` on `C4`-free hosts.
//!
//! At each node the squared-modulus matrix either splits (a zero block
//! `A[S, T]` with `|S| + |T| ≥ n`, giving the principal submatrix on `S ∪ T` in
//! block form with `|S ∩ T|` zero eigenvalues), or scales to unit row norms, in
//! which case the walk-counted third and fourth moments bound the positive mass
//! of the spectrum.

use serde::{Deserialize, Serialize};

use super::moments::moment_positivity_lower;
use crate::error::{Error, Result};
use crate::graph::{find_c4, girth};
use crate::scaling::{
    normalize_weighting, sinkhorn, support_check, SupportMatrix, SupportVerdict,
    DEFAULT_SINKHORN_MAX_ITER, DEFAULT_SINKHORN_TOL,
};
use crate::spectral::{trace_power_walks, HermitianWeighting};

pub const CERTIFICATE_SCHEMA: &str = "inertia-certificate/v1";

/// Guard subtracted before rounding `n·p` up at a leaf.
pub const LEAF_ROUNDING_GUARD: f64 = 1e-9;

/// Lower bound on `P(X > 0)` from `(m3, m4)` of a standardized spectrum.
pub type LeafBound = fn(f64, f64) -> Result<f64>;

#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    pub sinkhorn_tol: f64,
    pub sinkhorn_max_iter: usize,
    pub leaf_bound: LeafBound,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            sinkhorn_tol: DEFAULT_SINKHORN_TOL,
            sinkhorn_max_iter: DEFAULT_SINKHORN_MAX_ITER,
            leaf_bound: moment_positivity_lower,
        }
    }
}

/// One node of the recursion. Index sets use the vertex labels of the
/// top-level weighting.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateNode {
    Base {
        n: usize,
    },
    Decompose {
        n: usize,
        s: Vec<usize>,
        t: Vec<usize>,
        middle_count: usize,
        bound: usize,
        left: Box<CertificateNode>,
        right: Box<CertificateNode>,
    },
    MomentLeaf {
        n: usize,
        vertices: Vec<usize>,
        m2: f64,
        m3: f64,
        m4: f64,
        p_lower: f64,
        leaf_bound: usize,
    },
}

impl CertificateNode {
    pub fn n(&self) -> usize {
        match self {
            CertificateNode::Base { n }
            | CertificateNode::Decompose { n, .. }
            | CertificateNode::MomentLeaf { n, .. } => *n,
        }
    }

    pub fn bound(&self) -> usize {
        match self {
            CertificateNode::Base { n } => *n,
            CertificateNode::Decompose { bound, .. } => *bound,
            CertificateNode::MomentLeaf { leaf_bound, .. } => *leaf_bound,
        }
    }

    /// Visits every moment leaf.
    pub fn leaves(&self) -> Vec<&CertificateNode> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            match node {
                CertificateNode::Decompose { left, right, .. } => {
                    stack.push(right);
                    stack.push(left);
                }
                CertificateNode::MomentLeaf { .. } => out.push(node),
                CertificateNode::Base { .. } => {}
            }
        }
        out
    }

    fn check(&self) -> Result<()> {
        match self {
            CertificateNode::Base { n } if *n <= 1 => Ok(()),
            CertificateNode::Base { n } => Err(Error::Internal(format!("base node with n = {n}"))),
            CertificateNode::Decompose { n, s, t, middle_count, bound, left, right } => {
                let both = s.iter().filter(|x| t.contains(x)).count();
                let ok = s.len() + t.len() >= *n
                    && !s.is_empty()
                    && !t.is_empty()
                    && both == *middle_count
                    && left.n() == s.len() - both
                    && right.n() == t.len() - both
                    && *bound == left.bound() + right.bound() + middle_count;
                if !ok {
                    return Err(Error::Internal("inconsistent decomposition node".into()));
                }
                left.check()?;
                right.check()
            }
            CertificateNode::MomentLeaf { n, p_lower, leaf_bound, .. } => {
                if *leaf_bound == leaf_round(*n, *p_lower) {
                    Ok(())
                } else {
                    Err(Error::Internal("leaf bound does not match n·p".into()))
                }
            }
        }
    }
}

/// Certified lower bound on `n≥0(A)` with its recursion trace.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateResult {
    pub schema: String,
    pub n: usize,
    pub bound: usize,
    pub host_girth_at_least_5: bool,
    pub root: CertificateNode,
}

impl CertificateResult {
    /// Re-derives every node's bound from its children and leaf data.
    pub fn validate(&self) -> Result<()> {
        if self.schema != CERTIFICATE_SCHEMA {
            return Err(Error::InvalidInput(format!("unknown schema {:?}", self.schema)));
        }
        self.root.check()?;
        if self.root.bound() != self.bound || self.root.n() != self.n {
            return Err(Error::Internal("root does not match certificate".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })
    }
}

fn leaf_round(n: usize, p: f64) -> usize {
    (n as f64 * p - LEAF_ROUNDING_GUARD).ceil().max(0.0) as usize
}

pub fn certify_inertia(a: &HermitianWeighting) -> Result<CertificateResult> {
    certify_inertia_with(a, &CertifyOptions::default())
}

pub fn certify_inertia_with(a: &HermitianWeighting, opts: &CertifyOptions) -> Result<CertificateResult> {
    if let Some(cycle) = find_c4(a.host()) {
        return Err(Error::ContainsC4 { cycle });
    }
    let labels: Vec<usize> = (0..a.n()).collect();
    let root = certify_node(a, &labels, opts)?;
    Ok(CertificateResult {
        schema: CERTIFICATE_SCHEMA.to_string(),
        n: a.n(),
        bound: root.bound(),
        host_girth_at_least_5: girth(a.host()).is_none_or(|g| g >= 5),
        root,
    })
}

fn certify_node(a: &HermitianWeighting, labels: &[usize], opts: &CertifyOptions) -> Result<CertificateNode> {
    let n = a.n();
    if n <= 1 {
        return Ok(CertificateNode::Base { n });
    }
    let m = SupportMatrix::from_weighting(a);
    match support_check(&m) {
        SupportVerdict::Violator(v) => {
            let mut in_s = vec![false; n];
            let mut in_t = vec![false; n];
            v.s.iter().for_each(|&i| in_s[i] = true);
            v.t.iter().for_each(|&i| in_t[i] = true);
            let only_s: Vec<usize> = (0..n).filter(|&i| in_s[i] && !in_t[i]).collect();
            let only_t: Vec<usize> = (0..n).filter(|&i| in_t[i] && !in_s[i]).collect();
            let middle_count = (0..n).filter(|&i| in_s[i] && in_t[i]).count();
            let relabel = |idx: &[usize]| idx.iter().map(|&i| labels[i]).collect::<Vec<_>>();
            let left = certify_node(&a.principal(&only_s), &relabel(&only_s), opts)?;
            let right = certify_node(&a.principal(&only_t), &relabel(&only_t), opts)?;
            Ok(CertificateNode::Decompose {
                n,
                s: relabel(&v.s),
                t: relabel(&v.t),
                middle_count,
                bound: left.bound() + right.bound() + middle_count,
                left: Box::new(left),
                right: Box::new(right),
            })
        }
        SupportVerdict::TotalSupport => {
            let d = sinkhorn(&m, opts.sinkhorn_tol, opts.sinkhorn_max_iter)
                .map_err(|e| Error::Internal(format!("scaling failed after total support was certified: {e}")))?;
            let b = normalize_weighting(a, &d)?;
            let nf = n as f64;
            let m2 = trace_power_walks(&b, 2)? / nf;
            let m3 = trace_power_walks(&b, 3)? / nf;
            let m4 = trace_power_walks(&b, 4)? / nf;
            let p_lower = (opts.leaf_bound)(m3, m4)?;
            Ok(CertificateNode::MomentLeaf {
                n,
                vertices: labels.to_vec(),
                m2,
                m3,
                m4,
                p_lower,
                leaf_bound: leaf_round(n, p_lower),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::BETA;
    use crate::graph::{cycle, star, complete_bipartite, Graph};
    use crate::spectral::{random_weighting, WeightLaw};

    #[test]
    fn pentagon_is_one_moment_leaf() {
        let c = certify_inertia(&HermitianWeighting::unweighted(cycle(5).unwrap())).unwrap();
        assert_eq!(c.bound, 2);
        assert!(c.host_girth_at_least_5);
        match &c.root {
            CertificateNode::MomentLeaf { n, m3, m4, p_lower, leaf_bound, .. } => {
                assert_eq!((*n, *leaf_bound), (5, 2));
                assert!(m3.abs() < 1e-12);
                assert!((m4 - 1.5).abs() < 1e-10);
                assert!((p_lower - 1.0 / 3.0).abs() < 1e-10);
            }
            other => panic!("unexpected root {other:?}"),
        }
        c.validate().unwrap();
    }

    #[test]
    fn star_decomposes_on_leaves() {
        let c = certify_inertia(&HermitianWeighting::unweighted(star(4).unwrap())).unwrap();
        assert_eq!(c.bound, 4);
        match &c.root {
            CertificateNode::Decompose { s, t, middle_count, .. } => {
                assert_eq!(s, &vec![1, 2, 3, 4]);
                assert_eq!(t, &vec![1, 2, 3, 4]);
                assert_eq!(*middle_count, 4);
            }
            other => panic!("unexpected root {other:?}"),
        }
    }

    #[test]
    fn single_vertex_is_base() {
        let c = certify_inertia(&HermitianWeighting::zero(Graph::empty(1))).unwrap();
        assert_eq!(c.root, CertificateNode::Base { n: 1 });
        assert_eq!(c.bound, 1);
    }

    #[test]
    fn c4_host_refused() {
        let w = HermitianWeighting::unweighted(complete_bipartite(2, 2).unwrap());
        assert!(matches!(certify_inertia(&w), Err(Error::ContainsC4 { .. })));
    }

    #[test]
    fn json_round_trip() {
        let w = random_weighting(&cycle(9).unwrap(), 5, WeightLaw::GaussianComplex);
        let c = certify_inertia(&w).unwrap();
        let text = c.to_json();
        let back = CertificateResult::from_json(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), text);
        assert!(text.contains("\"schema\": \"inertia-certificate/v1\""));
    }

    #[test]
    fn sound_on_random_cycles() {
        for n in 5..14 {
            for seed in 0..3 {
                let w = random_weighting(&cycle(n).unwrap(), seed, WeightLaw::GaussianReal);
                let c = certify_inertia(&w).unwrap();
                c.validate().unwrap();
                assert!(c.bound <= w.nonneg_count().unwrap());
                assert!(c.bound + 1 >= (BETA * n as f64).ceil() as usize);
                assert!(c.bound + 1 >= (n as f64 / 4.0).ceil() as usize);
            }
        }
    }

    #[test]
    fn tampered_certificate_rejected() {
        let mut c = certify_inertia(&HermitianWeighting::unweighted(star(4).unwrap())).unwrap();
        c.bound += 1;
        assert!(c.validate().is_err());
    }
}
