//! Upper bounds on the independence number and the lower-bound certificate
//! for the inertia quantity `n≥0(A)`.

mod certificate;
mod moments;
mod search;
mod weightings;

pub use certificate::{
    certify_inertia, certify_inertia_with, CertificateNode, CertificateResult, CertifyOptions,
    LeafBound, CERTIFICATE_SCHEMA, LEAF_ROUNDING_GUARD,
};
pub use moments::{hzz_upper, moment_positivity_lower, zelen_lower, BETA, HZZ_CONSTANT};
pub use search::{weight_search, SearchOptions, SearchResult};
pub use weightings::{bipartite_block_weighting, clique_cover_weighting};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{greedy_clique_cover, independence_number_with_limit, is_c4_free, Graph};
use crate::spectral::{default_tau, eigen, inertia, HermitianWeighting};

/// Relative tolerance on row-sum equality for the ratio bound.
pub const ROW_SUM_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioBound {
    pub value: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// Set when row sums were unequal and the value was computed anyway.
    pub heuristic: bool,
}

/// `|λ_min / (λ_max − λ_min)| · n`.
///
/// Requires equal row sums unless `force` is set, in which case the value is
/// returned flagged heuristic.
pub fn ratio_bound(a: &HermitianWeighting, force: bool) -> Result<RatioBound> {
    let n = a.n();
    let m = a.matrix();
    let sums: Vec<Complex64> = (0..n).map(|i| m.row(i).iter().sum()).collect();
    let scale = sums.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let spread = sums.iter().map(|z| (z - sums[0]).norm()).fold(0.0, f64::max);
    let unequal = spread > ROW_SUM_TOL * scale;
    if unequal && !force {
        return Err(Error::UnequalRowSums { spread });
    }
    let spec = eigen(m)?;
    let (lambda_max, lambda_min) = (spec.max().unwrap_or(0.0), spec.min().unwrap_or(0.0));
    if !(lambda_max > 0.0) {
        return Err(Error::NonPositiveLambdaMax { lambda_max });
    }
    Ok(RatioBound {
        value: (lambda_min / (lambda_max - lambda_min)).abs() * n as f64,
        lambda_min,
        lambda_max,
        heuristic: unequal,
    })
}

/// `n_zero + n_pos` of `A`; `tau` defaults to [`default_tau`].
pub fn inertia_upper_bound(a: &HermitianWeighting, tau: Option<f64>) -> Result<usize> {
    let spec = a.spectrum()?;
    Ok(inertia(&spec, tau.unwrap_or_else(|| default_tau(a.matrix()))).n_nonneg())
}

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub exact_limit: usize,
    pub force_ratio: bool,
    pub tau: Option<f64>,
    pub certify: CertifyOptions,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            exact_limit: crate::graph::DEFAULT_EXACT_LIMIT,
            force_ratio: false,
            tau: None,
            certify: CertifyOptions::default(),
        }
    }
}

/// Every bound computable for one graph and an optional weighting.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub alpha_exact: Option<usize>,
    pub ratio: Option<RatioBound>,
    pub inertia_unweighted: usize,
    pub inertia_weighted: Option<usize>,
    pub certificate: Option<CertificateResult>,
    pub clique_cover_bound: usize,
}

impl BoundReport {
    pub const CSV_HEADER: &'static str = "n,m,alpha,ratio,ratio_heuristic,inertia_unweighted,inertia_weighted,certificate_bound,clique_cover_bound";

    pub fn csv_row(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            opt(self.alpha_exact),
            self.ratio.map(|r| format!("{:.9}", r.value)).unwrap_or_default(),
            self.ratio.map(|r| r.heuristic.to_string()).unwrap_or_default(),
            self.inertia_unweighted,
            opt(self.inertia_weighted),
            opt(self.certificate.as_ref().map(|c| c.bound)),
            self.clique_cover_bound,
        )
    }

    /// Inequalities that fail; empty when the report is consistent.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(alpha) = self.alpha_exact {
            if let Some(r) = self.ratio.filter(|r| !r.heuristic) {
                if (alpha as f64) > r.value + 1e-9 {
                    out.push(format!("alpha {alpha} > ratio bound {}", r.value));
                }
            }
            if alpha > self.inertia_unweighted {
                out.push(format!("alpha {alpha} > unweighted inertia bound {}", self.inertia_unweighted));
            }
            if let Some(w) = self.inertia_weighted.filter(|&w| alpha > w) {
                out.push(format!("alpha {alpha} > weighted inertia bound {w}"));
            }
            if alpha > self.clique_cover_bound {
                out.push(format!("alpha {alpha} > clique cover bound {}", self.clique_cover_bound));
            }
        }
        if let Some(c) = &self.certificate {
            let actual = self.inertia_weighted.unwrap_or(self.inertia_unweighted);
            if c.bound > actual {
                out.push(format!("certificate bound {} > n>=0 {actual}", c.bound));
            }
        }
        out
    }
}

/// Exact α when `n ≤ exact_limit`; ratio bound when regular (or forced);
/// inertia of the plain adjacency and of `weights`; the greedy clique-cover
/// bound; and a certificate for `weights` (or the plain adjacency) on
/// `C4`-free graphs.
pub fn bound_report(g: &Graph, weights: Option<&HermitianWeighting>, opts: &ReportOptions) -> Result<BoundReport> {
    if let Some(w) = weights {
        if w.host() != g {
            return Err(Error::InvalidInput("weighting is hosted by a different graph".into()));
        }
    }
    let unweighted = HermitianWeighting::unweighted(g.clone());
    let alpha_exact = match independence_number_with_limit(g, opts.exact_limit) {
        Ok(a) => Some(a),
        Err(Error::ExactSolverLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    let ratio = match ratio_bound(&unweighted, opts.force_ratio) {
        Ok(r) => Some(r),
        Err(Error::UnequalRowSums { .. } | Error::NonPositiveLambdaMax { .. }) => None,
        Err(e) => return Err(e),
    };
    let certificate = if is_c4_free(g) {
        Some(certify_inertia_with(weights.unwrap_or(&unweighted), &opts.certify)?)
    } else {
        None
    };
    Ok(BoundReport {
        n: g.n(),
        m: g.edge_count(),
        alpha_exact,
        ratio,
        inertia_unweighted: inertia_upper_bound(&unweighted, opts.tau)?,
        inertia_weighted: weights.map(|w| inertia_upper_bound(w, opts.tau)).transpose()?,
        certificate,
        clique_cover_bound: greedy_clique_cover(g).len(),
    })
}
