//! Ratio bound versus inertia on girth-5 subgraphs of polarity graphs.

use serde::{Deserialize, Serialize};

use crate::bounds::{
    certify_inertia_with, inertia_upper_bound, ratio_bound, weight_search, CertifyOptions,
    SearchOptions, BETA,
};
use crate::error::{Error, Result};
use crate::graph::{extract_girth5, girth, independence_number_with_limit, polarity, DEFAULT_EXACT_LIMIT};
use crate::seed::derive_seed;
use crate::spectral::{random_weighting, HermitianWeighting, WeightLaw};

#[derive(Clone, Copy, Debug)]
pub struct GapOptions {
    pub seed: u64,
    pub restarts: usize,
    pub steps: usize,
    pub exact_limit: usize,
    pub law: WeightLaw,
    pub tau: Option<f64>,
    pub certify: CertifyOptions,
}

impl Default for GapOptions {
    fn default() -> Self {
        GapOptions {
            seed: 1,
            restarts: 20,
            steps: 200,
            exact_limit: DEFAULT_EXACT_LIMIT,
            law: WeightLaw::GaussianComplex,
            tau: None,
            certify: CertifyOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub graph_id: String,
    pub source_n: usize,
    pub n: usize,
    pub m: usize,
    pub girth: Option<usize>,
    pub alpha: Option<usize>,
    pub ratio: Option<f64>,
    pub ratio_heuristic: bool,
    pub four_n_three_quarters: f64,
    pub inertia_unweighted: usize,
    pub inertia_searched: usize,
    pub certificate_bound: usize,
    pub certificate_actual: usize,
    pub beta_n: f64,
    pub quarter_n: f64,
}

impl ExperimentRow {
    pub const CSV_HEADER: &'static str = "graph_id,source_n,n,m,girth,alpha,ratio,ratio_heuristic,four_n_3_4,inertia_unweighted,inertia_searched,certificate_bound,certificate_actual,beta_n,n_over_4";

    pub fn csv_row(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{:.6},{},{},{},{},{:.6},{:.6}",
            self.graph_id,
            self.source_n,
            self.n,
            self.m,
            self.girth.map_or_else(|| "inf".to_string(), |g| g.to_string()),
            opt(self.alpha),
            self.ratio.map(|r| format!("{r:.6}")).unwrap_or_default(),
            self.ratio_heuristic,
            self.four_n_three_quarters,
            self.inertia_unweighted,
            self.inertia_searched,
            self.certificate_bound,
            self.certificate_actual,
            self.beta_n,
            self.quarter_n,
        )
    }

    /// Inequalities the row must satisfy; each failure is named.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let girth5 = self.girth.is_none_or(|g| g >= 5);
        if let Some(r) = self.ratio {
            if r > self.four_n_three_quarters {
                out.push(format!("{}: ratio {r} > 4n^(3/4) = {}", self.graph_id, self.four_n_three_quarters));
            }
        }
        if self.certificate_bound > self.certificate_actual {
            out.push(format!(
                "{}: certificate {} > n>=0 {} of the certified weighting",
                self.graph_id, self.certificate_bound, self.certificate_actual
            ));
        }
        let floor = self.n.div_ceil(4).saturating_sub(1);
        if girth5 && self.certificate_bound < floor {
            out.push(format!("{}: certificate {} < ceil(n/4) - 1 = {floor}", self.graph_id, self.certificate_bound));
        }
        let smallest = self.inertia_searched.min(self.certificate_bound).min(self.inertia_unweighted);
        if girth5 && (smallest as f64) < self.quarter_n - 1.0 {
            out.push(format!("{}: min inertia column {smallest} < n/4 - 1", self.graph_id));
        }
        if let Some(a) = self.alpha {
            if a > self.inertia_searched || a > self.inertia_unweighted {
                out.push(format!("{}: alpha {a} exceeds an inertia bound", self.graph_id));
            }
        }
        out
    }
}

/// One row for prime `q`: the polarity graph of `PG(2, q)`, its greedy girth-5
/// subgraph `H`, and every bound on `H`. The search uses seed
/// `derive_seed(seed, 2q)` and the certified random weighting
/// `derive_seed(seed, 2q + 1)`.
pub fn gap_row(q: u64, opts: &GapOptions) -> Result<ExperimentRow> {
    let source = polarity(q)?;
    let extraction = extract_girth5(&source)?;
    let h = extraction.graph;
    let n = h.n();
    let alpha = match independence_number_with_limit(&h, opts.exact_limit) {
        Ok(a) => Some(a),
        Err(Error::ExactSolverLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    let unweighted = HermitianWeighting::unweighted(h.clone());
    let ratio = match ratio_bound(&unweighted, true) {
        Ok(r) => Some(r),
        Err(Error::NonPositiveLambdaMax { .. }) => None,
        Err(e) => return Err(e),
    };
    let search = weight_search(
        &h,
        &SearchOptions { seed: derive_seed(opts.seed, 2 * q), restarts: opts.restarts, steps: opts.steps },
    );
    let certified = random_weighting(&h, derive_seed(opts.seed, 2 * q + 1), opts.law);
    let certificate = certify_inertia_with(&certified, &opts.certify)?;
    Ok(ExperimentRow {
        graph_id: format!("polarity{q}-girth5"),
        source_n: source.n(),
        n,
        m: h.edge_count(),
        girth: girth(&h),
        alpha,
        ratio: ratio.map(|r| r.value),
        ratio_heuristic: ratio.is_some_and(|r| r.heuristic),
        four_n_three_quarters: 4.0 * (n as f64).powf(0.75),
        inertia_unweighted: inertia_upper_bound(&unweighted, opts.tau)?,
        inertia_searched: inertia_upper_bound(&search.weighting, opts.tau)?,
        certificate_bound: certificate.bound,
        certificate_actual: inertia_upper_bound(&certified, opts.tau)?,
        beta_n: BETA * n as f64,
        quarter_n: n as f64 / 4.0,
    })
}
