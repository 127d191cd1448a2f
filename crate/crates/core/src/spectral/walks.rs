//! Traces of small matrix powers counted as weighted closed walks.

use super::HermitianWeighting;
use crate::error::{Error, Result};
use crate::graph::find_c4;

/// `tr(A^k)` for `k ∈ {2, 3, 4}` without forming matrix powers.
///
/// * `k = 2`: `Σ |A_ij|²`.
/// * `k = 3`: `6 Σ_{triangles} Re(A_ij A_jk A_ki)`.
/// * `k = 4`: only on `C4`-free hosts, where every closed 4-walk either runs
///   along one edge or doubles back over a cherry:
///   `2 Σ_i (Σ_j |A_ij|²)² − Σ_ij |A_ij|⁴`.
pub fn trace_power_walks(a: &HermitianWeighting, k: u32) -> Result<f64> {
    let g = a.host();
    match k {
        2 => Ok(a.matrix().iter().map(|z| z.norm_sqr()).sum()),
        3 => {
            let mut sum = 0.0;
            for i in 0..g.n() {
                let ni = g.neighbors(i);
                for &j in ni.iter().filter(|&&j| j > i) {
                    for &l in g.neighbors(j).iter().filter(|&&l| l > j) {
                        if g.has_edge(l, i) {
                            sum += (a.get(i, j) * a.get(j, l) * a.get(l, i)).re;
                        }
                    }
                }
            }
            Ok(6.0 * sum)
        }
        4 => {
            if let Some(cycle) = find_c4(g) {
                return Err(Error::CherryFormulaInvalid { cycle });
            }
            let m = a.matrix();
            let mut rows = 0.0;
            let mut quartic = 0.0;
            for i in 0..g.n() {
                let mut row = 0.0;
                for &j in g.neighbors(i) {
                    let s = m[(i, j)].norm_sqr();
                    row += s;
                    quartic += s * s;
                }
                rows += row * row;
            }
            Ok(2.0 * rows - quartic)
        }
        _ => Err(Error::InvalidInput(format!("walk trace supports k in {{2, 3, 4}}, got {k}"))),
    }
}
