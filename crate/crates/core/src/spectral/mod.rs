//! Hermitian weighted adjacency matrices and their spectra.

mod eigen;
mod random;
mod walks;

pub use eigen::{
    congruence, default_tau, eigen, eigenvalues, esd_moments, inertia, InertiaTriple,
    MomentVector, Spectrum, HERMITIAN_TOL,
};
pub use random::{random_weighting, WeightLaw};
pub use walks::trace_power_walks;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hermitian matrix supported on the edges of a host graph, with zero diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianWeighting {
    host: Graph,
    entries: DMatrix<Complex64>,
}

impl HermitianWeighting {
    /// Validates `entries` against `host`. Entries must be Hermitian within
    /// [`HERMITIAN_TOL`] and vanish exactly off the edge set; the stored matrix
    /// is the exactly Hermitian upper-triangle reflection.
    pub fn new(host: Graph, entries: DMatrix<Complex64>) -> Result<Self> {
        let n = host.n();
        if entries.nrows() != n || entries.ncols() != n {
            return Err(Error::Dimension { expected: n, got: entries.nrows().max(entries.ncols()) });
        }
        check_hermitian(&entries)?;
        let mut exact = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let z = entries[(i, j)];
                if i != j && z != Complex64::ZERO && !host.has_edge(i, j) {
                    return Err(Error::OffSupport { i, j });
                }
                if i < j {
                    exact[(i, j)] = z;
                    exact[(j, i)] = z.conj();
                }
            }
        }
        Ok(HermitianWeighting { host, entries: exact })
    }

    pub fn zero(host: Graph) -> Self {
        let n = host.n();
        HermitianWeighting { host, entries: DMatrix::zeros(n, n) }
    }

    /// The ordinary 0/1 adjacency matrix.
    pub fn unweighted(host: Graph) -> Self {
        let mut w = HermitianWeighting::zero(host);
        let edges: Vec<_> = w.host.edges().collect();
        for (i, j) in edges {
            w.entries[(i, j)] = Complex64::ONE;
            w.entries[(j, i)] = Complex64::ONE;
        }
        w
    }

    /// Weighting with `A[i][j] = z` and `A[j][i] = conj(z)` for each listed entry.
    pub fn from_entries(
        host: Graph,
        entries: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Result<Self> {
        let mut w = HermitianWeighting::zero(host);
        for (i, j, z) in entries {
            w.set(i, j, z)?;
        }
        Ok(w)
    }

    /// Weighting whose host is the support graph of `entries`.
    pub fn from_matrix(entries: DMatrix<Complex64>) -> Result<Self> {
        check_hermitian(&entries)?;
        let n = entries.nrows();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if entries[(i, j)] != Complex64::ZERO || entries[(j, i)] != Complex64::ZERO {
                    edges.push((i, j));
                }
            }
        }
        HermitianWeighting::new(Graph::from_edges(n, edges)?, entries)
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) -> Result<()> {
        if i == j || !self.host.has_edge(i, j) {
            if z == Complex64::ZERO && i < self.n() && j < self.n() {
                return Ok(());
            }
            return Err(Error::OffSupport { i, j });
        }
        self.entries[(i, j)] = z;
        self.entries[(j, i)] = z.conj();
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }

    pub fn n(&self) -> usize {
        self.host.n()
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.entries
    }

    /// Principal submatrix on `vertices`, hosted by the induced subgraph.
    pub fn principal(&self, vertices: &[usize]) -> HermitianWeighting {
        let host = self.host.induced(vertices);
        let entries =
            DMatrix::from_fn(vertices.len(), vertices.len(), |a, b| self.entries[(vertices[a], vertices[b])]);
        HermitianWeighting { host, entries }
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|z| z.im == 0.0)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Nonzero upper-triangle entries `(i, j, A[i][j])`, `i < j`, row-major.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.host
            .edges()
            .map(|(i, j)| (i, j, self.entries[(i, j)]))
            .filter(|(_, _, z)| *z != Complex64::ZERO)
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        eigen(&self.entries)
    }

    /// `n≥0` with the default tolerance.
    pub fn nonneg_count(&self) -> Result<usize> {
        let spec = self.spectrum()?;
        Ok(inertia(&spec, default_tau(&self.entries)).n_nonneg())
    }
}

pub(crate) fn check_hermitian(a: &DMatrix<Complex64>) -> Result<()> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::Dimension { expected: n, got: a.ncols() });
    }
    for i in 0..n {
        for j in i..n {
            let deviation = (a[(i, j)] - a[(j, i)].conj()).norm();
            if deviation > HERMITIAN_TOL {
                return Err(Error::NotHermitian { i, j, deviation });
            }
        }
    }
    Ok(())
}
