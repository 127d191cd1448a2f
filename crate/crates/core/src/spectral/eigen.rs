use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::check_hermitian;
use crate::error::{Error, Result};

/// Entrywise tolerance for accepting a matrix as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues sorted descending, plus the largest backward-error residual
/// `‖Av − λv‖` over the computed eigenpairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub residual: f64,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn max(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn min(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }
}

/// Counts of eigenvalues below `-tau`, in `[-tau, tau]`, and above `tau`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InertiaTriple {
    pub n_neg: usize,
    pub n_zero: usize,
    pub n_pos: usize,
    pub tau: f64,
}

impl InertiaTriple {
    pub fn n(&self) -> usize {
        self.n_neg + self.n_zero + self.n_pos
    }

    /// Number of non-negative eigenvalues under this classification.
    pub fn n_nonneg(&self) -> usize {
        self.n_zero + self.n_pos
    }
}

/// First four moments of the empirical spectral distribution, `m_k = tr(A^k)/n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentVector {
    pub m1: f64,
    pub m2: f64,
    pub m3: f64,
    pub m4: f64,
}

/// Full eigendecomposition of a Hermitian matrix.
///
/// Real-symmetric inputs take a real solver; the eigenvalues are the same.
/// Fails if the matrix is not Hermitian or a residual exceeds
/// `1e-9 * max(1, ‖A‖_F)`.
pub fn eigen(a: &DMatrix<Complex64>) -> Result<Spectrum> {
    check_hermitian(a)?;
    let n = a.nrows();
    if n == 0 {
        return Ok(Spectrum { eigenvalues: Vec::new(), residual: 0.0 });
    }
    let (mut eigenvalues, residual) = if a.iter().all(|z| z.im == 0.0) {
        let real = a.map(|z| z.re);
        let eig = SymmetricEigen::new(real.clone());
        let res = (0..n)
            .map(|k| {
                let v = eig.eigenvectors.column(k);
                (&real * v - v * eig.eigenvalues[k]).norm()
            })
            .fold(0.0, f64::max);
        (eig.eigenvalues.iter().copied().collect::<Vec<_>>(), res)
    } else {
        let eig = SymmetricEigen::new(a.clone());
        let res = (0..n)
            .map(|k| {
                let v = eig.eigenvectors.column(k);
                (a * v - v * Complex64::from(eig.eigenvalues[k])).norm()
            })
            .fold(0.0, f64::max);
        (eig.eigenvalues.iter().copied().collect::<Vec<_>>(), res)
    };
    let bound = 1e-9 * frobenius(a).max(1.0);
    if !(residual <= bound) {
        return Err(Error::EigenResidual { residual, bound });
    }
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { eigenvalues, residual })
}

/// Eigenvalues only, sorted descending. No Hermitian check or residual; meant
/// for inner loops over matrices already known to be Hermitian.
pub fn eigenvalues(a: &DMatrix<Complex64>) -> Vec<f64> {
    let mut values: Vec<f64> = if a.iter().all(|z| z.im == 0.0) {
        a.map(|z| z.re).symmetric_eigenvalues().iter().copied().collect()
    } else {
        a.symmetric_eigenvalues().iter().copied().collect()
    };
    values.sort_by(|x, y| y.total_cmp(x));
    values
}

fn frobenius(a: &DMatrix<Complex64>) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Default zero band: `1e-8 * max(1, ‖A‖_F / √n)`.
pub fn default_tau(a: &DMatrix<Complex64>) -> f64 {
    let n = a.nrows().max(1) as f64;
    1e-8 * (frobenius(a) / n.sqrt()).max(1.0)
}

pub fn inertia(spectrum: &Spectrum, tau: f64) -> InertiaTriple {
    inertia_of(&spectrum.eigenvalues, tau)
}

pub(crate) fn inertia_of(values: &[f64], tau: f64) -> InertiaTriple {
    let mut t = InertiaTriple { n_neg: 0, n_zero: 0, n_pos: 0, tau };
    for &x in values {
        if x < -tau {
            t.n_neg += 1;
        } else if x > tau {
            t.n_pos += 1;
        } else {
            t.n_zero += 1;
        }
    }
    t
}

pub fn esd_moments(spectrum: &Spectrum) -> MomentVector {
    let n = spectrum.n().max(1) as f64;
    let mut m = [0.0; 4];
    for &x in &spectrum.eigenvalues {
        let mut p = 1.0;
        for mk in &mut m {
            p *= x;
            *mk += p;
        }
    }
    MomentVector { m1: m[0] / n, m2: m[1] / n, m3: m[2] / n, m4: m[3] / n }
}

/// Condition-number ceiling accepted by [`congruence`].
pub const CONGRUENCE_MAX_CONDITION: f64 = 1e12;

/// `Z A Z*` for Hermitian `A` and invertible `Z`.
pub fn congruence(a: &DMatrix<Complex64>, z: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    check_hermitian(a)?;
    let n = a.nrows();
    if z.nrows() != n || z.ncols() != n {
        return Err(Error::Dimension { expected: n, got: z.nrows().max(z.ncols()) });
    }
    if n > 0 {
        let sv = z.clone().singular_values();
        let smax = sv.iter().copied().fold(0.0, f64::max);
        let smin = sv.iter().copied().fold(f64::INFINITY, f64::min);
        let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
        if !(condition < CONGRUENCE_MAX_CONDITION) {
            return Err(Error::Singular { condition });
        }
    }
    let b = z * a * z.adjoint();
    Ok((&b + b.adjoint()).map(|x| x * 0.5))
}
