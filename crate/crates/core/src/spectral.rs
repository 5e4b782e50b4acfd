//! Spectrum of `T_Γ`, the principal eigenpair with `⟨f, j⟩ ≥ 0`, and the
//! lift of `T_Γ`-eigenvectors to eigenvectors of the walk operator:
//!
//! `φ± = (d*_σ − e^{±iθ} S d*_σ) f / (sqrt(2)·|sin θ|)`, `θ = arccos λ`,
//! with `U_σ φ± = e^{±iθ} φ±` whenever `λ ≠ ±1`.

use nalgebra::{DMatrix, DVector, Schur};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, SymmetricEigen};
use crate::operators::{self, DiscriminantMatrix};
use crate::quantum_search::QuantumState;
use crate::signed_graph::SignedCompleteGraph;

/// `λ_max ≥ 1 − DEGENERACY_TOL` is treated as the structural `λ_max = 1`.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Eigenvalues closer than this to `λ_1` count as part of the top eigenspace.
pub const MULTIPLICITY_TOL: f64 = 1e-10;

/// Matching tolerance for lifted eigenvalues against the dense spectrum of `U_σ`.
pub const MAPPING_TOL: f64 = 1e-8;

/// Unit vector in the top eigenspace with non-negative overlap with the
/// normalized all-ones vector.
///
/// For a simple top eigenvalue this is the eigenvector itself. For a
/// numerically repeated one, it is the normalized projection of `j` onto the
/// eigenspace (which maximizes `⟨f, j⟩`); if `j` is orthogonal to that space
/// the first basis vector is used.
pub fn principal_vector(eig: &SymmetricEigen) -> Vec<f64> {
    let dim = eig.dim();
    let j = 1.0 / (dim as f64).sqrt();
    let top = eig
        .values
        .iter()
        .take_while(|&&l| eig.values[0] - l < MULTIPLICITY_TOL)
        .count();
    let mut f = eig.vector(0);
    if top > 1 {
        let mut proj = DVector::zeros(dim);
        for k in 0..top {
            let v = eig.vectors.column(k);
            proj += v * (v.sum() * j);
        }
        let norm = proj.norm();
        if norm > 1e-12 {
            f = proj / norm;
        }
    }
    if f.sum() < 0.0 {
        f = -f;
    }
    f.as_slice().to_vec()
}

/// Scalars and principal pair of `T_Γ`.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    /// `λ_1 ≥ … ≥ λ_(n+1)`.
    pub eigenvalues: Vec<f64>,
    /// Unit principal eigenvector, canonical vertex order, `⟨f, j⟩ ≥ 0`.
    pub f: Vec<f64>,
    pub lambda_max: f64,
    /// `arccos(λ_max)` in radians.
    pub theta_max: f64,
    /// `λ_1 − λ_2`.
    pub gap: f64,
    /// `⟨f, j⟩²`.
    pub overlap: f64,
    /// `λ_max ≥ 1 − DEGENERACY_TOL`.
    pub degenerate: bool,
    /// Number of eigenvalues within `MULTIPLICITY_TOL` of `λ_max`.
    pub top_multiplicity: usize,
}

impl SpectralSummary {
    /// Full analysis; never fails on degenerate spectra, only flags them.
    pub fn analyze(t: &DiscriminantMatrix) -> Result<Self> {
        let eig = linalg::eigh(t.matrix())?;
        Ok(Self::from_eigen(&eig))
    }

    pub fn from_eigen(eig: &SymmetricEigen) -> Self {
        let f = principal_vector(eig);
        let lambda_max = eig.values[0];
        let overlap = {
            let j = 1.0 / (f.len() as f64).sqrt();
            let s: f64 = f.iter().sum::<f64>() * j;
            s * s
        };
        let top_multiplicity = eig
            .values
            .iter()
            .take_while(|&&l| lambda_max - l < MULTIPLICITY_TOL)
            .count();
        SpectralSummary {
            eigenvalues: eig.values.clone(),
            f,
            lambda_max,
            theta_max: lambda_max.clamp(-1.0, 1.0).acos(),
            gap: lambda_max - eig.values.get(1).copied().unwrap_or(f64::NEG_INFINITY),
            overlap,
            degenerate: lambda_max >= 1.0 - DEGENERACY_TOL,
            top_multiplicity,
        }
    }

    pub fn ensure_nondegenerate(&self) -> Result<()> {
        if self.degenerate {
            Err(Error::DegenerateSpectrum {
                lambda_max: self.lambda_max,
            })
        } else {
            Ok(())
        }
    }

    pub fn sin_theta(&self) -> f64 {
        self.theta_max.sin()
    }
}

/// Principal pair of `T_Γ`; fails when `λ_max` reaches 1.
pub fn principal_pair(t: &DiscriminantMatrix) -> Result<SpectralSummary> {
    let summary = SpectralSummary::analyze(t)?;
    summary.ensure_nondegenerate()?;
    Ok(summary)
}

/// `φ±` for `λ_max` and their combinations `β± = (φ₊ ± φ₋)/sqrt(2)`.
#[derive(Debug, Clone)]
pub struct LiftedPair {
    pub theta: f64,
    pub phi_plus: QuantumState,
    pub phi_minus: QuantumState,
    /// Real-valued.
    pub beta_plus: QuantumState,
    /// Purely imaginary; `iβ₋ = S d*_σ f`.
    pub beta_minus: QuantumState,
}

/// Lifts an arbitrary unit eigenvector `f` of `T_Γ` with eigenvalue
/// `cos θ`, `θ ∈ (0, π)`, to the two walk eigenvectors `φ±`.
pub fn lift(
    g: &SignedCompleteGraph,
    f: &[f64],
    theta: f64,
) -> Result<(QuantumState, QuantumState)> {
    if f.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            found: f.len(),
        });
    }
    let sin = theta.sin().abs();
    if sin < 1e-15 {
        return Err(Error::DegenerateSpectrum {
            lambda_max: theta.cos(),
        });
    }
    let dstar = operators::d_sigma_adjoint_apply(g, f);
    let sdstar = operators::swap_apply(g, &dstar);
    let scale = 1.0 / (std::f64::consts::SQRT_2 * sin);
    let build = |sign: f64| {
        let phase = Complex64::from_polar(1.0, sign * theta);
        dstar
            .iter()
            .zip(&sdstar)
            .map(|(&x, &y)| (Complex64::new(x, 0.0) - phase * y) * scale)
            .collect::<Vec<_>>()
    };
    Ok((
        QuantumState::from_amplitudes(build(1.0)),
        QuantumState::from_amplitudes(build(-1.0)),
    ))
}

pub fn lift_eigenvectors(g: &SignedCompleteGraph, summary: &SpectralSummary) -> Result<LiftedPair> {
    summary.ensure_nondegenerate()?;
    let (phi_plus, phi_minus) = lift(g, &summary.f, summary.theta_max)?;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let combine = |sign: f64| {
        phi_plus
            .amplitudes()
            .iter()
            .zip(phi_minus.amplitudes())
            .map(|(p, m)| (p + m * sign) * r)
            .collect::<Vec<_>>()
    };
    Ok(LiftedPair {
        theta: summary.theta_max,
        beta_plus: QuantumState::from_amplitudes(combine(1.0)),
        beta_minus: QuantumState::from_amplitudes(combine(-1.0)),
        phi_plus,
        phi_minus,
    })
}

/// One lifted eigenvalue and its distance to the nearest eigenvalue of `U_σ`.
#[derive(Debug, Clone, Serialize)]
pub struct MappingMatch {
    pub lambda: f64,
    /// `+1` for `e^{+iθ}`, `−1` for `e^{−iθ}`.
    pub sign: i8,
    pub target_re: f64,
    pub target_im: f64,
    pub distance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MappingReport {
    pub matches: Vec<MappingMatch>,
    /// Eigenvalues of `T_Γ` at `±1`, not lifted.
    pub excluded: Vec<f64>,
    pub max_distance: f64,
    pub passed: bool,
}

/// Iteration budget for the real Schur form (nalgebra's `0` means unbounded,
/// and the shifted QR iteration can stall on orthogonal matrices).
const SCHUR_MAX_ITER: usize = 20_000;

/// Largest `‖UᵀU − I‖_max` accepted by [`orthogonal_eigenvalues`].
pub const ORTHOGONALITY_TOL: f64 = 1e-10;

/// Eigenvalues of a real matrix via its real Schur form.
pub fn real_matrix_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<Complex64>> {
    let schur =
        Schur::try_new(m.clone(), f64::EPSILON, SCHUR_MAX_ITER).ok_or(Error::NoConvergence)?;
    Ok(schur.complex_eigenvalues().iter().copied().collect())
}

/// Eigenvalues of a real orthogonal matrix from its symmetric part.
///
/// `U` is normal, so `(U + Uᵀ)/2` shares its eigenvectors and has eigenvalue
/// `cos θ` wherever `U` has `e^{±iθ}`. Conjugate pairs fill even-dimensional
/// eigenspaces of the symmetric part, so walking the sorted values and
/// alternating the sign of the imaginary part reproduces the multiset.
pub fn orthogonal_eigenvalues(u: &DMatrix<f64>) -> Result<Vec<Complex64>> {
    let dim = u.nrows();
    if u.ncols() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: u.ncols(),
        });
    }
    let defect = (u.transpose() * u - DMatrix::identity(dim, dim)).amax();
    if defect > ORTHOGONALITY_TOL {
        return Err(Error::NotOrthogonal { defect });
    }
    let sym = (u + u.transpose()) * 0.5;
    let eig = linalg::eigh(&sym)?;
    let mut flip = 1.0;
    Ok(eig
        .values
        .iter()
        .map(|&c| {
            let c = c.clamp(-1.0, 1.0);
            let s = (1.0 - c * c).sqrt();
            if s == 0.0 {
                return Complex64::new(c, 0.0);
            }
            flip = -flip;
            Complex64::new(c, -flip * s)
        })
        .collect())
}

/// Checks that every `e^{±i arccos λ}`, `λ ∈ Spec(T_Γ)`, `|λ| < 1`, is an
/// eigenvalue of the dense `U_σ`.
pub fn spectral_mapping_check(g: &SignedCompleteGraph) -> Result<MappingReport> {
    let u = operators::build_u_dense(g)?;
    let t = DiscriminantMatrix::new(g);
    let eig = linalg::eigh(t.matrix())?;
    let spectrum = orthogonal_eigenvalues(&u)?;
    let mut matches = Vec::new();
    let mut excluded = Vec::new();
    for &lambda in &eig.values {
        if lambda.abs() >= 1.0 - MULTIPLICITY_TOL {
            excluded.push(lambda);
            continue;
        }
        let theta = lambda.acos();
        for sign in [1i8, -1] {
            let target = Complex64::from_polar(1.0, sign as f64 * theta);
            let distance = spectrum
                .iter()
                .map(|mu| (mu - target).norm())
                .fold(f64::INFINITY, f64::min);
            matches.push(MappingMatch {
                lambda,
                sign,
                target_re: target.re,
                target_im: target.im,
                distance,
            });
        }
    }
    let max_distance = matches.iter().map(|m| m.distance).fold(0.0, f64::max);
    Ok(MappingReport {
        passed: max_distance <= MAPPING_TOL,
        matches,
        excluded,
        max_distance,
    })
}
