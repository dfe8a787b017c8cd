//! Closed-form PT-symmetric oscillator and Coulomb models.
//!
//! Oscillator side (radial equation −χ'' + [(α²−1/4)/r² + r²]χ = ε²χ on a
//! line shifted below the real axis):
//!
//!   ε²_{(n,q)} = 4n + 2 − 2qα,
//!   χ_{(n,q)}(r) = r^{1/2−qα} e^{−r²/2} L_n^{(−qα)}(r²),
//!
//! Coulomb side (−Ψ'' + [(A²−1/4)/t² + iZe²/t]Ψ = EΨ on an upward parabola):
//!
//!   κ²_{(n,q)} = Ze²/(2n+1−2qA),
//!   E_{(n,q)} = κ⁴ = Z²e⁴/(2n+1−2qA)²,
//!   Ψ_{(n,q)}(t) = t^{1/2−qA} e^{iκ²t} L_n^{(−2qA)}(−2iκ²t).
//!
//! The quasi-parity q = ±1 labels the two solution families; both are kept.
//! Wavefunctions are unnormalized (overall constants set to 1). Powers are
//! taken on the branch cut upward from the origin, which restricts to the
//! principal branch on the lower half plane where the contours live.

use crate::cnum::pow_cut_up;
use crate::specialfn::{laguerre, laguerre_deriv, laguerre_deriv2};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("[j+(d-2)/2]^2 + f = {0} is not positive; alpha would not be real")]
    NonPositiveAlphaSquared(f64),
    #[error("[J+(D-2)/2]^2 + F = {0} is not positive; A would not be real")]
    NonPositiveASquared(f64),
    #[error("divergent state: 2n+1-2qA = {0} vanishes, the level has flown away")]
    DivergentState(f64),
    #[error("wavefunction evaluated at the origin singularity")]
    OriginEvaluation,
}

/// Quasi-parity label q ∈ {+1, −1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuasiParity {
    Plus,
    Minus,
}

impl QuasiParity {
    pub const BOTH: [QuasiParity; 2] = [QuasiParity::Plus, QuasiParity::Minus];

    pub fn sign(&self) -> f64 {
        match self {
            QuasiParity::Plus => 1.0,
            QuasiParity::Minus => -1.0,
        }
    }

    pub fn as_i8(&self) -> i8 {
        match self {
            QuasiParity::Plus => 1,
            QuasiParity::Minus => -1,
        }
    }
}

impl std::fmt::Display for QuasiParity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuasiParity::Plus => write!(f, "+1"),
            QuasiParity::Minus => write!(f, "-1"),
        }
    }
}

/// A bound-state label: principal index n and quasi-parity q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumState {
    pub n: u32,
    pub q: QuasiParity,
}

impl QuantumState {
    pub fn new(n: u32, q: QuasiParity) -> Self {
        QuantumState { n, q }
    }
}

/// Oscillator parameter bundle: dimension d, partial wave j, spike strength f.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    pub d: u32,
    pub j: u32,
    pub f: f64,
}

/// Coulomb parameter bundle: dimension D, partial wave J, spike strength F
/// and coupling Ze².
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoulombParams {
    pub big_d: u32,
    pub big_j: u32,
    pub big_f: f64,
    pub z_e2: f64,
}

/// α = sqrt([j+(d−2)/2]² + f), the oscillator's effective angular parameter.
pub fn alpha(p: &OscillatorParams) -> Result<f64, ModelError> {
    let base = p.j as f64 + (p.d as f64 - 2.0) / 2.0;
    let alpha_sq = base * base + p.f;
    if alpha_sq <= 0.0 {
        return Err(ModelError::NonPositiveAlphaSquared(alpha_sq));
    }
    Ok(alpha_sq.sqrt())
}

/// A = sqrt([J+(D−2)/2]² + F), the Coulomb effective angular parameter.
pub fn big_a(p: &CoulombParams) -> Result<f64, ModelError> {
    let base = p.big_j as f64 + (p.big_d as f64 - 2.0) / 2.0;
    let a_sq = base * base + p.big_f;
    if a_sq <= 0.0 {
        return Err(ModelError::NonPositiveASquared(a_sq));
    }
    Ok(a_sq.sqrt())
}

/// Oscillator eigenvalue ε² = 4n + 2 − 2qα.
///
/// May be non-positive for q = +1 and large α; the state still exists and the
/// value is returned as-is.
pub fn ho_energy(s: QuantumState, alpha: f64) -> f64 {
    4.0 * s.n as f64 + 2.0 - 2.0 * s.q.sign() * alpha
}

/// Unnormalized oscillator wavefunction χ_{(n,q)}(r).
pub fn ho_wavefunction(s: QuantumState, alpha: f64, r: C64) -> Result<C64, ModelError> {
    if r.norm() < 1e-12 {
        return Err(ModelError::OriginEvaluation);
    }
    let qa = s.q.sign() * alpha;
    let r_sq = r * r;
    Ok(pow_cut_up(r, 0.5 - qa) * (-r_sq / 2.0).exp() * laguerre(s.n, -qa, r_sq))
}

/// χ, dχ/dr and d²χ/dr² in closed form (product rule; no finite differences).
pub fn ho_wavefunction_derivs(
    s: QuantumState,
    alpha: f64,
    r: C64,
) -> Result<(C64, C64, C64), ModelError> {
    if r.norm() < 1e-12 {
        return Err(ModelError::OriginEvaluation);
    }
    let qa = s.q.sign() * alpha;
    let p = 0.5 - qa;
    let a = -qa;
    let r_sq = r * r;

    let f0 = pow_cut_up(r, p);
    let f1 = p * pow_cut_up(r, p - 1.0);
    let f2 = p * (p - 1.0) * pow_cut_up(r, p - 2.0);

    let g0 = (-r_sq / 2.0).exp();
    let g1 = -r * g0;
    let g2 = (r_sq - 1.0) * g0;

    let l0 = laguerre(s.n, a, r_sq);
    let l1 = laguerre_deriv(s.n, a, r_sq);
    let l2 = laguerre_deriv2(s.n, a, r_sq);
    let h0 = l0;
    let h1 = 2.0 * r * l1;
    let h2 = 2.0 * l1 + 4.0 * r_sq * l2;

    let chi = f0 * g0 * h0;
    let chi_d = f1 * g0 * h0 + f0 * g1 * h0 + f0 * g0 * h1;
    let chi_dd = f2 * g0 * h0
        + f0 * g2 * h0
        + f0 * g0 * h2
        + 2.0 * (f1 * g1 * h0 + f1 * g0 * h1 + f0 * g1 * h1);
    Ok((chi, chi_d, chi_dd))
}

/// κ² = Ze²/(2n+1−2qA). Negative κ² marks a non-normalizable state.
pub fn kappa_sq(s: QuantumState, a: f64, z_e2: f64) -> Result<f64, ModelError> {
    let denom = 2.0 * s.n as f64 + 1.0 - 2.0 * s.q.sign() * a;
    if denom.abs() < 1e-12 {
        return Err(ModelError::DivergentState(denom));
    }
    Ok(z_e2 / denom)
}

/// A Coulomb level E = κ⁴ together with its normalizability tag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoulombLevel {
    pub energy: f64,
    pub kappa_sq: f64,
    /// False when κ² < 0 (q = +1 with A > n + 1/2): the level has flown away
    /// and is absent from the physical spectrum.
    pub normalizable: bool,
}

/// Coulomb eigenvalue E = Z²e⁴/(2n+1−2qA)², tagged by normalizability.
pub fn coulomb_energy(s: QuantumState, a: f64, z_e2: f64) -> Result<CoulombLevel, ModelError> {
    let k2 = kappa_sq(s, a, z_e2)?;
    Ok(CoulombLevel {
        energy: k2 * k2,
        kappa_sq: k2,
        normalizable: k2 > 0.0,
    })
}

/// Unnormalized Coulomb wavefunction Ψ_{(n,q)}(t).
pub fn coulomb_wavefunction(
    s: QuantumState,
    a: f64,
    z_e2: f64,
    t: C64,
) -> Result<C64, ModelError> {
    if t.norm() < 1e-12 {
        return Err(ModelError::OriginEvaluation);
    }
    let k2 = kappa_sq(s, a, z_e2)?;
    let qa = s.q.sign() * a;
    let w = C64::new(0.0, -2.0 * k2) * t;
    Ok(pow_cut_up(t, 0.5 - qa) * (C64::new(0.0, k2) * t).exp() * laguerre(s.n, -2.0 * qa, w))
}

/// Ψ, dΨ/dt and d²Ψ/dt² in closed form.
pub fn coulomb_wavefunction_derivs(
    s: QuantumState,
    a: f64,
    z_e2: f64,
    t: C64,
) -> Result<(C64, C64, C64), ModelError> {
    if t.norm() < 1e-12 {
        return Err(ModelError::OriginEvaluation);
    }
    let k2 = kappa_sq(s, a, z_e2)?;
    let qa = s.q.sign() * a;
    let sexp = 0.5 - qa;
    let b = -2.0 * qa;
    let w = C64::new(0.0, -2.0 * k2) * t;
    let w1 = C64::new(0.0, -2.0 * k2);

    let p0 = pow_cut_up(t, sexp);
    let p1 = sexp * pow_cut_up(t, sexp - 1.0);
    let p2 = sexp * (sexp - 1.0) * pow_cut_up(t, sexp - 2.0);

    let ik2 = C64::new(0.0, k2);
    let q0 = (ik2 * t).exp();
    let q1 = ik2 * q0;
    let q2 = ik2 * ik2 * q0;

    let r0 = laguerre(s.n, b, w);
    let r1 = laguerre_deriv(s.n, b, w) * w1;
    let r2 = laguerre_deriv2(s.n, b, w) * w1 * w1;

    let psi = p0 * q0 * r0;
    let psi_d = p1 * q0 * r0 + p0 * q1 * r0 + p0 * q0 * r1;
    let psi_dd = p2 * q0 * r0
        + p0 * q2 * r0
        + p0 * q0 * r2
        + 2.0 * (p1 * q1 * r0 + p1 * q0 * r1 + p0 * q1 * r1);
    Ok((psi, psi_d, psi_dd))
}

/// Normalized defect of χ_{(n,q)} in the oscillator equation at the point r:
/// |−χ'' + ((α²−1/4)/r² + r²)χ − ε²χ| relative to the size of its terms.
pub fn oscillator_ode_residual(s: QuantumState, alpha: f64, r: C64) -> Result<f64, ModelError> {
    let (chi, _, chi_dd) = ho_wavefunction_derivs(s, alpha, r)?;
    let eps_sq = ho_energy(s, alpha);
    let v = (alpha * alpha - 0.25) / (r * r) + r * r;
    let residual = -chi_dd + v * chi - eps_sq * chi;
    let scale = chi_dd.norm() + (v * chi).norm() + (eps_sq * chi).norm() + 1e-300;
    Ok(residual.norm() / scale)
}

/// Normalized defect of Ψ_{(n,q)} in the Coulomb equation at the point t.
pub fn coulomb_ode_residual(
    s: QuantumState,
    a: f64,
    z_e2: f64,
    t: C64,
) -> Result<f64, ModelError> {
    let (psi, _, psi_dd) = coulomb_wavefunction_derivs(s, a, z_e2, t)?;
    let level = coulomb_energy(s, a, z_e2)?;
    let v = (a * a - 0.25) / (t * t) + C64::new(0.0, z_e2) / t;
    let residual = -psi_dd + v * psi - level.energy * psi;
    let scale = psi_dd.norm() + (v * psi).norm() + (level.energy * psi).norm() + 1e-300;
    Ok(residual.norm() / scale)
}

/// All oscillator levels with ε² inside [e_min, e_max], both parities,
/// sorted ascending by energy.
pub fn ho_levels_in_window(alpha: f64, e_min: f64, e_max: f64) -> Vec<(QuantumState, f64)> {
    let mut out = Vec::new();
    for q in QuasiParity::BOTH {
        let mut n = 0u32;
        loop {
            let e = ho_energy(QuantumState::new(n, q), alpha);
            if e > e_max {
                break;
            }
            if e >= e_min {
                out.push((QuantumState::new(n, q), e));
            }
            n += 1;
        }
    }
    out.sort_by(|a, b| a.1.total_cmp(&b.1));
    out
}

/// All normalizable Coulomb levels with E inside [e_min, e_max], both
/// parities, sorted ascending by energy.
pub fn coulomb_levels_in_window(
    a: f64,
    z_e2: f64,
    e_min: f64,
    e_max: f64,
) -> Vec<(QuantumState, f64)> {
    let mut out = Vec::new();
    for q in QuasiParity::BOTH {
        // E decreases with n once the denominator is positive; stop as soon
        // as a normalizable level falls below the window.
        let mut n = 0u32;
        loop {
            match coulomb_energy(QuantumState::new(n, q), a, z_e2) {
                Ok(level) if level.normalizable => {
                    if level.energy < e_min {
                        break;
                    }
                    if level.energy <= e_max {
                        out.push((QuantumState::new(n, q), level.energy));
                    }
                }
                _ => {} // divergent or flown-away: keep going, later n recover
            }
            n += 1;
            if n > 100_000 {
                break;
            }
        }
    }
    out.sort_by(|a, b| a.1.total_cmp(&b.1));
    out
}
