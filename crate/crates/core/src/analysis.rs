//! Closed-form spectral analysis: unavoided level crossings, fly-away
//! divergences, physical-dimension critical points, path diagnostics and
//! figure-data generation.
//!
//! All of it follows from E_{(n,q)} = Z²e⁴/(2n+1−2qA)²:
//!
//! * (n,+1) and (n',−1) cross at A = (n−n')/2,
//! * (n,+1) and (n',+1) cross at A = (n+n'+1)/2 (denominators opposite),
//! * the (n,+1) level flies away at A = n+1/2,
//! * with F = 0 the critical coordinates A = J−1+D/2 land exactly on
//!   integer dimensions D and partial waves J.

use crate::contour::Contour;
use crate::models::{coulomb_energy, kappa_sq, ModelError, QuantumState, QuasiParity};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("crossing needs n > n'; got n = {n}, n' = {n_prime}")]
    NonPositiveCritical { n: u32, n_prime: u32 },
    #[error("same-parity crossing needs n != n'")]
    EqualIndices,
    #[error("state is not normalizable (kappa^2 <= 0)")]
    NonNormalizable,
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossingKind {
    /// (n, q=+1) crossing (n', q=−1) at A = (n−n')/2.
    OppositeQ,
    /// (n, q=+1) crossing (n', q=+1) at A = (n+n'+1)/2.
    SamePositiveQ,
}

/// An unavoided level crossing, with the Eq.-level denominators of both
/// members so that consumers can see which side is normalizable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossingRecord {
    pub kind: CrossingKind,
    pub n: u32,
    pub n_prime: u32,
    pub a_crit: f64,
    pub energy_at_crossing: f64,
    pub denom_n: f64,
    pub denom_n_prime: f64,
}

/// Crossing of (n, +1) with (n', −1): A_crit = (n − n')/2.
pub fn crossing_opposite(n: u32, n_prime: u32, z_e2: f64) -> Result<CrossingRecord, AnalysisError> {
    if n <= n_prime {
        return Err(AnalysisError::NonPositiveCritical { n, n_prime });
    }
    let a_crit = (n - n_prime) as f64 / 2.0;
    let denom_n = 2.0 * n as f64 + 1.0 - 2.0 * a_crit;
    let denom_n_prime = 2.0 * n_prime as f64 + 1.0 + 2.0 * a_crit;
    let energy = coulomb_energy(QuantumState::new(n, QuasiParity::Plus), a_crit, z_e2)?.energy;
    Ok(CrossingRecord {
        kind: CrossingKind::OppositeQ,
        n,
        n_prime,
        a_crit,
        energy_at_crossing: energy,
        denom_n,
        denom_n_prime,
    })
}

/// Crossing of (n, +1) with (n', +1): A_crit = (n + n' + 1)/2. Exactly one of
/// the two members has κ² > 0 there; the record keeps both denominators.
pub fn crossing_same_positive(
    n: u32,
    n_prime: u32,
    z_e2: f64,
) -> Result<CrossingRecord, AnalysisError> {
    if n == n_prime {
        return Err(AnalysisError::EqualIndices);
    }
    let a_crit = (n + n_prime + 1) as f64 / 2.0;
    let denom_n = 2.0 * n as f64 + 1.0 - 2.0 * a_crit;
    let denom_n_prime = 2.0 * n_prime as f64 + 1.0 - 2.0 * a_crit;
    let energy = coulomb_energy(QuantumState::new(n, QuasiParity::Plus), a_crit, z_e2)?.energy;
    Ok(CrossingRecord {
        kind: CrossingKind::SamePositiveQ,
        n,
        n_prime,
        a_crit,
        energy_at_crossing: energy,
        denom_n,
        denom_n_prime,
    })
}

/// Divergence points (n, A_div = n + 1/2) of the q = +1 family.
pub fn divergence_points(n_max: u32) -> Vec<(u32, f64)> {
    (0..=n_max).map(|n| (n, n as f64 + 0.5)).collect()
}

/// Integer pairs (D, J) with 2 ≤ D ≤ d_max, J ≥ 0 and J − 1 + D/2 = a.
/// Empty when `a` is not reachable from integer coordinates.
pub fn physical_critical(a: f64, d_max: u32) -> Vec<(u32, u32)> {
    assert!(a > 0.0 && d_max >= 2);
    let mut out = Vec::new();
    for d in 2..=d_max {
        let j = a + 1.0 - d as f64 / 2.0;
        if j < -1e-9 {
            continue;
        }
        let rounded = j.round();
        if (j - rounded).abs() <= 1e-9 && rounded >= 0.0 {
            out.push((d, rounded as u32));
        }
    }
    out
}

/// Close-approach radius σ = c²/(2κ²) of the parabola and the effective
/// charge scale Ze²/σ (which decays like 1/n across the spectrum).
pub fn path_diagnostics(
    contour: &Contour,
    s: QuantumState,
    a: f64,
    z_e2: f64,
) -> Result<(f64, f64), AnalysisError> {
    let c = match contour {
        Contour::KsParabola { c, .. } => *c,
        _ => panic!("path diagnostics are defined for the KS parabola"),
    };
    let k2 = kappa_sq(s, a, z_e2)?;
    if k2 <= 0.0 {
        return Err(AnalysisError::NonNormalizable);
    }
    let sigma = c * c / (2.0 * k2);
    Ok((sigma, z_e2 / sigma))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureFamily {
    /// q = +1 levels against A; poles marked by empty energies.
    Fig1QPlus,
    /// q = −1 levels against A.
    Fig2QMinus,
    /// The two members of one chosen crossing against A.
    Fig3Crossing {
        kind: CrossingKind,
        n: u32,
        n_prime: u32,
    },
}

/// One row of figure data. `energy` is None within 1e−6 of a pole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FigureRow {
    pub a: f64,
    pub n: u32,
    pub q: i8,
    pub energy: Option<f64>,
    pub normalizable: bool,
}

fn figure_row(a: f64, n: u32, q: QuasiParity, z_e2: f64) -> FigureRow {
    let near_pole = q == QuasiParity::Plus && (a - (n as f64 + 0.5)).abs() <= 1e-6;
    let level = if near_pole {
        None
    } else {
        coulomb_energy(QuantumState::new(n, q), a, z_e2).ok()
    };
    FigureRow {
        a,
        n,
        q: q.as_i8(),
        energy: level.map(|l| l.energy),
        normalizable: level.map(|l| l.normalizable).unwrap_or(false),
    }
}

/// Formula-generated curve data for the three spectral figures, sorted by
/// (A, n, q).
pub fn figure_data(
    family: FigureFamily,
    a_min: f64,
    a_max: f64,
    a_step: f64,
    n_list: &[u32],
    z_e2: f64,
) -> Vec<FigureRow> {
    assert!(a_min > 0.0 && a_min < a_max && a_step > 0.0);
    let mut rows = Vec::new();
    let mut k = 0u64;
    loop {
        let a = a_min + k as f64 * a_step;
        if a > a_max * (1.0 + 1e-12) {
            break;
        }
        match family {
            FigureFamily::Fig1QPlus => {
                for &n in n_list {
                    rows.push(figure_row(a, n, QuasiParity::Plus, z_e2));
                }
            }
            FigureFamily::Fig2QMinus => {
                for &n in n_list {
                    rows.push(figure_row(a, n, QuasiParity::Minus, z_e2));
                }
            }
            FigureFamily::Fig3Crossing { kind, n, n_prime } => {
                let q_prime = match kind {
                    CrossingKind::OppositeQ => QuasiParity::Minus,
                    CrossingKind::SamePositiveQ => QuasiParity::Plus,
                };
                rows.push(figure_row(a, n, QuasiParity::Plus, z_e2));
                rows.push(figure_row(a, n_prime, q_prime, z_e2));
            }
        }
        k += 1;
    }
    rows.sort_by(|p, q| {
        p.a.total_cmp(&q.a)
            .then(p.n.cmp(&q.n))
            .then(p.q.cmp(&q.q))
    });
    rows
}
