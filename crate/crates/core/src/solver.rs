//! Independent numerical verification by complex-contour shooting.
//!
//! The radial equation −Ψ'' + (V(t) − E)Ψ = 0 is integrated along a
//! PT-symmetric contour t(x) as the first-order system
//!
//!   Ψ_x = t'(x)·Φ,   Φ_x = t'(x)·(V(t(x)) − E)·Ψ,
//!
//! from both tails toward the contour's symmetry point x = 0, starting each
//! half from the dominant decaying asymptotic form. Eigenvalues are the real
//! E at which the two half-solutions are linearly dependent, detected as
//! zeros of the normalized Wronskian modulus
//!
//!   |Ψ_L·Φ_R − Ψ_R·Φ_L| / (|Ψ_L·Φ_R| + |Ψ_R·Φ_L|).
//!
//! Nothing here uses the closed-form spectra; the scan is the independent
//! check against them.

use crate::contour::Contour;
use crate::liouville::EffectivePotential;
use num_complex::Complex64 as C64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("solution grew beyond rescaling capacity (non-finite values)")]
    OverflowUnrecoverable,
    #[error("adaptive step fell below 1e-14 at x = {0}; contour too close to a singularity")]
    StepUnderflow(f64),
    #[error("integration exceeded the step budget")]
    TooManySteps,
    #[error("Coulomb tail initialization needs E > 0, got {0}")]
    NonPositiveEnergy(f64),
    #[error("invalid scan window: need e_min < e_max and grid >= 8")]
    InvalidScanWindow,
}

/// Which decaying asymptotic form seeds the tail of a half-line integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailModel {
    /// Ψ ∝ e^{−r²/2}·r^{1/2}: Gaussian falloff of the oscillator problem.
    Oscillator,
    /// Ψ ∝ e^{iκ²t}·t^{γ} with κ² = +√E and γ = Ze²/(2κ²): Coulomb falloff
    /// on an upward parabola (Im t → +∞ kills the exponential).
    Coulomb { z_e2: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A two-sided shooting setup: potential, contour and integration knobs.
#[derive(Debug, Clone)]
pub struct ShootingProblem {
    pub potential: EffectivePotential,
    pub contour: Contour,
    pub tail: TailModel,
    /// Matching point in the contour parameter (the symmetry point).
    pub match_x: f64,
    /// Integration starts at ±tail_x.
    pub tail_x: f64,
    /// Local truncation error per step, relative to the solution scale.
    pub step_tol: f64,
    /// Residual below which a refined minimum counts as an eigenvalue.
    pub residual_accept: f64,
}

impl ShootingProblem {
    pub fn oscillator(alpha: f64, contour: Contour) -> Self {
        ShootingProblem {
            potential: EffectivePotential::oscillator(alpha, 0.0),
            tail: TailModel::Oscillator,
            match_x: 0.0,
            tail_x: contour.x_max(),
            step_tol: 1e-10,
            residual_accept: 1e-8,
            contour,
        }
    }

    pub fn coulomb(a: f64, z_e2: f64, contour: Contour) -> Self {
        ShootingProblem {
            potential: EffectivePotential::coulomb(a, z_e2, 0.0),
            tail: TailModel::Coulomb { z_e2 },
            match_x: 0.0,
            tail_x: contour.x_max(),
            step_tol: 1e-10,
            residual_accept: 1e-8,
            contour,
        }
    }

    fn tail_state(&self, e: f64, x0: f64) -> Result<(C64, C64), SolverError> {
        let t0 = self.contour.eval(x0);
        match self.tail {
            TailModel::Oscillator => {
                // log-derivative of e^{−r²/2}·r^{1/2}; unit amplitude, only
                // ratios matter downstream
                let beta = 0.5;
                Ok((C64::new(1.0, 0.0), -t0 + beta / t0))
            }
            TailModel::Coulomb { z_e2 } => {
                if e <= 0.0 {
                    return Err(SolverError::NonPositiveEnergy(e));
                }
                let k2 = e.sqrt();
                let gamma = z_e2 / (2.0 * k2);
                Ok((C64::new(1.0, 0.0), C64::new(0.0, k2) + gamma / t0))
            }
        }
    }
}

/// A located eigenvalue with solver diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResult {
    pub energy: f64,
    /// Normalized Wronskian modulus at the matching point.
    pub match_residual: f64,
    /// Matching-function evaluations spent refining this eigenvalue.
    pub evaluations: u64,
    pub converged: bool,
}

// Dormand–Prince 5(4) coefficients.
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// y5 − y4 error weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const MAX_STEPS: u64 = 2_000_000;
const RESCALE_THRESHOLD: f64 = 1e140;

#[derive(Debug, Clone, Copy)]
struct State {
    psi: C64,
    phi: C64,
}

impl State {
    fn inf_norm(&self) -> f64 {
        self.psi.norm().max(self.phi.norm())
    }
}

impl std::ops::Add for State {
    type Output = State;
    fn add(self, rhs: State) -> State {
        State {
            psi: self.psi + rhs.psi,
            phi: self.phi + rhs.phi,
        }
    }
}

impl std::ops::Mul<State> for f64 {
    type Output = State;
    fn mul(self, rhs: State) -> State {
        State {
            psi: self * rhs.psi,
            phi: self * rhs.phi,
        }
    }
}

/// Integrate one half line from x = ∓tail_x to the matching point and return
/// (Ψ, dΨ/dt) there, normalized to unit magnitude. The evaluation counter is
/// incremented by the number of right-hand-side calls.
pub fn integrate_halfline(
    p: &ShootingProblem,
    e: f64,
    side: Side,
) -> Result<(C64, C64), SolverError> {
    let mut evals = 0u64;
    integrate_halfline_counted(p, e, side, &mut evals)
}

fn integrate_halfline_counted(
    p: &ShootingProblem,
    e: f64,
    side: Side,
    evals: &mut u64,
) -> Result<(C64, C64), SolverError> {
    let (x0, x_end) = match side {
        Side::Left => (-p.tail_x, p.match_x),
        Side::Right => (p.tail_x, p.match_x),
    };
    let (psi0, phi0) = p.tail_state(e, x0)?;
    let mut y = State {
        psi: psi0,
        phi: phi0,
    };
    let mut x = x0;

    let rhs = |x: f64, y: &State, evals: &mut u64| -> State {
        *evals += 1;
        let tp = p.contour.deriv1(x);
        let t = p.contour.eval(x);
        State {
            psi: tp * y.phi,
            phi: tp * (p.potential.potential(t) - e) * y.psi,
        }
    };

    let span = x_end - x0;
    let mut h = span / 256.0;
    let mut k1 = rhs(x, &y, evals);
    let mut steps = 0u64;

    while (x_end - x) * span.signum() > 0.0 {
        if steps > MAX_STEPS {
            return Err(SolverError::TooManySteps);
        }
        steps += 1;
        if h.abs() < 1e-14 {
            return Err(SolverError::StepUnderflow(x));
        }
        // clamp the final step exactly onto the matching point
        if (x + h - x_end) * span.signum() > 0.0 {
            h = x_end - x;
        }

        let k2 = rhs(x + C2 * h, &(y + h * (A21 * k1)), evals);
        let k3 = rhs(x + C3 * h, &(y + h * (A31 * k1 + A32 * k2)), evals);
        let k4 = rhs(x + C4 * h, &(y + h * (A41 * k1 + A42 * k2 + A43 * k3)), evals);
        let k5 = rhs(
            x + C5 * h,
            &(y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4)),
            evals,
        );
        let k6 = rhs(
            x + h,
            &(y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5)),
            evals,
        );
        let y5 = y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
        let k7 = rhs(x + h, &y5, evals);

        let err = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
        let scale = p.step_tol * (y.inf_norm() + y5.inf_norm() + 1e-300);
        let err_norm = err.inf_norm() / scale;

        if !err_norm.is_finite() {
            return Err(SolverError::OverflowUnrecoverable);
        }

        if err_norm <= 1.0 {
            x += h;
            y = y5;
            k1 = k7; // first-same-as-last
            let magnitude = y.inf_norm();
            if !magnitude.is_finite() || magnitude == 0.0 {
                return Err(SolverError::OverflowUnrecoverable);
            }
            if magnitude > RESCALE_THRESHOLD {
                y.psi /= magnitude;
                y.phi /= magnitude;
                k1.psi /= magnitude;
                k1.phi /= magnitude;
            }
        }

        let factor = (0.9 * err_norm.powf(-0.2)).clamp(0.2, 5.0);
        h *= factor;
    }

    let magnitude = y.inf_norm();
    if !magnitude.is_finite() || magnitude == 0.0 {
        return Err(SolverError::OverflowUnrecoverable);
    }
    Ok((y.psi / magnitude, y.phi / magnitude))
}

/// Normalized modulus of the Wronskian mismatch at the matching point.
/// Zero exactly at eigenvalues; bounded away from zero elsewhere.
pub fn match_function(p: &ShootingProblem, e: f64) -> Result<f64, SolverError> {
    let mut evals = 0u64;
    match_function_counted(p, e, &mut evals)
}

fn match_function_counted(
    p: &ShootingProblem,
    e: f64,
    evals: &mut u64,
) -> Result<f64, SolverError> {
    let (psi_l, phi_l) = integrate_halfline_counted(p, e, Side::Left, evals)?;
    let (psi_r, phi_r) = integrate_halfline_counted(p, e, Side::Right, evals)?;
    let a = psi_l * phi_r;
    let b = psi_r * phi_l;
    Ok((a - b).norm() / (a.norm() + b.norm() + 1e-300))
}

/// Golden-section minimization of `f` on [a, b] down to the given width.
fn golden_section_min<F>(mut f: F, mut a: f64, mut b: f64, width: f64) -> Result<(f64, f64), SolverError>
where
    F: FnMut(f64) -> Result<f64, SolverError>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    let mut guard = 0;
    while (b - a).abs() > width && guard < 200 {
        guard += 1;
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 < f2 { (x1, f1) } else { (x2, f2) })
}

/// Scan the matching function on a uniform energy grid, refine every local
/// minimum below 0.1 by golden-section search, and keep the minima whose
/// residual clears the acceptance gate. An empty result is the valid outcome
/// of a window that contains no eigenvalues.
pub fn scan_eigenvalues(
    p: &ShootingProblem,
    e_min: f64,
    e_max: f64,
    grid: usize,
) -> Result<Vec<EigenResult>, SolverError> {
    if !e_min.is_finite() || !e_max.is_finite() || e_min >= e_max || grid < 8 {
        return Err(SolverError::InvalidScanWindow);
    }
    let energies: Vec<f64> = (0..grid)
        .map(|i| e_min + (e_max - e_min) * i as f64 / (grid - 1) as f64)
        .collect();
    let mut values = Vec::with_capacity(grid);
    for &e in &energies {
        values.push(match_function(p, e)?);
    }

    const CANDIDATE_CEILING: f64 = 0.1;
    let mut found: Vec<EigenResult> = Vec::new();
    for i in 0..grid {
        let is_min = match i {
            0 => values[0] < values[1],
            _ if i == grid - 1 => values[i] < values[i - 1],
            _ => values[i] < values[i - 1] && values[i] <= values[i + 1],
        };
        if !is_min || values[i] >= CANDIDATE_CEILING {
            continue;
        }
        let lo = energies[i.saturating_sub(1)];
        let hi = energies[(i + 1).min(grid - 1)];
        let width = 1e-10 * energies[i].abs().max(1.0);
        let mut evals = 0u64;
        let (e_star, residual) = golden_section_min(
            |e| match_function_counted(p, e, &mut evals),
            lo,
            hi,
            width,
        )?;
        if residual <= p.residual_accept {
            found.push(EigenResult {
                energy: e_star,
                match_residual: residual,
                evaluations: evals,
                converged: true,
            });
        }
    }

    // merge duplicates (same eigenvalue refined from adjacent grid cells)
    found.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    let mut merged: Vec<EigenResult> = Vec::new();
    for r in found {
        match merged.last_mut() {
            Some(last) if (r.energy - last.energy).abs() <= 1e-8 * last.energy.abs().max(1.0) => {
                if r.match_residual < last.match_residual {
                    *last = r;
                }
            }
            _ => merged.push(r),
        }
    }
    Ok(merged)
}
