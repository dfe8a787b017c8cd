//! PT-symmetric complex integration paths.
//!
//! Every contour is a curve t(x) parametrized by a real coordinate
//! x ∈ [−x_max, x_max] and satisfying t(−x) = −conj(t(x)), so that the path
//! is invariant under the combined parity/time-reversal action. Three kinds
//! are built in:
//!
//! * `ShiftedLine` — t(x) = x − i·c, the straight line shifted below the
//!   real axis (oscillator problems),
//! * `KsParabola` — t(x) = x·c/κ_c² + i·(x² − c²)/(2κ_c²), the upward
//!   parabola obtained by squaring the shifted line (Coulomb problems),
//! * `DecayingShiftLine` — t(x) = x − i·c/(1+|x|)^{1+η}, a line whose shift
//!   decays at the prescribed power-law rate in the asymptotic domain.
//!
//! All three avoid the origin: the downward shift c > 0 keeps the path away
//! from the centrifugal singularity.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default parameter truncation for line-type contours.
pub const DEFAULT_LINE_X_MAX: f64 = 12.0;
/// Default parameter truncation for Coulomb parabolas.
pub const DEFAULT_PARABOLA_X_MAX: f64 = 20.0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContourError {
    #[error("unsupported derivative order {0} (only 1 and 2 are available)")]
    UnsupportedDerivOrder(u32),
}

/// A PT-symmetric complex path with closed-form derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Contour {
    ShiftedLine { c: f64, x_max: f64 },
    KsParabola { c: f64, kappa_c_sq: f64, x_max: f64 },
    DecayingShiftLine { c: f64, eta: f64, x_max: f64 },
}

impl Contour {
    /// Straight line t(x) = x − i·c with the default truncation.
    pub fn shifted_line(c: f64) -> Self {
        assert!(c > 0.0, "contour shift c must be positive");
        Contour::ShiftedLine {
            c,
            x_max: DEFAULT_LINE_X_MAX,
        }
    }

    /// Upward parabola with path scale `kappa_c_sq` (a free parameter of the
    /// path, independent of any state's κ²).
    pub fn ks_parabola(c: f64, kappa_c_sq: f64) -> Self {
        assert!(c > 0.0, "contour shift c must be positive");
        assert!(kappa_c_sq > 0.0, "path scale kappa_c_sq must be positive");
        Contour::KsParabola {
            c,
            kappa_c_sq,
            x_max: DEFAULT_PARABOLA_X_MAX,
        }
    }

    /// Line with power-law decaying shift c(x) = c/(1+|x|)^{1+η}.
    pub fn decaying_shift_line(c: f64, eta: f64) -> Self {
        assert!(c > 0.0, "contour shift c must be positive");
        assert!(eta > 0.0, "decay exponent eta must be positive");
        Contour::DecayingShiftLine {
            c,
            eta,
            x_max: DEFAULT_LINE_X_MAX,
        }
    }

    pub fn with_x_max(mut self, new_x_max: f64) -> Self {
        assert!(new_x_max > 0.0);
        match &mut self {
            Contour::ShiftedLine { x_max, .. }
            | Contour::KsParabola { x_max, .. }
            | Contour::DecayingShiftLine { x_max, .. } => *x_max = new_x_max,
        }
        self
    }

    pub fn x_max(&self) -> f64 {
        match self {
            Contour::ShiftedLine { x_max, .. }
            | Contour::KsParabola { x_max, .. }
            | Contour::DecayingShiftLine { x_max, .. } => *x_max,
        }
    }

    /// Path point t(x).
    pub fn eval(&self, x: f64) -> C64 {
        match *self {
            Contour::ShiftedLine { c, .. } => C64::new(x, -c),
            Contour::KsParabola { c, kappa_c_sq, .. } => {
                C64::new(x * c / kappa_c_sq, (x * x - c * c) / (2.0 * kappa_c_sq))
            }
            Contour::DecayingShiftLine { c, eta, .. } => {
                C64::new(x, -c / (1.0 + x.abs()).powf(1.0 + eta))
            }
        }
    }

    /// First derivative dt/dx, exact.
    pub(crate) fn deriv1(&self, x: f64) -> C64 {
        match *self {
            Contour::ShiftedLine { .. } => C64::new(1.0, 0.0),
            Contour::KsParabola { c, kappa_c_sq, .. } => {
                C64::new(c / kappa_c_sq, x / kappa_c_sq)
            }
            Contour::DecayingShiftLine { c, eta, .. } => {
                // d/dx |x| taken as signum(x); at x = 0 the two one-sided
                // slopes average to the real unit.
                let s = if x > 0.0 {
                    1.0
                } else if x < 0.0 {
                    -1.0
                } else {
                    0.0
                };
                C64::new(1.0, s * c * (1.0 + eta) / (1.0 + x.abs()).powf(2.0 + eta))
            }
        }
    }

    fn deriv2(&self, x: f64) -> C64 {
        match *self {
            Contour::ShiftedLine { .. } => C64::new(0.0, 0.0),
            Contour::KsParabola { kappa_c_sq, .. } => C64::new(0.0, 1.0 / kappa_c_sq),
            Contour::DecayingShiftLine { c, eta, .. } => C64::new(
                0.0,
                -c * (1.0 + eta) * (2.0 + eta) / (1.0 + x.abs()).powf(3.0 + eta),
            ),
        }
    }

    /// Exact analytic derivative of [`Contour::eval`] of the given order.
    pub fn deriv(&self, x: f64, order: u32) -> Result<C64, ContourError> {
        match order {
            1 => Ok(self.deriv1(x)),
            2 => Ok(self.deriv2(x)),
            other => Err(ContourError::UnsupportedDerivOrder(other)),
        }
    }

    /// Maximum normalized PT-symmetry violation
    /// |t(−x) + conj(t(x))| / max(1, |t(x)|) over a uniform sample.
    ///
    /// Built-in kinds are symmetric by construction; anything above 1e−14
    /// indicates a broken path.
    pub fn check_pt_symmetry(&self, samples: usize) -> f64 {
        assert!(samples >= 2, "need at least two sample points");
        let x_max = self.x_max();
        let mut worst = 0.0_f64;
        for i in 0..samples {
            let x = -x_max + 2.0 * x_max * (i as f64) / ((samples - 1) as f64);
            let t = self.eval(x);
            let violation = (self.eval(-x) + t.conj()).norm() / t.norm().max(1.0);
            worst = worst.max(violation);
        }
        worst
    }

    pub fn spec(&self) -> ContourSpec {
        match *self {
            Contour::ShiftedLine { c, x_max } => ContourSpec {
                kind: ContourKind::ShiftedLine,
                c,
                kappa_c_sq: None,
                eta: None,
                x_max,
            },
            Contour::KsParabola {
                c,
                kappa_c_sq,
                x_max,
            } => ContourSpec {
                kind: ContourKind::KsParabola,
                c,
                kappa_c_sq: Some(kappa_c_sq),
                eta: None,
                x_max,
            },
            Contour::DecayingShiftLine { c, eta, x_max } => ContourSpec {
                kind: ContourKind::DecayingShiftLine,
                c,
                kappa_c_sq: None,
                eta: Some(eta),
                x_max,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContourKind {
    ShiftedLine,
    KsParabola,
    DecayingShiftLine,
}

impl ContourKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ContourKind::ShiftedLine => "shifted_line",
            ContourKind::KsParabola => "ks_parabola",
            ContourKind::DecayingShiftLine => "decaying_shift_line",
        }
    }
}

impl std::str::FromStr for ContourKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.replace('-', "_").as_str() {
            "shifted_line" => Ok(ContourKind::ShiftedLine),
            "ks_parabola" => Ok(ContourKind::KsParabola),
            "decaying_shift_line" => Ok(ContourKind::DecayingShiftLine),
            other => Err(format!("unknown contour kind `{other}`")),
        }
    }
}

/// Flat key-value record of a contour, used by CLI configs and CSV headers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub kind: ContourKind,
    pub c: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa_c_sq: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
    pub x_max: f64,
}

impl ContourSpec {
    pub fn to_contour(&self) -> Result<Contour, String> {
        if self.c <= 0.0 {
            return Err("contour shift c must be positive".into());
        }
        if self.x_max <= 0.0 {
            return Err("contour x_max must be positive".into());
        }
        match self.kind {
            ContourKind::ShiftedLine => Ok(Contour::ShiftedLine {
                c: self.c,
                x_max: self.x_max,
            }),
            ContourKind::KsParabola => {
                let k = self.kappa_c_sq.unwrap_or(1.0);
                if k <= 0.0 {
                    return Err("kappa_c_sq must be positive".into());
                }
                Ok(Contour::KsParabola {
                    c: self.c,
                    kappa_c_sq: k,
                    x_max: self.x_max,
                })
            }
            ContourKind::DecayingShiftLine => {
                let eta = self.eta.ok_or("decaying_shift_line needs eta")?;
                if eta <= 0.0 {
                    return Err("eta must be positive".into());
                }
                Ok(Contour::DecayingShiftLine {
                    c: self.c,
                    eta,
                    x_max: self.x_max,
                })
            }
        }
    }
}

impl std::fmt::Display for ContourSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "kind={} c={}", self.kind.as_str(), self.c)?;
        if let Some(k) = self.kappa_c_sq {
            write!(f, " kappa_c_sq={k}")?;
        }
        if let Some(eta) = self.eta {
            write!(f, " eta={eta}")?;
        }
        write!(f, " x_max={}", self.x_max)
    }
}
