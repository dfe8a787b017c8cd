//! Liouville change-of-variable engine and its complexified
//! Kustaanheimo–Stiefel specialization.
//!
//! A change of variable r = r(t) together with the rescaling
//! Ψ(t) = χ(r(t))/√(r'(t)) maps one radial problem onto another. The
//! transformed combination is
//!
//!   L(L+1)/t² + V(t) − E
//!     = (r')²·{ l(l+1)/r² + W(r) − ε² } + (3/4)(r''/r')² − (1/2)(r'''/r').
//!
//! The KS specialization uses r² = −2iκ²t, which carries the oscillator onto
//! the Coulomb problem with α = 2A and κ² = 2Ze²/ε². The engine works
//! pointwise on callables; identities are verified on grids rather than
//! symbolically.

use crate::cnum::pow_cut_up;
use num_complex::Complex64 as C64;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LiouvilleError {
    #[error("point lies on the upward cut or at the origin")]
    OnCutOrOrigin,
    #[error("map Jacobian r'(t) vanishes at the evaluation point")]
    ZeroJacobian,
    #[error("zero oscillator energy: kappa^2 = 2Ze^2/eps^2 is undefined")]
    ZeroEnergy,
}

/// Effective potential V_eff(t) = centrifugal/t² + interaction(t), together
/// with the energy that is subtracted when the full combination is formed.
#[derive(Clone)]
pub struct EffectivePotential {
    /// The l(l+1)-style coefficient of the 1/t² term.
    pub centrifugal_coeff: f64,
    interaction: Arc<dyn Fn(C64) -> C64 + Send + Sync>,
    pub energy_shift: f64,
}

impl EffectivePotential {
    pub fn new(
        centrifugal_coeff: f64,
        interaction: impl Fn(C64) -> C64 + Send + Sync + 'static,
        energy_shift: f64,
    ) -> Self {
        EffectivePotential {
            centrifugal_coeff,
            interaction: Arc::new(interaction),
            energy_shift,
        }
    }

    /// Oscillator side: (α²−1/4)/r² + r² − ε².
    pub fn oscillator(alpha: f64, epsilon_sq: f64) -> Self {
        EffectivePotential::new(alpha * alpha - 0.25, |r| r * r, epsilon_sq)
    }

    /// Coulomb side: (A²−1/4)/t² + iZe²/t − E.
    pub fn coulomb(a: f64, z_e2: f64, energy: f64) -> Self {
        EffectivePotential::new(a * a - 0.25, move |t| C64::new(0.0, z_e2) / t, energy)
    }

    /// Centrifugal plus interaction terms, without the energy shift.
    pub fn potential(&self, z: C64) -> C64 {
        self.centrifugal_coeff / (z * z) + (self.interaction)(z)
    }

    /// Full combination centrifugal/z² + interaction(z) − energy_shift.
    pub fn full(&self, z: C64) -> C64 {
        self.potential(z) - self.energy_shift
    }
}

impl std::fmt::Debug for EffectivePotential {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EffectivePotential")
            .field("centrifugal_coeff", &self.centrifugal_coeff)
            .field("energy_shift", &self.energy_shift)
            .finish_non_exhaustive()
    }
}

/// The map value r(t) with its first three derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapJet {
    pub r: C64,
    pub r1: C64,
    pub r2: C64,
    pub r3: C64,
}

impl MapJet {
    /// Jet of the identity map r(t) = t.
    pub fn identity(t: C64) -> Self {
        MapJet {
            r: t,
            r1: C64::new(1.0, 0.0),
            r2: C64::new(0.0, 0.0),
            r3: C64::new(0.0, 0.0),
        }
    }
}

/// The complexified KS map r² = −2iκ²t.
///
/// κ² is normally positive; negative values are accepted so that flown-away
/// (non-normalizable) states can be transported too — the defining relation
/// and all derivative identities hold for any κ² ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapKS {
    kappa_sq: f64,
}

impl MapKS {
    pub fn new(kappa_sq: f64) -> Self {
        assert!(
            kappa_sq != 0.0 && kappa_sq.is_finite(),
            "KS map scale must be nonzero and finite"
        );
        MapKS { kappa_sq }
    }

    pub fn kappa_sq(&self) -> f64 {
        self.kappa_sq
    }

    /// r(t) = sqrt(−2iκ²)·t^{1/2} on the branch with arg t ∈ (−3π/2, π/2),
    /// which sends the cut-upward t plane onto the lower half r plane
    /// (for κ² > 0). Derivatives in closed form: r' = −iκ²/r, r'' = κ⁴/r³,
    /// r''' = 3iκ⁶/r⁵.
    pub fn map_eval(&self, t: C64) -> Result<MapJet, LiouvilleError> {
        if t.norm() < 1e-12 {
            return Err(LiouvilleError::OnCutOrOrigin);
        }
        if t.re.abs() <= 1e-15 * t.im.abs() && t.im > 0.0 {
            return Err(LiouvilleError::OnCutOrOrigin);
        }
        let k2 = self.kappa_sq;
        let c = C64::new(0.0, -2.0 * k2).sqrt(); // principal branch
        let r = c * pow_cut_up(t, 0.5);
        let r1 = C64::new(0.0, -k2) / r;
        let r2 = k2 * k2 / (r * r * r);
        let r3 = C64::new(0.0, 3.0 * k2 * k2 * k2) / (r * r * r * r * r);
        Ok(MapJet { r, r1, r2, r3 })
    }
}

/// Transformed effective combination at the jet's base point:
/// (r')²·{cc/r² + W(r) − ε²} + (3/4)(r''/r')² − (1/2)(r'''/r').
pub fn transform_potential(
    source: &EffectivePotential,
    jet: &MapJet,
    epsilon_sq: f64,
) -> Result<C64, LiouvilleError> {
    if jet.r1.norm() < 1e-12 {
        return Err(LiouvilleError::ZeroJacobian);
    }
    let braces = source.potential(jet.r) - epsilon_sq;
    let ratio2 = jet.r2 / jet.r1;
    let ratio3 = jet.r3 / jet.r1;
    Ok(jet.r1 * jet.r1 * braces + 0.75 * ratio2 * ratio2 - 0.5 * ratio3)
}

/// Transformed wavefunction Ψ(t) = χ(r(t))/√(r'(t)).
///
/// The square root is the principal one; for the built-in KS map the Jacobian
/// stays inside one half plane along any valid contour, so the choice is
/// continuous there and only affects results by a global constant.
pub fn transform_wavefunction(
    chi: impl Fn(C64) -> C64,
    jet: &MapJet,
) -> Result<C64, LiouvilleError> {
    if jet.r1.norm() < 1e-12 {
        return Err(LiouvilleError::ZeroJacobian);
    }
    Ok(chi(jet.r) / jet.r1.sqrt())
}

/// Parameter link α = 2A of the KS pair.
pub fn ks_alpha_to_big_a(alpha: f64) -> f64 {
    alpha / 2.0
}

/// Parameter link κ² = 2Ze²/ε² of the KS pair.
pub fn ks_kappa_sq(epsilon_sq: f64, z_e2: f64) -> Result<f64, LiouvilleError> {
    if epsilon_sq.abs() < 1e-14 {
        return Err(LiouvilleError::ZeroEnergy);
    }
    Ok(2.0 * z_e2 / epsilon_sq)
}
