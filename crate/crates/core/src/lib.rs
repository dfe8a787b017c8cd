//! PT-symmetric harmonic oscillator / regularized Coulomb pair.
//!
//! The regularized Coulomb problem with imaginary coupling iZe² is exactly
//! solvable on a PT-symmetric parabola in the complex plane, and is tied to
//! the PT-symmetric harmonic oscillator by a complexified
//! Kustaanheimo–Stiefel change of variable r² = −2iκ²t. This crate carries
//! both closed-form solutions, the Liouville transform connecting them, and
//! an independent complex-contour shooting eigensolver that re-derives the
//! spectra numerically.
//!
//! Modules:
//!
//! * [`contour`] — PT-symmetric integration paths with exact derivatives,
//! * [`specialfn`] — generalized Laguerre polynomials for complex argument,
//! * [`models`] — spectra ε² = 4n+2−2qα and E = Z²e⁴/(2n+1−2qA)², and the
//!   unnormalized wavefunctions of both quasi-parity families,
//! * [`liouville`] — the change-of-variable engine and the KS parameter links,
//! * [`solver`] — two-sided shooting with Wronskian matching on the contour,
//! * [`analysis`] — crossings, divergences and figure-data generation.

mod cnum;

pub mod analysis;
pub mod contour;
pub mod liouville;
pub mod models;
pub mod solver;
pub mod specialfn;

pub use contour::{Contour, ContourKind, ContourSpec};
pub use liouville::{EffectivePotential, MapJet, MapKS};
pub use models::{CoulombParams, OscillatorParams, QuantumState, QuasiParity};
pub use solver::{EigenResult, ShootingProblem};
