//! Complex power with the branch cut along the positive imaginary axis.

use num_complex::Complex64 as C64;
use std::f64::consts::{FRAC_PI_2, PI};

/// Argument of `z` in the interval (−3π/2, π/2].
///
/// The cut runs upward from the origin, so the lower half plane carries the
/// principal argument and the function continues analytically across both
/// halves of the real axis.
pub(crate) fn arg_cut_up(z: C64) -> f64 {
    let theta = z.arg();
    if theta < FRAC_PI_2 {
        theta
    } else {
        theta - 2.0 * PI
    }
}

/// `z^p` on the branch with arg z ∈ (−3π/2, π/2].
pub(crate) fn pow_cut_up(z: C64, p: f64) -> C64 {
    C64::from_polar(z.norm().powf(p), p * arg_cut_up(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_half_plane_matches_principal_branch() {
        let z = C64::new(0.7, -1.3);
        let p = 0.31;
        let expect = z.powf(p);
        let got = pow_cut_up(z, p);
        assert!((got - expect).norm() < 1e-15);
    }

    #[test]
    fn negative_real_axis_continues_from_below() {
        // Just below the negative real axis the argument tends to −π; the
        // cut-up branch keeps −π on the axis itself instead of jumping to +π.
        let z = C64::new(-2.0, 0.0);
        let got = pow_cut_up(z, 0.5);
        let expect = C64::from_polar(2.0_f64.sqrt(), -FRAC_PI_2);
        assert!((got - expect).norm() < 1e-15);
    }

    #[test]
    fn upper_half_plane_wraps_past_minus_pi() {
        let z = C64::new(-1.0, 1.0); // principal arg 3π/4 → cut-up arg 3π/4 − 2π
        let a = arg_cut_up(z);
        assert!((a - (0.75 * PI - 2.0 * PI)).abs() < 1e-15);
    }
}
