//! Generalized Laguerre polynomials L_n^{(a)}(z) for complex argument and
//! real upper parameter.
//!
//! The upper parameter may be negative and non-integer (the wavefunction
//! families use a = −qα and a = −2qA, which pass through negative integers at
//! level crossings). The three-term recurrence
//!
//!   (k+1)·L_{k+1} = (2k+1+a−z)·L_k − (k+a)·L_{k−1}
//!
//! stays well defined for every real a, so no gamma-function evaluation is
//! needed anywhere.

use num_complex::Complex64 as C64;

/// L_n^{(a)}(z) by upward three-term recurrence.
pub fn laguerre(n: u32, a: f64, z: C64) -> C64 {
    let one = C64::new(1.0, 0.0);
    if n == 0 {
        return one;
    }
    let mut prev = one; // L_0
    let mut curr = C64::new(1.0 + a, 0.0) - z; // L_1
    for k in 1..n {
        let kf = k as f64;
        let next = ((C64::new(2.0 * kf + 1.0 + a, 0.0) - z) * curr
            - (kf + a) * prev)
            / (kf + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

/// d/dz L_n^{(a)}(z) = −L_{n−1}^{(a+1)}(z) for n ≥ 1, zero for n = 0.
pub fn laguerre_deriv(n: u32, a: f64, z: C64) -> C64 {
    if n == 0 {
        C64::new(0.0, 0.0)
    } else {
        -laguerre(n - 1, a + 1.0, z)
    }
}

/// d²/dz² L_n^{(a)}(z) = L_{n−2}^{(a+2)}(z) for n ≥ 2, zero otherwise.
pub fn laguerre_deriv2(n: u32, a: f64, z: C64) -> C64 {
    if n < 2 {
        C64::new(0.0, 0.0)
    } else {
        laguerre(n - 2, a + 2.0, z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: evaluate through the explicit monomial expansion
    /// L_n^{(a)}(z) = Σ_k (−1)^k/k! · [Π_{m=k+1..n}(a+m)/(n−k)!] · z^k,
    /// never touching the recurrence.
    fn laguerre_by_expansion(n: u32, a: f64, z: C64) -> C64 {
        let mut total = C64::new(0.0, 0.0);
        for k in 0..=n {
            // binom(n+a, n−k) as a plain product of (n−k) factors
            let mut coeff = 1.0_f64;
            for m in (k + 1)..=n {
                coeff *= a + m as f64;
            }
            for m in 1..=(n - k) {
                coeff /= m as f64;
            }
            let mut k_fact = 1.0_f64;
            for m in 1..=k {
                k_fact *= m as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            total += z.powu(k) * (sign * coeff / k_fact);
        }
        total
    }

    #[test]
    fn degree_zero_is_one() {
        let v = laguerre(0, -0.7, C64::new(3.0, 2.0));
        assert_eq!(v, C64::new(1.0, 0.0));
    }

    #[test]
    fn degree_two_standard_value() {
        // L_2^{(0)}(z) = (z² − 4z + 2)/2 → −1 at z = 2
        let v = laguerre(2, 0.0, C64::new(2.0, 0.0));
        assert!((v - C64::new(-1.0, 0.0)).norm() <= 1e-15);
    }

    #[test]
    fn value_at_zero_argument() {
        // L_3^{(−1/2)}(0) = (1/2)(3/2)(5/2)/3! = 0.3125
        let v = laguerre(3, -0.5, C64::new(0.0, 0.0));
        assert!((v - C64::new(0.3125, 0.0)).norm() <= 1e-15);
    }

    #[test]
    fn deriv_degree_zero_is_zero() {
        assert_eq!(
            laguerre_deriv(0, 1.3, C64::new(4.0, -2.0)),
            C64::new(0.0, 0.0)
        );
    }

    #[test]
    fn deriv_degree_one() {
        // L_1 = 1 + a − z, so the derivative is −1 everywhere.
        let v = laguerre_deriv(1, 0.0, C64::new(5.0, 0.0));
        assert!((v - C64::new(-1.0, 0.0)).norm() <= 1e-15);
    }

    #[test]
    fn deriv_matches_finite_differences() {
        let h = 1e-6;
        let z = C64::new(1.0, 1.0);
        let fd = (laguerre(2, 1.0, z + h) - laguerre(2, 1.0, z - h)) / (2.0 * h);
        let exact = laguerre_deriv(2, 1.0, z);
        assert!((fd - exact).norm() <= 1e-9);
    }

    #[test]
    fn second_deriv_matches_finite_differences() {
        let h = 1e-5;
        let z = C64::new(-0.4, 0.9);
        for n in [2u32, 4, 6] {
            let a = -1.3;
            let fd = (laguerre_deriv(n, a, z + h) - laguerre_deriv(n, a, z - h)) / (2.0 * h);
            let exact = laguerre_deriv2(n, a, z);
            assert!((fd - exact).norm() <= 1e-7 * exact.norm().max(1.0));
        }
    }

    proptest! {
        #[test]
        fn recurrence_matches_monomial_expansion(
            n in 0u32..=6,
            a in -3.0f64..3.0,
            re in -5.0f64..5.0,
            im in -5.0f64..5.0,
        ) {
            let z = C64::new(re, im);
            let rec = laguerre(n, a, z);
            let exp = laguerre_by_expansion(n, a, z);
            let scale = 1.0 + rec.norm() + exp.norm();
            prop_assert!((rec - exp).norm() <= 1e-12 * scale);
        }

        #[test]
        fn conjugation_symmetry(
            n in 0u32..=8,
            a in -3.0f64..3.0,
            re in -5.0f64..5.0,
            im in -5.0f64..5.0,
        ) {
            let z = C64::new(re, im);
            let lhs = laguerre(n, a, z.conj());
            let rhs = laguerre(n, a, z).conj();
            prop_assert!((lhs - rhs).norm() <= 1e-14 * rhs.norm().max(1.0));
        }

        #[test]
        fn zero_argument_product_formula(
            n in 0u32..=8,
            a in -3.0f64..3.0,
        ) {
            let mut expect = 1.0_f64;
            for k in 1..=n {
                expect *= (a + k as f64) / k as f64;
            }
            let got = laguerre(n, a, C64::new(0.0, 0.0));
            prop_assert!((got.re - expect).abs() <= 1e-13 * expect.abs().max(1.0));
            prop_assert!(got.im == 0.0);
        }

        #[test]
        fn derivative_identity_vs_finite_differences(
            n in 1u32..=6,
            a in -3.0f64..3.0,
            re in -4.0f64..4.0,
            im in -4.0f64..4.0,
        ) {
            let z = C64::new(re, im);
            let h = 1e-6;
            let fd = (laguerre(n, a, z + h) - laguerre(n, a, z - h)) / (2.0 * h);
            let exact = laguerre_deriv(n, a, z);
            prop_assert!((fd - exact).norm() <= 1e-8 * exact.norm().max(1.0));
        }
    }
}
