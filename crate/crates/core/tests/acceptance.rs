//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! The criteria pin the project's claims end to end: the shooting solver must
//! rediscover both closed-form spectra without using them, the Liouville/KS
//! transform must carry the oscillator problem onto the Coulomb problem
//! pointwise, and the crossing/divergence algebra must hold at tight
//! tolerance.

use num_complex::Complex64 as C64;
use ptcl_core::analysis::{crossing_opposite, crossing_same_positive, path_diagnostics};
use ptcl_core::liouville::{
    ks_alpha_to_big_a, ks_kappa_sq, transform_potential, transform_wavefunction,
    EffectivePotential, MapKS,
};
use ptcl_core::models::{
    coulomb_energy, coulomb_ode_residual, coulomb_wavefunction, ho_energy, ho_wavefunction,
    kappa_sq, oscillator_ode_residual, QuantumState, QuasiParity,
};
use ptcl_core::solver::{scan_eigenvalues, ShootingProblem};
use ptcl_core::specialfn::{laguerre, laguerre_deriv};
use ptcl_core::Contour;

const Z_E2: f64 = 1.0;

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// The shared acceptance state set: n ≤ 3, q = ±1, α = 2A ∈ {0.6, 1, 2.4}.
fn acceptance_states() -> Vec<(QuantumState, f64)> {
    let mut out = Vec::new();
    for &alpha in &[0.6, 1.0, 2.4] {
        for q in QuasiParity::BOTH {
            for n in 0..=3u32 {
                out.push((QuantumState::new(n, q), alpha));
            }
        }
    }
    out
}

#[test]
fn criterion_1_oscillator_spectrum_reproduction() {
    let problem = ShootingProblem::oscillator(0.75, Contour::shifted_line(1.0));
    let found = scan_eigenvalues(&problem, 0.0, 16.0, 400).unwrap();

    let expected = [0.5, 3.5, 4.5, 7.5, 8.5, 11.5, 12.5, 15.5];
    assert_eq!(
        found.len(),
        expected.len(),
        "scan found {:?}",
        found.iter().map(|r| r.energy).collect::<Vec<_>>()
    );
    for (result, want) in found.iter().zip(expected) {
        let rel = ((result.energy - want) / want).abs();
        assert!(
            rel <= 1e-5,
            "eigenvalue {} vs formula {want}: relative error {rel:.2e}",
            result.energy
        );
        assert!(result.match_residual <= 1e-8);
    }
    println!("[PASS] criterion 1: oscillator scan reproduces 4n+2∓2α (8 levels, ≤1e-5)");
}

#[test]
fn criterion_2_coulomb_spectrum_reproduction() {
    let problem = ShootingProblem::coulomb(0.3, Z_E2, Contour::ks_parabola(1.0, 1.0));
    let found = scan_eigenvalues(&problem, 0.05, 3.0, 600).unwrap();

    // Every normalizable level E = Z²e⁴/(2n+1−2qA)² inside the window:
    // q=+1: n=1 → 1/2.4², n=2 → 1/4.4²; q=−1: n=0 → 1/1.6², n=1 → 1/3.6².
    let expected = [
        1.0 / (4.4_f64 * 4.4),
        1.0 / (3.6_f64 * 3.6),
        1.0 / (2.4_f64 * 2.4),
        1.0 / (1.6_f64 * 1.6),
    ];
    assert_eq!(
        found.len(),
        expected.len(),
        "scan found {:?}",
        found.iter().map(|r| r.energy).collect::<Vec<_>>()
    );
    for (result, want) in found.iter().zip(expected) {
        let rel = ((result.energy - want) / want).abs();
        assert!(
            rel <= 1e-5,
            "eigenvalue {} vs formula {want}: relative error {rel:.2e}",
            result.energy
        );
    }
    println!("[PASS] criterion 2: coulomb scan reproduces Z²e⁴/(2n+1−2qA)² (4 levels, ≤1e-5, nothing else)");
}

#[test]
fn criterion_3_fly_away_exclusion() {
    // A = 0.8, q = +1, n = 0 has κ² < 0; its formal energy 1/0.36 must not
    // show up as an eigenvalue.
    let level = coulomb_energy(QuantumState::new(0, QuasiParity::Plus), 0.8, Z_E2).unwrap();
    assert!(!level.normalizable);
    let e0 = 1.0 / 0.36;
    assert!((level.energy - e0).abs() <= 1e-12 * e0);

    let problem = ShootingProblem::coulomb(0.8, Z_E2, Contour::ks_parabola(1.0, 1.0));
    let found = scan_eigenvalues(&problem, 0.8 * e0, 1.2 * e0, 160).unwrap();
    assert!(
        found.is_empty(),
        "flown-away state reappeared: {:?}",
        found.iter().map(|r| r.energy).collect::<Vec<_>>()
    );
    println!("[PASS] criterion 3: no eigenvalue within ±20% of the flown-away energy 1/0.36");
}

#[test]
fn criterion_4_liouville_central_identity() {
    let contour = Contour::ks_parabola(1.0, 1.0);
    let xs = linspace(-contour.x_max(), contour.x_max(), 50);
    let mut checked = 0usize;
    for (s, alpha) in acceptance_states() {
        let a = ks_alpha_to_big_a(alpha);
        let eps_sq = ho_energy(s, alpha);
        let (k2_link, level) = match (ks_kappa_sq(eps_sq, Z_E2), coulomb_energy(s, a, Z_E2)) {
            (Ok(k), Ok(l)) => (k, l),
            _ => continue, // the divergent member of the set (ε² = 0)
        };
        assert!((k2_link - level.kappa_sq).abs() <= 1e-12 * k2_link.abs());
        let map = MapKS::new(k2_link);
        let source = EffectivePotential::oscillator(alpha, eps_sq);
        for &x in &xs {
            let t = contour.eval(x);
            let jet = map.map_eval(t).unwrap();
            let transformed = transform_potential(&source, &jet, eps_sq).unwrap();
            let target = (a * a - 0.25) / (t * t) + C64::new(0.0, Z_E2) / t - level.energy;
            let tol = 1e-10 * (1.0 + 1.0 / t.norm_sqr());
            let defect = (transformed - target).norm();
            assert!(
                defect <= tol,
                "state n={} q={} α={alpha}: defect {defect:.2e} > {tol:.2e} at x={x}",
                s.n,
                s.q
            );
        }
        checked += 1;
    }
    assert_eq!(checked, 23, "one divergent state is skipped, the rest verified");
    println!("[PASS] criterion 4: transformed oscillator potential equals Coulomb potential − E (23 states × 50 points, ≤1e-10·(1+|t|⁻²))");
}

#[test]
fn criterion_5_wavefunction_transport() {
    let contour = Contour::ks_parabola(1.0, 1.0);
    let xs = linspace(-10.0, 10.0, 20);
    let mut checked = 0usize;
    for (s, alpha) in acceptance_states() {
        let a = ks_alpha_to_big_a(alpha);
        let eps_sq = ho_energy(s, alpha);
        let k2 = match ks_kappa_sq(eps_sq, Z_E2) {
            Ok(k) => k,
            Err(_) => continue,
        };
        let map = MapKS::new(k2);
        let ratios: Vec<C64> = xs
            .iter()
            .map(|&x| {
                let t = contour.eval(x);
                let jet = map.map_eval(t).unwrap();
                let transported =
                    transform_wavefunction(|r| ho_wavefunction(s, alpha, r).unwrap(), &jet)
                        .unwrap();
                let direct = coulomb_wavefunction(s, a, Z_E2, t).unwrap();
                transported / direct
            })
            .collect();
        let mean = ratios.iter().sum::<C64>() / ratios.len() as f64;
        for ratio in &ratios {
            let variance = (ratio - mean).norm() / mean.norm();
            assert!(
                variance <= 1e-10,
                "state n={} q={} α={alpha}: ratio spread {variance:.2e}",
                s.n,
                s.q
            );
        }
        checked += 1;
    }
    assert_eq!(checked, 23);
    println!("[PASS] criterion 5: transform_wavefunction(χ) ∝ Ψ (23 states × 20 points, ratio variance ≤1e-10)");
}

#[test]
fn criterion_6_ode_residuals() {
    let line = Contour::shifted_line(1.0);
    let parabola = Contour::ks_parabola(1.0, 1.0);
    let xs_line = linspace(-line.x_max(), line.x_max(), 50);
    let xs_parab = linspace(-parabola.x_max(), parabola.x_max(), 50);

    for (s, alpha) in acceptance_states() {
        for &x in &xs_line {
            let res = oscillator_ode_residual(s, alpha, line.eval(x)).unwrap();
            assert!(
                res <= 1e-9,
                "oscillator residual {res:.2e} for n={} q={} α={alpha} at x={x}",
                s.n,
                s.q
            );
        }
        let a = ks_alpha_to_big_a(alpha);
        if kappa_sq(s, a, Z_E2).is_err() {
            continue;
        }
        for &x in &xs_parab {
            let res = coulomb_ode_residual(s, a, Z_E2, parabola.eval(x)).unwrap();
            assert!(
                res <= 1e-9,
                "coulomb residual {res:.2e} for n={} q={} A={a} at x={x}",
                s.n,
                s.q
            );
        }
    }
    println!("[PASS] criterion 6: closed-form χ and Ψ satisfy their equations along the contours (residual ≤1e-9)");
}

#[test]
fn criterion_7_crossing_algebra() {
    // exact crossings for 0 ≤ n' < n ≤ 6
    for n in 1..=6u32 {
        for n_prime in 0..n {
            let rec = crossing_opposite(n, n_prime, Z_E2).unwrap();
            let e_plus = coulomb_energy(QuantumState::new(n, QuasiParity::Plus), rec.a_crit, Z_E2)
                .unwrap()
                .energy;
            let e_minus = coulomb_energy(
                QuantumState::new(n_prime, QuasiParity::Minus),
                rec.a_crit,
                Z_E2,
            )
            .unwrap()
            .energy;
            assert!(
                (e_plus - e_minus).abs() <= 1e-13 * e_plus,
                "opposite-q crossing ({n},{n_prime})"
            );

            let rec = crossing_same_positive(n, n_prime, Z_E2).unwrap();
            let e1 = coulomb_energy(QuantumState::new(n, QuasiParity::Plus), rec.a_crit, Z_E2)
                .unwrap()
                .energy;
            let e2 = coulomb_energy(
                QuantumState::new(n_prime, QuasiParity::Plus),
                rec.a_crit,
                Z_E2,
            )
            .unwrap()
            .energy;
            assert!(
                (e1 - e2).abs() <= 1e-13 * e1,
                "same-positive crossing ({n},{n_prime})"
            );
        }
    }

    // dense grid: away from the listed critical values there are no other
    // degeneracies among the n ≤ 4 levels
    let mut criticals = Vec::new();
    for n in 0..=4u32 {
        for n_prime in 0..=4u32 {
            if n > n_prime {
                criticals.push((n - n_prime) as f64 / 2.0);
            }
            if n != n_prime {
                criticals.push((n + n_prime + 1) as f64 / 2.0);
            }
        }
    }

    let step = 1e-3;
    let exclusion = 1.5 * step;
    let states: Vec<QuantumState> = (0..=4u32)
        .flat_map(|n| QuasiParity::BOTH.map(|q| QuantumState::new(n, q)))
        .collect();
    let mut floor = f64::INFINITY;
    let mut k = 1u64;
    loop {
        let a = k as f64 * step;
        if a > 4.0 + 1e-12 {
            break;
        }
        k += 1;
        if criticals.iter().any(|c| (a - c).abs() < exclusion) {
            continue;
        }
        let energies: Vec<f64> = states
            .iter()
            .map(|s| coulomb_energy(*s, a, Z_E2).unwrap().energy)
            .collect();
        for i in 0..energies.len() {
            for j in (i + 1)..energies.len() {
                floor = floor.min((energies[i] - energies[j]).abs());
            }
        }
    }
    assert!(floor > 0.0, "unlisted crossing detected");
    assert!(
        floor > 1e-6,
        "energy-difference floor suspiciously small: {floor:.2e}"
    );
    println!("[PASS] criterion 7: crossings exact at (n−n')/2 and (n+n'+1)/2 (≤1e-13); no unlisted crossings on the dense grid (floor {floor:.2e})");
}

#[test]
fn criterion_8_path_independence() {
    let parametrizations = [(1.0, 1.0), (0.5, 1.0), (1.0, 2.0)];
    let mut spectra = Vec::new();
    for (c, kappa_c_sq) in parametrizations {
        let problem = ShootingProblem::coulomb(0.3, Z_E2, Contour::ks_parabola(c, kappa_c_sq));
        let found = scan_eigenvalues(&problem, 0.05, 3.0, 600).unwrap();
        assert_eq!(found.len(), 4, "parabola (c={c}, κ_c²={kappa_c_sq})");
        spectra.push(found.iter().map(|r| r.energy).collect::<Vec<f64>>());
    }
    for i in 0..spectra.len() {
        for j in (i + 1)..spectra.len() {
            for (ea, eb) in spectra[i].iter().zip(&spectra[j]) {
                let rel = ((ea - eb) / ea).abs();
                assert!(
                    rel <= 1e-6,
                    "path dependence between parametrizations {i} and {j}: {rel:.2e}"
                );
            }
        }
    }
    println!("[PASS] criterion 8: eigenvalues agree across three parabola parametrizations (≤1e-6)");
}

#[test]
fn criterion_9_property_suites() {
    // contour PT symmetry
    for contour in [
        Contour::shifted_line(0.5),
        Contour::shifted_line(1.0),
        Contour::ks_parabola(1.0, 1.0),
        Contour::ks_parabola(0.5, 2.0),
        Contour::decaying_shift_line(1.0, 0.5),
    ] {
        assert!(contour.check_pt_symmetry(101) <= 1e-14);
    }

    // Laguerre recurrence against the monomial expansion on a fixed grid
    let expansion = |n: u32, a: f64, z: C64| -> C64 {
        let mut total = C64::new(0.0, 0.0);
        for k in 0..=n {
            let mut coeff = 1.0_f64;
            for m in (k + 1)..=n {
                coeff *= a + m as f64;
            }
            for m in 1..=(n - k) {
                coeff /= m as f64;
            }
            for m in 1..=k {
                coeff /= m as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            total += z.powu(k) * (sign * coeff);
        }
        total
    };
    for n in 0..=6u32 {
        for &a in &[-2.5, -1.0, -0.5, 0.0, 0.7, 2.0] {
            for &z in &[
                C64::new(0.0, 0.0),
                C64::new(2.0, 0.0),
                C64::new(-1.5, 3.0),
                C64::new(4.0, -4.0),
                C64::new(-5.0, -2.0),
            ] {
                let rec = laguerre(n, a, z);
                let exp = expansion(n, a, z);
                assert!((rec - exp).norm() <= 1e-12 * (1.0 + rec.norm() + exp.norm()));

                let h = 1e-6;
                let fd = (laguerre(n, a, z + h) - laguerre(n, a, z - h)) / (2.0 * h);
                let exact = laguerre_deriv(n, a, z);
                assert!((fd - exact).norm() <= 1e-8 * exact.norm().max(1.0));
            }
        }
    }

    // PT modulus symmetry of both wavefunction families
    let line = Contour::shifted_line(1.0);
    let parabola = Contour::ks_parabola(1.0, 1.0);
    for (s, alpha) in acceptance_states() {
        let a = ks_alpha_to_big_a(alpha);
        for &x in &[0.6, 2.2, 5.0, 9.0] {
            let lhs = ho_wavefunction(s, alpha, line.eval(-x)).unwrap().norm();
            let rhs = ho_wavefunction(s, alpha, line.eval(x)).unwrap().norm();
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
            if kappa_sq(s, a, Z_E2).is_ok() {
                let lhs = coulomb_wavefunction(s, a, Z_E2, parabola.eval(-x))
                    .unwrap()
                    .norm();
                let rhs = coulomb_wavefunction(s, a, Z_E2, parabola.eval(x))
                    .unwrap()
                    .norm();
                assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
            }
        }
    }

    // equidistance and quasi-parity splitting
    for &alpha in &[0.3, 0.75, 1.0, 2.4, 3.7] {
        for q in QuasiParity::BOTH {
            for n in 0..20u32 {
                let gap = ho_energy(QuantumState::new(n + 1, q), alpha)
                    - ho_energy(QuantumState::new(n, q), alpha);
                assert!((gap - 4.0).abs() <= 1e-13);
            }
        }
        for n in 0..20u32 {
            let split = ho_energy(QuantumState::new(n, QuasiParity::Minus), alpha)
                - ho_energy(QuantumState::new(n, QuasiParity::Plus), alpha);
            assert!((split - 4.0 * alpha).abs() <= 1e-13 * (1.0 + 4.0 * alpha));
        }
    }

    // σ grows and the effective charge decays with n
    let mut last_sigma = 0.0;
    let mut last_charge = f64::INFINITY;
    for n in 0..=50u32 {
        let (sigma, charge) = path_diagnostics(
            &parabola,
            QuantumState::new(n, QuasiParity::Minus),
            0.5,
            Z_E2,
        )
        .unwrap();
        assert!(sigma > last_sigma && charge < last_charge, "n = {n}");
        last_sigma = sigma;
        last_charge = charge;
    }

    println!("[PASS] criterion 9: PT symmetry, Laguerre identities, modulus symmetry, equidistance/splitting, σ/effective-charge monotonicity");
}
