use std::f64::consts::PI;

use ising_geometry::dynamics::{distance, speed_closed, t_min_ratio};
use ising_geometry::geometry::{
    calibrate_cross_term, fs_metric_closed, fs_metric_numeric, gaussian_curvature_closed, DEFAULT_STEP,
};
use ising_geometry::math::phase_distance;
use ising_geometry::phases::{dynamic_phase, geometric_phase, geometric_phase_closed};
use ising_geometry::spin::{
    build_initial_state, dicke_to_full, energy_moments, evolve, evolved_state, full_evolve_oracle, overlap,
    ModelParams,
};
use ising_geometry::two_spin::{
    aa_phase_of_concurrence, concurrence_closed, curvature_of_concurrence, geometric_phase_of_concurrence,
    metric_reduced_coords, speed_distance_opttime_of_concurrence, two_spin_state, wootters_concurrence,
    ConcurrencePoint,
};
use ising_geometry::{dynamics, phases};
use proptest::prelude::*;

fn interior_theta() -> impl Strategy<Value = f64> {
    0.05..(PI - 0.05)
}

fn params(n: usize, theta: f64, phi: f64, xi: f64) -> ModelParams {
    ModelParams::new(n, 1.0, theta, phi, xi).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evolution_preserves_norm(n in 1usize..=12, theta in 0.0..=PI, phi in 0.0..(2.0 * PI), xi in 0.0..20.0) {
        let p = params(n, theta, phi, xi);
        let initial = build_initial_state(&p).unwrap();
        prop_assert!((evolve(&initial, &p).unwrap().norm_sqr() - initial.norm_sqr()).abs() < 1e-14);
        let full_initial = dicke_to_full(&initial).unwrap();
        let full = full_evolve_oracle(&full_initial, &p).unwrap();
        prop_assert!((full.norm_sqr() - full_initial.norm_sqr()).abs() < 1e-14);
    }

    #[test]
    fn dicke_and_full_evolution_agree(n in 1usize..=10, theta in 0.0..=PI, phi in 0.0..(2.0 * PI), xi in 0.0..20.0) {
        let p = params(n, theta, phi, xi);
        let via_dicke = dicke_to_full(&evolve(&build_initial_state(&p).unwrap(), &p).unwrap()).unwrap();
        let via_oracle = full_evolve_oracle(&dicke_to_full(&build_initial_state(&p).unwrap()).unwrap(), &p).unwrap();
        let fidelity = via_dicke.inner(&via_oracle).unwrap().norm();
        prop_assert!(fidelity >= 1.0 - 1e-12);
    }

    #[test]
    fn overlap_modulus_ignores_phi(n in 1usize..=9, theta in 0.0..=PI, phi in 0.0..(2.0 * PI), xi in 0.0..10.0) {
        let a = overlap(&params(n, theta, 0.0, xi)).unwrap().norm();
        let b = overlap(&params(n, theta, phi, xi)).unwrap().norm();
        prop_assert!((a - b).abs() < 1e-13);
        let sa = evolved_state(&params(n, theta, 0.0, xi)).unwrap();
        let sb = evolved_state(&params(n, theta, phi, xi)).unwrap();
        for (x, y) in sa.amplitudes().iter().zip(sb.amplitudes()) {
            prop_assert!((x.norm() - y.norm()).abs() < 1e-14);
        }
    }

    #[test]
    fn even_n_state_has_period_two_pi(half in 1usize..=6, theta in 0.0..=PI, xi in 0.0..10.0) {
        let n = 2 * half;
        let a = evolved_state(&params(n, theta, 0.3, xi)).unwrap();
        let b = evolved_state(&params(n, theta, 0.3, xi + 2.0 * PI)).unwrap();
        for (x, y) in a.amplitudes().iter().zip(b.amplitudes()) {
            prop_assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn odd_n_state_has_period_eight_pi(half in 0usize..=5, theta in 0.0..=PI, xi in 0.0..10.0) {
        let n = 2 * half + 1;
        let a = evolved_state(&params(n, theta, 0.3, xi)).unwrap();
        let b = evolved_state(&params(n, theta, 0.3, xi + 8.0 * PI)).unwrap();
        for (x, y) in a.amplitudes().iter().zip(b.amplitudes()) {
            prop_assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn closed_metric_matches_finite_differences(
        n in prop::sample::select(vec![2usize, 3, 5, 8]),
        theta in interior_theta(),
        phi in 0.0..(2.0 * PI),
        xi in 0.0..6.0,
    ) {
        let p = params(n, theta, phi, xi);
        let num = fs_metric_numeric(&p, DEFAULT_STEP).unwrap();
        let closed = fs_metric_closed(&p).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                prop_assert!((num.components[i][j] - closed.components[i][j]).abs() <= 1e-6,
                    "g[{}][{}]: {} vs {}", i, j, num.components[i][j], closed.components[i][j]);
            }
        }
    }

    #[test]
    fn curvature_symmetric_about_equator(n in 2usize..=20, theta in 0.001..(PI / 2.0)) {
        let a = gaussian_curvature_closed(&params(n, theta, 0.0, 0.0)).unwrap().k;
        let b = gaussian_curvature_closed(&params(n, PI - theta, 0.0, 0.0)).unwrap().k;
        prop_assert!((a - b).abs() <= 1e-10 * a.abs().max(1.0));
    }

    #[test]
    fn two_spin_curvature_nonnegative(theta in 0.001..(PI - 0.001)) {
        prop_assert!(gaussian_curvature_closed(&params(2, theta, 0.0, 0.0)).unwrap().k >= -1e-14);
    }

    #[test]
    fn decomposition_identity(n in 1usize..=6, theta in 0.0..=PI, xi in 0.0..12.0) {
        let p = params(n, theta, 0.0, xi);
        let Ok(d) = geometric_phase(&p) else { return Ok(()); };
        prop_assert!((d.geometric.value - (d.total.value - d.dynamic.value)).abs() <= 1e-12);
        prop_assert!(phase_distance(d.geometric.value, geometric_phase_closed(&p).unwrap()) <= 1e-9);
    }

    #[test]
    fn dynamic_phase_is_mean_energy(n in 1usize..=10, theta in 0.0..=PI, xi in 0.0..12.0) {
        let p = params(n, theta, 0.0, xi);
        let (mean, _) = energy_moments(&p).unwrap();
        prop_assert!((dynamic_phase(&p).unwrap().value + xi * mean).abs() <= 1e-12 * (1.0 + xi * mean));
    }

    #[test]
    fn eigenstates_carry_no_geometric_phase(n in 1usize..=8, xi in 0.0..12.0, south in any::<bool>()) {
        let theta = if south { PI } else { 0.0 };
        let d = geometric_phase(&params(n, theta, 0.0, xi)).unwrap();
        prop_assert!(phase_distance(d.geometric.value, 0.0) <= 1e-10);
    }

    #[test]
    fn speed_vanishes_at_poles_and_is_symmetric(n in 1usize..=30, theta in 0.0..=PI) {
        let a = speed_closed(&params(n, theta, 0.0, 0.0)).unwrap();
        let b = speed_closed(&params(n, PI - theta, 0.0, 0.0)).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * (1.0 + a));
        prop_assert!(speed_closed(&params(n, 0.0, 0.0, 0.0)).unwrap() == 0.0);
    }

    #[test]
    fn distance_is_speed_times_time(n in 2usize..=12, theta in 0.0..=PI, xi in 0.0..10.0, j in 0.1..5.0f64) {
        let p = ModelParams::new(n, j, theta, 0.0, xi).unwrap();
        let s = distance(&p).unwrap();
        prop_assert!((s - speed_closed(&p).unwrap() * xi / j).abs() <= 1e-12 * (1.0 + s));
        let later = distance(&p.with_xi(xi + 0.5)).unwrap();
        prop_assert!(later >= s);
    }

    #[test]
    fn reduced_coordinates_reproduce_distances(theta in 0.05..(PI / 2.0 - 0.05), dt in -1.0..1.0f64, dx in -1.0..1.0f64) {
        let (st, ct) = (theta.sin(), theta.cos());
        let direct = 0.5 * dt * dt + 0.25 * st * st * (2.0 - st * st) * dx * dx;
        let reduced = metric_reduced_coords(st * st, 2.0 * st * ct * dt, dx).unwrap();
        prop_assert!((direct - reduced).abs() <= 1e-10);
    }

    #[test]
    fn wootters_matches_closed_concurrence(theta in 0.0..=PI, phi in 0.0..(2.0 * PI), xi in 0.0..(2.0 * PI)) {
        let st = two_spin_state(theta, phi, xi).unwrap();
        let c = wootters_concurrence(&st.density()).unwrap();
        prop_assert!((c - concurrence_closed(theta, xi)).abs() <= 1e-12);
    }

    #[test]
    fn concurrence_chart_pulls_back(theta in 0.01..(PI - 0.01), xi in 0.05..(2.0 * PI - 0.05)) {
        prop_assume!(xi.sin().abs() > 0.05);
        let pt = ConcurrencePoint::from_angles(theta, xi).unwrap();
        let p = params(2, theta, 0.0, xi);
        let k = gaussian_curvature_closed(&p).unwrap().k;
        prop_assert!((curvature_of_concurrence(&pt).unwrap() - k).abs() <= 1e-9);
        let g = geometric_phase_closed(&p).unwrap();
        prop_assert!(phase_distance(geometric_phase_of_concurrence(&pt).unwrap().value, g) <= 1e-9);
        let aa = phases::aa_phase_closed(&p).unwrap().value;
        prop_assert!((aa_phase_of_concurrence(&pt).value - aa).abs() <= 1e-9);
        let (v, s, tau) = speed_distance_opttime_of_concurrence(&pt, 1.0).unwrap();
        prop_assert!((v - speed_closed(&p).unwrap()).abs() <= 1e-9);
        prop_assert!((s - distance(&p).unwrap()).abs() <= 1e-9);
        prop_assert!(tau <= xi + 1e-12);
    }
}

#[test]
fn cross_term_calibration_holds_across_points() {
    let (conv, _) = calibrate_cross_term(&params(3, 0.8, 0.1, 0.4), DEFAULT_STEP).unwrap();
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..100 {
        let n = 2 + (next() * 7.0) as usize;
        let p = params(n, 0.05 + next() * (PI - 0.1), next() * 2.0 * PI, next() * 6.0);
        let num = fs_metric_numeric(&p, DEFAULT_STEP).unwrap().g_phi_xi();
        let closed = ising_geometry::geometry::fs_metric_closed_with(&p, conv).unwrap().g_phi_xi();
        assert!((num - closed).abs() <= 1e-6);
    }
}

#[test]
fn curvature_turns_negative_beyond_two_spins() {
    for n in 3..=12 {
        let k = gaussian_curvature_closed(&params(n, PI / 2.0, 0.0, 0.0)).unwrap().k;
        assert!(k < 0.0, "N={n}: {k}");
    }
}

#[test]
fn gauss_bonnet_closes_for_small_n() {
    for n in 2..=6 {
        let r = ising_geometry::geometry::euler_characteristic(n).unwrap();
        assert!((r.bulk_integral + r.defect_sum - 4.0 * PI).abs() <= 1e-3);
        assert_eq!(r.rounded, 2);
    }
}

#[test]
fn dynamic_phase_dominates_as_n_grows() {
    let ratios: Vec<f64> = [4usize, 8, 16, 32]
        .iter()
        .map(|&n| {
            let p = params(n, PI / 2.0, 0.0, 0.1);
            phases::total_phase(&p, None).unwrap().value.abs() / dynamic_phase(&p).unwrap().value.abs()
        })
        .collect();
    assert!(ratios.windows(2).all(|w| w[1] < w[0]), "{ratios:?}");
}

#[test]
fn optimal_time_ratio_decreases() {
    assert_eq!(t_min_ratio(2), 1.0);
    for n in 2..64 {
        assert!(t_min_ratio(n + 1) < t_min_ratio(n));
    }
    assert!(dynamics::brachistochrone(64, 1.0, 1.0).unwrap().t_min_over_t() < 0.2);
}

#[test]
fn negativity_condition_tracks_curvature_sign() {
    use ising_geometry::two_spin::negativity_condition;
    for i in 0..100 {
        let xi = 0.01 + (2.0 * PI - 0.02) * i as f64 / 99.0;
        if xi.sin().abs() < 1e-3 {
            continue;
        }
        let s = xi.sin().abs();
        for j in 0..100 {
            let pt = ConcurrencePoint::new(s * j as f64 / 99.0, xi).unwrap();
            let k = curvature_of_concurrence(&pt).unwrap();
            assert_eq!(negativity_condition(&pt), k < 0.0, "C={} xi={xi}", pt.c);
        }
    }
}

#[test]
fn speed_of_concurrence_is_unimodal_and_aa_decreasing() {
    for xi in [0.4, 1.0, 2.0, 2.9, 4.0] {
        let s = f64::sin(xi).abs();
        let vals: Vec<(f64, f64)> = (0..=200)
            .map(|k| {
                let pt = ConcurrencePoint::new(s * k as f64 / 200.0, xi).unwrap();
                (speed_distance_opttime_of_concurrence(&pt, 1.0).unwrap().0, aa_phase_of_concurrence(&pt).value)
            })
            .collect();
        assert!(vals.windows(2).all(|w| w[1].0 >= w[0].0));
        assert!(vals.windows(2).all(|w| w[1].1 < w[0].1));
        let (_, _, tau) = speed_distance_opttime_of_concurrence(&ConcurrencePoint::new(0.5 * s, xi).unwrap(), 1.0).unwrap();
        assert!(tau < xi);
    }
}
