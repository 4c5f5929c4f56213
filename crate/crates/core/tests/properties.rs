use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trilevel::bloch::*;
use trilevel::dressed::*;
use trilevel::invariants::{conserved_subsets, random_pure_bloch, verify_invariant_numerically};
use trilevel::observables::{atomic_entropy, inversions_from_density};
use trilevel::qutrit::*;
use trilevel::{Configuration, Level, C64};

fn config() -> impl Strategy<Value = Configuration> {
    prop_oneof![Just(Configuration::Lambda), Just(Configuration::Vee), Just(Configuration::Cascade)]
}

fn level() -> impl Strategy<Value = Level> {
    prop_oneof![Just(Level::Lower), Just(Level::Middle), Just(Level::Upper)]
}

fn nonzero() -> impl Strategy<Value = f64> {
    prop_oneof![-3.0..-0.01f64, 0.01..3.0f64]
}

fn quantized(cfg: Configuration, g1: f64, g2: f64) -> QuantizedParams {
    match cfg {
        Configuration::Cascade => QuantizedParams::cascade(g1).unwrap(),
        _ => QuantizedParams::new(cfg, g1, g2).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bloch_generator_is_antisymmetric(cfg in config(), k1 in -3.0..3.0f64, k2 in -3.0..3.0f64,
                                        d1 in -3.0..3.0f64, d2 in -3.0..3.0f64) {
        let m = bloch_matrix(&SemiclassicalParams::new(cfg, k1, k2, d1, d2).unwrap());
        prop_assert!((m + m.transpose()).amax() == 0.0);
    }

    #[test]
    fn bloch_norm_is_conserved(cfg in config(), k1 in -3.0..3.0f64, k2 in -3.0..3.0f64,
                               d1 in -3.0..3.0f64, t in 0.0..50.0f64, seed in any::<u64>()) {
        let m = bloch_matrix(&SemiclassicalParams::new(cfg, k1, k2, d1, 0.3).unwrap());
        let s0 = random_pure_bloch(&mut ChaCha8Rng::seed_from_u64(seed));
        let s = evolve_bloch(&m, &s0, t).unwrap();
        prop_assert!((s.norm() - s0.norm()).abs() < 1e-10);
    }

    #[test]
    fn qutrit_states_are_pure(t0 in 0.0..=std::f64::consts::PI, t1 in 0.0..=std::f64::consts::PI,
                              t2 in 0.0..=std::f64::consts::PI, phi in -10.0..10.0f64) {
        let a = QutritAngles::new(t0, t1, t2, phi).unwrap();
        let rho = qutrit_density(&a);
        prop_assert!((rho.trace().re - 1.0).abs() < 1e-12);
        prop_assert!(((rho * rho) - rho).norm() < 1e-12);
        prop_assert!((qutrit_bloch_norm(&a) - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn block_evolution_is_unitary(cfg in config(), lvl in level(), g1 in 0.01..2.0f64, g2 in 0.01..2.0f64,
                                  m in 1u32..200, n in 1u32..200, t in 0.0..500.0f64) {
        let p = quantized(cfg, g1, g2);
        let a = amplitudes_closed_form(&p, lvl, m, n, t).unwrap();
        prop_assert!((a.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn euler_transforms_are_orthogonal(cfg in config(), lvl in level(), g1 in 0.01..2.0f64, g2 in 0.01..2.0f64,
                                       m in 1u32..200, n in 1u32..200) {
        let p = quantized(cfg, g1, g2);
        let s = euler_solution(&p, lvl, m, n).unwrap();
        let t = s.transform;
        prop_assert!((t * t.transpose() - nalgebra::Matrix3::identity()).amax() < 1e-12);
        prop_assert!((t.determinant() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cascade_rabi_frequencies_mirror(g in 0.01..2.0f64, n in 1u32..500) {
        let p = QuantizedParams::cascade(g).unwrap();
        let lower = rabi_frequency(&p, Level::Lower, 0, n + 2).unwrap();
        let upper = rabi_frequency(&p, Level::Upper, 0, n).unwrap();
        prop_assert!((lower - upper).abs() <= 1e-12 * upper);
    }

    #[test]
    fn invariant_subsets_ignore_coupling_values(cfg in config(), k1 in nonzero(), k2 in nonzero()) {
        let m = bloch_matrix(&SemiclassicalParams::resonant(cfg, k1, k2));
        let found = conserved_subsets(&m, &[3, 5]).unwrap();
        let (a, b) = exact_subsets(cfg);
        let (a, b) = (a.to_vec(), b.to_vec());
        let got: Vec<Vec<usize>> = found.iter().map(|s| s.indices().to_vec()).collect();
        prop_assert_eq!(got.len(), 2);
        prop_assert!(got.contains(&a) && got.contains(&b));
        // complements partition {1..8}
        let mut all = [a, b].concat();
        all.sort();
        prop_assert_eq!(all, (1..=8).collect::<Vec<_>>());
    }

    #[test]
    fn inversions_and_entropy_are_bounded(re in proptest::collection::vec(-1.0..1.0f64, 9),
                                          im in proptest::collection::vec(-1.0..1.0f64, 9)) {
        // random density matrix A A^dagger / Tr
        let a = nalgebra::Matrix3::<C64>::from_fn(|i, j| C64::new(re[3 * i + j], im[3 * i + j]));
        let rho = a * a.adjoint();
        let tr = rho.trace().re;
        prop_assume!(tr > 1e-6);
        let rho = rho / C64::new(tr, 0.0);
        let s = atomic_entropy(&rho).unwrap();
        prop_assert!(s >= -1e-12 && s <= 3f64.ln() + 1e-12);
        let (w12, w23, w13) = inversions_from_density(&rho);
        for w in [w12, w23, w13] {
            prop_assert!(w.abs() <= 1.0 + 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn reported_subsets_do_not_drift(cfg in config(), k1 in nonzero(), k2 in nonzero(), seed in any::<u64>()) {
        let m = bloch_matrix(&SemiclassicalParams::resonant(cfg, k1, k2));
        for s in conserved_subsets(&m, &[1, 2, 3, 4, 5, 6, 7, 8]).unwrap() {
            prop_assert!(verify_invariant_numerically(&m, &s, 5, seed).unwrap() <= 1e-9);
        }
    }
}
