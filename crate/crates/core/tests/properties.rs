use inertia_core::bounds::{certify_inertia, inertia_upper_bound};
use inertia_core::graph::{gnp, independence_number, random_tree};
use inertia_core::scaling::{normalize_weighting, scale, support_check, SupportVerdict};
use inertia_core::spectral::{esd_moments, random_weighting};
use inertia_core::{HermitianWeighting, ScalingOutcome, SupportMatrix, WeightLaw};
use proptest::prelude::*;

fn law() -> impl Strategy<Value = WeightLaw> {
    prop::sample::select(WeightLaw::ALL.to_vec())
}

fn weighting() -> impl Strategy<Value = HermitianWeighting> {
    (1usize..14, 0.0f64..1.0, any::<u64>(), law())
        .prop_map(|(n, p, seed, law)| random_weighting(&gnp(n, p, seed).unwrap(), seed ^ 1, law))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inertia_counts_sum_to_n(a in weighting()) {
        let spec = a.spectrum().unwrap();
        let t = inertia_core::spectral::inertia(&spec, inertia_core::spectral::default_tau(a.matrix()));
        prop_assert_eq!(t.n(), a.n());
        prop_assert_eq!(t.n_nonneg(), t.n_zero + t.n_pos);
    }

    #[test]
    fn inertia_bounds_alpha(a in weighting()) {
        let alpha = independence_number(a.host()).unwrap();
        prop_assert!(alpha <= inertia_upper_bound(&a, None).unwrap());
    }

    #[test]
    fn fourth_moment_dominates_second_squared(a in weighting()) {
        let m = esd_moments(&a.spectrum().unwrap());
        prop_assert!(m.m4 >= m.m2 * m.m2 - 1e-9 * (1.0 + m.m4));
        prop_assert!(m.m1.abs() < 1e-9 * (1.0 + m.m2.sqrt()));
    }

    #[test]
    fn scaling_is_total(a in weighting()) {
        let m = SupportMatrix::from_weighting(&a);
        match scale(&m, 1e-12, 100_000).unwrap() {
            ScalingOutcome::Scaled { d } => {
                prop_assert_eq!(support_check(&m), SupportVerdict::TotalSupport);
                let dev = m.scaled_row_sums(&d).iter().map(|r| (r - 1.0).abs()).fold(0.0, f64::max);
                prop_assert!(dev <= 1e-12);
                let b = normalize_weighting(&a, &d).unwrap();
                prop_assert_eq!(b.host(), a.host());
            }
            ScalingOutcome::Violator(v) => {
                prop_assert!(!v.s.is_empty() && !v.t.is_empty());
                prop_assert!(v.s.len() + v.t.len() >= a.n());
                prop_assert!(m.block_is_zero(&v.s, &v.t));
            }
        }
    }

    #[test]
    fn diagonal_scaling_preserves_inertia(a in weighting(), scale_seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(scale_seed);
        let d: Vec<f64> = (0..a.n()).map(|_| rng.random_range(0.5..2.0)).collect();
        let b = normalize_weighting(&a, &d).unwrap();
        let gap = a.spectrum().unwrap().eigenvalues.iter().map(|x| x.abs()).fold(f64::INFINITY, f64::min);
        prop_assume!(gap > 1e-6 * (1.0 + a.frobenius_norm()));
        prop_assert_eq!(a.nonneg_count().unwrap(), b.nonneg_count().unwrap());
    }

    #[test]
    fn tree_certificates_are_sound(n in 1usize..40, seed in any::<u64>(), law in law()) {
        let a = random_weighting(&random_tree(n, seed).unwrap(), seed, law);
        let c = certify_inertia(&a).unwrap();
        c.validate().unwrap();
        prop_assert!(c.bound <= inertia_upper_bound(&a, None).unwrap());
        prop_assert!(c.bound + 1 >= n.div_ceil(4));
        let back = inertia_core::CertificateResult::from_json(&c.to_json()).unwrap();
        prop_assert_eq!(back, c);
    }
}
