//! The oracle against its references: exhaustive enumeration, the lower
//! bounds, the zero-size fast path, and the online algorithms.

mod common;

use cbp_core::algo::{
    best_fit, first_fit, next_fit, run, worst_fit, BalancedPseudo, OnlineAlgorithm, Pseudo,
    TieBreak,
};
use cbp_core::bounds::bounds_report;
use cbp_core::oracle::{opt, opt_exhaustive, opt_zero_size, OptLimits};
use cbp_core::validate_packing;
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn branch_and_bound_equals_exhaustive_enumeration(instance in instance_strategy(8)) {
        let result = opt(&instance, &OptLimits::default());
        prop_assert!(result.exact);
        prop_assert_eq!(result.bins, opt_exhaustive(&instance).unwrap());
    }

    #[test]
    fn oracle_dominates_the_lower_bounds(instance in instance_strategy(10)) {
        let result = opt(&instance, &OptLimits::default());
        prop_assert!(result.exact);
        let report = bounds_report(&instance);
        prop_assert!(result.bins >= report.lb1);
        prop_assert!(result.bins >= report.lb0_bins);
        prop_assert_eq!(validate_packing(&instance, &result.certificate), Ok(()));
        prop_assert_eq!(result.certificate.num_bins(), result.bins);
    }

    #[test]
    fn no_online_algorithm_beats_the_oracle(instance in instance_strategy(9)) {
        let result = opt(&instance, &OptLimits::default());
        prop_assert!(result.exact);
        let algorithms: Vec<Box<dyn OnlineAlgorithm>> = vec![
            Box::new(next_fit()),
            Box::new(first_fit(TieBreak::MinIndex)),
            Box::new(best_fit(TieBreak::MinIndex)),
            Box::new(worst_fit(TieBreak::MinIndex)),
            Box::new(Pseudo::new()),
            Box::new(BalancedPseudo::new(TieBreak::MinIndex)),
        ];
        for mut alg in algorithms {
            let (packing, _) = run(alg.as_mut(), &instance).unwrap();
            prop_assert!(
                packing.num_bins() >= result.bins,
                "{} used {} bins, oracle {}",
                alg.name(),
                packing.num_bins(),
                result.bins
            );
        }
    }

    #[test]
    fn zero_size_fast_path_agrees_with_the_search(instance in zero_instance_strategy(3, 14)) {
        let general = opt(&instance, &OptLimits::default());
        prop_assert!(general.exact);
        prop_assert_eq!(opt_zero_size(&instance).unwrap(), general.bins);
    }

    #[test]
    fn pseudo_is_optimal_on_two_color_zero_instances(instance in zero_instance_strategy(2, 24)) {
        let mut pseudo = Pseudo::new();
        let (packing, _) = run(&mut pseudo, &instance).unwrap();
        prop_assert_eq!(packing.num_bins(), opt_zero_size(&instance).unwrap());
    }
}
