//! Harness-level contracts: budget exhaustion skips rather than fails,
//! tie-break mutations break the trace-shaped checks but not the upper
//! bounds, and reports re-derive from their own raw fields.

// The counting bounds are asserted in their canonical `2x - 1` form.
#![allow(clippy::int_plus_one)]

use cbp_core::adversary::gen_bap_3color;
use cbp_core::algo::{run, BalancedPseudo, TieBreak};
use cbp_core::bounds::bounds_report;
use cbp_core::oracle::OptLimits;
use cbp_harness::randgen::{generate, RandomSpec, SizeMode};
use cbp_harness::ratio::{assemble_report, ratio_run, to_json, Denominator};
use cbp_harness::report::parse_rat;
use cbp_harness::suite::{self, SuiteConfig};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::time::Duration;

#[test]
fn zero_oracle_budget_skips_oracle_backed_criteria() {
    let config = SuiteConfig {
        oracle_budget: Some(Duration::ZERO),
    };
    for result in [
        suite::criterion_2(&config),
        suite::criterion_7(&config),
        suite::criterion_11(&config),
    ] {
        assert!(
            result.skipped.is_some(),
            "{} should be skipped with a reason under a zero budget",
            result.id
        );
        assert!(!result.passed);
        assert!(
            result.skipped.unwrap().contains("budget"),
            "skip reason names the budget"
        );
    }
    // Criteria that never touch the oracle still pass.
    assert!(suite::criterion_4(&config).passed);
    assert!(suite::criterion_8(&config).passed);
}

#[test]
fn inverted_ties_break_the_three_color_trace_but_not_the_bounds() {
    let gen = gen_bap_3color(2, None).unwrap();
    let mut mutated = BalancedPseudo::new(TieBreak::MaxIndex);
    let (packing, trace) = run(&mut mutated, &gen.instance).unwrap();
    // The trace-shaped claim fails: the splits land in the last chains, so
    // the first M pseudo-bins no longer hold three bins each.
    let chains = mutated.pseudo_bins();
    assert!(
        !chains
            .iter()
            .take(gen.m as usize)
            .all(|p| p.bins.len() == 3),
        "max-index ties should break the first-M-chains structure"
    );
    // The counting upper bound is tie-break-agnostic and still holds.
    let report = bounds_report(&gen.instance);
    let bins = BigRational::from_integer(BigInt::from(packing.num_bins()));
    let k = BigRational::from_integer(BigInt::from(trace.pseudo_bins_opened()));
    let two = BigRational::from_integer(BigInt::from(2));
    assert!(bins <= &two * &report.lb0 + &k);
    assert!(
        trace.pseudo_bins_opened() <= 2 * report.lb1 - 1,
        "k exceeds 2*lb1 - 1"
    );
}

#[test]
fn json_report_fields_rederive_the_printed_ratio() {
    let spec = RandomSpec::new(5, 10, vec![2, 3], SizeMode::Mixed, 99);
    let mut runs = Vec::new();
    for (idx, instance) in generate(&spec).iter().enumerate() {
        let mut bap = BalancedPseudo::new(TieBreak::MinIndex);
        runs.push(
            ratio_run(
                format!("r{idx}"),
                &mut bap,
                instance,
                Denominator::Oracle,
                None,
                &OptLimits::default(),
            )
            .unwrap(),
        );
    }
    let report = assemble_report(serde_json::json!({}), runs);
    let value = to_json(&report);
    for run in value["runs"].as_array().unwrap() {
        let bins = run["bins_alg"].as_u64().unwrap();
        let denom = run["denominator_bins"].as_u64().unwrap();
        let printed = parse_rat(run["ratio"].as_str().unwrap()).unwrap();
        assert_eq!(
            printed,
            BigRational::new(BigInt::from(bins), BigInt::from(denom))
        );
    }
}
