//! The three-color zero-size interactive adversary.
//!
//! All items have size zero and colors white/red/blue, so only last-colors
//! matter. Phase 0 presents `M` white items. Phase `i` presents `2M`
//! alternating items of the two colors other than the previous phase's
//! color `G(i-1)`, then reads the algorithm's per-color bin counts and
//! presents `M` items of a color the algorithm has the most bins of,
//! called `G(i)`. At least a third of the algorithm's bins carry `G(i)`,
//! and each of the `M` new items adds one more `G(i)` bin, which yields
//! the recurrence `N_i >= N_(i-1)/3 + M` and hence
//! `N_i >= M * (3^(i+1) - 1) / (2 * 3^i)`, approaching `3M/2`.
//!
//! The adversary maintains its own packing `pi` alongside: `M` regular
//! bins that always share one color, plus a special bin per color that
//! swallows whole alternating batches. `pi` never exceeds `M + 3` bins.

use super::{AdversaryError, LemmaCheck};
use crate::algo::{Observation, OnlineAlgorithm, Runner};
use crate::color::Color;
use crate::instance::Instance;
use crate::packing::{validate_packing, Packing};
use crate::size::Size;
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Clone)]
pub struct Zero3Transcript {
    pub m: usize,
    pub phases: usize,
    pub instance: Instance,
    pub observations: Vec<Observation>,
    /// `G(0) .. G(P)`: white, then each phase's majority color.
    pub phase_colors: Vec<Color>,
    /// `N_0 .. N_P`: the algorithm's bin count after each phase.
    pub bins_history: Vec<usize>,
    pub bins_alg: usize,
    pub certificate: Packing,
    pub certificate_bins: usize,
    pub checks: Vec<LemmaCheck>,
    pub ratio_lower_bound: BigRational,
}

impl Zero3Transcript {
    pub fn all_checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn adversary_zero3(
    algorithm: &mut dyn OnlineAlgorithm,
    m: usize,
    phases: usize,
) -> Result<Zero3Transcript, AdversaryError> {
    if m < 2 || phases < 1 {
        return Err(AdversaryError::BadParams(format!(
            "need M >= 2 and at least one phase, got M={m}, P={phases}"
        )));
    }
    let palette = [Color::white(), Color::red(), Color::blue()];
    // pi's bin labels: 0..M-1 regular, M + palette position for specials.
    let special_label = |color: &Color| -> usize {
        m + palette
            .iter()
            .position(|c| c == color)
            .expect("palette color")
    };

    let mut runner = Runner::new(algorithm);
    let mut observations = Vec::new();
    let mut labels: Vec<usize> = Vec::new();
    let feed = |runner: &mut Runner, observations: &mut Vec<Observation>, color: Color| {
        runner
            .feed(color, Size::zero())
            .expect("zero-size items always have a feasible move");
        observations.push(runner.observe_last().expect("just fed"));
    };

    for b in 0..m {
        feed(&mut runner, &mut observations, Color::white());
        labels.push(b);
    }
    let mut phase_colors = vec![Color::white()];
    let mut bins_history = vec![runner.packing().num_bins()];
    let mut recurrence_violations = Vec::new();
    let mut argmax_violations = Vec::new();

    for phase in 1..=phases {
        let previous = phase_colors.last().expect("phase 0 recorded").clone();
        let others: Vec<Color> = palette
            .iter()
            .filter(|c| **c != previous)
            .cloned()
            .collect();
        let (first, second) = (others[0].clone(), others[1].clone());
        for t in 0..2 * m {
            let color = if t % 2 == 0 {
                first.clone()
            } else {
                second.clone()
            };
            feed(&mut runner, &mut observations, color);
        }
        let counts = runner.packing().color_bin_counts();
        let count_of = |c: &Color| counts.get(c).copied().unwrap_or(0);
        // Majority color, ties preferring white, then red, then blue.
        let chosen = palette
            .iter()
            .max_by_key(|c| {
                (
                    count_of(c),
                    std::cmp::Reverse(palette.iter().position(|p| p == *c)),
                )
            })
            .expect("palette is non-empty")
            .clone();
        let n_prev = bins_history.last().copied().expect("history non-empty");
        if 3 * count_of(&chosen) < n_prev {
            argmax_violations.push(format!(
                "phase {phase}: chosen color {chosen} has {} bins < N_(i-1)/3 with N_(i-1) = {n_prev}",
                count_of(&chosen)
            ));
        }
        // pi: a changed majority sends the whole alternating batch to the
        // special bin ending in `second`; a kept majority threads the pairs
        // through the regular bins, which works because they end the phase
        // re-colored by the majority items anyway.
        if chosen != previous {
            for _ in 0..2 * m {
                labels.push(special_label(&second));
            }
        } else {
            for t in 0..2 * m {
                labels.push(t / 2);
            }
        }
        for b in 0..m {
            feed(&mut runner, &mut observations, chosen.clone());
            labels.push(b);
        }
        let n_now = runner.packing().num_bins();
        // N_i >= N_(i-1)/3 + M, exactly: 3*N_i >= N_(i-1) + 3M.
        if 3 * n_now < n_prev + 3 * m {
            recurrence_violations.push(format!("phase {phase}: 3*{n_now} < {n_prev} + 3*{m}"));
        }
        bins_history.push(n_now);
        phase_colors.push(chosen);
    }

    let (instance, packing, _trace) = runner.finish();
    let bins_alg = packing.num_bins();
    let certificate = Packing::from_assignment(&instance, &labels)
        .expect("pi placements alternate by construction");
    let certificate_bins = certificate.num_bins();

    let final_bins = *bins_history.last().expect("non-empty");
    // N_P >= M * (3^(P+1) - 1) / (2 * 3^P), checked in integers.
    let pow = BigInt::from(3).pow(phases as u32);
    let lhs = BigInt::from(final_bins) * BigInt::from(2) * &pow;
    let rhs = BigInt::from(m) * (BigInt::from(3) * &pow - BigInt::from(1));
    let final_check = if lhs >= rhs {
        LemmaCheck::passed(
            "final-bound",
            format!("{final_bins} bins >= M(3^(P+1)-1)/(2*3^P)"),
        )
    } else {
        LemmaCheck::failed(
            "final-bound",
            format!("{final_bins} bins < M(3^(P+1)-1)/(2*3^P)"),
        )
    };

    let checks = vec![
        LemmaCheck::from_violations(
            "recurrence",
            recurrence_violations,
            "N_i >= N_(i-1)/3 + M in every phase",
        ),
        LemmaCheck::from_violations(
            "argmax-legality",
            argmax_violations,
            "the majority color always holds at least a third of the bins",
        ),
        final_check,
        match validate_packing(&instance, &certificate) {
            Ok(()) => LemmaCheck::passed("certificate-valid", "certificate packing validates"),
            Err(v) => LemmaCheck::failed("certificate-valid", v.to_string()),
        },
        if certificate_bins <= m + 3 {
            LemmaCheck::passed(
                "certificate-bins",
                format!("{certificate_bins} bins <= M + 3 = {}", m + 3),
            )
        } else {
            LemmaCheck::failed(
                "certificate-bins",
                format!("{certificate_bins} bins > M + 3 = {}", m + 3),
            )
        },
    ];

    Ok(Zero3Transcript {
        m,
        phases,
        instance,
        observations,
        phase_colors,
        bins_history,
        bins_alg,
        certificate,
        certificate_bins,
        checks,
        ratio_lower_bound: BigRational::new(BigInt::from(bins_alg), BigInt::from(certificate_bins)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::{next_fit, BalancedPseudo, Pseudo, TieBreak};

    #[test]
    fn rejects_bad_params() {
        let mut alg = next_fit();
        assert!(adversary_zero3(&mut alg, 1, 3).is_err());
        assert!(adversary_zero3(&mut alg, 4, 0).is_err());
    }

    #[test]
    fn against_pseudo_with_small_params() {
        let mut alg = Pseudo::new();
        let t = adversary_zero3(&mut alg, 3, 1).unwrap();
        assert!(t.all_checks_passed(), "{:?}", t.checks);
        assert!(t.certificate_bins <= 6);
        assert_eq!(t.bins_history[0], 3);
    }

    #[test]
    fn against_several_algorithms() {
        for alg in [
            &mut next_fit() as &mut dyn OnlineAlgorithm,
            &mut Pseudo::new(),
            &mut BalancedPseudo::new(TieBreak::MinIndex),
        ] {
            let t = adversary_zero3(alg, 4, 3).unwrap();
            assert!(t.all_checks_passed(), "{:?}", t.checks);
            assert_eq!(t.bins_history.len(), 4);
            assert_eq!(t.phase_colors.len(), 4);
            assert_eq!(t.observations.len(), t.instance.len());
        }
    }

    #[test]
    fn observation_digests_match_a_replay() {
        use crate::algo::{replay, Trace};
        let mut alg = BalancedPseudo::new(TieBreak::MinIndex);
        let t = adversary_zero3(&mut alg, 3, 2).unwrap();
        // Rebuild the packing prefix by prefix; after each step the digest
        // recorded in the transcript must match the packing's counts.
        for (pos, obs) in t.observations.iter().enumerate() {
            let prefix = crate::instance::Instance::new(
                t.instance.items()[..=pos]
                    .iter()
                    .map(|it| (it.color.clone(), it.size.clone()))
                    .collect(),
            );
            let trace = Trace {
                algorithm: "replay".into(),
                tiebreak: None,
                steps: t.observations[..=pos]
                    .iter()
                    .map(|o| o.record.clone())
                    .collect(),
            };
            let packing = replay(&prefix, &trace).unwrap();
            assert_eq!(obs.color_bins, packing.color_bin_counts(), "step {pos}");
        }
    }

    #[test]
    fn alternating_batches_avoid_the_previous_color() {
        let mut alg = Pseudo::new();
        let t = adversary_zero3(&mut alg, 2, 4).unwrap();
        let mut pos = t.m; // skip phase 0
        for phase in 1..=t.phases {
            let previous = &t.phase_colors[phase - 1];
            for offset in 0..2 * t.m {
                let item = &t.instance.items()[pos + offset];
                assert_ne!(&item.color, previous, "phase {phase} offset {offset}");
            }
            pos += 3 * t.m;
        }
    }
}
