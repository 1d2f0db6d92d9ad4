//! The two-color interactive adversary forcing ratio 2.
//!
//! Black and white items only. With `eps = 1/N^3` and
//! `delta_i = 1/(5^i * N^3)`, the interaction runs in phases. A phase
//! starts with a regular white item of size `eps` followed by a regular
//! black item of size `delta_i` (`i` counts these pairs). If the algorithm
//! put that black item into a new bin, the phase simply ends: the new bin
//! was wasted. Otherwise the black item sits on top of a white one, and the
//! adversary punishes: a special black item of size `3*delta_i`, a huge
//! white item of size `1 - 2*delta_i` (which fits with no black item packed
//! so far except the one just buried), and a closing regular black item of
//! size `delta_i`. `j` counts these punished phases. The input stops at
//! `j = N`, or at `i = N^2` after topping up with `N - j` white items of
//! size 1.
//!
//! The certificate packs each huge white item between its two flanking
//! regular blacks (the triple sums to exactly 1), gives each size-1 white
//! its own bin, and pours the alternating leftovers into one bin: `N + 1`
//! bins. The algorithm meanwhile cannot avoid `2j + 1` black bins, or one
//! new bin per phase, whichever termination occurs.

use super::{AdversaryError, LemmaCheck};
use crate::algo::{Observation, OnlineAlgorithm, Runner};
use crate::color::Color;
use crate::instance::Instance;
use crate::packing::{validate_packing, Packing};
use crate::size::Size;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lb2Termination {
    /// `j` reached `N`.
    HugeWhites,
    /// `i` reached `N^2`; size-1 whites were appended.
    RegularWhites,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    RegularWhite,
    /// The black item that opens a phase (size `delta_i`).
    LeadBlack {
        phase: u64,
        punished: bool,
    },
    SpecialBlack {
        phase: u64,
    },
    HugeWhite {
        phase: u64,
    },
    /// The black item closing a punished phase.
    TailBlack {
        phase: u64,
    },
    HugeOne,
}

#[derive(Debug, Clone)]
pub struct Lb2Transcript {
    pub n: u64,
    pub instance: Instance,
    pub observations: Vec<Observation>,
    pub final_i: u64,
    pub final_j: u64,
    pub termination: Lb2Termination,
    pub bins_alg: usize,
    pub certificate: Packing,
    pub certificate_bins: usize,
    pub checks: Vec<LemmaCheck>,
    /// `bins_alg / certificate_bins`; the certificate bounds the optimum
    /// from above, so this bounds the algorithm's ratio from below.
    pub ratio_lower_bound: BigRational,
}

impl Lb2Transcript {
    pub fn all_checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn adversary_lb2(
    algorithm: &mut dyn OnlineAlgorithm,
    n: u64,
) -> Result<Lb2Transcript, AdversaryError> {
    if n <= 3 {
        return Err(AdversaryError::BadParams(format!(
            "the construction needs N > 3, got {n}"
        )));
    }
    let n_cubed = BigInt::from(n).pow(3);
    let eps = BigRational::new(BigInt::one(), n_cubed.clone());
    let delta = |i: u64| -> BigRational {
        BigRational::new(
            BigInt::one(),
            BigInt::from(5).pow(u32::try_from(i).expect("i <= N^2")) * &n_cubed,
        )
    };
    let white_regular = Size::new(eps.clone()).expect("eps < 1");

    let mut runner = Runner::new(algorithm);
    let mut observations = Vec::new();
    let mut roles: Vec<Role> = Vec::new();
    let mut i = 0u64;
    let mut j = 0u64;
    let mut bins_violations: Vec<String> = Vec::new();
    let mut black_bin_violations: Vec<String> = Vec::new();

    let feed = |runner: &mut Runner,
                observations: &mut Vec<Observation>,
                roles: &mut Vec<Role>,
                color: Color,
                size: Size,
                role: Role|
     -> bool {
        let record = runner
            .feed(color, size)
            .expect("online algorithms always have a feasible move");
        roles.push(role);
        observations.push(runner.observe_last().expect("just fed"));
        record.opened_bin
    };

    let termination = loop {
        if j == n {
            break Lb2Termination::HugeWhites;
        }
        if i == n * n {
            for _ in 0..(n - j) {
                feed(
                    &mut runner,
                    &mut observations,
                    &mut roles,
                    Color::white(),
                    Size::one(),
                    Role::HugeOne,
                );
            }
            let bins = runner.packing().num_bins() as u64;
            if bins < i + (n - j) {
                bins_violations.push(format!(
                    "after the size-1 whites: {bins} bins < i + (N - j) = {}",
                    i + (n - j)
                ));
            }
            break Lb2Termination::RegularWhites;
        }
        i += 1;
        let d = Size::new(delta(i)).expect("delta < 1");
        feed(
            &mut runner,
            &mut observations,
            &mut roles,
            Color::white(),
            white_regular.clone(),
            Role::RegularWhite,
        );
        let opened = feed(
            &mut runner,
            &mut observations,
            &mut roles,
            Color::black(),
            d.clone(),
            Role::LeadBlack {
                phase: i,
                punished: false,
            },
        );
        if !opened {
            // The black item was stacked onto a white one: punish.
            *roles.last_mut().unwrap() = Role::LeadBlack {
                phase: i,
                punished: true,
            };
            j += 1;
            feed(
                &mut runner,
                &mut observations,
                &mut roles,
                Color::black(),
                Size::new(BigRational::from_integer(BigInt::from(3)) * delta(i))
                    .expect("3*delta < 1"),
                Role::SpecialBlack { phase: i },
            );
            feed(
                &mut runner,
                &mut observations,
                &mut roles,
                Color::white(),
                Size::new(
                    BigRational::one() - BigRational::from_integer(BigInt::from(2)) * delta(i),
                )
                .expect("1 - 2*delta in (0, 1)"),
                Role::HugeWhite { phase: i },
            );
            feed(
                &mut runner,
                &mut observations,
                &mut roles,
                Color::black(),
                d,
                Role::TailBlack { phase: i },
            );
            let black_bins = runner
                .packing()
                .color_bin_counts()
                .get(&Color::black())
                .copied()
                .unwrap_or(0) as u64;
            if black_bins < 2 * j + 1 {
                black_bin_violations.push(format!(
                    "at j = {j}: {black_bins} black bins < 2j + 1 = {}",
                    2 * j + 1
                ));
            }
        }
        let bins = runner.packing().num_bins() as u64;
        if bins < i {
            bins_violations.push(format!("after phase {i}: {bins} bins < i"));
        }
    };

    let (instance, packing, _trace) = runner.finish();
    let bins_alg = packing.num_bins();

    // Certificate: triples (lead black, huge white, tail black) per punished
    // phase, one bin per size-1 white, one bin for the rest.
    let labels: Vec<usize> = roles
        .iter()
        .enumerate()
        .map(|(pos, role)| match role {
            Role::LeadBlack {
                phase,
                punished: true,
            }
            | Role::HugeWhite { phase }
            | Role::TailBlack { phase } => *phase as usize,
            Role::HugeOne => n as usize * n as usize + 1 + pos,
            _ => 0, // the shared leftover bin
        })
        .collect();
    let certificate = Packing::from_assignment(&instance, &labels)
        .expect("triples sum to exactly 1 and leftovers stay below 1");
    let certificate_bins = certificate.num_bins();

    let mut checks = Vec::new();
    checks.push(check_sizes(&instance, &roles, &eps));
    checks.push(check_cross_phase_pairs(&instance, &roles));
    checks.push(LemmaCheck::from_violations(
        "bins-at-least-i",
        bins_violations,
        format!("bins {bins_alg} >= i = {i} at every phase end"),
    ));
    checks.push(LemmaCheck::from_violations(
        "black-bins-at-least-2j-plus-1",
        black_bin_violations,
        format!("black bins >= 2j + 1 at every j increase (final j = {j})"),
    ));
    checks.push(match validate_packing(&instance, &certificate) {
        Ok(()) => LemmaCheck::passed("certificate-valid", "certificate packing validates"),
        Err(v) => LemmaCheck::failed("certificate-valid", v.to_string()),
    });
    checks.push(if certificate_bins as u64 <= n + 1 {
        LemmaCheck::passed(
            "certificate-bins",
            format!("{certificate_bins} bins <= N + 1 = {}", n + 1),
        )
    } else {
        LemmaCheck::failed(
            "certificate-bins",
            format!("{certificate_bins} bins > N + 1 = {}", n + 1),
        )
    });

    Ok(Lb2Transcript {
        n,
        instance,
        observations,
        final_i: i,
        final_j: j,
        termination,
        bins_alg,
        certificate,
        certificate_bins,
        checks,
        ratio_lower_bound: BigRational::new(BigInt::from(bins_alg), BigInt::from(certificate_bins)),
    })
}

fn check_sizes(instance: &Instance, roles: &[Role], eps: &BigRational) -> LemmaCheck {
    let threshold = BigRational::one() - eps;
    let mut violations = Vec::new();
    for (item, role) in instance.items().iter().zip(roles) {
        match role {
            Role::HugeWhite { .. } | Role::HugeOne => {
                if item.size.value() <= &threshold {
                    violations.push(format!(
                        "huge white item {} has size {} <= 1 - eps",
                        item.index, item.size
                    ));
                }
            }
            Role::LeadBlack { .. } | Role::SpecialBlack { .. } | Role::TailBlack { .. } => {
                if item.size.value() >= eps {
                    violations.push(format!(
                        "black item {} has size {} >= eps",
                        item.index, item.size
                    ));
                }
            }
            Role::RegularWhite => {}
        }
    }
    LemmaCheck::from_violations(
        "size-bounds",
        violations,
        "every huge white > 1 - eps, every black < eps",
    )
}

/// A huge white item of a later phase plus any black item of an earlier
/// phase overflows a bin: their sizes sum strictly above 1.
fn check_cross_phase_pairs(instance: &Instance, roles: &[Role]) -> LemmaCheck {
    let black_phase = |role: &Role| match role {
        Role::LeadBlack { phase, .. }
        | Role::SpecialBlack { phase }
        | Role::TailBlack { phase } => Some(*phase),
        _ => None,
    };
    let mut violations = Vec::new();
    let mut pairs = 0u64;
    for (white, wrole) in instance.items().iter().zip(roles) {
        let white_phase = match wrole {
            Role::HugeWhite { phase } => *phase,
            Role::HugeOne => u64::MAX,
            _ => continue,
        };
        for (black, brole) in instance.items().iter().zip(roles) {
            let Some(bp) = black_phase(brole) else {
                continue;
            };
            if bp >= white_phase {
                continue;
            }
            pairs += 1;
            if white.size.value() + black.size.value() <= BigRational::one() {
                violations.push(format!(
                    "items {} and {} sum to at most 1",
                    white.index, black.index
                ));
            }
        }
    }
    LemmaCheck::from_violations(
        "cross-phase-pair-sums",
        violations,
        format!("{pairs} huge-white/earlier-black pairs all sum above 1"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::{first_fit, next_fit, BalancedPseudo, Pseudo, TieBreak};
    use num_traits::Zero;

    #[test]
    fn rejects_small_n() {
        let mut alg = next_fit();
        assert!(adversary_lb2(&mut alg, 3).is_err());
    }

    #[test]
    fn against_first_fit() {
        let mut alg = first_fit(TieBreak::MinIndex);
        let t = adversary_lb2(&mut alg, 5).unwrap();
        assert!(t.all_checks_passed(), "{:?}", t.checks);
        assert!(t.certificate_bins <= 6);
        let floor = match t.termination {
            Lb2Termination::HugeWhites => {
                BigRational::new(BigInt::from(2 * t.n + 1), BigInt::from(t.n + 1))
            }
            Lb2Termination::RegularWhites => {
                BigRational::new(BigInt::from(t.n * t.n + 1), BigInt::from(t.n + 1))
            }
        };
        assert!(t.ratio_lower_bound >= floor);
    }

    #[test]
    fn against_pseudo_variants() {
        for alg in [
            &mut Pseudo::new() as &mut dyn OnlineAlgorithm,
            &mut BalancedPseudo::new(TieBreak::MinIndex),
        ] {
            let t = adversary_lb2(alg, 4).unwrap();
            assert!(t.all_checks_passed(), "{:?}", t.checks);
            assert!(!t.ratio_lower_bound.is_zero());
        }
    }

    /// Opens a new bin for every item; the one behavior that never gets
    /// punished, so the interaction runs all the way to i = N^2.
    struct AlwaysNew;

    impl OnlineAlgorithm for AlwaysNew {
        fn name(&self) -> &'static str {
            "always-new"
        }

        fn place(
            &mut self,
            _item: &crate::instance::Item,
            _packing: &crate::packing::Packing,
        ) -> crate::algo::Placement {
            crate::algo::Placement::new_bin()
        }
    }

    #[test]
    fn refusing_to_stack_exhausts_the_regular_whites() {
        let mut alg = AlwaysNew;
        let t = adversary_lb2(&mut alg, 4).unwrap();
        assert_eq!(t.termination, Lb2Termination::RegularWhites);
        assert_eq!(t.final_i, 16);
        assert_eq!(t.final_j, 0);
        assert!(t.all_checks_passed(), "{:?}", t.checks);
        // N - j size-1 whites arrive; the algorithm pays one bin per item.
        assert_eq!(t.bins_alg, 2 * 16 + 4);
        assert_eq!(t.certificate_bins, 5);
        let floor = BigRational::new(BigInt::from(4 * 4 + 1), BigInt::from(5));
        assert!(t.ratio_lower_bound >= floor);
    }

    #[test]
    fn transcript_is_internally_consistent() {
        let mut alg = next_fit();
        let t = adversary_lb2(&mut alg, 4).unwrap();
        assert_eq!(t.observations.len(), t.instance.len());
        assert_eq!(validate_packing(&t.instance, &t.certificate), Ok(()));
        let expected = BigRational::new(BigInt::from(t.bins_alg), BigInt::from(t.certificate_bins));
        assert_eq!(t.ratio_lower_bound, expected);
        assert!(t.final_i >= 1);
    }
}
