//! Shared helpers for the integration test suites: instance strategies and
//! trace-invariant checkers that re-simulate a run step by step.
#![allow(dead_code)]

use cbp_core::algo::{StepRecord, Trace};
use cbp_core::{can_accept, Color, Instance, Item, Packing, Size};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

pub fn color_strategy(palette: usize) -> impl Strategy<Value = Color> {
    (0..palette).prop_map(|i| Color::new(format!("c{i}")).unwrap())
}

pub fn size_strategy() -> impl Strategy<Value = Size> {
    prop_oneof![
        2 => Just(Size::zero()),
        5 => (1u64..=6, 0u64..=6).prop_map(|(den, num)| {
            Size::ratio(num.min(den), den).unwrap()
        }),
    ]
}

/// Random instances: up to `max_items` items over a small palette, zero and
/// rational sizes mixed.
pub fn instance_strategy(max_items: usize) -> impl Strategy<Value = Instance> {
    (2usize..=4)
        .prop_flat_map(move |palette| {
            prop::collection::vec((color_strategy(palette), size_strategy()), 0..=max_items)
        })
        .prop_map(Instance::new)
}

/// Zero-size instances over a fixed palette.
pub fn zero_instance_strategy(palette: usize, max_items: usize) -> impl Strategy<Value = Instance> {
    prop::collection::vec(color_strategy(palette), 0..=max_items)
        .prop_map(|colors| Instance::new(colors.into_iter().map(|c| (c, Size::zero())).collect()))
}

/// Any Fit discipline: a new bin only when no existing bin accepts the item.
pub fn assert_af_property(instance: &Instance, trace: &Trace) {
    simulate(instance, trace, |packing, item, record| {
        if record.opened_bin {
            let feasible = (0..packing.num_bins()).any(|b| can_accept(&packing.bins()[b], item));
            assert!(
                !feasible,
                "item {} opened a bin although one was feasible",
                item.index
            );
        }
    });
}

/// Next Fit discipline: only the most recently opened bin ever receives.
pub fn assert_nf_property(trace: &Trace) {
    let mut active: Option<usize> = None;
    for record in &trace.steps {
        if record.opened_bin {
            active = Some(record.bin);
        } else {
            assert_eq!(
                Some(record.bin),
                active,
                "item {} revisited an abandoned bin",
                record.item_index
            );
        }
    }
}

/// Re-simulates a run, handing the pre-placement packing to `check`, and
/// returns the final packing.
pub fn simulate<F: FnMut(&Packing, &Item, &StepRecord)>(
    instance: &Instance,
    trace: &Trace,
    mut check: F,
) -> Packing {
    assert_eq!(instance.len(), trace.steps.len());
    let mut labels: Vec<usize> = Vec::with_capacity(instance.len());
    let mut packing = Packing::empty();
    for (pos, (item, record)) in instance.items().iter().zip(&trace.steps).enumerate() {
        check(&packing, item, record);
        labels.push(record.bin);
        let prefix = Instance::new(
            instance.items()[..=pos]
                .iter()
                .map(|it| (it.color.clone(), it.size.clone()))
                .collect(),
        );
        packing = Packing::from_assignment(&prefix, &labels).expect("trace steps are feasible");
    }
    packing
}

/// Pseudo-bin invariants, reconstructed from the trace: color legality,
/// the open-only-when-monochrome rule, Next-Fit chain splits, and chain
/// bookkeeping (items go to the last bin of their chain).
pub fn assert_pseudo_invariants(instance: &Instance, trace: &Trace) {
    struct Chain {
        bins: Vec<usize>,
        color: Color,
    }
    let mut chains: Vec<Chain> = Vec::new();
    simulate(instance, trace, |packing, item, record| {
        let j = record
            .pseudo_bin
            .expect("pseudo-bin algorithms tag every step");
        if record.opened_pseudo_bin {
            assert_eq!(j, chains.len(), "chains open in order");
            assert!(
                chains.iter().all(|c| c.color == item.color),
                "item {}: a chain of another color existed at open",
                item.index
            );
            assert!(record.opened_bin, "a fresh chain starts with a fresh bin");
            chains.push(Chain {
                bins: vec![record.bin],
                color: item.color.clone(),
            });
        } else {
            let chain = &mut chains[j];
            assert_ne!(
                chain.color, item.color,
                "item {} joined a chain of its own color",
                item.index
            );
            let last = *chain.bins.last().unwrap();
            if record.opened_bin {
                // Next-Fit split: the item must not have fit the chain's
                // last bin by size.
                let overflow = packing.bins()[last].load() + item.size.value() > BigRational::one();
                assert!(
                    overflow,
                    "item {} split chain {} although it fit bin {}",
                    item.index, j, last
                );
                chain.bins.push(record.bin);
            } else {
                assert_eq!(record.bin, last, "items join their chain's last bin");
            }
            chain.color = item.color.clone();
        }
    });
    // Chains partition the bins.
    let mut owner = std::collections::BTreeMap::new();
    for (j, chain) in chains.iter().enumerate() {
        for &b in &chain.bins {
            assert!(owner.insert(b, j).is_none(), "bin {b} in two chains");
        }
    }
    let total: usize = chains.iter().map(|c| c.bins.len()).sum();
    assert_eq!(total, trace.bins_opened());
}
