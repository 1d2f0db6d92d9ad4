//! Next Fit and the Any Fit family.
//!
//! Next Fit keeps a single active bin and abandons it for good as soon as
//! the next item cannot join it, whether for capacity or for color. Any Fit
//! algorithms never open a new bin while some existing bin can take the
//! item; First/Best/Worst Fit differ only in which feasible bin they pick.

use super::{OnlineAlgorithm, Placement, TieBreak};
use crate::instance::Item;
use crate::packing::{can_accept, Packing};

/// Packs into one active bin; a new bin becomes the active one as soon as
/// the current item does not fit the old active bin.
#[derive(Debug, Default)]
pub struct NextFit {
    active: Option<usize>,
}

pub fn next_fit() -> NextFit {
    NextFit::default()
}

impl OnlineAlgorithm for NextFit {
    fn name(&self) -> &'static str {
        "nf"
    }

    fn place(&mut self, item: &Item, packing: &Packing) -> Placement {
        if let Some(active) = self.active {
            if can_accept(&packing.bins()[active], item) {
                return Placement::bin(active);
            }
        }
        self.active = Some(packing.num_bins());
        Placement::new_bin()
    }
}

/// Picks one bin out of the (non-empty, ascending) list of feasible bins.
/// Implement this to instantiate a new Any Fit member.
pub trait FitRule {
    fn token(&self) -> &'static str;
    fn select(
        &self,
        item: &Item,
        packing: &Packing,
        feasible: &[usize],
        tiebreak: TieBreak,
    ) -> usize;
}

/// The lowest-index feasible bin.
#[derive(Debug, Default, Clone, Copy)]
pub struct FirstFitRule;

impl FitRule for FirstFitRule {
    fn token(&self) -> &'static str {
        "ff"
    }

    fn select(
        &self,
        _item: &Item,
        _packing: &Packing,
        feasible: &[usize],
        _tiebreak: TieBreak,
    ) -> usize {
        feasible[0]
    }
}

/// A feasible bin with the smallest empty space; ties by the tie-break rule.
#[derive(Debug, Default, Clone, Copy)]
pub struct BestFitRule;

impl FitRule for BestFitRule {
    fn token(&self) -> &'static str {
        "bf"
    }

    fn select(
        &self,
        _item: &Item,
        packing: &Packing,
        feasible: &[usize],
        tiebreak: TieBreak,
    ) -> usize {
        let best = feasible
            .iter()
            .map(|&b| packing.bins()[b].residual())
            .min()
            .expect("feasible list is non-empty");
        let candidates: Vec<usize> = feasible
            .iter()
            .copied()
            .filter(|&b| packing.bins()[b].residual() == best)
            .collect();
        tiebreak.pick_sorted(&candidates)
    }
}

/// A feasible bin with the largest empty space; ties by the tie-break rule.
#[derive(Debug, Default, Clone, Copy)]
pub struct WorstFitRule;

impl FitRule for WorstFitRule {
    fn token(&self) -> &'static str {
        "wf"
    }

    fn select(
        &self,
        _item: &Item,
        packing: &Packing,
        feasible: &[usize],
        tiebreak: TieBreak,
    ) -> usize {
        let best = feasible
            .iter()
            .map(|&b| packing.bins()[b].residual())
            .max()
            .expect("feasible list is non-empty");
        let candidates: Vec<usize> = feasible
            .iter()
            .copied()
            .filter(|&b| packing.bins()[b].residual() == best)
            .collect();
        tiebreak.pick_sorted(&candidates)
    }
}

/// The Any Fit frame: opens a new bin only when no existing bin is
/// feasible, and otherwise delegates the choice to its rule.
#[derive(Debug)]
pub struct AnyFit<R: FitRule> {
    rule: R,
    tiebreak: TieBreak,
}

impl<R: FitRule> AnyFit<R> {
    pub fn new(rule: R, tiebreak: TieBreak) -> AnyFit<R> {
        AnyFit { rule, tiebreak }
    }
}

pub fn first_fit(tiebreak: TieBreak) -> AnyFit<FirstFitRule> {
    AnyFit::new(FirstFitRule, tiebreak)
}

pub fn best_fit(tiebreak: TieBreak) -> AnyFit<BestFitRule> {
    AnyFit::new(BestFitRule, tiebreak)
}

pub fn worst_fit(tiebreak: TieBreak) -> AnyFit<WorstFitRule> {
    AnyFit::new(WorstFitRule, tiebreak)
}

impl<R: FitRule> OnlineAlgorithm for AnyFit<R> {
    fn name(&self) -> &'static str {
        self.rule.token()
    }

    fn tiebreak(&self) -> Option<TieBreak> {
        Some(self.tiebreak)
    }

    fn place(&mut self, item: &Item, packing: &Packing) -> Placement {
        let feasible: Vec<usize> = (0..packing.num_bins())
            .filter(|&b| can_accept(&packing.bins()[b], item))
            .collect();
        if feasible.is_empty() {
            Placement::new_bin()
        } else {
            Placement::bin(self.rule.select(item, packing, &feasible, self.tiebreak))
        }
    }
}
