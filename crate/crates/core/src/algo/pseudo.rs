//! The pseudo-bin algorithms.
//!
//! Both algorithms keep a sequence of pseudo-bins. A pseudo-bin is a chain
//! of real bins; its color is the color of the last item assigned to it.
//! Items are routed to pseudo-bins by color only, and each pseudo-bin is
//! split into real bins by a Next-Fit size rule: the item goes into the
//! chain's last bin if it fits, otherwise a fresh bin is appended to the
//! chain. The two algorithms differ only in which pseudo-bin they pick:
//!
//! * `Pseudo` takes the minimum-index pseudo-bin whose color differs from
//!   the item's.
//! * `BalancedPseudo` takes a pseudo-bin of the most frequent color other
//!   than the item's, balancing pseudo-bin colors.
//!
//! Either way, a new pseudo-bin (with one new bin) is opened exactly when
//! every existing pseudo-bin has the item's color, vacuously so for the
//! first item.

use super::{OnlineAlgorithm, Placement, TieBreak};
use crate::color::Color;
use crate::instance::Item;
use crate::packing::Packing;
use num_rational::BigRational;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};

/// One chain of real bins (by global bin index) plus its current color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoBin {
    pub bins: Vec<usize>,
    pub color: Color,
}

/// Shared pseudo-bin bookkeeping: the chains themselves and an index of
/// pseudo-bins by current color.
#[derive(Debug, Default)]
struct Chains {
    list: Vec<PseudoBin>,
    by_color: BTreeMap<Color, BTreeSet<usize>>,
}

impl Chains {
    /// True iff some pseudo-bin has a color other than `color`.
    fn has_other_color(&self, color: &Color) -> bool {
        self.by_color
            .iter()
            .any(|(c, set)| c != color && !set.is_empty())
    }

    /// Opens pseudo-bin `k+1` consisting of one new bin.
    fn open(&mut self, item: &Item, packing: &Packing) -> Placement {
        let j = self.list.len();
        self.list.push(PseudoBin {
            bins: vec![packing.num_bins()],
            color: item.color.clone(),
        });
        self.by_color
            .entry(item.color.clone())
            .or_default()
            .insert(j);
        Placement::new_bin().in_pseudo_bin(j, true)
    }

    /// Assigns `item` to pseudo-bin `j`: into the chain's last bin if the
    /// size fits (the color always does, since the chain's color differs),
    /// otherwise into a fresh bin appended to the chain.
    fn assign(&mut self, j: usize, item: &Item, packing: &Packing) -> Placement {
        let last = *self.list[j].bins.last().expect("chains are never empty");
        let fits = packing.bins()[last].load() + item.size.value() <= BigRational::one();
        let placement = if fits {
            Placement::bin(last).in_pseudo_bin(j, false)
        } else {
            self.list[j].bins.push(packing.num_bins());
            Placement::new_bin().in_pseudo_bin(j, false)
        };
        let old = self.list[j].color.clone();
        if old != item.color {
            self.by_color
                .get_mut(&old)
                .expect("indexed color")
                .remove(&j);
            self.by_color
                .entry(item.color.clone())
                .or_default()
                .insert(j);
            self.list[j].color = item.color.clone();
        }
        placement
    }
}

/// Minimum-index pseudo-bin of a different color.
#[derive(Debug, Default)]
pub struct Pseudo {
    chains: Chains,
}

impl Pseudo {
    pub fn new() -> Pseudo {
        Pseudo::default()
    }

    pub fn pseudo_bins(&self) -> &[PseudoBin] {
        &self.chains.list
    }
}

impl OnlineAlgorithm for Pseudo {
    fn name(&self) -> &'static str {
        "pseudo"
    }

    fn place(&mut self, item: &Item, packing: &Packing) -> Placement {
        let choice = self
            .chains
            .by_color
            .iter()
            .filter(|(c, set)| **c != item.color && !set.is_empty())
            .filter_map(|(_, set)| set.first().copied())
            .min();
        match choice {
            Some(j) => self.chains.assign(j, item, packing),
            None => self.chains.open(item, packing),
        }
    }
}

/// Prefers a pseudo-bin of the color that occurs the most among current
/// pseudo-bin colors, the item's own color excluded.
#[derive(Debug)]
pub struct BalancedPseudo {
    chains: Chains,
    tiebreak: TieBreak,
}

impl BalancedPseudo {
    pub fn new(tiebreak: TieBreak) -> BalancedPseudo {
        BalancedPseudo {
            chains: Chains::default(),
            tiebreak,
        }
    }

    pub fn pseudo_bins(&self) -> &[PseudoBin] {
        &self.chains.list
    }
}

impl OnlineAlgorithm for BalancedPseudo {
    fn name(&self) -> &'static str {
        "bap"
    }

    fn tiebreak(&self) -> Option<TieBreak> {
        Some(self.tiebreak)
    }

    fn place(&mut self, item: &Item, packing: &Packing) -> Placement {
        if !self.chains.has_other_color(&item.color) {
            // All pseudo-bins (possibly none) carry the item's color.
            return self.chains.open(item, packing);
        }
        let max_count = self
            .chains
            .by_color
            .iter()
            .filter(|(c, set)| **c != item.color && !set.is_empty())
            .map(|(_, set)| set.len())
            .max()
            .expect("some other color exists");
        // Candidate colors in ascending token order.
        let candidates: Vec<&BTreeSet<usize>> = self
            .chains
            .by_color
            .iter()
            .filter(|(c, set)| **c != item.color && set.len() == max_count)
            .map(|(_, set)| set)
            .collect();
        let set = match self.tiebreak {
            TieBreak::MinIndex | TieBreak::MinColor => candidates[0],
            TieBreak::MaxIndex => candidates[candidates.len() - 1],
        };
        let j = match self.tiebreak {
            TieBreak::MinIndex | TieBreak::MinColor => *set.first().expect("non-empty"),
            TieBreak::MaxIndex => *set.last().expect("non-empty"),
        };
        self.chains.assign(j, item, packing)
    }
}
