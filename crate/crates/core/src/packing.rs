//! Bins, packings, and validity checking.
//!
//! A bin accepts an item iff it is empty, or the item's color differs from
//! the bin's last color and the load stays at most 1 (the boundary is
//! inclusive: three items summing to exactly 1 are a legal bin). A packing
//! is the universal output format: every algorithm run, oracle solve, and
//! adversary certificate produces one, and `validate_packing` is the single
//! arbiter of what counts as feasible.

use crate::color::Color;
use crate::instance::{Instance, Item};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

/// One bin: its items in packing order plus a cached load.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bin {
    items: Vec<Item>,
    load: BigRational,
}

impl Bin {
    fn new() -> Bin {
        Bin {
            items: Vec::new(),
            load: BigRational::zero(),
        }
    }

    fn push(&mut self, item: Item) {
        self.load += item.size.value();
        self.items.push(item);
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn load(&self) -> &BigRational {
        &self.load
    }

    /// Free space left in the bin.
    pub fn residual(&self) -> BigRational {
        BigRational::one() - &self.load
    }

    /// The color of the last packed item; `None` for an empty bin.
    pub fn last_color(&self) -> Option<&Color> {
        self.items.last().map(|it| &it.color)
    }
}

/// True iff `item` may be packed into `bin` right now: the bin is empty, or
/// the previous item has a different color and the load stays at most 1.
/// The color test applies regardless of sizes, so a zero-size item is still
/// rejected by a bin whose last item shares its color.
pub fn can_accept(bin: &Bin, item: &Item) -> bool {
    if bin.is_empty() {
        return true;
    }
    bin.last_color() != Some(&item.color) && &bin.load + item.size.value() <= BigRational::one()
}

/// Where to put the next item.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// An existing bin, by 0-based index.
    Bin(usize),
    /// Open a fresh bin at the end of the packing.
    NewBin,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaceError {
    #[error("item {item_index} does not fit bin {bin}: {reason}")]
    Infeasible {
        item_index: usize,
        bin: usize,
        reason: String,
    },
    #[error("bin index {bin} out of range ({bins} bins)")]
    BadBinIndex { bin: usize, bins: usize },
}

/// A complete assignment of items to bins, in input order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Packing {
    bins: Vec<Bin>,
    /// item index -> (bin index, 1-based position within the bin)
    assignment: BTreeMap<usize, (usize, usize)>,
}

impl Packing {
    pub fn empty() -> Packing {
        Packing::default()
    }

    pub fn bins(&self) -> &[Bin] {
        &self.bins
    }

    pub fn num_bins(&self) -> usize {
        self.bins.len()
    }

    pub fn assignment(&self) -> &BTreeMap<usize, (usize, usize)> {
        &self.assignment
    }

    /// Counts bins by their current (last-item) color.
    pub fn color_bin_counts(&self) -> BTreeMap<Color, usize> {
        let mut counts = BTreeMap::new();
        for bin in &self.bins {
            if let Some(color) = bin.last_color() {
                *counts.entry(color.clone()).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Packs `item` at `target`, enforcing feasibility. Returns the index of
    /// the bin that received the item.
    pub(crate) fn place(&mut self, item: Item, target: Target) -> Result<usize, PlaceError> {
        let bin_index = match target {
            Target::Bin(b) => {
                let bin = self.bins.get(b).ok_or(PlaceError::BadBinIndex {
                    bin: b,
                    bins: self.bins.len(),
                })?;
                if !can_accept(bin, &item) {
                    let reason = if bin.last_color() == Some(&item.color) {
                        "previous item has the same color".to_owned()
                    } else {
                        format!("load {} + size {} exceeds 1", bin.load(), item.size)
                    };
                    return Err(PlaceError::Infeasible {
                        item_index: item.index,
                        bin: b,
                        reason,
                    });
                }
                b
            }
            Target::NewBin => {
                self.bins.push(Bin::new());
                self.bins.len() - 1
            }
        };
        let bin = &mut self.bins[bin_index];
        let index = item.index;
        bin.push(item);
        self.assignment.insert(index, (bin_index, bin.len()));
        Ok(bin_index)
    }

    /// Builds a packing from a per-item bin label without enforcing
    /// feasibility, for checking externally claimed packings: pair with
    /// [`validate_packing`] to judge them. Labels are arbitrary; bins are
    /// numbered in order of first appearance.
    pub fn from_labels_unchecked(instance: &Instance, labels: &[usize]) -> Packing {
        assert_eq!(
            labels.len(),
            instance.len(),
            "one bin label per instance item"
        );
        let mut packing = Packing::empty();
        let mut normalized: BTreeMap<usize, usize> = BTreeMap::new();
        for (item, &label) in instance.items().iter().zip(labels) {
            let bin_index = *normalized.entry(label).or_insert_with(|| {
                packing.bins.push(Bin::new());
                packing.bins.len() - 1
            });
            let bin = &mut packing.bins[bin_index];
            bin.push(item.clone());
            packing
                .assignment
                .insert(item.index, (bin_index, bin.len()));
        }
        packing
    }

    /// Builds a packing from a per-item bin label. Labels are arbitrary; bins
    /// are numbered in order of first appearance. Fails if any placement is
    /// infeasible.
    pub fn from_assignment(instance: &Instance, labels: &[usize]) -> Result<Packing, PlaceError> {
        assert_eq!(
            labels.len(),
            instance.len(),
            "one bin label per instance item"
        );
        let mut packing = Packing::empty();
        let mut normalized: BTreeMap<usize, usize> = BTreeMap::new();
        for (item, &label) in instance.items().iter().zip(labels) {
            let target = match normalized.get(&label) {
                Some(&bin) => Target::Bin(bin),
                None => {
                    normalized.insert(label, packing.num_bins());
                    Target::NewBin
                }
            };
            packing.place(item.clone(), target)?;
        }
        Ok(packing)
    }
}

/// The first violated packing invariant, with its location. Bin indices and
/// positions are 1-based in messages to match instance item indexing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("bin {bin} is empty")]
    EmptyBin { bin: usize },
    #[error("bin {bin} position {position}: item {item_index} is not part of the instance")]
    ForeignItem {
        bin: usize,
        position: usize,
        item_index: usize,
    },
    #[error("bin {bin} position {position}: item {item_index} differs from the instance item")]
    ItemMismatch {
        bin: usize,
        position: usize,
        item_index: usize,
    },
    #[error("item {item_index} appears more than once (bin {bin} position {position})")]
    DuplicateItem {
        bin: usize,
        position: usize,
        item_index: usize,
    },
    #[error("bin {bin} position {position}: item indices must increase within a bin")]
    OrderViolation { bin: usize, position: usize },
    #[error("bin {bin} position {position}: consecutive items share color {color}")]
    ColorAdjacency {
        bin: usize,
        position: usize,
        color: Color,
    },
    #[error("bin {bin}: load {load} exceeds capacity 1 at position {position}")]
    Capacity {
        bin: usize,
        position: usize,
        load: String,
    },
    #[error("item {item_index} is missing from the packing")]
    MissingItem { item_index: usize },
    #[error("assignment map disagrees with bin contents for item {item_index}")]
    AssignmentMismatch { item_index: usize },
}

/// Checks every packing invariant against `instance` and reports the first
/// violation: each item exactly once and unmodified, indices increasing
/// within each bin, no two consecutive items of one color, loads at most 1.
pub fn validate_packing(instance: &Instance, packing: &Packing) -> Result<(), Violation> {
    let mut seen = vec![false; instance.len() + 1];
    for (b, bin) in packing.bins().iter().enumerate() {
        let bin_no = b + 1;
        if bin.is_empty() {
            return Err(Violation::EmptyBin { bin: bin_no });
        }
        let mut load = BigRational::zero();
        let mut prev: Option<&Item> = None;
        for (p, item) in bin.items().iter().enumerate() {
            let position = p + 1;
            let original = match instance.get(item.index) {
                Some(original) => original,
                None => {
                    return Err(Violation::ForeignItem {
                        bin: bin_no,
                        position,
                        item_index: item.index,
                    })
                }
            };
            if original != item {
                return Err(Violation::ItemMismatch {
                    bin: bin_no,
                    position,
                    item_index: item.index,
                });
            }
            if seen[item.index] {
                return Err(Violation::DuplicateItem {
                    bin: bin_no,
                    position,
                    item_index: item.index,
                });
            }
            seen[item.index] = true;
            if let Some(prev) = prev {
                if prev.index >= item.index {
                    return Err(Violation::OrderViolation {
                        bin: bin_no,
                        position,
                    });
                }
                if prev.color == item.color {
                    return Err(Violation::ColorAdjacency {
                        bin: bin_no,
                        position,
                        color: item.color.clone(),
                    });
                }
            }
            load += item.size.value();
            if load > BigRational::one() {
                return Err(Violation::Capacity {
                    bin: bin_no,
                    position,
                    load: load.to_string(),
                });
            }
            prev = Some(item);
        }
    }
    if let Some(missing) = seen.iter().skip(1).position(|&s| !s) {
        return Err(Violation::MissingItem {
            item_index: missing + 1,
        });
    }
    for (&index, &(bin, position)) in packing.assignment() {
        let matches = packing
            .bins()
            .get(bin)
            .and_then(|b| b.items().get(position.wrapping_sub(1)))
            .is_some_and(|it| it.index == index);
        if !matches {
            return Err(Violation::AssignmentMismatch { item_index: index });
        }
    }
    if packing.assignment().len() != instance.len() {
        let index = (1..=instance.len())
            .find(|i| !packing.assignment().contains_key(i))
            .unwrap_or(0);
        return Err(Violation::AssignmentMismatch { item_index: index });
    }
    Ok(())
}
