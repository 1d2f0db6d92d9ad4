//! The online stepping engine and the shipped online algorithms.
//!
//! An algorithm sees one item at a time, together with read access to the
//! current packing, and returns a placement decision. The engine enforces
//! feasibility, maintains the packing, and records a trace; replaying the
//! trace reproduces the packing exactly. Every item can always open a new
//! bin, so a run never fails for a correct algorithm.

mod anyfit;
mod pseudo;

pub use anyfit::{
    best_fit, first_fit, next_fit, worst_fit, AnyFit, BestFitRule, FirstFitRule, FitRule, NextFit,
    WorstFitRule,
};
pub use pseudo::{BalancedPseudo, Pseudo, PseudoBin};

use crate::color::Color;
use crate::instance::{Instance, Item};
use crate::packing::{Packing, PlaceError, Target};
use crate::size::Size;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Tie-breaking rule, fixed per run and recorded in run metadata.
///
/// Index ties (several qualifying bins or pseudo-bins): `MinIndex` and
/// `MinColor` pick the smallest index, `MaxIndex` the largest. Color ties
/// (several qualifying colors): `MinIndex` and `MinColor` pick the smallest
/// token, `MaxIndex` the largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    MinIndex,
    MaxIndex,
    MinColor,
}

impl TieBreak {
    pub fn token(self) -> &'static str {
        match self {
            TieBreak::MinIndex => "min-index",
            TieBreak::MaxIndex => "max-index",
            TieBreak::MinColor => "min-color",
        }
    }

    pub fn parse(token: &str) -> Option<TieBreak> {
        match token {
            "min-index" => Some(TieBreak::MinIndex),
            "max-index" => Some(TieBreak::MaxIndex),
            "min-color" => Some(TieBreak::MinColor),
            _ => None,
        }
    }

    /// Picks from a non-empty ascending sequence of candidate indices.
    pub(crate) fn pick_sorted(self, candidates: &[usize]) -> usize {
        match self {
            TieBreak::MinIndex | TieBreak::MinColor => candidates[0],
            TieBreak::MaxIndex => candidates[candidates.len() - 1],
        }
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// An algorithm's decision for one item.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub target: Target,
    /// For pseudo-bin algorithms, the 0-based pseudo-bin the item was
    /// assigned to.
    pub pseudo_bin: Option<usize>,
    pub opened_pseudo_bin: bool,
}

impl Placement {
    pub fn bin(index: usize) -> Placement {
        Placement {
            target: Target::Bin(index),
            pseudo_bin: None,
            opened_pseudo_bin: false,
        }
    }

    pub fn new_bin() -> Placement {
        Placement {
            target: Target::NewBin,
            pseudo_bin: None,
            opened_pseudo_bin: false,
        }
    }

    pub fn in_pseudo_bin(mut self, pseudo_bin: usize, opened: bool) -> Placement {
        self.pseudo_bin = Some(pseudo_bin);
        self.opened_pseudo_bin = opened;
        self
    }
}

/// An online algorithm: deterministic given its state, its tie-break rule,
/// and the input prefix. Decisions must be feasible; the engine checks.
pub trait OnlineAlgorithm {
    /// Short token, e.g. `bap`.
    fn name(&self) -> &'static str;

    /// The tie-break rule in effect, if the algorithm has tie points.
    fn tiebreak(&self) -> Option<TieBreak> {
        None
    }

    fn place(&mut self, item: &Item, packing: &Packing) -> Placement;
}

/// One recorded engine step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub item_index: usize,
    /// The bin that received the item (0-based).
    pub bin: usize,
    pub opened_bin: bool,
    pub pseudo_bin: Option<usize>,
    pub opened_pseudo_bin: bool,
}

/// The decision log of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub algorithm: String,
    pub tiebreak: Option<TieBreak>,
    pub steps: Vec<StepRecord>,
}

impl Trace {
    pub fn bins_opened(&self) -> usize {
        self.steps.iter().filter(|s| s.opened_bin).count()
    }

    pub fn pseudo_bins_opened(&self) -> usize {
        self.steps.iter().filter(|s| s.opened_pseudo_bin).count()
    }
}

/// What an adversary may see after a step: the decision plus a per-color
/// count of the algorithm's bins. Full read access to the packing comes
/// from [`Runner::packing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observation {
    pub record: StepRecord,
    pub color_bins: BTreeMap<Color, usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StepError {
    #[error("algorithm returned an infeasible decision: {0}")]
    Infeasible(#[from] PlaceError),
}

/// Drives one algorithm over an item stream, one item at a time. Used
/// directly by the interactive adversaries, which build their input based
/// on the observed decisions.
pub struct Runner<'a> {
    algorithm: &'a mut dyn OnlineAlgorithm,
    packing: Packing,
    steps: Vec<StepRecord>,
    items: Vec<(Color, Size)>,
}

impl<'a> Runner<'a> {
    pub fn new(algorithm: &'a mut dyn OnlineAlgorithm) -> Runner<'a> {
        Runner {
            algorithm,
            packing: Packing::empty(),
            steps: Vec::new(),
            items: Vec::new(),
        }
    }

    pub fn packing(&self) -> &Packing {
        &self.packing
    }

    pub fn items_fed(&self) -> usize {
        self.items.len()
    }

    pub fn steps(&self) -> &[StepRecord] {
        &self.steps
    }

    /// Presents the next item and applies the algorithm's decision.
    pub fn feed(&mut self, color: Color, size: Size) -> Result<StepRecord, StepError> {
        let item = Item {
            index: self.items.len() + 1,
            color: color.clone(),
            size: size.clone(),
        };
        let placement = self.algorithm.place(&item, &self.packing);
        let opened_bin = placement.target == Target::NewBin;
        let bin = self.packing.place(item, placement.target)?;
        let record = StepRecord {
            item_index: self.items.len() + 1,
            bin,
            opened_bin,
            pseudo_bin: placement.pseudo_bin,
            opened_pseudo_bin: placement.opened_pseudo_bin,
        };
        self.items.push((color, size));
        self.steps.push(record.clone());
        Ok(record)
    }

    /// The last step together with the per-color bin digest.
    pub fn observe_last(&self) -> Option<Observation> {
        self.steps.last().map(|record| Observation {
            record: record.clone(),
            color_bins: self.packing.color_bin_counts(),
        })
    }

    pub fn finish(self) -> (Instance, Packing, Trace) {
        let trace = Trace {
            algorithm: self.algorithm.name().to_owned(),
            tiebreak: self.algorithm.tiebreak(),
            steps: self.steps,
        };
        (Instance::new(self.items), self.packing, trace)
    }
}

/// Runs `algorithm` over the whole instance.
pub fn run(
    algorithm: &mut dyn OnlineAlgorithm,
    instance: &Instance,
) -> Result<(Packing, Trace), StepError> {
    let mut runner = Runner::new(algorithm);
    for item in instance.items() {
        runner.feed(item.color.clone(), item.size.clone())?;
    }
    let (_, packing, trace) = runner.finish();
    Ok((packing, trace))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplayError {
    #[error("trace has {trace} steps but the instance has {instance} items")]
    LengthMismatch { trace: usize, instance: usize },
    #[error("step {step}: trace item index {found}, expected {expected}")]
    IndexMismatch {
        step: usize,
        found: usize,
        expected: usize,
    },
    #[error("step {step}: a new bin must get index {expected}, trace says {found}")]
    NewBinIndex {
        step: usize,
        found: usize,
        expected: usize,
    },
    #[error("step {step}: {source}")]
    Infeasible {
        step: usize,
        #[source]
        source: PlaceError,
    },
}

/// Rebuilds the packing a trace describes, enforcing feasibility at every
/// step. A trace produced by [`run`] replays to exactly the packing the run
/// returned.
pub fn replay(instance: &Instance, trace: &Trace) -> Result<Packing, ReplayError> {
    if trace.steps.len() != instance.len() {
        return Err(ReplayError::LengthMismatch {
            trace: trace.steps.len(),
            instance: instance.len(),
        });
    }
    let mut packing = Packing::empty();
    for (pos, (item, record)) in instance.items().iter().zip(&trace.steps).enumerate() {
        let step = pos + 1;
        if record.item_index != item.index {
            return Err(ReplayError::IndexMismatch {
                step,
                found: record.item_index,
                expected: item.index,
            });
        }
        let target = if record.opened_bin {
            if record.bin != packing.num_bins() {
                return Err(ReplayError::NewBinIndex {
                    step,
                    found: record.bin,
                    expected: packing.num_bins(),
                });
            }
            Target::NewBin
        } else {
            Target::Bin(record.bin)
        };
        packing
            .place(item.clone(), target)
            .map_err(|source| ReplayError::Infeasible { step, source })?;
    }
    Ok(packing)
}
