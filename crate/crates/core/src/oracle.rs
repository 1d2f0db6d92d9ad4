//! Exact offline optimum for order-respecting packings.
//!
//! The offline solver must still assign items in input order; it just knows
//! the whole sequence up front. `opt` runs a depth-first branch-and-bound
//! over placements: at each item it tries one representative bin per
//! distinct `(residual, last color)` class, largest residual first, then a
//! new bin. States `(position, multiset of open-bin classes)` are memoized;
//! subtrees are cut with the size and color-discrepancy lower bounds on the
//! remaining suffix. `opt_zero_size` is the fast path for all-zero inputs,
//! where a bin's state collapses to its last color. `opt_exhaustive` is the
//! deliberately naive reference: every feasible bin, no memo, no pruning.
//!
//! Results carry an exactness flag. A solve that hits its budget reports
//! the best packing found so far and `exact = false`; callers must check.

use crate::algo::{first_fit, run, TieBreak};
use crate::bounds;
use crate::color::Color;
use crate::instance::{Instance, Item};
use crate::packing::Packing;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("opt_zero_size requires every item size to be zero")]
    NonZeroSizes,
    #[error("instance has {len} items; exhaustive enumeration is guarded at {max}")]
    TooLargeForExhaustive { len: usize, max: usize },
}

/// Search limits. `max_items` guards the general solver, `max_items_zero_size`
/// the all-zero fast regime; past either, `opt` returns a heuristic upper
/// bound flagged inexact instead of searching.
#[derive(Debug, Clone)]
pub struct OptLimits {
    pub max_items: usize,
    pub max_items_zero_size: usize,
    pub budget: Option<Duration>,
}

impl Default for OptLimits {
    fn default() -> OptLimits {
        OptLimits {
            max_items: 20,
            max_items_zero_size: 48,
            budget: None,
        }
    }
}

impl OptLimits {
    pub fn with_max_items(mut self, max_items: usize) -> OptLimits {
        self.max_items = max_items;
        self
    }

    pub fn with_budget(mut self, budget: Duration) -> OptLimits {
        self.budget = Some(budget);
        self
    }
}

#[derive(Debug, Clone)]
pub struct OptResult {
    pub bins: usize,
    /// False when the search was cut short; `bins` is then only an upper bound.
    pub exact: bool,
    pub nodes: u64,
    pub certificate: Packing,
}

struct OpenBin {
    id: usize,
    load: BigRational,
    color: Color,
}

struct Search<'a> {
    items: &'a [Item],
    suffix_size: Vec<BigRational>,
    suffix_lb1: Vec<usize>,
    global_lb: usize,
    best_bins: usize,
    best_assign: Vec<usize>,
    assign: Vec<usize>,
    memo: HashMap<(usize, Vec<(BigRational, Color)>), usize>,
    nodes: u64,
    deadline: Option<Instant>,
    out_of_budget: bool,
    optimum_proven: bool,
}

impl Search<'_> {
    fn lower_bound_from(&self, pos: usize, open: &[OpenBin]) -> usize {
        // Size argument: the suffix must fit into the open bins' free space
        // plus whole new bins.
        let free: BigRational = open
            .iter()
            .map(|b| BigRational::one() - &b.load)
            .fold(BigRational::zero(), |a, b| a + b);
        let need = &self.suffix_size[pos] - free;
        let by_size = if need > BigRational::zero() {
            let ceil = need.ceil().to_integer();
            usize::try_from(ceil).unwrap_or(usize::MAX)
        } else {
            0
        };
        // Color argument: the bins touching the suffix number at least the
        // suffix's discrepancy bound, and only the open ones pre-exist.
        let by_color = self.suffix_lb1[pos].saturating_sub(open.len());
        by_size.max(by_color)
    }

    fn dfs(&mut self, pos: usize, bins_used: usize, open: &mut Vec<OpenBin>) {
        if self.out_of_budget || self.optimum_proven {
            return;
        }
        self.nodes += 1;
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.out_of_budget = true;
                return;
            }
        }
        if pos == self.items.len() {
            if bins_used < self.best_bins {
                self.best_bins = bins_used;
                self.best_assign = self.assign.clone();
                if self.best_bins == self.global_lb {
                    self.optimum_proven = true;
                }
            }
            return;
        }
        if bins_used + self.lower_bound_from(pos, open) >= self.best_bins {
            return;
        }
        let key = {
            let mut state: Vec<(BigRational, Color)> = open
                .iter()
                .map(|b| (b.load.clone(), b.color.clone()))
                .collect();
            state.sort();
            (pos, state)
        };
        match self.memo.entry(key) {
            Entry::Occupied(mut seen) => {
                if *seen.get() <= bins_used {
                    return;
                }
                seen.insert(bins_used);
            }
            Entry::Vacant(slot) => {
                slot.insert(bins_used);
            }
        }
        let item = &self.items[pos];
        // One representative per (residual, color) class, largest residual
        // (smallest load) first; equivalent bins lead to identical completions.
        let mut class_reps: Vec<usize> = Vec::new();
        for (slot, bin) in open.iter().enumerate() {
            if bin.color == item.color || &bin.load + item.size.value() > BigRational::one() {
                continue;
            }
            if class_reps
                .iter()
                .any(|&r| open[r].load == bin.load && open[r].color == bin.color)
            {
                continue;
            }
            class_reps.push(slot);
        }
        class_reps.sort_by(|&a, &b| {
            open[a]
                .load
                .cmp(&open[b].load)
                .then_with(|| open[a].color.cmp(&open[b].color))
        });
        for slot in class_reps {
            let old_color = std::mem::replace(&mut open[slot].color, item.color.clone());
            open[slot].load += item.size.value();
            self.assign[pos] = open[slot].id;
            self.dfs(pos + 1, bins_used, open);
            open[slot].load -= item.size.value();
            open[slot].color = old_color;
            if self.out_of_budget || self.optimum_proven {
                return;
            }
        }
        // A new bin, id'ed by creation order.
        self.assign[pos] = bins_used;
        open.push(OpenBin {
            id: bins_used,
            load: item.size.value().clone(),
            color: item.color.clone(),
        });
        self.dfs(pos + 1, bins_used + 1, open);
        open.pop();
    }
}

/// Minimum bins over all order-respecting packings, with a certificate.
pub fn opt(instance: &Instance, limits: &OptLimits) -> OptResult {
    if instance.is_empty() {
        return OptResult {
            bins: 0,
            exact: true,
            nodes: 0,
            certificate: Packing::empty(),
        };
    }
    // Seed the incumbent with a cheap heuristic; it doubles as the answer
    // when the instance is over the search limits.
    let mut ff = first_fit(TieBreak::MinIndex);
    let (ff_packing, ff_trace) = run(&mut ff, instance).expect("first fit is always feasible");
    let ff_assign: Vec<usize> = ff_trace.steps.iter().map(|s| s.bin).collect();
    let effective_max = if instance.all_zero_size() {
        limits.max_items_zero_size
    } else {
        limits.max_items
    };
    if instance.len() > effective_max {
        return OptResult {
            bins: ff_packing.num_bins(),
            exact: false,
            nodes: 0,
            certificate: ff_packing,
        };
    }
    let n = instance.len();
    let mut suffix_size = vec![BigRational::zero(); n + 1];
    for pos in (0..n).rev() {
        suffix_size[pos] = &suffix_size[pos + 1] + instance.items()[pos].size.value();
    }
    let mut suffix_lb1 = vec![0usize; n + 1];
    for (pos, slot) in suffix_lb1.iter_mut().enumerate().take(n) {
        let suffix = Instance::new(
            instance.items()[pos..]
                .iter()
                .map(|it| (it.color.clone(), it.size.clone()))
                .collect(),
        );
        *slot = bounds::lb1(&suffix).0;
    }
    let report = bounds::bounds_report(instance);
    let mut search = Search {
        items: instance.items(),
        suffix_size,
        suffix_lb1,
        global_lb: report.combined,
        best_bins: ff_packing.num_bins(),
        best_assign: ff_assign,
        assign: vec![usize::MAX; n],
        memo: HashMap::new(),
        nodes: 0,
        deadline: limits.budget.map(|b| Instant::now() + b),
        out_of_budget: false,
        optimum_proven: false,
    };
    if search.best_bins > search.global_lb {
        search.dfs(0, 0, &mut Vec::new());
    }
    let certificate = Packing::from_assignment(instance, &search.best_assign)
        .expect("incumbent assignments are feasible by construction");
    OptResult {
        bins: search.best_bins,
        exact: !search.out_of_budget,
        nodes: search.nodes,
        certificate,
    }
}

/// Exact optimum for all-zero-size instances. Capacity is irrelevant, so a
/// state is just the item position plus how many bins of each last-color
/// exist, which admits much larger inputs than the general search.
pub fn opt_zero_size(instance: &Instance) -> Result<usize, OracleError> {
    if !instance.all_zero_size() {
        return Err(OracleError::NonZeroSizes);
    }
    if instance.is_empty() {
        return Ok(0);
    }
    let palette = instance.palette();
    let color_id: HashMap<&Color, usize> =
        palette.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let ids: Vec<usize> = instance
        .items()
        .iter()
        .map(|it| color_id[&it.color])
        .collect();
    let mut memo: HashMap<(usize, Vec<u16>), u32> = HashMap::new();

    fn go(
        pos: usize,
        counts: &mut Vec<u16>,
        ids: &[usize],
        memo: &mut HashMap<(usize, Vec<u16>), u32>,
    ) -> u32 {
        if pos == ids.len() {
            return 0;
        }
        if let Some(&v) = memo.get(&(pos, counts.clone())) {
            return v;
        }
        let c = ids[pos];
        // New bin.
        counts[c] += 1;
        let mut best = 1 + go(pos + 1, counts, ids, memo);
        counts[c] -= 1;
        // Repaint an open bin of another color.
        for g in 0..counts.len() {
            if g == c || counts[g] == 0 {
                continue;
            }
            counts[g] -= 1;
            counts[c] += 1;
            best = best.min(go(pos + 1, counts, ids, memo));
            counts[c] -= 1;
            counts[g] += 1;
        }
        memo.insert((pos, counts.clone()), best);
        best
    }

    let mut counts = vec![0u16; palette.len()];
    Ok(go(0, &mut counts, &ids, &mut memo) as usize)
}

/// Items the exhaustive reference will accept.
pub const EXHAUSTIVE_MAX_ITEMS: usize = 12;

/// Plain enumeration of every placement sequence: each feasible existing bin
/// individually plus a new bin, no memoization, no pruning. The
/// oracle-versus-oracle cross-check for `opt`.
pub fn opt_exhaustive(instance: &Instance) -> Result<usize, OracleError> {
    if instance.len() > EXHAUSTIVE_MAX_ITEMS {
        return Err(OracleError::TooLargeForExhaustive {
            len: instance.len(),
            max: EXHAUSTIVE_MAX_ITEMS,
        });
    }

    fn go(pos: usize, bins: &mut Vec<(BigRational, Color)>, items: &[Item]) -> usize {
        if pos == items.len() {
            return bins.len();
        }
        let item = &items[pos];
        let mut best = usize::MAX;
        for b in 0..bins.len() {
            let (load, color) = &bins[b];
            if color == &item.color || load + item.size.value() > BigRational::one() {
                continue;
            }
            let saved = bins[b].clone();
            bins[b].0 += item.size.value();
            bins[b].1 = item.color.clone();
            best = best.min(go(pos + 1, bins, items));
            bins[b] = saved;
        }
        bins.push((item.size.value().clone(), item.color.clone()));
        best = best.min(go(pos + 1, bins, items));
        bins.pop();
        best
    }

    Ok(go(0, &mut Vec::new(), instance.items()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packing::validate_packing;
    use crate::size::Size;

    fn zeros(colors: &[Color]) -> Instance {
        Instance::new(colors.iter().cloned().map(|c| (c, Size::zero())).collect())
    }

    #[test]
    fn three_reds_need_three_bins() {
        let inst = zeros(&[Color::red(), Color::red(), Color::red()]);
        let result = opt(&inst, &OptLimits::default());
        assert!(result.exact);
        assert_eq!(result.bins, 3);
        assert_eq!(validate_packing(&inst, &result.certificate), Ok(()));
        assert_eq!(opt_zero_size(&inst).unwrap(), 3);
        assert_eq!(opt_exhaustive(&inst).unwrap(), 3);
    }

    #[test]
    fn alternating_quarters_fit_one_bin() {
        let q = || Size::ratio(1, 4).unwrap();
        let inst = Instance::new(vec![
            (Color::white(), q()),
            (Color::black(), q()),
            (Color::white(), q()),
            (Color::black(), q()),
        ]);
        let result = opt(&inst, &OptLimits::default());
        assert!(result.exact);
        assert_eq!(result.bins, 1);
    }

    #[test]
    fn red_red_blue_red_needs_two() {
        let inst = zeros(&[Color::red(), Color::red(), Color::blue(), Color::red()]);
        let result = opt(&inst, &OptLimits::default());
        assert_eq!(result.bins, 2);
        assert_eq!(opt_exhaustive(&inst).unwrap(), 2);
        assert_eq!(opt_zero_size(&inst).unwrap(), 2);
    }

    #[test]
    fn zero_fast_path_matches_block_example() {
        let mut colors = vec![Color::red(); 5];
        colors.extend(vec![Color::blue(); 5]);
        assert_eq!(opt_zero_size(&zeros(&colors)).unwrap(), 5);
    }

    #[test]
    fn zero_fast_path_alternating_three_colors() {
        let cycle = [Color::red(), Color::blue(), Color::white()];
        let colors: Vec<Color> = (0..30).map(|i| cycle[i % 3].clone()).collect();
        assert_eq!(opt_zero_size(&zeros(&colors)).unwrap(), 1);
    }

    #[test]
    fn zero_fast_path_rejects_sized_items() {
        let inst = Instance::new(vec![(Color::red(), Size::ratio(1, 2).unwrap())]);
        assert_eq!(opt_zero_size(&inst), Err(OracleError::NonZeroSizes));
    }

    #[test]
    fn over_limit_results_are_flagged_inexact() {
        let colors: Vec<Color> = (0..25)
            .map(|i| {
                if i % 2 == 0 {
                    Color::red()
                } else {
                    Color::blue()
                }
            })
            .collect();
        let inst = Instance::new(
            colors
                .into_iter()
                .map(|c| (c, Size::ratio(1, 100).unwrap()))
                .collect(),
        );
        let result = opt(&inst, &OptLimits::default());
        assert!(!result.exact);
        assert_eq!(validate_packing(&inst, &result.certificate), Ok(()));
    }

    #[test]
    fn oracle_dominates_bounds_on_small_instances() {
        let inst = zeros(&[
            Color::white(),
            Color::white(),
            Color::red(),
            Color::white(),
            Color::white(),
        ]);
        let result = opt(&inst, &OptLimits::default());
        let report = bounds::bounds_report(&inst);
        assert!(result.bins >= report.lb1);
        assert!(result.bins >= report.lb0_bins);
        assert_eq!(result.bins, 3);
    }
}
