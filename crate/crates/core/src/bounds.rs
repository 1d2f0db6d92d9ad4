//! Offline lower bounds on the optimal bin count.
//!
//! Two functionals:
//!
//! * `lb0`: the total item size; no packing can beat `ceil(lb0)` bins.
//! * `lb1`: the color-discrepancy bound, over every consecutive interval
//!   `i..=j` and every color `c`, the count of `c` minus the count of all
//!   other colors, `2*C(i,j,c) - (j - i + 1)`. Any packing needs at least
//!   that many bins, because a bin holding `x` items of the interval holds
//!   at most `(x+1)/2` items of one color.
//!
//! `lb1` is computed in `O(n * |colors|)` by a maximum-sum interval scan of
//! the +1/-1 indicator sequence of each color; only a most frequent color
//! of an interval can attain the maximum, so scanning per color is enough.
//! `lb1_bruteforce` enumerates all `(i, j, c)` directly and serves as the
//! independent reference.

use crate::color::Color;
use crate::instance::Instance;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("instance has {len} items; the brute-force scan is guarded at {max}")]
    TooLarge { len: usize, max: usize },
}

/// Items the brute-force reference will accept.
pub const BRUTEFORCE_MAX_ITEMS: usize = 2000;

/// An interval and color attaining `lb1`: `2*C(start, end, color) - (end - start + 1) = lb1`.
/// Indices are 1-based and inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub start: usize,
    pub end: usize,
    pub color: Color,
}

/// Everything the bounds pass knows about an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    /// Total item size, exact.
    pub lb0: BigRational,
    /// `ceil(lb0)`.
    pub lb0_bins: usize,
    pub lb1: usize,
    pub witness: Option<Witness>,
    /// `max(lb0_bins, lb1, 1 if non-empty)`.
    pub combined: usize,
}

pub fn lb0(instance: &Instance) -> BigRational {
    instance.total_size()
}

fn ceil_to_usize(value: &BigRational) -> usize {
    if value <= &BigRational::zero() {
        return 0;
    }
    value
        .ceil()
        .to_integer()
        .to_usize()
        .expect("bin counts fit in usize")
}

/// The maximum color-discrepancy over all intervals, with a witness. When
/// several triples attain the maximum, the lexicographically smallest
/// `(start, end, color token)` is reported. Empty instances yield 0 with no
/// witness; non-empty instances always yield at least 1.
pub fn lb1(instance: &Instance) -> (usize, Option<Witness>) {
    let n = instance.len();
    if n == 0 {
        return (0, None);
    }
    let mut best: Option<(i64, usize, usize, Color)> = None;
    for color in instance.palette() {
        // Prefix sums of the +1/-1 indicator of this color.
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0i64);
        for item in instance.items() {
            let step = if item.color == *color { 1 } else { -1 };
            prefix.push(prefix.last().unwrap() + step);
        }
        // suffix_max[t] = max over u >= t of prefix[u]
        let mut suffix_max = vec![i64::MIN; n + 2];
        for t in (0..=n).rev() {
            suffix_max[t] = prefix[t].max(suffix_max[t + 1]);
        }
        let value = (0..n)
            .map(|t| suffix_max[t + 1] - prefix[t])
            .max()
            .expect("non-empty instance");
        // Lexicographically smallest witness for this color: the smallest
        // start, then the smallest end for that start.
        let t = (0..n)
            .find(|&t| suffix_max[t + 1] - prefix[t] == value)
            .expect("value is attained");
        let end = (t + 1..=n)
            .find(|&j| prefix[j] - prefix[t] == value)
            .expect("value is attained after t");
        let candidate = (value, t + 1, end, color.clone());
        let improves = match &best {
            None => true,
            Some((bv, bi, bj, _)) => {
                value > *bv || (value == *bv && (candidate.1, candidate.2) < (*bi, *bj))
            }
        };
        if improves {
            best = Some(candidate);
        }
    }
    let (value, start, end, color) = best.expect("non-empty instance");
    debug_assert!(value >= 1);
    (value as usize, Some(Witness { start, end, color }))
}

/// Direct enumeration of every `(i, j, color)`; the reference oracle for
/// `lb1`. Guarded because it is quadratic.
pub fn lb1_bruteforce(instance: &Instance) -> Result<(usize, Option<Witness>), BoundsError> {
    let n = instance.len();
    if n > BRUTEFORCE_MAX_ITEMS {
        return Err(BoundsError::TooLarge {
            len: n,
            max: BRUTEFORCE_MAX_ITEMS,
        });
    }
    if n == 0 {
        return Ok((0, None));
    }
    let palette = instance.palette();
    let color_id: std::collections::BTreeMap<&Color, usize> =
        palette.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let ids: Vec<usize> = instance
        .items()
        .iter()
        .map(|it| color_id[&it.color])
        .collect();
    let mut best: Option<(i64, usize, usize, Color)> = None;
    let mut counts = vec![0i64; palette.len()];
    for i in 0..n {
        counts.iter_mut().for_each(|c| *c = 0);
        let mut max_count = 0i64;
        for j in i..n {
            counts[ids[j]] += 1;
            max_count = max_count.max(counts[ids[j]]);
            let len = (j - i + 1) as i64;
            let value = 2 * max_count - len;
            let improves = match &best {
                None => true,
                Some((bv, ..)) => value > *bv,
            };
            if improves {
                let color = palette
                    .iter()
                    .find(|c| counts[color_id[*c]] == max_count)
                    .expect("some color attains the max");
                best = Some((value, i + 1, j + 1, (*color).clone()));
            }
        }
    }
    let (value, start, end, color) = best.expect("non-empty instance");
    if value <= 0 {
        // Cannot happen: single-item intervals score 1.
        return Ok((0, None));
    }
    Ok((value as usize, Some(Witness { start, end, color })))
}

pub fn bounds_report(instance: &Instance) -> BoundsReport {
    let lb0 = lb0(instance);
    let lb0_bins = ceil_to_usize(&lb0);
    let (lb1, witness) = lb1(instance);
    let non_empty = usize::from(!instance.is_empty());
    BoundsReport {
        combined: lb0_bins.max(lb1).max(non_empty),
        lb0,
        lb0_bins,
        lb1,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::size::Size;

    fn zeros(colors: &[Color]) -> Instance {
        Instance::new(colors.iter().cloned().map(|c| (c, Size::zero())).collect())
    }

    #[test]
    fn lb0_sums_sizes_exactly() {
        let inst = Instance::new(vec![
            (Color::white(), Size::ratio(1, 2).unwrap()),
            (Color::black(), Size::ratio(1, 2).unwrap()),
            (Color::white(), Size::ratio(1, 2).unwrap()),
        ]);
        assert_eq!(lb0(&inst), BigRational::new(3.into(), 2.into()));
        assert_eq!(lb0(&Instance::default()), BigRational::zero());
    }

    #[test]
    fn lb1_majority_run_with_witness() {
        let w = Color::white();
        let r = Color::red();
        let inst = zeros(&[w.clone(), w.clone(), r, w.clone(), w]);
        let (value, witness) = lb1(&inst);
        assert_eq!(value, 3);
        assert_eq!(
            witness,
            Some(Witness {
                start: 1,
                end: 5,
                color: Color::white()
            })
        );
    }

    #[test]
    fn lb1_alternating_is_one() {
        let inst = zeros(&[
            Color::black(),
            Color::white(),
            Color::black(),
            Color::white(),
        ]);
        let (value, _) = lb1(&inst);
        assert_eq!(value, 1);
    }

    #[test]
    fn lb1_block_input() {
        let mut colors = vec![Color::red(); 5];
        colors.extend(vec![Color::blue(); 5]);
        let inst = zeros(&colors);
        let (value, witness) = lb1(&inst);
        assert_eq!(value, 5);
        assert_eq!(
            witness,
            Some(Witness {
                start: 1,
                end: 5,
                color: Color::red()
            })
        );
    }

    #[test]
    fn singletons() {
        let (v1, w1) = lb1(&zeros(&[Color::white()]));
        assert_eq!(v1, 1);
        assert_eq!(
            w1.unwrap(),
            Witness {
                start: 1,
                end: 1,
                color: Color::white()
            }
        );
        let (v2, _) = lb1(&zeros(&[Color::white(), Color::white()]));
        assert_eq!(v2, 2);
        assert_eq!(lb1(&Instance::default()), (0, None));
    }

    #[test]
    fn bruteforce_matches_on_small_inputs() {
        let cases: Vec<Vec<Color>> = vec![
            vec![
                Color::white(),
                Color::white(),
                Color::red(),
                Color::white(),
                Color::white(),
            ],
            vec![
                Color::red(),
                Color::blue(),
                Color::red(),
                Color::red(),
                Color::blue(),
            ],
            vec![Color::black(); 4],
        ];
        for colors in cases {
            let inst = zeros(&colors);
            let fast = lb1(&inst);
            let brute = lb1_bruteforce(&inst).unwrap();
            assert_eq!(fast, brute, "input {colors:?}");
        }
    }

    #[test]
    fn bruteforce_guard() {
        let inst = zeros(&vec![Color::white(); BRUTEFORCE_MAX_ITEMS + 1]);
        assert!(matches!(
            lb1_bruteforce(&inst),
            Err(BoundsError::TooLarge { .. })
        ));
    }

    #[test]
    fn report_combines_bounds() {
        let inst = Instance::new(vec![
            (Color::white(), Size::ratio(9, 10).unwrap()),
            (Color::black(), Size::ratio(9, 10).unwrap()),
        ]);
        let report = bounds_report(&inst);
        assert_eq!(report.lb0_bins, 2);
        assert_eq!(report.lb1, 1);
        assert_eq!(report.combined, 2);
    }
}
