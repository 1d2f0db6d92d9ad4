//! Inputs on which Balanced-Pseudo meets its worst-case analysis.
//!
//! All three start from the same zero-size cascade over three colors. With
//! `a_1 = 1` and `a_i = (3 a_{i-1} + 2) / 4`, i.e. `a_i = 2 - (3/4)^(i-1)`:
//! phase 0 brings `M` white items, and phase `i` brings `a_i * M / 2` red
//! items, then `(1 - a_i/2) * M` blue items, then `M` white items. An
//! offline packing keeps reusing the same `M` bins, but Balanced-Pseudo
//! ends phase `i` with `a_(i+1) * M` pseudo-bins, all white, approaching
//! `2M`. The cascade alone forces ratio 2 on zero sizes.
//!
//! Two continuations push the ratio toward 4 with sized items:
//!
//! * `gen_bap_general` appends `2M - m - 1` items of fresh colors (size
//!   `2*eps`), `M - 1` black items of size `1 - eps`, and `M - 2` more
//!   fresh-color items, where `m = (3/4)^N * M`. Each black and each final
//!   fresh item splits a pseudo-bin, independent of tie-breaking, while the
//!   certificate still uses `M` bins. The guaranteed count is
//!   `(2M - m) + (M - 2) + (M - 3) = 4M - m - 5`; with the shipped
//!   tie-break rules the realized count is `4M - m - 3` (every black and
//!   every final fresh item splits).
//! * `gen_bap_3color` stays within three colors (valid for min-index
//!   tie-breaking): three batches of `M` items (blue, white, blue) sized so
//!   that the `t`-th items of consecutive batches overflow each other by
//!   exactly `delta_t / 4`, turning each of the first `M` pseudo-bins into
//!   three bins, `a_(N+1) * M + 2M` bins total, while the certificate uses
//!   `M + 2` bins.

use super::AdversaryError;
use crate::color::Color;
use crate::instance::Instance;
use crate::packing::{validate_packing, Packing};
use crate::size::Size;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

/// `a_i = 2 - (3/4)^(i-1)` for `i >= 1`.
fn a_coeff(i: u32) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let three_quarters = BigRational::new(BigInt::from(3), BigInt::from(4));
    two - three_quarters.pow(i as i32 - 1)
}

fn as_even_positive_u64(value: &BigRational, what: &str) -> Result<u64, AdversaryError> {
    if !value.is_integer() {
        return Err(AdversaryError::BadParams(format!(
            "{what} = {value} is not an integer; pick M divisible by enough powers of 4"
        )));
    }
    let int = value
        .to_integer()
        .to_u64()
        .ok_or_else(|| AdversaryError::BadParams(format!("{what} out of range")))?;
    if int == 0 || int % 2 != 0 {
        return Err(AdversaryError::BadParams(format!(
            "{what} = {int} must be a positive even integer"
        )));
    }
    Ok(int)
}

#[derive(Debug, Clone)]
pub struct BapZero {
    pub n: u32,
    pub m: u64,
    /// Red item count of phase `i` (index 0 holds phase 1).
    pub reds: Vec<u64>,
    pub blues: Vec<u64>,
    /// Items fed once phase `i` is complete, for `i = 0..=N`.
    pub phase_end_positions: Vec<usize>,
    /// Balanced-Pseudo's pseudo-bin count after phase `i`: `a_(i+1) * M`.
    pub expected_pseudo_bins: Vec<u64>,
    /// `a_(N+1) * M = 2M - (3/4)^N M`.
    pub final_pseudo_bins: u64,
    pub instance: Instance,
    pub certificate: Packing,
    pub opt_upper_bound: usize,
}

/// The cascade with the canonical `M = 4^(N+1)`.
pub fn gen_bap_zero(n: u32) -> Result<BapZero, AdversaryError> {
    if n < 2 {
        return Err(AdversaryError::BadParams(format!(
            "bap-zero requires N >= 2, got {n}"
        )));
    }
    let m = 4u64
        .checked_pow(n + 1)
        .filter(|&m| m <= 1 << 24)
        .ok_or_else(|| AdversaryError::BadParams(format!("M = 4^{} is too large", n + 1)))?;
    gen_bap_zero_with(n, m)
}

/// The cascade with an explicit `M`; every phase count must come out a
/// positive even integer, which `4^(N+1)` (and already `4^N`) guarantees.
pub fn gen_bap_zero_with(n: u32, m: u64) -> Result<BapZero, AdversaryError> {
    if n < 1 {
        return Err(AdversaryError::BadParams("need at least one phase".into()));
    }
    if !m.is_multiple_of(2) {
        return Err(AdversaryError::BadParams(format!("M = {m} must be even")));
    }
    let m_rat = BigRational::from_integer(BigInt::from(m));
    let mut reds = Vec::new();
    let mut blues = Vec::new();
    let mut expected_pseudo_bins = vec![m];
    for i in 1..=n {
        let red = as_even_positive_u64(
            &(a_coeff(i) * &m_rat / BigRational::from_integer(BigInt::from(2))),
            &format!("red count of phase {i}"),
        )?;
        if red >= m {
            return Err(AdversaryError::BadParams(format!(
                "phase {i} red count {red} must stay below M = {m}"
            )));
        }
        reds.push(red);
        blues.push(m - red);
        let expected = a_coeff(i + 1) * &m_rat;
        if !expected.is_integer() {
            return Err(AdversaryError::BadParams(format!(
                "pseudo-bin count after phase {i} is not integral for M = {m}"
            )));
        }
        expected_pseudo_bins.push(expected.to_integer().to_u64().unwrap());
    }

    let mut items: Vec<(Color, Size)> = Vec::new();
    let mut labels: Vec<usize> = Vec::new();
    let mut phase_end_positions = Vec::new();
    for b in 0..m {
        items.push((Color::white(), Size::zero()));
        labels.push(b as usize);
    }
    phase_end_positions.push(items.len());
    for i in 0..n as usize {
        for t in 0..reds[i] {
            items.push((Color::red(), Size::zero()));
            labels.push(t as usize);
        }
        for t in 0..blues[i] {
            items.push((Color::blue(), Size::zero()));
            labels.push((reds[i] + t) as usize);
        }
        for b in 0..m {
            items.push((Color::white(), Size::zero()));
            labels.push(b as usize);
        }
        phase_end_positions.push(items.len());
    }
    let instance = Instance::new(items);
    let certificate = Packing::from_assignment(&instance, &labels)
        .expect("one colored + one white per bin and phase");
    debug_assert_eq!(validate_packing(&instance, &certificate), Ok(()));
    Ok(BapZero {
        n,
        m,
        reds,
        blues,
        phase_end_positions,
        final_pseudo_bins: expected_pseudo_bins[n as usize],
        expected_pseudo_bins,
        instance,
        certificate,
        opt_upper_bound: m as usize,
    })
}

fn default_eps(m: u64) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(16) * BigInt::from(m))
}

fn check_eps(eps: &BigRational, m: u64) -> Result<(), AdversaryError> {
    let limit = BigRational::new(BigInt::from(1), BigInt::from(8) * BigInt::from(m));
    if !eps.is_positive() || eps >= &limit {
        return Err(AdversaryError::BadParams(format!(
            "eps = {eps} must satisfy 0 < eps < 1/(8M) = {limit}"
        )));
    }
    Ok(())
}

fn fresh_color(counter: &mut u64) -> Color {
    *counter += 1;
    Color::new(format!("fresh-{:06}", *counter)).expect("valid token")
}

#[derive(Debug, Clone)]
pub struct BapGeneral {
    pub n: u32,
    pub m: u64,
    /// `m = (3/4)^N * M`, the pseudo-bins the cascade stops short of `2M`.
    pub m_small: u64,
    pub eps: BigRational,
    pub fresh_first: u64,
    pub blacks: u64,
    pub fresh_second: u64,
    /// Bins Balanced-Pseudo is guaranteed regardless of tie-breaking:
    /// `(2M - m) + (M - 2) + (M - 3)`.
    pub guaranteed_bins: usize,
    pub instance: Instance,
    pub certificate: Packing,
    pub opt_upper_bound: usize,
}

pub fn gen_bap_general(n: u32, eps: Option<BigRational>) -> Result<BapGeneral, AdversaryError> {
    let base = gen_bap_zero(n)?;
    let m = base.m;
    let eps = eps.unwrap_or_else(|| default_eps(m));
    check_eps(&eps, m)?;
    let m_small = 2 * m - base.final_pseudo_bins;
    let fresh_first = 2 * m - m_small - 1;
    let blacks = m - 1;
    let fresh_second = m - 2;

    let two_eps =
        Size::new(BigRational::from_integer(BigInt::from(2)) * &eps).expect("2*eps < 1/(4M) <= 1");
    let big = Size::new(BigRational::one() - &eps).expect("1 - eps in (0, 1)");

    let mut items: Vec<(Color, Size)> = base
        .instance
        .items()
        .iter()
        .map(|it| (it.color.clone(), it.size.clone()))
        .collect();
    let mut labels: Vec<usize> = base
        .instance
        .items()
        .iter()
        .map(|it| base.certificate.assignment()[&it.index].0)
        .collect();
    let mut counter = 0u64;
    for _ in 0..fresh_first {
        items.push((fresh_color(&mut counter), two_eps.clone()));
        labels.push(0);
    }
    for t in 0..blacks {
        items.push((Color::black(), big.clone()));
        labels.push((t + 1) as usize);
    }
    for _ in 0..fresh_second {
        items.push((fresh_color(&mut counter), two_eps.clone()));
        labels.push(0);
    }
    let instance = Instance::new(items);
    let certificate = Packing::from_assignment(&instance, &labels)
        .expect("fresh items share bin 0, blacks top up the white bins");
    debug_assert_eq!(validate_packing(&instance, &certificate), Ok(()));
    Ok(BapGeneral {
        n,
        m,
        m_small,
        eps,
        fresh_first,
        blacks,
        fresh_second,
        guaranteed_bins: (2 * m - m_small + (m - 2) + (m - 3)) as usize,
        instance,
        certificate,
        opt_upper_bound: m as usize,
    })
}

#[derive(Debug, Clone)]
pub struct Bap3Color {
    pub n: u32,
    pub m: u64,
    pub eps: BigRational,
    /// Bins a min-index-ties Balanced-Pseudo run ends with:
    /// `a_(N+1) M + 2M`.
    pub expected_bins: usize,
    pub instance: Instance,
    pub certificate: Packing,
    pub opt_upper_bound: usize,
}

pub fn gen_bap_3color(n: u32, eps: Option<BigRational>) -> Result<Bap3Color, AdversaryError> {
    let base = gen_bap_zero(n)?;
    let m = base.m;
    let eps = eps.unwrap_or_else(|| default_eps(m));
    check_eps(&eps, m)?;
    // delta_t = eps / 4^t, defined for t = 1..=M+1.
    let delta = |t: u64| -> BigRational {
        &eps / BigRational::from_integer(BigInt::from(4).pow(u32::try_from(t).expect("t fits")))
    };
    let zero_len = base.instance.len();

    let mut items: Vec<(Color, Size)> = base
        .instance
        .items()
        .iter()
        .map(|it| (it.color.clone(), it.size.clone()))
        .collect();
    let mut labels: Vec<usize> = base
        .instance
        .items()
        .iter()
        .map(|it| base.certificate.assignment()[&it.index].0)
        .collect();
    // Batch 1: M blue items of sizes delta_1 .. delta_M.
    for t in 1..=m {
        items.push((Color::blue(), Size::new(delta(t)).expect("tiny")));
        // Item t+1 joins the triple in bin t; item 1 tops off bin M-1.
        labels.push(if t == 1 {
            (m - 1) as usize
        } else {
            (t - 2) as usize
        });
    }
    // Batch 2: M white items of sizes 1 - 3*delta_(t+1).
    for t in 1..=m {
        let size = BigRational::one() - BigRational::from_integer(BigInt::from(3)) * delta(t + 1);
        items.push((Color::white(), Size::new(size).expect("in (0,1)")));
        // Item t belongs to the triple in bin t-1; item M opens a new bin.
        labels.push(if t == m { m as usize } else { (t - 1) as usize });
    }
    // Batch 3: M blue items of sizes delta_1 .. delta_M.
    for t in 1..=m {
        items.push((Color::blue(), Size::new(delta(t)).expect("tiny")));
        // Item t+1 closes the triple in bin t; item 1 opens a new bin.
        labels.push(if t == 1 {
            (m + 1) as usize
        } else {
            (t - 2) as usize
        });
    }
    debug_assert_eq!(items.len(), zero_len + 3 * m as usize);
    let instance = Instance::new(items);
    let certificate =
        Packing::from_assignment(&instance, &labels).expect("triples sum to 1 - delta_(t+1)");
    debug_assert_eq!(validate_packing(&instance, &certificate), Ok(()));
    Ok(Bap3Color {
        n,
        m,
        eps,
        expected_bins: (base.final_pseudo_bins + 2 * m) as usize,
        instance,
        certificate,
        opt_upper_bound: (m + 2) as usize,
    })
}
