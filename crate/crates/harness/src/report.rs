//! Rendering helpers: exact rationals as `p/q` strings plus a decimal
//! rendering computed by long division (display only; comparisons always
//! use the rational form), packings and instances as JSON values, and the
//! metadata block every report embeds for reproducibility.

use cbp_core::{Instance, Packing};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

pub fn rat_str(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn parse_rat(text: &str) -> Option<BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((num, den)) => (num.parse::<BigInt>().ok()?, den.parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Truncated decimal rendering with `places` fractional digits, exact long
/// division; never goes through floating point.
pub fn rat_decimal(value: &BigRational, places: u32) -> String {
    let negative = value.is_negative();
    let abs = value.abs();
    let int = abs.to_integer();
    let mut rem = abs.numer() - &int * abs.denom();
    let mut digits = String::new();
    for _ in 0..places {
        rem *= BigInt::from(10);
        let digit = &rem / abs.denom();
        digits.push_str(&digit.to_string());
        rem -= digit * abs.denom();
    }
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{digits}")
    }
}

pub fn packing_json(packing: &Packing) -> Value {
    json!({
        "num_bins": packing.num_bins(),
        "bins": packing
            .bins()
            .iter()
            .map(|bin| {
                json!({
                    "items": bin.items().iter().map(|it| it.index).collect::<Vec<_>>(),
                    "load": rat_str(bin.load()),
                    "last_color": bin.last_color().map(|c| c.token()),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn instance_lines(instance: &Instance) -> Vec<String> {
    instance
        .items()
        .iter()
        .map(|it| format!("{} {}", it.color, it.size))
        .collect()
}

/// The reproducibility block: library version plus the full experiment
/// parameters as the caller assembled them.
pub fn meta(command: &str, spec: Value) -> Value {
    json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "spec": spec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings_round_trip() {
        for text in ["0", "7", "1/2", "431/256", "19674/1458"] {
            let value = parse_rat(text).unwrap();
            assert_eq!(parse_rat(&rat_str(&value)).unwrap(), value);
        }
    }

    #[test]
    fn decimal_rendering_is_exact_division() {
        let value = BigRational::new(431.into(), 256.into());
        assert_eq!(rat_decimal(&value, 6), "1.683593");
        assert_eq!(
            rat_decimal(&BigRational::new(21.into(), 11.into()), 4),
            "1.9090"
        );
        assert_eq!(rat_decimal(&BigRational::zero(), 2), "0.00");
    }
}
