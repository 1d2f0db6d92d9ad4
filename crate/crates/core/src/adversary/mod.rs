//! Adversarial inputs.
//!
//! Two kinds live here. The generator families (`prop1-*`, `bap-*`) are
//! deterministic instances that force specific algorithms into many bins
//! while a bundled certificate packing shows the offline optimum is small.
//! The interactive adversaries (`lb2`, `zero3`) build their input one item
//! at a time from the observed decisions of an arbitrary online algorithm,
//! again maintaining a certificate; they consume only the engine's
//! observation interface and never an algorithm's internals.

mod bap_tight;
mod lb2;
mod prop1;
mod zero3;

pub use bap_tight::{
    gen_bap_3color, gen_bap_general, gen_bap_zero, gen_bap_zero_with, Bap3Color, BapGeneral,
    BapZero,
};
pub use lb2::{adversary_lb2, Lb2Termination, Lb2Transcript};
pub use prop1::{gen_prop1, Prop1, Prop1Variant};
pub use zero3::{adversary_zero3, Zero3Transcript};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdversaryError {
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// One named check a transcript carries: an inequality or structural
/// property the interaction is supposed to maintain, evaluated on the run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl LemmaCheck {
    fn passed(name: &'static str, detail: impl Into<String>) -> LemmaCheck {
        LemmaCheck {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn failed(name: &'static str, detail: impl Into<String>) -> LemmaCheck {
        LemmaCheck {
            name,
            passed: false,
            detail: detail.into(),
        }
    }

    fn from_violations(
        name: &'static str,
        violations: Vec<String>,
        ok_detail: impl Into<String>,
    ) -> LemmaCheck {
        if violations.is_empty() {
            LemmaCheck::passed(name, ok_detail)
        } else {
            LemmaCheck::failed(name, violations.join("; "))
        }
    }
}
