//! Online colorful bin packing.
//!
//! Items arrive one by one, each with an exact rational size in `[0, 1]`
//! and a color. Bins have capacity 1 and two consecutive items in a bin
//! must differ in color. This crate provides:
//!
//! * the exact domain model and packing validation ([`packing`]),
//! * the online algorithms NF, FF, BF, WF, Pseudo and Balanced-Pseudo
//!   behind a common stepping engine ([`algo`]),
//! * offline lower bounds with witnesses ([`bounds`]),
//! * an exact order-respecting offline optimum at desk scale ([`oracle`]),
//! * deterministic and interactive adversarial constructions that exhibit
//!   the algorithms' worst cases, each with a validated certificate packing
//!   bounding the offline optimum ([`adversary`]).
//!
//! All arithmetic is exact; there is not a single floating-point number in
//! this crate.

pub mod adversary;
pub mod algo;
pub mod bounds;
pub mod color;
pub mod format;
pub mod instance;
pub mod oracle;
pub mod packing;
pub mod size;

pub use color::Color;
pub use instance::{Instance, Item};
pub use packing::{can_accept, validate_packing, Bin, Packing, Target, Violation};
pub use size::Size;
