//! Experiment harness for the colorful bin packing library: algorithm
//! dispatch by token, seeded random instance generation, labeled ratio
//! reports, and the acceptance suite the `cbp suite` subcommand runs.

pub mod algs;
pub mod randgen;
pub mod ratio;
pub mod report;
pub mod suite;
