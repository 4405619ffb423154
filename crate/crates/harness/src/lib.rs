//! Randomized verification harness: seeded instance generation and the
//! registry of executable properties, one per transfer statement of the
//! S-Bézout theory, plus converse probes.

pub mod generate;
pub mod properties;
pub mod suite;

pub use generate::{mix_seed, Profile};
pub use properties::{property_by_id, registry, InstanceOutcome, PropKind, PropertyDef, Violation};
pub use suite::{counterexample_search, run_property_batch, run_suite, PropertyVerdict, SuiteReport};
