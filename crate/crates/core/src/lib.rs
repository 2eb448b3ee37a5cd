//! Bitrate-ladder construction and evaluation from per-encode measurements.
//!
//! The pipeline goes: measure encodes over a resolution x QP grid
//! ([`harness`]), extract Pareto fronts over decode time, bitrate, and
//! quality ([`pareto`]), sample them into bitrate ladders ([`ladder`]),
//! and compare ladders with Bjontegaard-delta and decode-time-delta
//! metrics ([`evaluation`]).
//!
//! All computation modules are pure; only [`harness`] touches processes
//! and the filesystem.

pub mod evaluation;
pub mod harness;
pub mod interp;
pub mod ladder;
pub mod measurements;
pub mod pareto;
pub mod synthetic;

pub use measurements::{
    EncodePoint, MeasurementCatalog, MeasurementSet, QualityMetric, SequenceMeta,
};
pub use pareto::{Alpha, ObjectiveSpace, ParetoFront};
