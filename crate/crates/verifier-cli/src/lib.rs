//! Verification harness: configuration, the monoid text format, report
//! assembly and the verification suites.
//!
//! Suites are deterministic given the seed: randomized cases draw from a
//! seeded ChaCha stream and report assembly is sorted by case key, so
//! identical configurations produce byte-identical JSON reports.

pub mod config;
pub mod format;
pub mod report;
pub mod suites;

pub use config::{CapsConfig, OutputMode, SuiteConfig};
pub use format::{parse_monoid_file, parse_monoid_str, serialize_map, serialize_monoid, FormatError, ParsedEntity};
pub use report::{CaseRecord, Status, VerificationReport};
pub use suites::{run_suite, SuiteName};
