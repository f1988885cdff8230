//! Library surface of the atlas command-line tool: caps/config, report
//! types, the per-graph parameter runner, gadget-claim evaluation, the
//! deterministic corpus, and directory verification.

pub mod claims;
pub mod config;
pub mod corpus;
pub mod report;
pub mod runner;
pub mod verify;

pub use config::{Caps, Config};
pub use report::{ParamEntry, ParameterReport, RelCheck};
