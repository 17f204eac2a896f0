//! Spec parsing, command pipelines and report rendering for `hcell`.

pub mod commands;
pub mod report;
pub mod spec;

pub use commands::{run, Command, Flags};
pub use report::{Report, Section};
pub use spec::{parse_spec, parse_spec_str, Spec, SpecError, SpecFile};
