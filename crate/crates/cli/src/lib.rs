//! Orchestration layer behind the `trisphere` binary: argument parsing
//! helpers, the verification suite, and report rendering.

pub mod parse;
pub mod report;
pub mod suite;
