//! Library side of the `cera` binary: file formats and report assembly.

pub mod formats;
pub mod report;
