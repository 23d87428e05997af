//! File formats, DOT export and the command-line front-end for
//! [`molperc_core`].

pub mod cli;
pub mod dot;
pub mod format;

pub use format::{FileFormat, FormatError};
