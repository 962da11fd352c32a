//! Library side of the `liecyclic` binary: the workspace format, the
//! subcommand bodies and report rendering.

pub mod commands;
pub mod report;
pub mod workspace;
