//! Command line, builtin diamonds, JSON formats and the golden suite for
//! `quadflip-core`.

pub mod builtins;
pub mod cli;
pub mod formats;
pub mod oracles;
pub mod report;
pub mod suite;
