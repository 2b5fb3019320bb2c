//! Exact arithmetic for Hodge diamonds, a fragment of the Grothendieck ring
//! of varieties, semiorthogonal-decomposition ledgers and Fano-scheme
//! dimension formulas for del Pezzo varieties, plus a small text language
//! tying them together.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command
//! line live in the `quadflip` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dsl;
pub mod fano;
pub mod hodge;
pub mod motive;
pub mod sod;
pub mod util;

pub use hodge::HodgeDiamond;
pub use motive::Motive;
pub use sod::{Ledger, RuleTable, Verdict};
