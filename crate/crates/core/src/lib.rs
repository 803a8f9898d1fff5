//! Exact coefficients of the Baker-Campbell-Hausdorff series
//! `H = log(e^A e^B)` in two noncommuting variables.
//!
//! The coefficient `h_w` of every word `w` over `{A, B}` is computed with an
//! integer-only recurrence ([`bchcore`]) over a selectable integer width
//! ([`IntegerBackend`]). Around it sit the denominator formula
//! ([`denominators`]), a brute-force free-algebra oracle ([`oracle`]), the
//! Dynkin form of `H_n` as right-nested commutators ([`lietools`]) and the
//! partition-indexed coefficient table ([`tabulation`]).
//!
//! ```
//! use bch::{bch_coefficient_any, IntegerBackend};
//!
//! let h = bch_coefficient_any("AAB", IntegerBackend::Auto).unwrap();
//! assert_eq!(h.to_string(), "1/12");
//! ```

pub mod backend;
pub mod bchcore;
pub mod cli;
pub mod denominators;
pub mod error;
pub mod lietools;
pub mod oracle;
pub mod rational;
pub mod tabulation;
pub mod verify;
pub mod word;

pub use backend::IntegerBackend;
pub use bchcore::{bch_coefficient, bch_coefficient_any, bch_coefficient_with, EvalOptions};
pub use error::{BchError, DivisionSite, Result};
pub use rational::ExactRational;
pub use word::BlockWord;
