//! Exact combinatorics of sl3 webs presented as ladder words.
//!
//! The crate walks one chain of constructions end to end:
//!
//! - [`laurent`]: integer Laurent polynomials and quantum integers.
//! - [`tableaux`]: 3-multipartitions, residues, standard multitableaux and
//!   their BKW degree.
//! - [`ladderweb`]: divided-power ladder words, the LT-algorithm from
//!   semistandard tableaux, and the web basis of a sign string.
//! - [`flows`]: flows as state subsets on ladder layers, weights, brackets of
//!   closed webs and tensor expansions.
//! - [`bijection`]: the map from webs with flows to multitableaux and the
//!   growth algorithm going back.
//! - [`foamword`]: symbolic foams built from idempotents, dots and
//!   transpositions, with their degrees and the cellular basis.
//! - [`presets`]: a handful of named webs.
//! - [`verify`]: exhaustive checks over all sign strings up to a length.
//! - [`cli`]: the `sl3web` command-line front end.

pub mod bijection;
pub mod cli;
pub mod flows;
pub mod foamword;
pub mod ladderweb;
pub mod laurent;
pub mod presets;
pub mod tableaux;
pub mod verify;

pub use laurent::Laurent;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}
