//! Tent-map symbolic dynamics, Parry and kneading polynomials, batch root
//! extraction, IFS membership tests and the point clouds built from them.
//!
//! The crate is organised bottom-up:
//!
//! * [`symbolic`]: words, cumulative signs, the twisted and alternating
//!   orders, admissibility, dominance and the word constructions.
//! * [`poly`]: integer polynomials built from words.
//! * [`roots`]: all roots, leading roots and drift experiments.
//! * [`dataset`]: enumeration, point clouds, file formats, diagnostics.
//! * [`ifs`]: limit-set exclusion and gap radii.
//! * [`config`]: run parameters shared by the CLI and the examples.

pub mod config;
pub mod dataset;
pub mod ifs;
pub mod poly;
pub mod roots;
pub mod symbolic;

pub use num_complex::Complex64;

pub use dataset::{DatasetError, Flavor, TeapotPoint};
pub use ifs::{IfsError, IfsQuery, Verdict};
pub use poly::{IntPoly, PolyError};
pub use roots::{RootError, RootSet};
pub use symbolic::{Sign, SignSeq, SymbolicError, Word, WordKind};

/// Version of the binary point-file layout written by [`dataset::format`].
pub const TPOT_VERSION: u16 = 1;

/// Any error surfaced by the library, for callers that do not care which
/// layer produced it.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Ifs(#[from] IfsError),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error(transparent)]
    Config(#[from] config::ConfigError),
}
