//! The iterated function system `x ↦ zx ± 1`: exclusion of parameters from
//! the set where 0 lies in the limit set, and gap radii around ring points.

mod exclusion;
mod gap;

pub use exclusion::{exclusion_min_bruteforce, exclusion_test, IfsQuery, Verdict};
pub use gap::{gap_radius, verify_gap, GapCheck, GapSpec, Ring};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IfsError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}
