//! Enumeration of admissible words and the point clouds built from their
//! polynomials.

pub mod cloud;
pub mod diagnostics;
pub mod enumerate;
pub mod format;
pub mod preperiodic;

use num_complex::Complex64;
use serde::Serialize;

pub use cloud::{build_point_cloud, build_point_cloud_to, Cloud, CloudSource, CloudStats};
pub use diagnostics::{
    persistence_diagnostic, preperiodic_difference_probe, unit_cylinder_slab, DensityReport,
    PersistenceReport, SlabLevel,
};
pub use enumerate::{
    count_admissible, enumerate_admissible, for_each_admissible, is_map_representative,
    map_representatives, WordInfo,
    EnumStats, LengthCounts,
};
pub use format::{parse_points, read_points, write_points, PointFormat, PointWriter};
pub use preperiodic::enumerate_preperiodic;

#[derive(Debug, thiserror::Error)]
pub enum DatasetError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed point file at byte {offset}: {message}")]
    Format { offset: u64, message: String },
    #[error("domain error: {0}")]
    Domain(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Periodic,
    Preperiodic,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Periodic => "periodic",
            Flavor::Preperiodic => "preperiodic",
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Flavor::Periodic => 0,
            Flavor::Preperiodic => 1,
        }
    }

    pub fn from_code(c: u8) -> Option<Flavor> {
        match c {
            0 => Some(Flavor::Periodic),
            1 => Some(Flavor::Preperiodic),
            _ => None,
        }
    }
}

/// A conjugate `z` of the growth rate `lambda` of the word `word_id`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TeapotPoint {
    pub z_re: f64,
    pub z_im: f64,
    pub lambda: f64,
    pub word_id: u64,
    pub flavor: Flavor,
}

impl TeapotPoint {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.z_re, self.z_im)
    }

    /// Length of the word behind `word_id` (preperiod plus period).
    pub fn word_len(&self) -> usize {
        let bits = self.word_id & ((1 << 56) - 1);
        63usize.saturating_sub(bits.leading_zeros() as usize)
    }
}
