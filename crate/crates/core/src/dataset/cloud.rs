//! Point clouds: every nontrivial root of every word's polynomial, tagged
//! with the word's growth rate.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::map_representatives;
use super::preperiodic::enumerate_preperiodic;
use super::{DatasetError, Flavor, TeapotPoint};
use crate::poly::{construct_unchecked, remove_trivial_factors};
use crate::roots::{all_roots, leading_root};
use crate::symbolic::{is_realized_at, Word};

/// Growth rates at or below this are the degenerate `β = 1` words.
pub const DEGENERATE_LAMBDA: f64 = 1.0 + 1e-9;
const BATCH: usize = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum CloudSource {
    /// Superattracting maps with period at most `max_len`.
    Periodic { max_len: usize },
    /// Strictly preperiodic maps with `preperiod + period ≤ max_total`.
    Preperiodic { max_total: usize },
    /// Same words as `Periodic`, read as `(z, λ)` points.
    Teapot { max_len: usize },
}

impl CloudSource {
    pub fn flavor(self) -> Flavor {
        match self {
            CloudSource::Preperiodic { .. } => Flavor::Preperiodic,
            _ => Flavor::Periodic,
        }
    }

    fn words(self) -> Vec<Word> {
        match self {
            CloudSource::Periodic { max_len } | CloudSource::Teapot { max_len } => {
                if max_len < 2 {
                    Vec::new()
                } else {
                    map_representatives(max_len)
                }
            }
            CloudSource::Preperiodic { max_total } => {
                if max_total < 3 {
                    Vec::new()
                } else {
                    enumerate_preperiodic(max_total)
                }
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CloudStats {
    pub words: u64,
    pub polynomials: u64,
    pub degenerate: u64,
    /// Shift-admissible words no tent map realizes (renormalization windows).
    pub unrealized: u64,
    pub points: u64,
    /// Words whose roots could not be computed, with the reason.
    pub failures: Vec<(u64, String)>,
    pub wall_secs: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cloud {
    pub source: CloudSource,
    pub points: Vec<TeapotPoint>,
    pub stats: CloudStats,
}

impl Cloud {
    pub fn zs(&self) -> Vec<num_complex::Complex64> {
        self.points.iter().map(|p| p.z()).collect()
    }
}

enum WordOutcome {
    Points(Vec<TeapotPoint>),
    Degenerate,
    Unrealized,
    Failed(String),
}

/// Roots of one word's polynomial with `z - 1` (and for preperiodic words
/// `z + 1`) divided out. `None` for degenerate words and for words no tent
/// map realizes.
pub fn points_for_word(w: &Word, flavor: Flavor) -> Result<Option<Vec<TeapotPoint>>, String> {
    match process(w, flavor) {
        WordOutcome::Points(p) => Ok(Some(p)),
        WordOutcome::Degenerate | WordOutcome::Unrealized => Ok(None),
        WordOutcome::Failed(e) => Err(e),
    }
}

fn process(w: &Word, flavor: Flavor) -> WordOutcome {
    let p = construct_unchecked(w);
    let lambda = match leading_root(&p) {
        Ok(l) => l,
        Err(e) => return WordOutcome::Failed(e.to_string()),
    };
    if lambda <= DEGENERATE_LAMBDA {
        return WordOutcome::Degenerate;
    }
    if !is_realized_at(w, lambda) {
        return WordOutcome::Unrealized;
    }
    let reduced = match remove_trivial_factors(&p, flavor == Flavor::Preperiodic) {
        Ok((q, _)) => q,
        Err(e) => return WordOutcome::Failed(e.to_string()),
    };
    if reduced.degree() == 0 {
        return WordOutcome::Points(Vec::new());
    }
    match all_roots(&reduced) {
        Ok(rs) => {
            let id = w.id();
            WordOutcome::Points(
                rs.distinct()
                    .map(|z| TeapotPoint {
                        z_re: z.re,
                        z_im: z.im,
                        lambda,
                        word_id: id,
                        flavor,
                    })
                    .collect(),
            )
        }
        Err(e) => WordOutcome::Failed(e.to_string()),
    }
}

/// Streams the cloud to `sink` in word-id order, batch by batch. Roots are
/// computed in parallel within a batch; the output does not depend on the
/// thread count.
pub fn build_point_cloud_to<S>(source: CloudSource, mut sink: S) -> Result<CloudStats, DatasetError>
where
    S: FnMut(&[TeapotPoint]) -> Result<(), DatasetError>,
{
    let start = Instant::now();
    let flavor = source.flavor();
    let words = source.words();
    let mut stats = CloudStats {
        words: words.len() as u64,
        ..CloudStats::default()
    };
    for chunk in words.chunks(BATCH) {
        let outcomes: Vec<WordOutcome> = chunk.par_iter().map(|w| process(w, flavor)).collect();
        let mut batch = Vec::new();
        for (w, o) in chunk.iter().zip(outcomes) {
            match o {
                WordOutcome::Points(p) => {
                    stats.polynomials += 1;
                    batch.extend(p);
                }
                WordOutcome::Degenerate => stats.degenerate += 1,
                WordOutcome::Unrealized => stats.unrealized += 1,
                WordOutcome::Failed(e) => stats.failures.push((w.id(), e)),
            }
        }
        stats.points += batch.len() as u64;
        sink(&batch)?;
    }
    stats.wall_secs = start.elapsed().as_secs_f64();
    Ok(stats)
}

/// The whole cloud in memory.
pub fn build_point_cloud(source: CloudSource) -> Cloud {
    let mut points = Vec::new();
    let stats = build_point_cloud_to(source, |b| {
        points.extend_from_slice(b);
        Ok(())
    })
    .expect("in-memory sink cannot fail");
    Cloud {
        source,
        points,
        stats,
    }
}
