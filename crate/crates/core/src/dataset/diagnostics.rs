//! Empirical checks on finite clouds: persistence of in-disk points as the
//! growth rate rises, population of the unit cylinder, and local density
//! comparisons between two clouds.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::Serialize;

use super::TeapotPoint;

/// Regression thresholds for a teapot cloud of max length 18: the
/// persistence score from `√2` to `2` over 4 levels, band 0.02,
/// eps 0.05, stays at or above `PERSISTENCE_MIN_SCORE`.
pub const PERSISTENCE_EPS: f64 = 0.05;
pub const PERSISTENCE_BAND: f64 = 0.02;
pub const PERSISTENCE_LEVELS: usize = 4;
pub const PERSISTENCE_MIN_SCORE: f64 = 0.95;

/// Slab check: every level `2^(1/4 + 3k/32)`, `k = 0..=8`, has a point with
/// `SLAB_R_MIN ≤ |z| ≤ 1` within `SLAB_BAND` in growth rate.
pub const SLAB_BAND: f64 = 0.02;
pub const SLAB_R_MIN: f64 = 0.95;

pub fn slab_levels() -> Vec<f64> {
    (0..=8).map(|k| 2f64.powf(0.25 + 0.75 * k as f64 / 8.0)).collect()
}

/// Buckets points into square cells of side `cell` for radius queries.
struct Grid {
    cell: f64,
    cells: HashMap<(i64, i64), Vec<Complex64>>,
}

impl Grid {
    fn new(points: impl Iterator<Item = Complex64>, cell: f64) -> Grid {
        let mut cells: HashMap<(i64, i64), Vec<Complex64>> = HashMap::new();
        for z in points {
            cells.entry(Self::key(z, cell)).or_default().push(z);
        }
        Grid { cell, cells }
    }

    fn key(z: Complex64, cell: f64) -> (i64, i64) {
        ((z.re / cell).floor() as i64, (z.im / cell).floor() as i64)
    }

    /// Some point within `r ≤ cell` of `z`?
    fn any_within(&self, z: Complex64, r: f64) -> bool {
        let (kx, ky) = Self::key(z, self.cell);
        (-1..=1).any(|dx| {
            (-1..=1).any(|dy| {
                self.cells
                    .get(&(kx + dx, ky + dy))
                    .is_some_and(|v| v.iter().any(|w| (w - z).norm() <= r))
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PersistenceReport {
    /// Fraction of (base point, level) pairs with a neighbour within `eps`.
    pub score: f64,
    pub base_points: usize,
    pub pairs: usize,
    pub hits: usize,
    pub levels: Vec<f64>,
    /// The base slice or some level slice had no in-disk points.
    pub empty_slice: bool,
}

/// Points with `|z| < 1` and `|λ - level| ≤ band`.
fn disk_slice(points: &[TeapotPoint], level: f64, band: f64) -> impl Iterator<Item = Complex64> + '_ {
    points
        .iter()
        .filter(move |p| (p.lambda - level).abs() <= band && p.z().norm() < 1.0)
        .map(|p| p.z())
}

/// For every in-disk point near `lambda_lo`, checks whether each of
/// `levels` evenly spaced higher levels up to `lambda_hi` has an in-disk
/// point within `eps`. Levels are slices of half-width `band`.
pub fn persistence_diagnostic(
    points: &[TeapotPoint],
    lambda_lo: f64,
    lambda_hi: f64,
    eps: f64,
    levels: usize,
    band: f64,
) -> PersistenceReport {
    let base: Vec<Complex64> = disk_slice(points, lambda_lo, band).collect();
    if lambda_hi <= lambda_lo || levels == 0 {
        return PersistenceReport {
            score: 1.0,
            base_points: base.len(),
            pairs: 0,
            hits: 0,
            levels: Vec::new(),
            empty_slice: base.is_empty(),
        };
    }
    let lv: Vec<f64> = (1..=levels)
        .map(|k| lambda_lo + (lambda_hi - lambda_lo) * k as f64 / levels as f64)
        .collect();
    let mut empty_slice = base.is_empty();
    let (mut pairs, mut hits) = (0, 0);
    for &l in &lv {
        let grid = Grid::new(disk_slice(points, l, band), eps);
        empty_slice |= grid.cells.is_empty();
        for &z in &base {
            pairs += 1;
            hits += grid.any_within(z, eps) as usize;
        }
    }
    PersistenceReport {
        score: if pairs == 0 { 0.0 } else { hits as f64 / pairs as f64 },
        base_points: base.len(),
        pairs,
        hits,
        levels: lv,
        empty_slice,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SlabLevel {
    pub level: f64,
    pub count: usize,
}

/// Number of points with `r_min ≤ |z| ≤ 1` at each level slice.
pub fn unit_cylinder_slab(points: &[TeapotPoint], levels: &[f64], band: f64, r_min: f64) -> Vec<SlabLevel> {
    levels
        .iter()
        .map(|&level| SlabLevel {
            level,
            count: points
                .iter()
                .filter(|p| {
                    let r = p.z().norm();
                    (p.lambda - level).abs() <= band && r >= r_min && r <= 1.0
                })
                .count(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub center: (f64, f64),
    pub radius: f64,
    pub count_a: usize,
    pub count_b: usize,
    /// Points per unit area inside the disk.
    pub density_a: f64,
    pub density_b: f64,
    /// `density_b - density_a`.
    pub difference: f64,
    pub nearest_a: f64,
    pub nearest_b: f64,
}

/// Compares how many points of each cloud fall in the disk `B_radius(center)`.
pub fn preperiodic_difference_probe(
    a: &[Complex64],
    b: &[Complex64],
    center: Complex64,
    radius: f64,
) -> DensityReport {
    let area = std::f64::consts::PI * radius * radius;
    let inside = |v: &[Complex64]| v.iter().filter(|z| (*z - center).norm() < radius).count();
    let nearest = |v: &[Complex64]| v.iter().map(|z| (z - center).norm()).fold(f64::INFINITY, f64::min);
    let (count_a, count_b) = (inside(a), inside(b));
    let (density_a, density_b) = (count_a as f64 / area, count_b as f64 / area);
    DensityReport {
        center: (center.re, center.im),
        radius,
        count_a,
        count_b,
        density_a,
        density_b,
        difference: density_b - density_a,
        nearest_a: nearest(a),
        nearest_b: nearest(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Flavor;

    fn pt(re: f64, im: f64, lambda: f64) -> TeapotPoint {
        TeapotPoint {
            z_re: re,
            z_im: im,
            lambda,
            word_id: 0,
            flavor: Flavor::Periodic,
        }
    }

    #[test]
    fn equal_levels_score_one() {
        let pts = [pt(0.5, 0.1, 1.5)];
        assert_eq!(persistence_diagnostic(&pts, 1.5, 1.5, 0.05, 4, 0.01).score, 1.0);
    }

    #[test]
    fn persistence_counts_neighbours() {
        let pts = [pt(0.5, 0.0, 1.5), pt(0.51, 0.0, 1.75), pt(0.9, 0.0, 2.0)];
        let r = persistence_diagnostic(&pts, 1.5, 2.0, 0.05, 2, 0.01);
        assert_eq!((r.pairs, r.hits), (2, 1));
        assert!(!r.empty_slice);
    }

    #[test]
    fn identical_clouds_have_no_difference() {
        let a = [Complex64::new(0.5, 0.4), Complex64::new(0.2, 0.1)];
        let r = preperiodic_difference_probe(&a, &a, Complex64::new(0.5, 0.4), 0.1);
        assert_eq!(r.difference, 0.0);
        assert_eq!(r.count_a, 1);
    }

    #[test]
    fn slab_counts() {
        let pts = [pt(0.0, 0.97, 1.5), pt(0.0, 0.5, 1.5), pt(0.96, 0.0, 1.9)];
        let s = unit_cylinder_slab(&pts, &[1.5, 1.9, 1.2], 0.01, 0.95);
        let counts: Vec<usize> = s.iter().map(|l| l.count).collect();
        assert_eq!(counts, vec![1, 1, 0]);
    }
}
