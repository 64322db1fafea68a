//! Complex roots of integer polynomials.

mod aberth;
pub mod drift;
mod leading;
pub mod squarefree;

use std::cmp::Ordering;

use num_complex::Complex64;

use crate::poly::IntPoly;

pub use drift::{root_drift_harness, DriftReport, DriftSample};
pub use leading::leading_root;

/// Scaled residual every returned root must beat.
pub const RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RootError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("root iteration did not converge (best residual {residual:.3e})")]
    NonConvergence { best: Vec<Complex64>, residual: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub z: Complex64,
    pub multiplicity: u32,
}

/// Distinct roots with multiplicities, sorted by modulus descending and then
/// argument ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Root>,
    /// Largest scaled residual `|P(z)| / Σ|c_i||z|^i` over the roots.
    pub residual: f64,
}

impl RootSet {
    /// Total count with multiplicity.
    pub fn count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity as usize).sum()
    }

    pub fn distinct(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.roots.iter().map(|r| r.z)
    }

    /// Every root repeated by multiplicity.
    pub fn with_multiplicity(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.z, r.multiplicity as usize))
            .collect()
    }

    pub fn nearest(&self, target: Complex64) -> Option<Complex64> {
        self.distinct()
            .min_by(|a, b| (a - target).norm().total_cmp(&(b - target).norm()))
    }
}

fn root_order(a: &Complex64, b: &Complex64) -> Ordering {
    b.norm()
        .total_cmp(&a.norm())
        .then_with(|| a.arg().total_cmp(&b.arg()))
}

/// Snaps roots that are numerically real onto the real axis, so real roots
/// are reported with an exact zero imaginary part.
fn snap_real(c: &[f64], z: Complex64) -> Complex64 {
    if z.im == 0.0 || z.im.abs() > 1e-8 * z.norm().max(1.0) {
        return z;
    }
    let x = aberth::newton_polish(c, Complex64::new(z.re, 0.0));
    let (px, _) = aberth::horner2(c, x);
    let (pz, _) = aberth::horner2(c, z);
    if x.im == 0.0 && px.norm() <= pz.norm() * 1.0001 + f64::MIN_POSITIVE {
        x
    } else {
        z
    }
}

/// Every complex root of `p`, with multiplicities taken from an exact
/// square-free decomposition.
pub fn all_roots(p: &IntPoly) -> Result<RootSet, RootError> {
    if p.degree() == 0 {
        return Err(RootError::Domain("polynomial has degree 0".into()));
    }
    let (q, zeros) = p.strip_z_power();
    let mut roots = Vec::new();
    if zeros > 0 {
        roots.push(Root {
            z: Complex64::new(0.0, 0.0),
            multiplicity: zeros as u32,
        });
    }
    if q.degree() > 0 {
        for f in squarefree::squarefree_part(&q) {
            let out = aberth::aberth(&f.coeffs);
            for z in out.roots {
                let mut z = aberth::newton_polish(&f.coeffs, z);
                if !out.converged {
                    z = aberth::newton_polish(&f.coeffs, aberth::newton_polish(&f.coeffs, z));
                }
                let z = snap_real(&f.coeffs, z);
                roots.push(Root {
                    z,
                    multiplicity: f.multiplicity,
                });
            }
        }
    }
    roots.sort_by(|a, b| root_order(&a.z, &b.z));
    let residual = roots
        .iter()
        .map(|r| p.scaled_residual(r.z))
        .fold(0.0, f64::max);
    if residual.is_nan() || residual >= RESIDUAL_TOL {
        return Err(RootError::NonConvergence {
            best: roots.iter().map(|r| r.z).collect(),
            residual,
        });
    }
    Ok(RootSet { roots, residual })
}
