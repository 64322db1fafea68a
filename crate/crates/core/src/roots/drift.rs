//! How roots move when one word is pumped inside a concatenation.

use num_complex::Complex64;

use super::{all_roots, leading_root, RootError};
use crate::poly::{construct_unchecked, remove_trivial_factors};
use crate::symbolic::{is_admissible, Word};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DriftSample {
    pub n: usize,
    /// Distance from `z0` to the nearest root of `P(w1·w2^n)`.
    pub interior_distance: f64,
    /// `|λ(w1^n·w2) - λ(w1)|`; NaN when `n = 0` and `w2` has no leading root.
    pub leading_distance: f64,
    /// Admissibility of `w1·w2^n` and `w1^n·w2`.
    pub admissible: (bool, bool),
}

#[derive(Clone, Debug, PartialEq)]
pub struct DriftReport {
    pub z0: Complex64,
    pub leading: f64,
    pub samples: Vec<DriftSample>,
}

impl DriftReport {
    /// True when the interior distances never increase from sample `from`
    /// onward.
    pub fn interior_monotone_from(&self, from: usize) -> bool {
        self.samples[from..]
            .windows(2)
            .all(|w| w[1].interior_distance <= w[0].interior_distance * (1.0 + 1e-9))
    }
}

fn roots_of(w: &Word) -> Result<Vec<Complex64>, RootError> {
    let p = construct_unchecked(w);
    let (q, _) = remove_trivial_factors(&p, false).map_err(|e| RootError::Domain(e.to_string()))?;
    if q.degree() == 0 {
        return Ok(Vec::new());
    }
    Ok(all_roots(&q)?.with_multiplicity())
}

/// Samples `n` over `ns`. `z0` defaults to the root of `P(w2)` (trivial
/// factors removed) of smallest modulus.
pub fn root_drift_harness(
    w1: &Word,
    w2: &Word,
    ns: impl IntoIterator<Item = usize>,
    z0: Option<Complex64>,
) -> Result<DriftReport, RootError> {
    let z0 = match z0 {
        Some(z) => z,
        None => roots_of(w2)?
            .into_iter()
            .min_by(|a, b| a.norm().total_cmp(&b.norm()))
            .ok_or_else(|| RootError::Domain(format!("P({w2}) has no nontrivial roots")))?,
    };
    let leading = leading_root(&construct_unchecked(w1))?;
    let mut samples = Vec::new();
    for n in ns {
        let a = w1.concat(&w2.repeat(n));
        let b = w1.repeat(n).concat(w2);
        let interior_distance = roots_of(&a)?
            .into_iter()
            .map(|z| (z - z0).norm())
            .fold(f64::INFINITY, f64::min);
        let leading_distance = leading_root(&construct_unchecked(&b))
            .map(|l| (l - leading).abs())
            .unwrap_or(f64::NAN);
        samples.push(DriftSample {
            n,
            interior_distance,
            leading_distance,
            admissible: (is_admissible(&a), is_admissible(&b)),
        });
    }
    Ok(DriftReport {
        z0,
        leading,
        samples,
    })
}
