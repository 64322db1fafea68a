use std::sync::atomic::{AtomicU64, Ordering};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::IfsError;

/// Relative band around the ball radius inside which no verdict is given.
const TIE_TOL: f64 = 1e-12;
const SPLIT_DEPTH: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Every depth-`n` inverse orbit of 0 leaves the ball that contains the
    /// limit set, so 0 is not in it.
    Excluded,
    /// Some orbit is still inside the ball. Not a membership proof.
    Plausible,
    /// The minimum is within rounding of the ball radius.
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IfsQuery {
    pub z_re: f64,
    pub z_im: f64,
    pub depth: usize,
    pub verdict: Verdict,
    /// `min |v(0)|` over all compositions `v` of `depth` inverse maps.
    pub exclusion_min: f64,
    /// `1 / (1 - |z|)`.
    pub ball_radius: f64,
}

impl IfsQuery {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.z_re, self.z_im)
    }
}

struct Search {
    zinv: Complex64,
    rinv: f64,
    depth: usize,
}

impl Search {
    /// Smallest possible `|v(x)|` after `k` more steps: each inverse map
    /// sends modulus `t` to at least `(t - 1)/|z|`.
    fn lower_bound(&self, t: f64, k: usize) -> f64 {
        let mut t = t;
        for _ in 0..k {
            if t <= 1.0 {
                return 0.0;
            }
            t = (t - 1.0) * self.rinv;
        }
        t
    }

    fn dfs(&self, x: Complex64, level: usize, best: &AtomicU64) {
        if level == self.depth {
            best.fetch_min(x.norm().to_bits(), Ordering::Relaxed);
            return;
        }
        let cur = f64::from_bits(best.load(Ordering::Relaxed));
        if self.lower_bound(x.norm(), self.depth - level) > cur * (1.0 + 1e-12) {
            return;
        }
        let a = (x - 1.0) * self.zinv;
        let b = (x + 1.0) * self.zinv;
        let (first, second) = if a.norm_sqr() <= b.norm_sqr() { (a, b) } else { (b, a) };
        self.dfs(first, level + 1, best);
        self.dfs(second, level + 1, best);
    }

    /// Greedy descent: a cheap upper bound that seeds the pruning.
    fn greedy(&self) -> f64 {
        let mut x = Complex64::new(0.0, 0.0);
        for _ in 0..self.depth {
            let a = (x - 1.0) * self.zinv;
            let b = (x + 1.0) * self.zinv;
            x = if a.norm_sqr() <= b.norm_sqr() { a } else { b };
        }
        x.norm()
    }
}

fn check_z(z: Complex64) -> Result<(), IfsError> {
    let r = z.norm();
    if !(r > 0.0 && r < 1.0) {
        return Err(IfsError::Domain(format!("need 0 < |z| < 1, got |z| = {r}")));
    }
    Ok(())
}

/// Exact `min |v(0)|` by branch and bound, the subtrees below depth 10
/// searched in parallel. Norms are nonnegative, so their bit patterns order
/// like the floats and the shared minimum is a plain atomic.
pub fn exclusion_test(z: Complex64, depth: usize) -> Result<IfsQuery, IfsError> {
    check_z(z)?;
    let s = Search {
        zinv: z.inv(),
        rinv: 1.0 / z.norm(),
        depth,
    };
    let best = AtomicU64::new(s.greedy().to_bits());
    let split = depth.min(SPLIT_DEPTH);
    let mut frontier = vec![Complex64::new(0.0, 0.0)];
    for _ in 0..split {
        frontier = frontier
            .iter()
            .flat_map(|&x| [(x - 1.0) * s.zinv, (x + 1.0) * s.zinv])
            .collect();
    }
    frontier.par_iter().for_each(|&x| s.dfs(x, split, &best));
    let exclusion_min = f64::from_bits(best.into_inner());
    let ball_radius = 1.0 / (1.0 - z.norm());
    let verdict = if (exclusion_min - ball_radius).abs() <= TIE_TOL * ball_radius {
        Verdict::Undetermined
    } else if exclusion_min > ball_radius {
        Verdict::Excluded
    } else {
        Verdict::Plausible
    };
    Ok(IfsQuery {
        z_re: z.re,
        z_im: z.im,
        depth,
        verdict,
        exclusion_min,
        ball_radius,
    })
}

/// Unpruned minimum over all `2^depth` compositions.
pub fn exclusion_min_bruteforce(z: Complex64, depth: usize) -> Result<f64, IfsError> {
    check_z(z)?;
    let zinv = z.inv();
    let mut level = vec![Complex64::new(0.0, 0.0)];
    for _ in 0..depth {
        level = level
            .iter()
            .flat_map(|&x| [(x - 1.0) * zinv, (x + 1.0) * zinv])
            .collect();
    }
    Ok(level.iter().map(|x| x.norm()).fold(f64::INFINITY, f64::min))
}
