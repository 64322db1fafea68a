//! Aberth–Ehrlich simultaneous iteration for square-free polynomials.

use num_complex::Complex64;

const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;
const MAX_ITER: usize = 800;

/// `p(z)` and `p'(z)` by Horner, coefficients ascending.
#[inline]
pub(crate) fn horner2(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Same ratio `p/p'` evaluated through the reversed polynomial when `|z| > 1`
/// so large moduli never overflow.
#[inline]
fn newton_ratio(c: &[f64], z: Complex64) -> Complex64 {
    if z.norm_sqr() <= 1.0 {
        let (p, dp) = horner2(c, z);
        return p / dp;
    }
    let n = (c.len() - 1) as f64;
    let w = z.inv();
    let mut q = Complex64::new(0.0, 0.0);
    let mut dq = Complex64::new(0.0, 0.0);
    for &a in c.iter() {
        dq = dq * w + q;
        q = q * w + a;
    }
    // p(z) = z^n q(1/z), p'(z) = z^{n-1} (n q(w) - w q'(w))
    let denom = n * q - w * dq;
    z * q / denom
}

pub(crate) struct AberthOutcome {
    pub roots: Vec<Complex64>,
    pub converged: bool,
}

/// All roots of a polynomial whose roots are simple.
pub(crate) fn aberth(c: &[f64]) -> AberthOutcome {
    let d = c.len() - 1;
    let lead = c[d].abs();
    match d {
        0 => {
            return AberthOutcome {
                roots: Vec::new(),
                converged: true,
            }
        }
        1 => {
            return AberthOutcome {
                roots: vec![Complex64::new(-c[0] / c[1], 0.0)],
                converged: true,
            }
        }
        _ => {}
    }
    let radius = 1.0 + c[..d].iter().fold(0.0f64, |m, a| m.max(a.abs())) / lead;
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, 0.4 + k as f64 * GOLDEN_ANGLE))
        .collect();
    let mut done = vec![false; d];
    let mut converged = false;
    for _ in 0..MAX_ITER {
        let mut active = 0;
        for k in 0..d {
            if done[k] {
                continue;
            }
            active += 1;
            let ratio = newton_ratio(c, z[k]);
            let mut s = Complex64::new(0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    s += (z[k] - zj).inv();
                }
            }
            let step = ratio / (1.0 - ratio * s);
            if step.is_finite() {
                z[k] -= step;
                if step.norm() <= 4.0 * f64::EPSILON * z[k].norm().max(1e-300) {
                    done[k] = true;
                }
            } else {
                z[k] += Complex64::new(1e-8, 1e-8);
            }
        }
        if active == 0 {
            converged = true;
            break;
        }
    }
    if !converged {
        converged = done.iter().all(|&x| x);
    }
    AberthOutcome { roots: z, converged }
}

/// A few Newton steps; keeps the iterate whenever a step would increase
/// `|p|`.
pub(crate) fn newton_polish(c: &[f64], mut z: Complex64) -> Complex64 {
    for _ in 0..4 {
        let (p0, _) = horner2(c, z);
        let step = newton_ratio(c, z);
        if !step.is_finite() {
            break;
        }
        let cand = z - step;
        let (p1, _) = horner2(c, cand);
        if p1.norm() < p0.norm() {
            z = cand;
        } else {
            break;
        }
    }
    z
}
