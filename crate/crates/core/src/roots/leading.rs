use super::squarefree::squarefree_part;
use super::RootError;
use crate::poly::{remove_trivial_factors, IntPoly};

const STEP: f64 = 1.0 / 1024.0;

fn bisect(c: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let eval = |x: f64| c.iter().rev().fold(0.0, |acc, &a| acc * x + a);
    let s_hi = eval(hi).signum();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = eval(mid);
        if v == 0.0 {
            return mid;
        }
        if v.signum() == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if eval(lo).abs() < eval(hi).abs() {
        lo
    } else {
        hi
    }
}

/// Largest real root in `(1, 2]`, or `1.0` when `p(1) = 0` and there is
/// none.
///
/// The factors `z - 1` are divided out, the rest is reduced to its
/// square-free part, and `[1, 2]` is scanned downward for the first sign
/// change, which is then bisected to full precision.
pub fn leading_root(p: &IntPoly) -> Result<f64, RootError> {
    let (q, t) = remove_trivial_factors(p, false).map_err(|e| RootError::Domain(e.to_string()))?;
    let top = 2.0 + 1e-9;
    let factors = squarefree_part(&q);
    let mut best: Option<f64> = None;
    for f in &factors {
        if f.coeffs.len() < 2 {
            continue;
        }
        let c = &f.coeffs;
        let eval = |x: f64| c.iter().rev().fold(0.0, |acc, &a| acc * x + a);
        let mut hi = top;
        let mut v_hi = eval(hi);
        while hi > 1.0 {
            let lo = (hi - STEP).max(1.0);
            let v_lo = eval(lo);
            if v_lo == 0.0 {
                best = Some(best.map_or(lo, |b: f64| b.max(lo)));
                break;
            }
            if v_lo.signum() != v_hi.signum() {
                let r = bisect(c, lo, hi);
                best = Some(best.map_or(r, |b: f64| b.max(r)));
                break;
            }
            hi = lo;
            v_hi = v_lo;
        }
    }
    match best {
        Some(r) if r > 1.0 - 1e-9 => Ok(r),
        _ if t.minus_one > 0 => Ok(1.0),
        _ => Err(RootError::Domain(format!("{p} has no real root in [1, 2]"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_and_degenerate() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let p = IntPoly::from_descending(&[1, -2, 0, 1]);
        assert!((leading_root(&p).unwrap() - phi).abs() < 1e-12);
        assert_eq!(leading_root(&IntPoly::from_descending(&[1, -2, 1])).unwrap(), 1.0);
        assert_eq!(leading_root(&IntPoly::from_descending(&[1, -2])).unwrap(), 2.0);
        assert!(leading_root(&IntPoly::from_descending(&[1, 0, 1])).is_err());
    }
}
