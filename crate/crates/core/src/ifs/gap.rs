use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use super::IfsError;

const MEMBER_TOL: f64 = 1e-9;
/// Cloud points this close to `x` are taken to be `x` itself.
const SELF_TOL: f64 = 1e-9;

/// Discrete subrings of `C` around whose points finite approximations of the
/// conjugate set leave holes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    /// `Z`.
    Integers,
    /// `Z[√-D]`.
    Sqrt(u32),
    /// `Z[(1+√-D)/2]`; a lattice only for `D = 3`.
    HalfSqrt(u32),
}

impl Ring {
    pub fn sqrt(d: u32) -> Result<Ring, IfsError> {
        if [1, 2, 3, 5].contains(&d) {
            Ok(Ring::Sqrt(d))
        } else {
            Err(IfsError::Domain(format!("D must be one of 1, 2, 3, 5; got {d}")))
        }
    }

    pub fn half_sqrt(d: u32) -> Result<Ring, IfsError> {
        match d {
            3 => Ok(Ring::HalfSqrt(3)),
            1 | 2 | 5 => Err(IfsError::Domain(format!(
                "Z[(1+√-{d})/2] is not a discrete ring; only D = 3 gives a lattice"
            ))),
            _ => Err(IfsError::Domain(format!("D must be one of 1, 2, 3, 5; got {d}"))),
        }
    }

    /// The six rings with a positive minimal modulus.
    pub fn all() -> [Ring; 6] {
        [
            Ring::Integers,
            Ring::Sqrt(1),
            Ring::Sqrt(2),
            Ring::Sqrt(3),
            Ring::Sqrt(5),
            Ring::HalfSqrt(3),
        ]
    }

    /// Second lattice generator; the first is 1. `None` for `Z`.
    fn tau(self) -> Option<Complex64> {
        match self {
            Ring::Integers => None,
            Ring::Sqrt(d) => Some(Complex64::new(0.0, (d as f64).sqrt())),
            Ring::HalfSqrt(d) => Some(Complex64::new(0.5, (d as f64).sqrt() / 2.0)),
        }
    }

    /// Lattice coordinates `(a, b)` with `x = a + bτ`, if `x` is in the ring.
    pub fn coordinates(self, x: Complex64) -> Option<(i64, i64)> {
        let near = |v: f64| (v - v.round()).abs() <= MEMBER_TOL;
        match self.tau() {
            None => (x.im.abs() <= MEMBER_TOL && near(x.re)).then(|| (x.re.round() as i64, 0)),
            Some(t) => {
                let b = x.im / t.im;
                let a = x.re - b * t.re;
                (near(a) && near(b)).then(|| (a.round() as i64, b.round() as i64))
            }
        }
    }

    pub fn contains(self, x: Complex64) -> bool {
        self.coordinates(x).is_some()
    }

    pub fn element(self, a: i64, b: i64) -> Complex64 {
        Complex64::new(a as f64, 0.0) + self.tau().map_or(Complex64::new(0.0, 0.0), |t| t * b as f64)
    }

    /// All ring elements with `|x| ≤ radius`.
    pub fn elements_within(self, radius: f64) -> Vec<Complex64> {
        let k = radius.ceil() as i64 + 2;
        let bs = if self.tau().is_some() { -2 * k..=2 * k } else { 0..=0 };
        let mut out = Vec::new();
        for b in bs {
            for a in -2 * k..=2 * k {
                let x = self.element(a, b);
                if x.norm() <= radius + 1e-12 {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Smallest nonzero modulus, by search over a box of lattice points
    /// large enough to contain the shortest vector.
    pub fn min_modulus(self) -> f64 {
        let mut best = f64::INFINITY;
        let span = if self.tau().is_some() { 4 } else { 0 };
        for b in -span..=span {
            for a in -4..=4 {
                let r = self.element(a, b).norm();
                if r > 0.0 {
                    best = best.min(r);
                }
            }
        }
        best
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::Sqrt(d) => write!(f, "Z[sqrt(-{d})]"),
            Ring::HalfSqrt(d) => write!(f, "Z[(1+sqrt(-{d}))/2]"),
        }
    }
}

impl Serialize for Ring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Ring {
    type Err = IfsError;

    /// `Z`, `sqrt:D` or `half:D`.
    fn from_str(s: &str) -> Result<Ring, IfsError> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("z") {
            return Ok(Ring::Integers);
        }
        let parse_d = |t: &str| {
            t.parse::<u32>()
                .map_err(|_| IfsError::Domain(format!("bad ring parameter {t:?}")))
        };
        if let Some(d) = s.strip_prefix("sqrt:") {
            return Ring::sqrt(parse_d(d)?);
        }
        if let Some(d) = s.strip_prefix("half:") {
            return Ring::half_sqrt(parse_d(d)?);
        }
        Err(IfsError::Domain(format!(
            "unknown ring {s:?}; use Z, sqrt:D or half:D"
        )))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GapSpec {
    pub ring: Ring,
    pub x_re: f64,
    pub x_im: f64,
    pub n: usize,
    pub c: f64,
    pub r: f64,
}

impl GapSpec {
    pub fn x(&self) -> Complex64 {
        Complex64::new(self.x_re, self.x_im)
    }
}

/// `r = min{c / ((2n²+3n+1) m e), 1/(n+1)}` with `m = |x|^n` when
/// `|x| ≥ 1` and `m = |x|` otherwise.
pub fn gap_radius(ring: Ring, x: Complex64, n: usize) -> Result<GapSpec, IfsError> {
    if let Ring::Sqrt(d) = ring {
        Ring::sqrt(d)?;
    }
    if let Ring::HalfSqrt(d) = ring {
        Ring::half_sqrt(d)?;
    }
    if n == 0 {
        return Err(IfsError::Domain("n must be at least 1".into()));
    }
    if !ring.contains(x) {
        return Err(IfsError::Domain(format!("{x} is not an element of {ring}")));
    }
    let c = ring.min_modulus();
    let nf = n as f64;
    let poly = 2.0 * nf * nf + 3.0 * nf + 1.0;
    let ax = x.norm();
    let m = if ax >= 1.0 { ax.powi(n as i32) } else { ax };
    let first = c / (poly * m * std::f64::consts::E);
    let r = first.min(1.0 / (nf + 1.0));
    Ok(GapSpec {
        ring,
        x_re: x.re,
        x_im: x.im,
        n,
        c,
        r,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapCheck {
    pub passed: bool,
    /// Cloud points strictly inside the ball, with their distance to `x`.
    pub offenders: Vec<(f64, f64, f64)>,
}

/// No cloud point other than `x` lies strictly inside `B_r(x)`.
pub fn verify_gap(
    spec: &GapSpec,
    cloud: &[Complex64],
    cloud_max_len: usize,
) -> Result<GapCheck, IfsError> {
    if cloud_max_len != spec.n {
        return Err(IfsError::Precondition(format!(
            "cloud was built with length bound {cloud_max_len}, gap spec uses n = {}",
            spec.n
        )));
    }
    let x = spec.x();
    let offenders: Vec<(f64, f64, f64)> = cloud
        .iter()
        .map(|&z| (z, (z - x).norm()))
        .filter(|&(_, d)| d > SELF_TOL && d < spec.r)
        .map(|(z, d)| (z.re, z.im, d))
        .collect();
    Ok(GapCheck {
        passed: offenders.is_empty(),
        offenders,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_moduli() {
        for ring in Ring::all() {
            assert!((ring.min_modulus() - 1.0).abs() < 1e-12, "{ring}");
        }
        assert!(Ring::half_sqrt(1).is_err());
        assert!(Ring::sqrt(7).is_err());
    }

    #[test]
    fn radius_at_i() {
        let i = Complex64::new(0.0, 1.0);
        let g = gap_radius(Ring::Sqrt(1), i, 16).unwrap();
        assert!((g.r - 1.0 / (561.0 * std::f64::consts::E)).abs() < 1e-15);
        assert!((g.r - 6.557e-4).abs() < 1e-6);
        let g = gap_radius(Ring::Sqrt(1), i, 14).unwrap();
        assert!((g.r - 1.0 / (435.0 * std::f64::consts::E)).abs() < 1e-15);
        assert!(gap_radius(Ring::Sqrt(2), i, 14).is_err());
    }

    #[test]
    fn branches_meet_on_unit_circle() {
        let w = Complex64::new(0.5, 3f64.sqrt() / 2.0);
        let g = gap_radius(Ring::HalfSqrt(3), w, 9).unwrap();
        let poly = 2.0 * 81.0 + 27.0 + 1.0;
        assert!((g.r - 1.0 / (poly * std::f64::consts::E)).abs() < 1e-15);
        let zero = gap_radius(Ring::Integers, Complex64::new(0.0, 0.0), 4).unwrap();
        assert_eq!(zero.r, 0.2);
    }

    #[test]
    fn empty_cloud_passes() {
        let g = gap_radius(Ring::Sqrt(1), Complex64::new(0.0, 1.0), 5).unwrap();
        assert!(verify_gap(&g, &[], 5).unwrap().passed);
        assert!(verify_gap(&g, &[], 6).is_err());
        let near = [Complex64::new(0.0, 1.0 + g.r / 2.0), Complex64::new(0.0, 1.0)];
        let chk = verify_gap(&g, &near, 5).unwrap();
        assert_eq!(chk.offenders.len(), 1);
    }
}
