//! Gap radii around ring elements on the unit circle, checked against a
//! freshly built cloud.

use teapot::dataset::{build_point_cloud, CloudSource};
use teapot::ifs::{gap_radius, verify_gap, Ring};
use teapot::Complex64;

fn main() -> Result<(), teapot::IfsError> {
    let n = std::env::args().nth(1).map_or(12, |s| s.parse().expect("length bound"));
    let zs = build_point_cloud(CloudSource::Periodic { max_len: n }).zs();
    let cases = [
        (Ring::Integers, Complex64::new(-1.0, 0.0)),
        (Ring::sqrt(1)?, Complex64::new(0.0, 1.0)),
        (Ring::half_sqrt(3)?, Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3)),
        (Ring::sqrt(2)?, Complex64::new(1.0, 2f64.sqrt())),
    ];
    for (ring, x) in cases {
        let g = gap_radius(ring, x, n)?;
        let chk = verify_gap(&g, &zs, n)?;
        let nearest = zs
            .iter()
            .map(|z| (z - x).norm())
            .filter(|&d| d > 1e-9)
            .fold(f64::INFINITY, f64::min);
        println!(
            "{ring:<18} x = {:+.4}{:+.4}i  r = {:.3e}  nearest other point {nearest:.3e}  {}",
            x.re,
            x.im,
            g.r,
            if chk.passed { "ok" } else { "violated" }
        );
    }
    Ok(())
}
