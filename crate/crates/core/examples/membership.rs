//! IFS exclusion test: a point of the disk whose inverse orbits of 0 all
//! leave the limit-set ball is not in Ω₂.

use teapot::ifs::exclusion_test;
use teapot::Complex64;

fn main() -> Result<(), teapot::IfsError> {
    let points = [
        Complex64::new(0.5393738531461442, 0.4050155839374199),
        Complex64::new(0.4, 0.0),
        Complex64::new(-0.7, 0.2),
    ];
    for z in points {
        for depth in [5, 6, 10] {
            let q = exclusion_test(z, depth)?;
            println!(
                "{:+.4}{:+.4}i depth {depth:>2}: min {:.5} vs ball {:.5} -> {:?}",
                z.re, z.im, q.exclusion_min, q.ball_radius, q.verdict
            );
        }
    }
    Ok(())
}
