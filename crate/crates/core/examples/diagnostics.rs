//! Persistence, unit-cylinder and preperiodic-density diagnostics.

use teapot::dataset::diagnostics::{
    slab_levels, PERSISTENCE_BAND, PERSISTENCE_EPS, PERSISTENCE_LEVELS, SLAB_BAND, SLAB_R_MIN,
};
use teapot::dataset::{
    build_point_cloud, persistence_diagnostic, preperiodic_difference_probe, unit_cylinder_slab,
    CloudSource,
};
use teapot::ifs::exclusion_test;
use teapot::Complex64;

fn main() -> Result<(), teapot::IfsError> {
    let max_len = std::env::args().nth(1).map_or(18, |s| s.parse().expect("length bound"));
    let teapot = build_point_cloud(CloudSource::Teapot { max_len });
    let r = persistence_diagnostic(
        &teapot.points,
        2f64.sqrt(),
        2.0,
        PERSISTENCE_EPS,
        PERSISTENCE_LEVELS,
        PERSISTENCE_BAND,
    );
    println!("persistence √2 → 2: {:.4} over {} base points", r.score, r.base_points);
    for s in unit_cylinder_slab(&teapot.points, &slab_levels(), SLAB_BAND, SLAB_R_MIN) {
        println!("  slab λ = {:.4}: {}", s.level, s.count);
    }

    let p = Complex64::new(0.5393738531461442, 0.4050155839374199);
    let omega = teapot.zs();
    let pre = build_point_cloud(CloudSource::Preperiodic { max_total: max_len }).zs();
    let d = preperiodic_difference_probe(&omega, &pre, p, 0.01);
    println!(
        "near p: {} periodic vs {} preperiodic points within {}; nearest {:.2e} / {:.2e}",
        d.count_a, d.count_b, d.radius, d.nearest_a, d.nearest_b
    );
    println!("exclusion at depth 6: {:?}", exclusion_test(p, 6)?.verdict);
    Ok(())
}
