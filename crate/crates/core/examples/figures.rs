//! Reads a figures config and rebuilds each listed point file.

use teapot::config::FiguresConfig;
use teapot::dataset::{build_point_cloud, write_points};

const SAMPLE: &str = r#"
[[figure]]
name = "omega2"
kind = "periodic"
max_len = 12
out = "omega2.csv"

[[figure]]
name = "teapot"
kind = "teapot"
max_len = 12
format = "tpot"
out = "teapot.tpot"
"#;

fn main() -> Result<(), teapot::Error> {
    let cfg = match std::env::args().nth(1) {
        Some(path) => FiguresConfig::load(path.as_ref())?,
        None => FiguresConfig::parse(SAMPLE)?,
    };
    let dir = std::env::temp_dir();
    for fig in &cfg.figure {
        let cloud = build_point_cloud(fig.source());
        let out = dir.join(&fig.out);
        write_points(&out, &cloud.points, fig.point_format()?)?;
        println!("{}: {} points -> {}", fig.name, cloud.points.len(), out.display());
    }
    Ok(())
}
