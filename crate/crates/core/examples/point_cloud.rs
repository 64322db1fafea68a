//! Builds the Ω₂ cloud, writes it in both formats and reads it back.

use teapot::dataset::{build_point_cloud, read_points, write_points, CloudSource, PointFormat};

fn main() -> Result<(), teapot::DatasetError> {
    let max_len = std::env::args().nth(1).map_or(14, |s| s.parse().expect("length bound"));
    let cloud = build_point_cloud(CloudSource::Periodic { max_len });
    let s = &cloud.stats;
    println!(
        "{} words, {} polynomials, {} degenerate, {} points in {:.2}s",
        s.words, s.polynomials, s.degenerate, s.points, s.wall_secs
    );
    let dir = std::env::temp_dir();
    for (name, format) in [("omega2.csv", PointFormat::Csv), ("omega2.tpot", PointFormat::Tpot)] {
        let path = dir.join(name);
        write_points(&path, &cloud.points, format)?;
        let back = read_points(&path)?;
        println!("{}: {} bytes, round trip {}", path.display(), std::fs::metadata(&path)?.len(), back == cloud.points);
    }
    Ok(())
}
