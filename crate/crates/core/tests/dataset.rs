use teapot::dataset::format::{CSV_HEADER, MAGIC, RECORD_BYTES};
use teapot::dataset::{
    build_point_cloud, build_point_cloud_to, count_admissible, parse_points, preperiodic_difference_probe,
    read_points, write_points, CloudSource, DatasetError, PointFormat, PointWriter,
};
use teapot::ifs::exclusion_test;
use teapot::{Complex64, Flavor, TPOT_VERSION};

fn bytes_with_threads(threads: usize, source: CloudSource, format: PointFormat) -> Vec<u8> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
    pool.install(|| {
        let mut w = PointWriter::new(Vec::new(), format).unwrap();
        build_point_cloud_to(source, |pts| w.write(pts)).unwrap();
        w.finish().unwrap()
    })
}

#[test]
fn output_is_identical_across_thread_counts() {
    for (source, format) in [
        (CloudSource::Periodic { max_len: 14 }, PointFormat::Tpot),
        (CloudSource::Teapot { max_len: 12 }, PointFormat::Csv),
        (CloudSource::Preperiodic { max_total: 11 }, PointFormat::Tpot),
    ] {
        let one = bytes_with_threads(1, source, format);
        assert!(one.len() > 1000);
        for t in [2, 3, 8] {
            assert!(one == bytes_with_threads(t, source, format), "{source:?} with {t} threads");
        }
    }
    let a = count_admissible(22, true);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let b = pool.install(|| count_admissible(22, true));
    assert_eq!(a.per_length, b.per_length);
}

#[test]
fn files_round_trip_in_both_formats() {
    let cloud = build_point_cloud(CloudSource::Preperiodic { max_total: 9 });
    let dir = tempfile::tempdir().unwrap();
    for (name, format) in [("a.csv", PointFormat::Csv), ("a.tpot", PointFormat::Tpot)] {
        let path = dir.path().join(name);
        write_points(&path, &cloud.points, format).unwrap();
        assert_eq!(read_points(&path).unwrap(), cloud.points);
    }
    let size = std::fs::metadata(dir.path().join("a.tpot")).unwrap().len();
    assert_eq!(size as usize, 6 + RECORD_BYTES * cloud.points.len());
    let text = std::fs::read_to_string(dir.path().join("a.csv")).unwrap();
    assert_eq!(text.lines().next(), Some(CSV_HEADER));
    assert_eq!(text.lines().count(), cloud.points.len() + 1);
}

#[test]
fn malformed_files_name_the_offset() {
    let offset = |bytes: &[u8]| match parse_points(bytes) {
        Err(DatasetError::Format { offset, .. }) => offset,
        other => panic!("expected a format error, got {other:?}"),
    };
    let mut tpot = MAGIC.to_vec();
    tpot.extend(TPOT_VERSION.to_le_bytes());
    tpot.extend([0u8; RECORD_BYTES + 5]);
    assert_eq!(offset(&tpot), 6 + RECORD_BYTES as u64);

    let mut bad_version = MAGIC.to_vec();
    bad_version.extend(9u16.to_le_bytes());
    assert_eq!(offset(&bad_version), 4);

    let mut bad_flavor = MAGIC.to_vec();
    bad_flavor.extend(TPOT_VERSION.to_le_bytes());
    bad_flavor.extend([0u8; RECORD_BYTES - 1]);
    bad_flavor.push(7);
    assert_eq!(offset(&bad_flavor), 6 + 32);

    let csv = format!("{CSV_HEADER}\n1.0,2.0,1.5,4,periodic\n1.0,x,1.5,4,periodic\n");
    let second = CSV_HEADER.len() as u64 + 1 + "1.0,2.0,1.5,4,periodic\n".len() as u64;
    assert!(offset(csv.as_bytes()) >= second);
    assert!(offset(b"nonsense\n") == 0);
}

#[test]
fn tiny_bounds_give_empty_clouds() {
    for source in [
        CloudSource::Periodic { max_len: 1 },
        CloudSource::Teapot { max_len: 1 },
        CloudSource::Preperiodic { max_total: 2 },
    ] {
        let c = build_point_cloud(source);
        assert!(c.points.is_empty());
        assert_eq!(c.stats.points, 0);
    }
    // Only 10 and 1011-type words up to length 4: all degenerate or tiny.
    let c = build_point_cloud(CloudSource::Periodic { max_len: 3 });
    assert!(c.points.iter().all(|p| p.flavor == Flavor::Periodic));
}

#[test]
fn witness_neighbourhood_separates_the_two_clouds() {
    let p = Complex64::new(0.5393738531461442, 0.4050155839374199);
    let omega = build_point_cloud(CloudSource::Periodic { max_len: 16 }).zs();
    let pre = build_point_cloud(CloudSource::Preperiodic { max_total: 16 }).zs();
    let r = 1e-3;
    for k in 0..32 {
        let z = p + Complex64::from_polar(r, k as f64 * std::f64::consts::TAU / 32.0);
        assert_eq!(exclusion_test(z, 6).unwrap().verdict, teapot::Verdict::Excluded, "{z}");
    }
    let report = preperiodic_difference_probe(&omega, &pre, p, r);
    assert_eq!(report.count_a, 0);
    assert!(report.count_b >= 1);
    assert!(report.nearest_b < 1e-12);
    assert!(report.difference > 0.0);
}
