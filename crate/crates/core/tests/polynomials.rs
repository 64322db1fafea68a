use teapot::dataset::{build_point_cloud, enumerate_admissible, CloudSource};
use teapot::poly::{
    kneading_polynomial, kneading_polynomial_from_aux, parry_polynomial, polynomial_of,
    remove_trivial_factors,
};
use teapot::roots::{all_roots, leading_root, root_drift_harness};
use teapot::symbolic::Word;
use teapot::{Complex64, IntPoly, Sign};

#[test]
fn kneading_constructions_agree() {
    for w in enumerate_admissible(14).0.iter().filter(|w| w.sign() == Sign::Plus) {
        assert_eq!(kneading_polynomial(w).unwrap(), kneading_polynomial_from_aux(w).unwrap(), "{w}");
    }
}

#[test]
fn parry_polynomials_vanish_at_growth_rate() {
    for w in enumerate_admissible(14).0 {
        let p = parry_polynomial(&w).unwrap();
        assert_eq!(p.degree(), w.len());
        assert_eq!(p.leading(), 1);
        assert_eq!(p.eval_i64(1), Some(0), "{w}");
        let l = leading_root(&p).unwrap();
        assert!(p.eval_f64(l).abs() < 1e-9, "{w}: P({l}) = {}", p.eval_f64(l));
        assert!(remove_trivial_factors(&p, false).is_ok());
    }
}

#[test]
fn roots_satisfy_vieta() {
    for w in enumerate_admissible(12).0 {
        let p = parry_polynomial(&w).unwrap();
        let (q, _) = remove_trivial_factors(&p, false).unwrap();
        if q.degree() == 0 {
            continue;
        }
        let roots = all_roots(&q).unwrap();
        let zs = roots.with_multiplicity();
        assert_eq!(zs.len(), q.degree());
        let n = q.degree();
        let lead = q.leading() as f64;
        let sum: Complex64 = zs.iter().sum();
        let prod: Complex64 = zs.iter().product();
        let want_sum = -(q.coeff(n - 1) as f64) / lead;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let want_prod = sign * q.coeff(0) as f64 / lead;
        assert!((sum - want_sum).norm() < 1e-8, "{w}: {sum} vs {want_sum}");
        assert!((prod - want_prod).norm() < 1e-8 * want_prod.abs().max(1.0), "{w}: {prod} vs {want_prod}");
        assert!(roots.residual < 1e-10);
    }
}

#[test]
fn nontrivial_roots_lie_in_the_annulus() {
    for w in enumerate_admissible(14).0 {
        let p = parry_polynomial(&w).unwrap();
        if leading_root(&p).unwrap() <= 1.0 + 1e-9 {
            continue;
        }
        let (q, _) = remove_trivial_factors(&p, false).unwrap();
        for z in all_roots(&q).unwrap().distinct() {
            assert!((0.5 - 1e-6..=2.0 + 1e-6).contains(&z.norm()), "{w}: {z}");
        }
    }
}

#[test]
fn repeated_factors_get_multiplicities() {
    // (z - 2)^2 (z^2 + 1)
    let p = IntPoly::from_descending(&[1, -4, 5, -4, 4]);
    let rs = all_roots(&p).unwrap();
    assert_eq!(rs.count(), 4);
    let two = rs.roots.iter().find(|r| (r.z - Complex64::new(2.0, 0.0)).norm() < 1e-9).unwrap();
    assert_eq!(two.multiplicity, 2);
    assert_eq!(rs.roots.len(), 3);
}

#[test]
fn cloud_points_are_roots_of_their_reduced_polynomial() {
    for source in [CloudSource::Periodic { max_len: 12 }, CloudSource::Preperiodic { max_total: 10 }] {
        let cloud = build_point_cloud(source);
        assert!(cloud.stats.failures.is_empty());
        for pt in &cloud.points {
            let w = Word::from_id(pt.word_id).unwrap();
            let (q, _) = remove_trivial_factors(&polynomial_of(&w).unwrap(), !w.is_periodic()).unwrap();
            assert!(q.scaled_residual(pt.z()) < 1e-8, "{w}");
        }
    }
}

#[test]
fn roots_drift_toward_limits() {
    let w1: Word = "1001".parse().unwrap();
    let w2: Word = "100".parse().unwrap();
    let r = root_drift_harness(&w1, &w2, 2..=10, None).unwrap();
    assert!(r.interior_monotone_from(0));
    let last = r.samples.last().unwrap();
    assert!(last.interior_distance < 1e-6);
    assert!(last.leading_distance < 1e-10);
}
