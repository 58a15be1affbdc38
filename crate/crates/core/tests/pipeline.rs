use realtoric::complexes::Subset;
use realtoric::homology::Coefficients;
use realtoric::pipeline::{betti_real_toric, render_verification, verify, BettiReport, Cache, ComputeOptions, Format, Level, Strategy};
use realtoric::{Error, Family};

fn opts() -> ComputeOptions {
    ComputeOptions::default()
}

#[test]
fn published_examples() {
    let c3 = betti_real_toric(Family::C, 3, Coefficients::Q, Strategy::Full, &opts()).unwrap();
    assert_eq!((c3.betti.as_slice(), c3.euler_char), (&[1, 13, 12][..], 0));
    let d4 = betti_real_toric(Family::D, 4, Coefficients::Q, Strategy::Orbit, &opts()).unwrap();
    assert_eq!((d4.betti.as_slice(), d4.euler_char), (&[1, 12, 51, 24][..], 16));
    let c4 = betti_real_toric(Family::C, 4, Coefficients::Q, Strategy::Poset, &opts()).unwrap();
    assert_eq!(c4.betti, vec![1, 27, 106]);
    for r in [&c3, &d4, &c4] {
        assert!(r.aggregation_holds());
    }
}

#[test]
fn integral_orbit_is_torsion_free() {
    let d4 = betti_real_toric(Family::D, 4, Coefficients::Z, Strategy::Orbit, &opts()).unwrap();
    assert_eq!(d4.betti, vec![1, 12, 51, 24]);
    assert!(d4.torsion.is_empty());
}

#[test]
fn gf3_poset() {
    let c4 = betti_real_toric(Family::C, 4, Coefficients::Gf(3), Strategy::Poset, &opts()).unwrap();
    assert_eq!(c4.betti, vec![1, 27, 106]);
}

#[test]
fn poset_needs_a_field() {
    let err = betti_real_toric(Family::C, 3, Coefficients::Z, Strategy::Poset, &opts()).unwrap_err();
    assert!(matches!(err, Error::Unsupported(_)));
    assert!(matches!(
        betti_real_toric(Family::B, 3, Coefficients::Q, Strategy::Full, &opts()),
        Err(Error::UnsupportedFamily(Family::B))
    ));
    assert!(matches!(
        betti_real_toric(Family::C, 2, Coefficients::Q, Strategy::Full, &opts()),
        Err(Error::RankBelowMinimum { .. })
    ));
}

#[test]
fn json_round_trip() {
    let r = betti_real_toric(Family::C, 3, Coefficients::Z, Strategy::Orbit, &opts()).unwrap();
    let back = BettiReport::from_json(&r.to_json().unwrap()).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
    assert_eq!(v["per_subset"][1]["S"], serde_json::json!([1]));
    assert_eq!(v["per_subset"][1]["ranks"]["1"], 2);
}

#[test]
fn cache_reuse_and_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let options = ComputeOptions {
        jobs: Some(2),
        cache: Some(Cache::new(dir.path())),
    };
    let first = betti_real_toric(Family::C, 4, Coefficients::Q, Strategy::Full, &options).unwrap();
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(files, 1 + 16);
    let second = betti_real_toric(Family::C, 4, Coefficients::Q, Strategy::Full, &options).unwrap();
    assert_eq!(first.betti, second.betti);
    assert_eq!(first.per_subset, second.per_subset);
    assert_eq!(second.subset(Subset::from_elements(&[4])).unwrap().rank(0), 15);
}

#[test]
fn verify_quick_large_rank() {
    for (family, n) in [(Family::C, 11), (Family::D, 11), (Family::A, 5), (Family::B, 4)] {
        let report = verify(family, n, Level::Quick, &opts()).unwrap();
        assert!(report.overall(), "{}", render_verification(&report, Format::Md).unwrap());
    }
    assert!(verify(Family::C, 2, Level::Quick, &opts()).is_err());
    assert!(verify(Family::A, 3, Level::Full, &opts()).is_err());
}

#[test]
fn verify_full_small() {
    for (family, n) in [(Family::C, 3), (Family::C, 4), (Family::D, 4)] {
        let report = verify(family, n, Level::Full, &opts()).unwrap();
        assert!(report.overall(), "{}", render_verification(&report, Format::Md).unwrap());
    }
}
