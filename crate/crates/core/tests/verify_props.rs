use std::fs;

use hspectrum::verify::{
    canonical_form, canonical_key, enumerate_connected_graphs, verify_closed_forms,
    verify_non_articulation, verify_spanning_tree_characterization, verify_upper_bound, HFamily,
    VerifyOptions,
};
use hspectrum::{Error, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn closed_forms_hold_through_eight() {
    let r = verify_closed_forms(8).unwrap();
    assert!(r.passed, "{}", r.to_text());
    // t+ for n = 2..=8 and h+ for n = 3..=8
    assert_eq!(r.instances_checked, 13);
    assert!(matches!(verify_closed_forms(10), Err(Error::CapExceeded { .. })));
}

#[test]
fn canonical_key_ignores_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for g in enumerate_connected_graphs(6).unwrap() {
        let mut perm: Vec<usize> = (0..6).collect();
        perm.shuffle(&mut rng);
        let r = g.relabel(&perm).unwrap();
        assert_eq!(canonical_key(&r), canonical_key(&g));
        assert_eq!(canonical_form(&r), g);
    }
}

#[test]
fn upper_bound_family_checks() {
    let opts = VerifyOptions::default();
    for n in 2..=6 {
        let r = verify_upper_bound(n, HFamily::Canonical, &opts).unwrap();
        assert!(r.passed, "{}", r.to_text());
    }
    let r = verify_upper_bound(4, HFamily::ConnectedAll, &opts).unwrap();
    assert!(r.passed);
    assert_eq!(r.instances_checked, 36);
    assert!(verify_upper_bound(7, HFamily::ConnectedAll, &opts).is_err());
}

#[test]
fn resume_skips_logged_pairs_and_keeps_counts() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("progress.txt");
    let opts = VerifyOptions {
        jobs: Some(2),
        progress: Some(log.clone()),
    };
    let first = verify_upper_bound(5, HFamily::ConnectedAll, &opts).unwrap();
    let lines = fs::read_to_string(&log).unwrap().lines().count() as u64;
    assert_eq!(lines, first.instances_checked);
    assert_eq!(first.instances_checked, 21 * 21);

    // drop half the log, as if interrupted
    let text = fs::read_to_string(&log).unwrap();
    let kept: Vec<&str> = text.lines().take(200).collect();
    fs::write(&log, kept.join("\n") + "\n").unwrap();
    let second = verify_upper_bound(5, HFamily::ConnectedAll, &opts).unwrap();
    assert_eq!(second, first);
    assert_eq!(fs::read_to_string(&log).unwrap().lines().count() as u64, first.instances_checked);
}

#[test]
fn structural_claims_hold_up_to_six() {
    let opts = VerifyOptions { jobs: Some(2), progress: None };
    let r = verify_spanning_tree_characterization(6, &opts).unwrap();
    assert!(r.passed, "{}", r.to_text());
    let r = verify_non_articulation(6, &opts).unwrap();
    assert!(r.passed, "{}", r.to_text());
    assert!(verify_non_articulation(7, &opts).is_err());
}

#[test]
fn enumeration_output_is_canonical_and_connected() {
    for n in 1..=6 {
        let gs = enumerate_connected_graphs(n).unwrap();
        for w in gs.windows(2) {
            assert!(canonical_key(&w[0]) < canonical_key(&w[1]));
        }
        for g in &gs {
            assert!(g.is_connected());
            assert_eq!(canonical_form(g), *g);
        }
    }
    assert_eq!(enumerate_connected_graphs(3).unwrap().len(), 2);
    assert!(enumerate_connected_graphs(3).unwrap().contains(&canonical_form(&Graph::path(3).unwrap())));
}
