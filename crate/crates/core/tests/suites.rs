use slopeforge::suites::{corpus, criterion, run, SuiteConfig, CRITERIA};

#[test]
fn corpora_are_reproducible() {
    let names = |seed| corpus::filtered_corpus(seed).into_iter().map(|(n, _)| n).collect::<Vec<_>>();
    assert_eq!(names(3), names(3));
    let ops = |seed| corpus::robba_corpus(seed, 20);
    assert_eq!(ops(5), ops(5));
    assert_ne!(ops(5), ops(6));
    assert_eq!(corpus::slope_multisets(9, 10), corpus::slope_multisets(9, 10));
}

#[test]
fn criteria_lookup() {
    assert_eq!(CRITERIA.len(), 12);
    assert_eq!(criterion("weyl").unwrap().id, 1);
    assert_eq!(criterion("12").unwrap().name, "ppower-cor-a2");
    assert!(criterion("nope").is_none());
}

#[test]
fn runs_with_a_fixed_pool() {
    let config = SuiteConfig { jobs: 2, seed: 17, ..SuiteConfig::default() };
    for key in ["weyl", "robba", "k0-additivity"] {
        let report = run(criterion(key).unwrap(), &config);
        assert!(report.passed, "{}", report.line());
        assert!(report.checked > 0);
    }
}
