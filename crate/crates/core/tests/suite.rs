use qpartitions::verification::{
    check_congruence, negative_controls, run_items, run_suite, suite_items, CongruenceSpec, Report,
    Status, Target, DEFAULT_SUITE_PRECISION,
};
use qpartitions::theta::SeriesName;

fn strip(reports: Vec<Report>) -> Vec<Report> {
    reports.into_iter().map(Report::without_timing).collect()
}

#[test]
fn full_suite_passes_at_default_precision() {
    let reports = run_suite(DEFAULT_SUITE_PRECISION, None).unwrap();
    assert!(reports.len() >= 20);
    for r in &reports {
        assert_eq!(r.status, Status::Pass, "{r:?}");
    }
}

#[test]
fn runs_are_deterministic() {
    let a = strip(run_suite(400, Some("mod4")).unwrap());
    let b = strip(run_suite(400, Some("mod4")).unwrap());
    assert_eq!(a, b);
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn filters_select_by_tag_or_id() {
    let mod5 = run_suite(200, Some("mod5")).unwrap();
    assert!(!mod5.is_empty());
    assert!(mod5.iter().all(|r| r.id.contains("mod5") || r.id.contains("equidistribution")));
    assert_eq!(run_suite(200, Some("w2-7n4-mod7")).unwrap().len(), 1);
    assert!(run_suite(200, Some("no-such-item")).unwrap().is_empty());
}

#[test]
fn fail_reports_carry_values() {
    for r in run_items(&negative_controls(), 1000).unwrap() {
        let ce = r.counterexample.expect("fail without witness");
        assert!(!ce.values.is_empty());
        assert!(!ce.description.is_empty());
    }
}

#[test]
fn starved_items_never_pass() {
    let items = suite_items();
    for precision in [0, 50, 300] {
        let reports = run_suite(precision, None).unwrap();
        for (item, r) in items.iter().zip(&reports) {
            if item.required_precision() > precision {
                assert_eq!(r.status, Status::Skipped, "{} at {precision}", r.id);
            }
        }
    }
}

#[test]
fn single_term_congruence() {
    let spec = CongruenceSpec::new("w2-spot", "w_2(4) = 63", SeriesName::W(2), (7, 4), Target::Modulus(7), 0);
    let r = check_congruence(&spec, 5).unwrap();
    assert_eq!(r.status, Status::Pass);
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["status"], "pass");
    assert!(json.get("counterexample").is_none());
}
