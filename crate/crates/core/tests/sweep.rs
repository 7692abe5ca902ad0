use vacuum_core::verify::{sweep, Status, SweepConfig};
use vacuum_core::Rational;

#[test]
fn default_grid_has_no_failures() {
    let reports = sweep::<Rational>(&SweepConfig::default());
    assert_eq!(reports.len(), 62);
    let failures: Vec<String> = reports
        .iter()
        .filter(|r| r.has_fail())
        .map(|r| r.to_string())
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    assert!(reports.iter().map(|r| r.count(Status::Pass)).sum::<usize>() > 1000);
    let ids: Vec<&str> = reports.iter().map(|r| r.case_id.as_str()).collect();
    assert!(ids.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn skips_never_hide_budget_failures() {
    let reports = sweep::<Rational>(&SweepConfig {
        max_n: 2,
        ..SweepConfig::default()
    });
    for r in &reports {
        for c in r.checked.iter().filter(|c| c.status == Status::Skip) {
            assert!(!c.detail.contains("budget"), "{}: {}", r.case_id, c.detail);
        }
    }
}
