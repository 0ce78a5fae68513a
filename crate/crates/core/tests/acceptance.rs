//! Acceptance criteria 1–10. Every comparison is exact (integer Schur and
//! q-coefficients, no tolerance); the sweep bounds are pinned in
//! `rook_harmonics::selftest`. One PASS/FAIL line is printed per criterion.

use std::time::Instant;

use rook_harmonics::selftest::{self, criteria};

#[test]
fn acceptance() {
    // pinned budgets, restated so a change to them shows up here
    assert_eq!(selftest::FORMULA_MAX, 5);
    assert_eq!(selftest::ORACLE_EXTRA, [(4, 3), (3, 4), (4, 4)]);
    assert_eq!(selftest::HILBERT_COUNT_MAX, 6);
    assert_eq!(selftest::HILBERT_ORACLE_MAX, 4);
    assert_eq!(selftest::INTERCHANGE_MAX, 4);
    assert_eq!(selftest::IDENTITY_MAX, 7);
    assert_eq!(selftest::CLOSED_FORM_MAX, 6);
    assert_eq!(selftest::BIJECTION_MAX, 5);
    assert_eq!(selftest::IDEAL_MAX, 3);
    assert_eq!(selftest::INVOLUTION_IDEAL_MAX, 4);
    assert_eq!(selftest::INVOLUTION_ORACLE_MAX, 5);
    assert_eq!(selftest::PROPOSITION_MAX, 5);
    assert_eq!(selftest::STAR_SIDE, 6);
    assert_eq!(selftest::LOG_CONCAVITY_MAX, 5);

    let mut failed = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let outcome = (c.run)();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(report) => {
                let verdict = if report.passed() { "PASS" } else { "FAIL" };
                println!("criterion {:>2} {verdict} {} ({secs:.1}s)", c.id, c.title);
                for line in report.lines() {
                    println!("    {line}");
                }
                if !report.passed() {
                    failed.push(c.id);
                }
            }
            Err(e) => {
                println!("criterion {:>2} FAIL {} error: {e}", c.id, c.title);
                failed.push(c.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
