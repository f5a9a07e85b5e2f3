//! One line per acceptance criterion; the test fails if any criterion does.

use quadlie::reproduce::{reproduce, ClaimParams, CLAIMS};

#[test]
fn acceptance() {
    let params = ClaimParams {
        seed: 20240917,
        ..ClaimParams::default()
    };
    let mut failed = Vec::new();
    for (n, id) in CLAIMS.iter().enumerate() {
        let outcome = reproduce(id, &params).unwrap_or_else(|e| panic!("{id}: {e}"));
        let verdict = if outcome.passed() { "PASS" } else { "FAIL" };
        println!("[{:>2}] {verdict} {id}: {}", n + 1, outcome.title);
        for c in outcome.failures() {
            println!("       {}: expected {}, computed {}", c.label, c.expected, c.computed);
        }
        if !outcome.passed() {
            failed.push(*id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
