//! The acceptance gate: one test per criterion, each printing a single
//! pass/fail line and failing the build unless the criterion passes.

use charlie::cli::criterion;

fn gate(id: &str) {
    let report = criterion(id);
    println!(
        "{}: {} ({} ms)",
        report.theorem, report.verdict, report.runtime_ms
    );
    if !report.passed() {
        panic!(
            "criterion {id} failed: {}",
            serde_json::to_string_pretty(&report.witnesses["failures"])
                .unwrap_or_else(|_| "?".into())
        );
    }
}

#[test]
fn a1_both_table_constructions_agree() {
    gate("A1");
}

#[test]
fn a2_real_constituent_counts_match_the_formula() {
    gate("A2");
}

#[test]
fn a3_coset_classes_correspond_to_real_classes() {
    gate("A3");
}

#[test]
fn a4_extension_values_in_odd_characteristic() {
    gate("A4");
}

#[test]
fn a5_extension_values_in_even_characteristic() {
    gate("A5");
}

#[test]
fn a6_frobenius_schur_indicators() {
    gate("A6");
}

#[test]
fn a7_imaginary_extension_values() {
    gate("A7");
}

#[test]
fn a8_duality_swaps_the_two_families() {
    gate("A8");
}

#[test]
fn a9_strong_reality_in_unitary_groups() {
    gate("A9");
}

#[test]
fn a10_structural_table_checks() {
    gate("A10");
}
