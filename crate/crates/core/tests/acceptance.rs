//! Acceptance suite: runs every verification criterion at its stated
//! tolerance and prints one pass/fail line per criterion. The same checks
//! back the `farey selftest` CLI command.

use farey_core::selftest;

fn run(id: &str) {
    let result = selftest::run_one(id).unwrap_or_else(|| panic!("unknown criterion {id}"));
    println!("{}", result.line());
    assert!(result.passed, "{}", result.line());
}

#[test]
fn criterion_1_e_diameter_classification() {
    run("AC1");
}

#[test]
fn criterion_2_f_diameter_classification() {
    run("AC2");
}

#[test]
fn criterion_3_surface_classification() {
    run("AC3");
}

#[test]
fn criterion_4_cusp_counts() {
    run("AC4");
}

#[test]
fn criterion_5_tame_frieze_enumeration() {
    run("AC5");
}

#[test]
fn criterion_6_regular_frieze_enumeration() {
    run("AC6");
}

#[test]
fn criterion_7_reference_arrays() {
    run("AC7");
}

#[test]
fn criterion_8_frieze_lifting_decisions() {
    run("AC8");
}

#[test]
fn criterion_9_positive_tiling_lifts() {
    run("AC9");
}

#[test]
fn criterion_10_property_suites() {
    run("AC10");
}
