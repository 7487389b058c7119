//! The acceptance suite: one test per property, one printed line each.
//! Seeds are fixed so every run checks the same fixtures; the slowest
//! properties carry explicit wall-clock budgets.

use std::time::{Duration, Instant};

use tsys_cli::accept;
use tsys_core::report::Report;

fn run(name: &str, budget: Option<Duration>, f: impl FnOnce() -> Report) {
    let start = Instant::now();
    let report = f();
    let elapsed = start.elapsed();
    let status = if report.all_passed() { "pass" } else { "FAIL" };
    println!("criterion {}: {} ({:.2?})", name, status, elapsed);
    assert!(report.all_passed(), "{}", report);
    if let Some(b) = budget {
        assert!(elapsed <= b, "{} took {:.2?} against a budget of {:.2?}", name, elapsed, b);
    }
}

#[test]
fn criterion_01_laurent_positivity() {
    run("01 laurent positivity", Some(Duration::from_secs(60)), accept::laurent_positivity);
}

#[test]
fn criterion_02_network_oracle() {
    run("02 network determinant oracle", None, || accept::network_oracle(02_1987));
}

#[test]
fn criterion_03_desnanot_jacobi() {
    run("03 desnanot-jacobi condensation", Some(Duration::from_secs(30)), || {
        accept::desnanot_jacobi(03_1866)
    });
}

#[test]
fn criterion_04_conserved_products() {
    run("04 conserved products", None, || accept::conserved_products(04_2011));
}

#[test]
fn criterion_05_geometric_map() {
    run("05 geometric map agreement", None, || accept::geometric_map(05_1992));
}

#[test]
fn criterion_06_mutation_realization() {
    run("06 mutation realization", None, || accept::mutation_realization(06_2010));
}

#[test]
fn criterion_07_torus_periodicity() {
    run("07 torus double periodicity", None, || accept::torus_periodicity(07_2015));
}

#[test]
fn criterion_08_unfolding_laws() {
    run("08 quasi-periodic unfolding", None, || accept::unfolding_laws(08_2019));
}

#[test]
fn criterion_09_tube_periodicity() {
    run("09 tube periodicity", Some(Duration::from_secs(120)), || {
        accept::tube_periodicity(09_1991)
    });
}

#[test]
fn criterion_10_wall_identities() {
    run("10 wall identities", None, || accept::wall_identities(10_2023));
}

#[test]
fn criterion_11_recursion_coefficients() {
    run("11 recursion coefficients", None, || accept::recursion_rows(11_2005));
}

#[test]
fn criterion_12_reversibility() {
    run("12 reversibility", None, || accept::reversibility(12_1997));
}
