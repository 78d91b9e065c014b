//! Snapshot regression for diagnostic trajectories. These record what the
//! sums do at desk-scale depths; they are not convergence claims.

mod common;

use common::{check_snapshot, SNAPSHOT_TOL};
use primechi::character::CharacterAssignment;
use primechi::series::{
    corollary_report, euler_reports, fixed_sum_reports, omega_inner_reports, power_sum_reports, ExpansionOrder,
    FixedSum, SeriesPoint,
};

fn assert_snapshot(name: &str, reports: &[primechi::series::PartialSumReport]) {
    let dev = check_snapshot(name, reports).unwrap();
    assert!(dev <= SNAPSHOT_TOL, "{name}: deviation {dev:e}");
}

#[test]
fn omega_fixed_near_first_zero_height() {
    let a = CharacterAssignment::new(1000).unwrap();
    let s = SeriesPoint::new(0.5, 14.0).unwrap();
    assert_snapshot(
        "omega_fixed_n1000_t14.csv",
        &fixed_sum_reports(&a, FixedSum::Omega, s, 1000, 50).unwrap(),
    );
}

#[test]
fn group3_square_at_two() {
    let a = CharacterAssignment::new(100).unwrap();
    let s = SeriesPoint::new(2.0, 0.0).unwrap();
    let reports = power_sum_reports(&a, s, ExpansionOrder::new(2).unwrap(), 100, 10).unwrap();
    assert_snapshot("group3_mu2_s2_n100.csv", &reports);
}

#[test]
fn corollary_bundle_at_default_point() {
    let a = CharacterAssignment::new(1000).unwrap();
    let s = SeriesPoint::default();
    let r = corollary_report(&a, s, 1000).unwrap();
    assert_snapshot("corollary_final_n1000.csv", &r.reports());
    // the three sums are nowhere near (-1, 0, 1) at this depth
    assert!(r.omega.residual > 0.1 && r.lambda.residual > 0.1);
}

#[test]
fn omega_inner_trajectory() {
    assert_snapshot("omega_inner_n1000.csv", &omega_inner_reports(1000, 100).unwrap());
}

#[test]
fn euler_trajectory_off_axis() {
    let s = SeriesPoint::new(1.5, 3.0).unwrap();
    assert_snapshot("euler_m200_s1.5_3.csv", &euler_reports(s, 200, 20).unwrap());
}

#[test]
fn trajectories_are_deterministic() {
    let a = CharacterAssignment::new(500).unwrap();
    let s = SeriesPoint::new(0.75, -9.5).unwrap();
    let first = fixed_sum_reports(&a, FixedSum::Dirichlet, s, 500, 7).unwrap();
    let again = fixed_sum_reports(&CharacterAssignment::new(500).unwrap(), FixedSum::Dirichlet, s, 500, 7).unwrap();
    assert_eq!(first, again);
}
