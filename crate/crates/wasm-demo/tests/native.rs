use primechi_wasm::{convergence, partial_sums, unit_circle, KIND_COMPOSITE, KIND_ONE, KIND_PRIME, MAX_N};

#[test]
fn unit_circle_layout() {
    let v = unit_circle(12).unwrap();
    assert_eq!(v.len(), 36);
    let kinds: Vec<f64> = v.chunks(3).map(|c| c[2]).collect();
    assert_eq!(kinds[0], KIND_ONE);
    assert_eq!(kinds[1], KIND_PRIME);
    assert_eq!(kinds[3], KIND_COMPOSITE);
    assert_eq!(kinds[10], KIND_PRIME);
    for c in v.chunks(3) {
        assert!((c[0].hypot(c[1]) - 1.0).abs() < 1e-12);
    }
    // χ(1) = 1, χ(2) = −i
    assert_eq!(&v[..2], &[1.0, 0.0]);
    assert!(v[3].abs() < 1e-15 && (v[4] + 1.0).abs() < 1e-15);
}

#[test]
fn partial_sums_partition() {
    let v = partial_sums(0.5, 14.134725, 300).unwrap();
    assert_eq!(v.len(), 6 * 300);
    for row in v.chunks(6) {
        let re = row[0] - (1.0 + row[2] + row[4]);
        let im = row[1] - (row[3] + row[5]);
        assert!(re.hypot(im) < 1e-12);
    }
    // after n = 1 only the unit term is present
    assert_eq!(&v[..6], &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
}

#[test]
fn convergence_columns() {
    let v = convergence(std::f64::consts::FRAC_PI_2, 1000).unwrap();
    let rows: Vec<&[f64]> = v.chunks(4).collect();
    assert_eq!(rows[0][0], 1.0);
    assert_eq!(rows.last().unwrap()[0], 1000.0);
    assert!(rows.windows(2).all(|w| w[0][0] < w[1][0]));
    for r in &rows {
        let k = r[0];
        assert!(r[1] > 1.0 / (k + 1.0) && r[1] < 1.0 / k);
        assert!(r[2] <= r[3] + 1e-12);
    }
    let far = convergence(10.0, 2).unwrap();
    assert!(far[3].is_nan());
}

#[test]
fn limits_are_enforced() {
    assert!(unit_circle(0).is_err());
    assert!(unit_circle(MAX_N + 1).is_err());
    assert!(partial_sums(f64::NAN, 0.0, 10).is_err());
    assert!(convergence(f64::INFINITY, 10).is_err());
}
