//! Euler's route to `Σ 1/n² = π²/6`: partial sums, the `sin(x)/x` product,
//! and the `x²` coefficient of an even polynomial with known roots.

use crate::summation::NeumaierSum;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Largest root set accepted by [`coefficient_identity_check`].
pub const MAX_ROOTS: usize = 12;

/// Positive representatives `α_1..α_n` of the root pairs `±α_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<f64>,
}

impl RootSet {
    pub fn new(roots: Vec<f64>) -> Result<Self> {
        if roots.is_empty() || roots.len() > MAX_ROOTS {
            return Err(Error::OutOfDomain {
                what: "root set",
                detail: format!("needs 1..={MAX_ROOTS} roots; got {}", roots.len()),
            });
        }
        for (i, &r) in roots.iter().enumerate() {
            if r == 0.0 || !r.is_finite() {
                return Err(Error::OutOfDomain {
                    what: "root",
                    detail: format!("roots must be finite and nonzero; got {r}"),
                });
            }
            if roots[..i].iter().any(|&q| q.abs() == r.abs()) {
                return Err(Error::OutOfDomain {
                    what: "root",
                    detail: format!("root ±{} repeated", r.abs()),
                });
            }
        }
        Ok(Self { roots })
    }

    pub fn roots(&self) -> &[f64] {
        &self.roots
    }
}

pub fn basel_partial(terms: u64) -> Result<f64> {
    if terms == 0 {
        return Err(Error::OutOfDomain {
            what: "basel terms",
            detail: "need at least one term".into(),
        });
    }
    Ok((1..=terms)
        .map(|n| {
            let n = n as f64;
            1.0 / (n * n)
        })
        .sum::<NeumaierSum>()
        .value())
}

/// `Π_{k<=K} (1 − x²/(k²π²))`.
pub fn sin_product_partial(x: f64, factors: u64) -> f64 {
    let x2 = x * x;
    (1..=factors).fold(1.0, |acc, k| {
        let kpi = k as f64 * PI;
        acc * (1.0 - x2 / (kpi * kpi))
    })
}

/// `sin(x)/x`, with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// Upper bound on the relative error of [`sin_product_partial`], valid for
/// `|x| < Kπ`: `exp(Σ_{k>K} x²/(k²π² − x²)) − 1`, with the tail sum bounded
/// by its integral `(|x|/2π) ln((Kπ + |x|)/(Kπ − |x|))`.
pub fn sin_product_relative_bound(x: f64, factors: u64) -> Option<f64> {
    let a = x.abs();
    let kpi = factors as f64 * PI;
    if factors == 0 || a >= kpi {
        return None;
    }
    let tail = a / (2.0 * PI) * ((kpi + a) / (kpi - a)).ln();
    Some(tail.exp_m1())
}

/// `1 − x²/3! + x⁴/5! − …` with `terms` terms.
pub fn sin_series_partial(x: f64, terms: u64) -> f64 {
    let x2 = x * x;
    let mut term = 1.0;
    let mut acc = NeumaierSum::new();
    for j in 0..terms {
        acc.add(term);
        let j = j as f64;
        term *= -x2 / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
    }
    acc.value()
}

/// Coefficients in powers of `x²` of `Π (1 − x²/α_k²)`, lowest first.
pub fn expand_even_product(roots: &RootSet) -> Vec<f64> {
    let mut coeffs = vec![1.0];
    for &r in roots.roots() {
        let inv = 1.0 / (r * r);
        let mut next = vec![0.0; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c * inv;
        }
        coeffs = next;
    }
    coeffs
}

/// `|c_1 + Σ 1/α_k²|`, where `c_1` is the `x²` coefficient of the expansion
/// with `a_0 = 1` (so `c_1 = −a_1`).
pub fn coefficient_identity_check(roots: &RootSet) -> f64 {
    let coeffs = expand_even_product(roots);
    let reciprocal_squares: f64 = roots.roots().iter().map(|r| 1.0 / (r * r)).sum();
    (coeffs[1] + reciprocal_squares).abs()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinDemoPoint {
    pub x: f64,
    pub exact: f64,
    pub series: f64,
    pub product: f64,
}

impl SinDemoPoint {
    pub fn series_error(&self) -> f64 {
        (self.series - self.exact).abs()
    }

    pub fn product_error(&self) -> f64 {
        (self.product - self.exact).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SinDemoReport {
    pub terms: u64,
    pub points: Vec<SinDemoPoint>,
}

impl SinDemoReport {
    pub fn within(&self, tol: f64) -> bool {
        self.points
            .iter()
            .all(|p| p.series_error() <= tol && p.product_error() <= tol)
    }
}

pub const DEMO_POINTS: [f64; 3] = [1.0, std::f64::consts::FRAC_PI_2, 2.0];

/// Truncated power series and truncated product of `sin(x)/x` at
/// `x ∈ {1, π/2, 2}`, each with `K` terms/factors.
pub fn sin_series_root_demo(terms: u64) -> Result<SinDemoReport> {
    if terms < 2 {
        return Err(Error::OutOfDomain {
            what: "demo terms",
            detail: format!("need at least 2; got {terms}"),
        });
    }
    let points = DEMO_POINTS
        .iter()
        .map(|&x| SinDemoPoint {
            x,
            exact: sinc(x),
            series: sin_series_partial(x, terms),
            product: sin_product_partial(x, terms),
        })
        .collect();
    Ok(SinDemoReport { terms, points })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basel_examples() {
        assert_eq!(basel_partial(1).unwrap(), 1.0);
        // ten-term sum, 30 digits: 1.54976773116654069035021415974
        assert!((basel_partial(10).unwrap() - 1.5497677311665407).abs() < 1e-15);
        assert!(basel_partial(0).is_err());
    }

    #[test]
    fn basel_tail_is_bracketed() {
        let limit = PI * PI / 6.0;
        for n in [1u64, 2, 5, 10, 100, 1000, 10_000] {
            let gap = limit - basel_partial(n).unwrap();
            assert!(gap > 1.0 / (n as f64 + 1.0) && gap < 1.0 / n as f64, "N = {n}");
        }
    }

    #[test]
    fn sin_product_fixed_points() {
        assert_eq!(sin_product_partial(0.0, 17), 1.0);
        for k in [1, 5, 100] {
            assert_eq!(sin_product_partial(PI, k), 0.0);
        }
    }

    #[test]
    fn sin_product_half_pi() {
        let got = sin_product_partial(PI / 2.0, 10_000);
        assert!((got - 2.0 / PI).abs() < 1e-4);
    }

    #[test]
    fn sin_product_bound_domain() {
        assert!(sin_product_relative_bound(4.0, 1).is_none());
        assert!(sin_product_relative_bound(1.0, 0).is_none());
        assert_eq!(sin_product_relative_bound(0.0, 3), Some(0.0));
    }

    #[test]
    fn coefficient_examples() {
        let one = RootSet::new(vec![1.0]).unwrap();
        assert_eq!(expand_even_product(&one), vec![1.0, -1.0]);
        assert_eq!(coefficient_identity_check(&one), 0.0);
        let two = RootSet::new(vec![1.0, 2.0]).unwrap();
        assert_eq!(expand_even_product(&two), vec![1.0, -1.25, 0.25]);
        assert!(coefficient_identity_check(&two) < 1e-15);
        let pis = RootSet::new(vec![PI, 2.0 * PI, 3.0 * PI]).unwrap();
        let c = expand_even_product(&pis);
        assert!((c[1] + (1.0 + 0.25 + 1.0 / 9.0) / (PI * PI)).abs() < 1e-15);
    }

    #[test]
    fn root_set_validation() {
        assert!(RootSet::new(vec![]).is_err());
        assert!(RootSet::new(vec![1.0, 0.0]).is_err());
        assert!(RootSet::new(vec![1.0, -1.0]).is_err());
        assert!(RootSet::new(vec![f64::NAN]).is_err());
        assert!(RootSet::new((1..=13).map(f64::from).collect()).is_err());
    }

    #[test]
    fn sin_series_ten_terms_at_one() {
        assert!((sin_series_partial(1.0, 10) - 1f64.sin()).abs() < 1e-12);
    }

    #[test]
    fn demo_report() {
        let r = sin_series_root_demo(1000).unwrap();
        assert_eq!(r.points.len(), 3);
        assert!(r.within(1e-3));
        assert!((r.points[2].exact - 0.4546487134128409).abs() < 1e-15);
        assert!(sin_series_root_demo(1).is_err());
    }
}
