//! The prime property `χ(p_m) = α + iβ` and its completely multiplicative
//! extension to all positive integers.
//!
//! For the `m`-th prime `p` the ratio is `x = −√p / (m(m+1))`, always in
//! `(−1, 0)`, and the phase is `t = arccos(x) / ln p`. The production value
//! is the closed form
//!
//! ```text
//! α = 1 − 2x²,   β = 2x√(1 − x²)
//! ```
//!
//! which equals `sin(arccos x − arcsin x) + i cos(arccos x − arcsin x)`
//! since `arccos x − arcsin x = π/2 − 2 arcsin x`. The trigonometric route is
//! kept as [`rewritten_trig`] and serves as a cross-check.
//!
//! The solution of the per-prime correspondence
//! `α cos(t ln p) + β sin(t ln p) = x` on the unit circle is a different
//! branch: `α = sin(arcsin x − t ln p)`, `β = cos(arcsin x − t ln p)`
//! ([`correspondence_solution`]). With `t ln p = arccos x` it agrees with the
//! production value in `β` and has the opposite sign in `α`. The bundled
//! reference tables use the production branch.

use crate::primes::{self, smallest_prime_factors};
use crate::{Error, Result};
use num_complex::Complex64;

/// Inputs within this distance outside `[-1, 1]` are clamped; anything
/// further out is an error.
pub const TRIG_CLAMP_SLACK: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitComplex {
    pub re: f64,
    pub im: f64,
}

impl UnitComplex {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn max_component_delta(&self, other: &UnitComplex) -> f64 {
        (self.re - other.re).abs().max((self.im - other.im).abs())
    }
}

impl From<UnitComplex> for Complex64 {
    fn from(u: UnitComplex) -> Self {
        u.to_complex()
    }
}

/// Per-prime record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacterEntry {
    pub index: u64,
    pub prime: u64,
    pub ratio: f64,
    pub phase: f64,
    pub chi: UnitComplex,
}

fn clamp_unit(value: f64) -> Result<f64> {
    if !value.is_finite() || value.abs() > 1.0 + TRIG_CLAMP_SLACK {
        return Err(Error::TrigDomain { value });
    }
    Ok(value.clamp(-1.0, 1.0))
}

pub fn checked_acos(x: f64) -> Result<f64> {
    clamp_unit(x).map(f64::acos)
}

pub fn checked_asin(x: f64) -> Result<f64> {
    clamp_unit(x).map(f64::asin)
}

/// `−√p / (m(m+1))` for a known `(m, p)` pair.
pub fn ratio_for(m: u64, p: u64) -> Result<f64> {
    if m == 0 {
        return Err(Error::OutOfDomain {
            what: "prime index",
            detail: "indices are 1-based; got 0".into(),
        });
    }
    let denom = m as f64 * (m as f64 + 1.0);
    let x = -(p as f64).sqrt() / denom;
    if x.abs() >= 1.0 {
        return Err(Error::RatioDomain { m, magnitude: x.abs() });
    }
    Ok(x)
}

pub fn ratio(m: u64) -> Result<f64> {
    let entry = primes::nth_prime(m)?;
    ratio_for(m, entry.value)
}

pub fn phase_for(m: u64, p: u64) -> Result<f64> {
    let x = ratio_for(m, p)?;
    Ok(checked_acos(x)? / (p as f64).ln())
}

pub fn phase(m: u64) -> Result<f64> {
    let entry = primes::nth_prime(m)?;
    phase_for(m, entry.value)
}

/// `(1 − 2x², 2x√(1 − x²))`.
pub fn closed_form(x: f64) -> UnitComplex {
    UnitComplex::new(1.0 - 2.0 * x * x, 2.0 * x * (1.0 - x * x).sqrt())
}

/// `(sin(arccos x − arcsin x), cos(arccos x − arcsin x))`.
pub fn rewritten_trig(x: f64) -> Result<UnitComplex> {
    let angle = checked_acos(x)? - checked_asin(x)?;
    Ok(UnitComplex::new(angle.sin(), angle.cos()))
}

/// `(sin(arcsin x − θ), cos(arcsin x − θ))` with `θ = t ln p`.
///
/// Satisfies `α cos θ + β sin θ = x` exactly.
pub fn correspondence_solution(x: f64, theta: f64) -> Result<UnitComplex> {
    let u = checked_asin(x)? - theta;
    Ok(UnitComplex::new(u.sin(), u.cos()))
}

impl CharacterEntry {
    pub fn from_prime(m: u64, p: u64) -> Result<Self> {
        let ratio = ratio_for(m, p)?;
        let phase = checked_acos(ratio)? / (p as f64).ln();
        Ok(Self {
            index: m,
            prime: p,
            ratio,
            phase,
            chi: closed_form(ratio),
        })
    }

    /// `t_m ln p_m`.
    pub fn angle(&self) -> f64 {
        self.phase * (self.prime as f64).ln()
    }

    pub fn trig_chi(&self) -> Result<UnitComplex> {
        rewritten_trig(self.ratio)
    }

    pub fn correspondence_chi(&self) -> Result<UnitComplex> {
        correspondence_solution(self.ratio, self.angle())
    }

    /// `α cos(t ln p) + β sin(t ln p)` for the correspondence solution;
    /// equals [`CharacterEntry::ratio`].
    pub fn inner_term(&self) -> Result<f64> {
        let chi = self.correspondence_chi()?;
        let theta = self.angle();
        Ok(chi.re * theta.cos() + chi.im * theta.sin())
    }

    /// The same inner term evaluated with the table branch `chi`.
    /// Equals `3x − 4x³ = sin(3 arcsin x)`, not `x`.
    pub fn inner_term_table_branch(&self) -> f64 {
        let theta = self.angle();
        self.chi.re * theta.cos() + self.chi.im * theta.sin()
    }
}

pub fn chi_prime(m: u64) -> Result<CharacterEntry> {
    let entry = primes::nth_prime(m)?;
    CharacterEntry::from_prime(m, entry.value)
}

/// Character entries for the first `count` primes.
pub fn chi_primes(count: usize) -> Result<Vec<CharacterEntry>> {
    primes::first_primes(count)
        .into_iter()
        .map(|e| CharacterEntry::from_prime(e.index, e.value))
        .collect()
}

pub fn inner_term(m: u64) -> Result<f64> {
    chi_prime(m)?.inner_term()
}

/// `χ(n)` by factorization: `Π χ(p)^e`.
pub fn chi(n: u64) -> Result<Complex64> {
    let factorization = primes::factorize(n)?;
    let mut value = Complex64::new(1.0, 0.0);
    for (p, e) in factorization.factors {
        let m = primes::prime_index(p)?;
        let entry = CharacterEntry::from_prime(m, p)?;
        value *= entry.chi.to_complex().powi(e as i32);
    }
    Ok(value)
}

/// `χ(n)` for every `1 <= n <= limit`, built once.
#[derive(Debug, Clone)]
pub struct CharacterAssignment {
    limit: usize,
    primes: Vec<u64>,
    entries: Vec<CharacterEntry>,
    // values[0] is unused
    values: Vec<Complex64>,
}

impl CharacterAssignment {
    pub fn new(limit: usize) -> Result<Self> {
        if limit == 0 {
            return Err(Error::OutOfDomain {
                what: "assignment limit",
                detail: "must be at least 1".into(),
            });
        }
        let primes = primes::sieve_up_to(limit as u64);
        let entries = primes
            .iter()
            .enumerate()
            .map(|(i, &p)| CharacterEntry::from_prime(i as u64 + 1, p))
            .collect::<Result<Vec<_>>>()?;
        let spf = smallest_prime_factors(limit);
        let mut values = vec![Complex64::new(0.0, 0.0); limit + 1];
        values[1] = Complex64::new(1.0, 0.0);
        let mut next_prime = 0;
        for n in 2..=limit {
            let p = spf[n] as usize;
            if p == n {
                values[n] = entries[next_prime].chi.to_complex();
                next_prime += 1;
            } else {
                values[n] = values[p] * values[n / p];
            }
        }
        Ok(Self {
            limit,
            primes,
            entries,
            values,
        })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn get(&self, n: u64) -> Option<Complex64> {
        if n == 0 || n as usize > self.limit {
            return None;
        }
        Some(self.values[n as usize])
    }

    /// Primes `<= limit`, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn entries(&self) -> &[CharacterEntry] {
        &self.entries
    }

    pub fn is_prime(&self, n: u64) -> bool {
        self.primes.binary_search(&n).is_ok()
    }

    /// Independent route through [`primes::factorize`] and the memoized
    /// per-prime values.
    pub fn chi_by_factorization(&self, n: u64) -> Result<Complex64> {
        if n as usize > self.limit {
            return Err(Error::OutOfDomain {
                what: "n",
                detail: format!("{n} exceeds assignment limit {}", self.limit),
            });
        }
        let factorization = primes::factorize(n)?;
        let mut value = Complex64::new(1.0, 0.0);
        for (p, e) in factorization.factors {
            let idx = self.primes.binary_search(&p).map_err(|_| Error::NotPrime(p))?;
            value *= self.entries[idx].chi.to_complex().powi(e as i32);
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn ratio_examples() {
        assert!(close(ratio(1).unwrap(), -std::f64::consts::FRAC_1_SQRT_2, 1e-15));
        assert!(close(ratio(2).unwrap(), -0.28867513459481287, 1e-15));
        // 30-digit evaluation: -0.186338998124982474700764472394
        assert!(close(ratio(3).unwrap(), -0.18633899812498247, 1e-15));
    }

    #[test]
    fn ratio_rejects_corrupted_prime_source() {
        // 4 is not prime, but the guard is on magnitude: √4/(1·2) = 1
        assert!(matches!(ratio_for(1, 4), Err(Error::RatioDomain { m: 1, .. })));
        assert!(ratio_for(0, 2).is_err());
    }

    #[test]
    fn phase_examples() {
        // 30-digit values: 3.39927010637039535722, 1.69635741175154166142
        assert!(close(phase(1).unwrap(), 3.3992701063703954, 1e-13));
        assert!(close(phase(2).unwrap(), 1.6963574117515417, 1e-13));
        assert!(close(phase(45).unwrap(), 0.298_602_320_883_900_2, 1e-13));
    }

    #[test]
    fn phase_limit_at_ratio_minus_one() {
        let p = 7.0f64;
        let t = checked_acos(-1.0).unwrap() / p.ln();
        assert!(close(t, std::f64::consts::PI / p.ln(), 1e-15));
    }

    #[test]
    fn trig_clamp_policy() {
        assert_eq!(checked_acos(-1.0 - 5e-16).unwrap(), std::f64::consts::PI);
        assert!(matches!(checked_asin(1.0 + 1e-12), Err(Error::TrigDomain { .. })));
        assert!(checked_acos(f64::NAN).is_err());
    }

    #[test]
    fn chi_prime_table_rows() {
        let c1 = chi_prime(1).unwrap().chi;
        assert!(close(c1.re, 0.0, 1e-15) && close(c1.im, -1.0, 1e-15));
        let c2 = chi_prime(2).unwrap().chi;
        assert!(close(c2.re, 0.8333333333, 5e-11));
        assert!(close(c2.im, -0.5527707984, 5e-11));
    }

    #[test]
    fn chi_prime_180_differs_from_printed_real_part() {
        let e = chi_prime(180).unwrap();
        assert_eq!(e.prime, 1069);
        // imaginary part matches the printed -0.0020070932
        assert!(close(e.chi.im, -0.0020070932, 5e-11));
        // the printed real part 0.9999979746 is off by ~1.1e-8; the formula gives 0.9999979858
        assert!(close(e.chi.re, 0.9999979857863, 1e-12));
        assert!((e.chi.re - 0.9999979746).abs() > 1e-8);
    }

    #[test]
    fn entry_invariants() {
        for e in chi_primes(500).unwrap() {
            assert!(-1.0 < e.ratio && e.ratio < 0.0);
            assert!(e.phase > 0.0);
            assert!(e.chi.im < 0.0);
            assert!(close(e.chi.modulus(), 1.0, 1e-12));
        }
    }

    #[test]
    fn closed_form_matches_trig() {
        for e in chi_primes(200).unwrap() {
            let trig = e.trig_chi().unwrap();
            assert!(e.chi.max_component_delta(&trig) < 1e-12, "m = {}", e.index);
        }
    }

    #[test]
    fn correspondence_solution_is_the_alpha_reflection() {
        for e in chi_primes(200).unwrap() {
            let sol = e.correspondence_chi().unwrap();
            assert!(close(sol.im, e.chi.im, 1e-12));
            assert!(close(sol.re, -e.chi.re, 1e-12));
        }
    }

    #[test]
    fn inner_term_examples() {
        assert!(close(inner_term(1).unwrap(), -std::f64::consts::FRAC_1_SQRT_2, 5e-11));
        assert!(close(inner_term(2).unwrap(), -0.2886751346, 5e-11));
        let x45 = -(197f64).sqrt() / (45.0 * 46.0);
        assert!(close(inner_term(45).unwrap(), x45, 1e-12));
    }

    #[test]
    fn table_branch_inner_term_is_triple_angle() {
        for e in chi_primes(100).unwrap() {
            let x = e.ratio;
            let got = e.inner_term_table_branch();
            assert!(close(got, 3.0 * x - 4.0 * x.powi(3), 1e-12));
            assert!(close(got, (3.0 * x.asin()).sin(), 1e-12));
        }
        // and so misses the ratio except at m = 1, where α = 0
        let e2 = chi_prime(2).unwrap();
        assert!((e2.inner_term_table_branch() - e2.ratio).abs() > 0.4);
    }

    #[test]
    fn chi_composites() {
        let c4 = chi(4).unwrap();
        assert!(close(c4.re, -1.0, 1e-12) && close(c4.im, 0.0, 1e-12));
        let c6 = chi(6).unwrap();
        assert!(close(c6.re, -0.5527707984, 5e-11) && close(c6.im, -0.8333333333, 5e-11));
        assert_eq!(chi(1).unwrap(), Complex64::new(1.0, 0.0));
        // composite entries are printed with a few units of 1e-10 error
        let c9 = chi(9).unwrap();
        assert!(close(c9.re, 0.3888888888, 5e-9) && close(c9.im, -0.9212846636, 5e-9));
        assert!(chi(0).is_err());
    }

    #[test]
    fn assignment_matches_factorization_route() {
        let a = CharacterAssignment::new(2000).unwrap();
        assert_eq!(a.get(1), Some(Complex64::new(1.0, 0.0)));
        assert_eq!(a.get(0), None);
        assert_eq!(a.get(2001), None);
        for n in 1..=2000u64 {
            let direct = a.chi_by_factorization(n).unwrap();
            assert!((a.get(n).unwrap() - direct).norm() < 1e-12, "n = {n}");
        }
        assert!((a.get(121).unwrap() - chi(121).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn assignment_rejects_zero_limit() {
        assert!(CharacterAssignment::new(0).is_err());
    }
}
