//! Prime generation, 1-based prime indexing, primality and factorization.

use crate::{Error, Result};
use std::fmt;
use std::sync::OnceLock;

/// Limits above this use the segmented sieve.
pub const SEGMENTED_THRESHOLD: u64 = 100_000_000;

const SEGMENT_SPAN: u64 = 1 << 18;

/// Trial-division primes are cached up to this bound (covers every `n < 2^32`).
const SMALL_PRIME_BOUND: u64 = 1 << 16;

/// The `index`-th prime (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeEntry {
    pub index: u64,
    pub value: u64,
}

/// Canonical prime factorization: primes strictly increasing, exponents >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Multiplies the factors back together; overflow is an error.
    pub fn product(&self) -> Result<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(p, e)| {
            let pe = p
                .checked_pow(e)
                .ok_or(Error::Overflow("reconstructing a factorization"))?;
            acc.checked_mul(pe)
                .ok_or(Error::Overflow("reconstructing a factorization"))
        })
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Odd-only bit set: bit `i` stands for the number `2i + 1`.
struct OddBits {
    words: Vec<u64>,
}

impl OddBits {
    fn all_set(count: usize) -> Self {
        Self {
            words: vec![u64::MAX; count.div_ceil(64)],
        }
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    fn clear(&mut self, i: usize) {
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }
}

fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = usize::try_from(limit).expect("sieve limit exceeds address space");
    // odd numbers 1, 3, ..., up to limit
    let count = limit.div_ceil(2);
    let mut bits = OddBits::all_set(count);
    bits.clear(0);
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= limit {
        if bits.get(i) {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j < count {
                bits.clear(j);
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = Vec::with_capacity(estimate_prime_count(limit as u64));
    primes.push(2);
    primes.extend((1..count).filter(|&i| bits.get(i)).map(|i| (2 * i + 1) as u64));
    primes
}

fn segmented_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let base = simple_sieve(isqrt(limit));
    let mut primes = Vec::with_capacity(estimate_prime_count(limit));
    primes.push(2);
    let mut low = 3u64;
    let mut segment = vec![true; SEGMENT_SPAN as usize];
    while low <= limit {
        let high = (low + 2 * SEGMENT_SPAN - 1).min(limit);
        // slot k stands for low + 2k
        let slots = ((high - low) / 2 + 1) as usize;
        segment[..slots].fill(true);
        for &p in base.iter().skip(1) {
            if p * p > high {
                break;
            }
            let mut start = (p * p).max(low.div_ceil(p) * p);
            if start % 2 == 0 {
                start += p;
            }
            let mut k = ((start - low) / 2) as usize;
            while k < slots {
                segment[k] = false;
                k += p as usize;
            }
        }
        primes.extend(
            segment[..slots]
                .iter()
                .enumerate()
                .filter(|(_, &keep)| keep)
                .map(|(k, _)| low + 2 * k as u64)
                .filter(|&n| n > 1),
        );
        match low.checked_add(2 * SEGMENT_SPAN) {
            Some(next) => low = next,
            None => break,
        }
    }
    primes
}

fn estimate_prime_count(limit: u64) -> usize {
    if limit < 17 {
        return 8;
    }
    let x = limit as f64;
    (1.26 * x / x.ln()) as usize
}

/// All primes `<= limit`, ascending. Empty when `limit < 2`.
pub fn sieve_up_to(limit: u64) -> Vec<u64> {
    if limit > SEGMENTED_THRESHOLD {
        segmented_sieve(limit)
    } else {
        simple_sieve(limit)
    }
}

/// Upper bound on the `m`-th prime: `m(ln m + ln ln m)` for `m >= 6`.
fn nth_prime_bound(m: u64) -> u64 {
    if m < 6 {
        return 13;
    }
    let x = m as f64;
    (x * (x.ln() + x.ln().ln())).ceil() as u64 + 1
}

pub fn nth_prime(m: u64) -> Result<PrimeEntry> {
    if m == 0 {
        return Err(Error::OutOfDomain {
            what: "prime index",
            detail: "indices are 1-based; got 0".into(),
        });
    }
    let mut bound = nth_prime_bound(m);
    loop {
        let primes = sieve_up_to(bound);
        if let Some(&value) = primes.get((m - 1) as usize) {
            return Ok(PrimeEntry { index: m, value });
        }
        bound = bound
            .checked_mul(2)
            .ok_or(Error::Overflow("growing the nth-prime sieve"))?;
    }
}

/// The first `count` primes with their 1-based indices.
pub fn first_primes(count: usize) -> Vec<PrimeEntry> {
    if count == 0 {
        return Vec::new();
    }
    let mut bound = nth_prime_bound(count as u64);
    loop {
        let primes = sieve_up_to(bound);
        if primes.len() >= count {
            return primes[..count]
                .iter()
                .enumerate()
                .map(|(i, &value)| PrimeEntry {
                    index: i as u64 + 1,
                    value,
                })
                .collect();
        }
        bound *= 2;
    }
}

/// Inverse of [`nth_prime`].
pub fn prime_index(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(sieve_up_to(p).len() as u64)
}

fn small_primes() -> &'static [u64] {
    static SMALL: OnceLock<Vec<u64>> = OnceLock::new();
    SMALL.get_or_init(|| simple_sieve(SMALL_PRIME_BOUND))
}

pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let root = isqrt(n);
    for &p in small_primes() {
        if p > root {
            return true;
        }
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    wheel_candidates(SMALL_PRIME_BOUND + 1)
        .take_while(|&d| d <= root)
        .all(|d| !n.is_multiple_of(d))
}

/// 6k +/- 1 candidates starting at or above `from`.
fn wheel_candidates(from: u64) -> impl Iterator<Item = u64> {
    let k0 = from / 6;
    (k0..).flat_map(|k| [6 * k + 1, 6 * k + 5]).filter(move |&d| d >= from)
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            what: "factorize input",
            detail: "0 has no prime factorization".into(),
        });
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut divide_out = |d: u64, rest: &mut u64| {
        let mut e = 0;
        while rest.is_multiple_of(d) {
            *rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
    };
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        divide_out(p, &mut rest);
    }
    if SMALL_PRIME_BOUND * SMALL_PRIME_BOUND <= rest {
        for d in wheel_candidates(SMALL_PRIME_BOUND + 1) {
            if d.checked_mul(d).is_none_or(|sq| sq > rest) {
                break;
            }
            divide_out(d, &mut rest);
        }
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// Smallest prime factor for every `n <= limit` (`spf[0] = spf[1] = 0`).
pub fn smallest_prime_factors(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            spf[i] = i as u32;
            let mut j = i.saturating_mul(i);
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_small_limits() {
        assert_eq!(sieve_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(sieve_up_to(0).is_empty());
        assert!(sieve_up_to(1).is_empty());
        assert_eq!(sieve_up_to(2), vec![2]);
        assert_eq!(sieve_up_to(3), vec![2, 3]);
    }

    #[test]
    fn prime_counts_at_table_headings() {
        assert_eq!(sieve_up_to(121).len(), 30);
        let primes = sieve_up_to(1069);
        assert_eq!(primes.len(), 180);
        assert_eq!(*primes.last().unwrap(), 1069);
    }

    #[test]
    fn segmented_matches_simple() {
        for limit in [0, 1, 2, 3, 100, 1_000, 524_287, 524_288, 1_000_003] {
            assert_eq!(segmented_sieve(limit), simple_sieve(limit), "limit {limit}");
        }
    }

    #[test]
    fn nth_prime_table_rows() {
        assert_eq!(nth_prime(1).unwrap().value, 2);
        assert_eq!(nth_prime(25).unwrap().value, 97);
        assert_eq!(nth_prime(45).unwrap().value, 197);
        assert_eq!(nth_prime(100).unwrap().value, 541);
        assert_eq!(nth_prime(180).unwrap().value, 1069);
        assert_eq!(nth_prime(10_000).unwrap().value, 104_729);
        assert!(matches!(nth_prime(0), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn nth_prime_small_indices_need_no_growth() {
        for (m, p) in [(1, 2), (2, 3), (3, 5), (4, 7), (5, 11), (6, 13)] {
            assert_eq!(nth_prime(m).unwrap(), PrimeEntry { index: m, value: p });
        }
    }

    #[test]
    fn prime_index_inverse() {
        assert_eq!(prime_index(2).unwrap(), 1);
        assert_eq!(prime_index(197).unwrap(), 45);
        assert_eq!(prime_index(4), Err(Error::NotPrime(4)));
        assert_eq!(prime_index(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(90).unwrap().factors, vec![(2, 1), (3, 2), (5, 1)]);
        assert!(factorize(1).unwrap().factors.is_empty());
        assert_eq!(factorize(121).unwrap().factors, vec![(11, 2)]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorize_large_64_bit() {
        let big = 4_294_967_311u64;
        assert!(is_prime(big));
        assert_eq!(factorize(big).unwrap().factors, vec![(big, 1)]);
        let (a, b) = (65_537u64, 65_539u64);
        let f = factorize(a * b * b).unwrap();
        assert_eq!(f.factors, vec![(a, 1), (b, 2)]);
        assert_eq!(f.product().unwrap(), a * b * b);
        assert_eq!(
            factorize(u64::MAX).unwrap().factors,
            vec![(3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65_537, 1), (6_700_417, 1)]
        );
    }

    #[test]
    fn product_overflow_is_error() {
        let f = Factorization {
            n: 0,
            factors: vec![(2, 64)],
        };
        assert!(matches!(f.product(), Err(Error::Overflow(_))));
    }

    #[test]
    fn isqrt_edges() {
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
        assert_eq!(isqrt(15), 3);
        assert_eq!(isqrt(16), 4);
    }

    #[test]
    fn spf_table() {
        let spf = smallest_prime_factors(30);
        assert_eq!(spf[2], 2);
        assert_eq!(spf[15], 3);
        assert_eq!(spf[29], 29);
        assert_eq!(spf[25], 5);
    }

    #[test]
    fn display_factorization() {
        assert_eq!(factorize(90).unwrap().to_string(), "2 * 3^2 * 5");
        assert_eq!(factorize(1).unwrap().to_string(), "1");
    }
}
