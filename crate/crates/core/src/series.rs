//! Truncated series and products built from the prime property values.
//!
//! All sums run in ascending index order through [`ComplexSum`], so results
//! are deterministic and carry compensated-summation accuracy.
//!
//! `n^(−s)` is evaluated as `n^(−σ)·(cos(t ln n) − i sin(t ln n))`.

use crate::character::{chi_primes, CharacterAssignment};
use crate::primes;
use crate::summation::{ComplexSum, NeumaierSum};
use crate::{Error, Result};
use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

/// Tolerance for the finite partition `L_N = 1 + ω_N + λ_N`, relative to
/// `max(1, |L_N| + |ω_N| + |λ_N|)`.
pub const PARTITION_TOL: f64 = 1e-12;

/// An Euler factor with modulus below this is treated as singular.
pub const SINGULAR_FACTOR_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPoint {
    pub sigma: f64,
    pub t: f64,
}

impl SeriesPoint {
    pub fn new(sigma: f64, t: f64) -> Result<Self> {
        if !sigma.is_finite() || !t.is_finite() {
            return Err(Error::OutOfDomain {
                what: "series point",
                detail: format!("components must be finite; got ({sigma}, {t})"),
            });
        }
        Ok(Self { sigma, t })
    }

    /// `s = 1/2 + it`.
    pub fn critical(t: f64) -> Result<Self> {
        Self::new(0.5, t)
    }

    /// `n^(−s)`.
    pub fn pow_neg(&self, n: u64) -> Complex64 {
        let x = n as f64;
        let ln = x.ln();
        let magnitude = (-self.sigma * ln).exp();
        let angle = self.t * ln;
        Complex64::new(magnitude * angle.cos(), -magnitude * angle.sin())
    }
}

impl Default for SeriesPoint {
    fn default() -> Self {
        Self {
            sigma: 0.5,
            t: 14.134725,
        }
    }
}

impl fmt::Display for SeriesPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.sigma, self.t)
    }
}

/// Parses `"RE,IM"`.
impl FromStr for SeriesPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected RE,IM; got `{s}`")))?;
        let parse = |part: &str| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("`{part}` is not a decimal number")))
        };
        Self::new(parse(re)?, parse(im)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumReport {
    pub depth: u64,
    pub value: Complex64,
    pub target: Complex64,
    pub residual: f64,
}

impl PartialSumReport {
    pub fn new(depth: u64, value: Complex64, target: Complex64) -> Self {
        Self {
            depth,
            value,
            target,
            residual: (value - target).norm(),
        }
    }

    pub const CSV_HEADER: &'static str = "depth,value_re,value_im,target_re,target_im,residual";

    pub fn csv_row(&self) -> String {
        use crate::fmt::fixed;
        format!(
            "{},{},{},{},{},{}",
            self.depth,
            fixed(self.value.re),
            fixed(self.value.im),
            fixed(self.target.re),
            fixed(self.target.im),
            fixed(self.residual)
        )
    }
}

pub fn reports_to_csv(reports: &[PartialSumReport]) -> String {
    let mut out = String::from(PartialSumReport::CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionOrder(u32);

impl ExpansionOrder {
    pub fn new(mu: u32) -> Result<Self> {
        if mu == 0 {
            return Err(Error::OutOfDomain {
                what: "expansion order",
                detail: "mu must be at least 1".into(),
            });
        }
        Ok(Self(mu))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Depths at which a trajectory records a report: every multiple of `step`
/// plus the final depth.
fn is_checkpoint(n: u64, depth: u64, step: u64) -> bool {
    n == depth || n.is_multiple_of(step)
}

fn require_depth(depth: u64, what: &'static str) -> Result<()> {
    if depth == 0 {
        return Err(Error::OutOfDomain {
            what,
            detail: "depth must be at least 1".into(),
        });
    }
    Ok(())
}

fn require_coverage(assignment: &CharacterAssignment, n: u64) -> Result<()> {
    if n as usize > assignment.limit() {
        return Err(Error::OutOfDomain {
            what: "truncation depth",
            detail: format!("{n} exceeds assignment limit {}", assignment.limit()),
        });
    }
    Ok(())
}

const MINUS_ONE: Complex64 = Complex64::new(-1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `Σ_{m<=M} inner_term(m) / √p_m`; telescopes to `−M/(M+1)`.
pub fn omega_inner_reports(depth: u64, step: u64) -> Result<Vec<PartialSumReport>> {
    require_depth(depth, "omega_inner_partial")?;
    let mut acc = NeumaierSum::new();
    let mut out = Vec::new();
    for entry in chi_primes(depth as usize)? {
        acc.add(entry.inner_term()? / (entry.prime as f64).sqrt());
        if is_checkpoint(entry.index, depth, step) {
            out.push(PartialSumReport::new(
                entry.index,
                Complex64::new(acc.value(), 0.0),
                MINUS_ONE,
            ));
        }
    }
    Ok(out)
}

pub fn omega_inner_partial(depth: u64) -> Result<PartialSumReport> {
    Ok(*omega_inner_reports(depth, 0)?.last().expect("depth >= 1"))
}

/// Running `(L_n, ω_n, λ_n)` after the term for `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirichletState {
    pub n: u64,
    pub dirichlet: Complex64,
    pub omega: Complex64,
    pub lambda: Complex64,
}

/// Walks `n = 1, 2, ...` accumulating the full Dirichlet series and its
/// prime and composite parts in one pass.
pub struct DirichletWalk<'a> {
    assignment: &'a CharacterAssignment,
    s: SeriesPoint,
    n: u64,
    end: u64,
    dirichlet: ComplexSum,
    omega: ComplexSum,
    lambda: ComplexSum,
}

impl<'a> DirichletWalk<'a> {
    pub fn new(assignment: &'a CharacterAssignment, s: SeriesPoint, depth: u64) -> Result<Self> {
        require_depth(depth, "dirichlet_partial")?;
        require_coverage(assignment, depth)?;
        Ok(Self {
            assignment,
            s,
            n: 0,
            end: depth,
            dirichlet: ComplexSum::new(),
            omega: ComplexSum::new(),
            lambda: ComplexSum::new(),
        })
    }
}

impl Iterator for DirichletWalk<'_> {
    type Item = DirichletState;

    fn next(&mut self) -> Option<DirichletState> {
        if self.n >= self.end {
            return None;
        }
        self.n += 1;
        let n = self.n;
        let term = self.assignment.get(n)? * self.s.pow_neg(n);
        self.dirichlet.add(term);
        if n >= 2 {
            if self.assignment.is_prime(n) {
                self.omega.add(term);
            } else {
                self.lambda.add(term);
            }
        }
        Some(DirichletState {
            n,
            dirichlet: self.dirichlet.value(),
            omega: self.omega.value(),
            lambda: self.lambda.value(),
        })
    }
}

fn final_state(assignment: &CharacterAssignment, s: SeriesPoint, depth: u64) -> Result<DirichletState> {
    Ok(DirichletWalk::new(assignment, s, depth)?.last().expect("depth >= 1"))
}

/// `Σ_{n<=N} χ(n) n^(−s)`.
pub fn dirichlet_partial(assignment: &CharacterAssignment, s: SeriesPoint, depth: u64) -> Result<Complex64> {
    Ok(final_state(assignment, s, depth)?.dirichlet)
}

/// `Σ_{p<=N} χ(p) p^(−s)` against the target −1. Diagnostic only.
pub fn omega_fixed_partial(assignment: &CharacterAssignment, s: SeriesPoint, depth: u64) -> Result<PartialSumReport> {
    let st = final_state(assignment, s, depth)?;
    Ok(PartialSumReport::new(depth, st.omega, MINUS_ONE))
}

/// `Σ_{4<=c<=N, c composite} χ(c) c^(−s)` against the target +1. Diagnostic only.
pub fn lambda_fixed_partial(assignment: &CharacterAssignment, s: SeriesPoint, depth: u64) -> Result<PartialSumReport> {
    let st = final_state(assignment, s, depth)?;
    Ok(PartialSumReport::new(depth, st.lambda, ONE))
}

/// Which running sum a trajectory tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedSum {
    Dirichlet,
    Omega,
    Lambda,
}

impl FixedSum {
    pub fn target(self) -> Complex64 {
        match self {
            FixedSum::Dirichlet => ZERO,
            FixedSum::Omega => MINUS_ONE,
            FixedSum::Lambda => ONE,
        }
    }

    fn pick(self, st: &DirichletState) -> Complex64 {
        match self {
            FixedSum::Dirichlet => st.dirichlet,
            FixedSum::Omega => st.omega,
            FixedSum::Lambda => st.lambda,
        }
    }
}

pub fn fixed_sum_reports(
    assignment: &CharacterAssignment,
    which: FixedSum,
    s: SeriesPoint,
    depth: u64,
    step: u64,
) -> Result<Vec<PartialSumReport>> {
    Ok(DirichletWalk::new(assignment, s, depth)?
        .filter(|st| is_checkpoint(st.n, depth, step))
        .map(|st| PartialSumReport::new(st.n, which.pick(&st), which.target()))
        .collect())
}

/// The three sums of the prime/non-prime split at one `(s, N)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorollaryReport {
    pub omega: PartialSumReport,
    pub dirichlet: PartialSumReport,
    pub lambda: PartialSumReport,
    /// `|L_N − (1 + ω_N + λ_N)|`.
    pub partition_residual: f64,
    /// `max(1, |L_N| + |ω_N| + |λ_N|)`.
    pub partition_scale: f64,
}

impl CorollaryReport {
    fn from_state(st: &DirichletState) -> Self {
        let partition_residual = (st.dirichlet - (ONE + st.omega + st.lambda)).norm();
        let partition_scale = 1f64.max(st.dirichlet.norm() + st.omega.norm() + st.lambda.norm());
        Self {
            omega: PartialSumReport::new(st.n, st.omega, MINUS_ONE),
            dirichlet: PartialSumReport::new(st.n, st.dirichlet, ZERO),
            lambda: PartialSumReport::new(st.n, st.lambda, ONE),
            partition_residual,
            partition_scale,
        }
    }

    pub fn partition_holds(&self, tol: f64) -> bool {
        self.partition_residual <= tol * self.partition_scale
    }

    pub fn reports(&self) -> [PartialSumReport; 3] {
        [self.omega, self.dirichlet, self.lambda]
    }
}

/// Bundles ω, L and λ at the same `(s, N)` and checks the finite partition.
pub fn corollary_report(assignment: &CharacterAssignment, s: SeriesPoint, depth: u64) -> Result<CorollaryReport> {
    let report = CorollaryReport::from_state(&final_state(assignment, s, depth)?);
    if !report.partition_holds(PARTITION_TOL) {
        return Err(Error::Verification(format!(
            "partition identity violated at s = {s}, N = {depth}: residual {:e} (scale {:e})",
            report.partition_residual, report.partition_scale
        )));
    }
    Ok(report)
}

/// `Σ_{p<=N} (χ(p) p^(−s))^μ` against `−(1 − L_N)^μ`. The residual is a
/// measurement, not an identity.
pub fn power_sum_residual(
    assignment: &CharacterAssignment,
    s: SeriesPoint,
    mu: ExpansionOrder,
    depth: u64,
) -> Result<PartialSumReport> {
    Ok(*power_sum_reports(assignment, s, mu, depth, 0)?
        .last()
        .expect("depth >= 1"))
}

pub fn power_sum_reports(
    assignment: &CharacterAssignment,
    s: SeriesPoint,
    mu: ExpansionOrder,
    depth: u64,
    step: u64,
) -> Result<Vec<PartialSumReport>> {
    require_depth(depth, "power_sum_residual")?;
    require_coverage(assignment, depth)?;
    let mu = mu.get() as i32;
    let mut dirichlet = ComplexSum::new();
    let mut powers = ComplexSum::new();
    let mut out = Vec::new();
    for n in 1..=depth {
        let term = assignment.get(n).expect("coverage checked") * s.pow_neg(n);
        dirichlet.add(term);
        if assignment.is_prime(n) {
            powers.add(term.powi(mu));
        }
        if is_checkpoint(n, depth, step) {
            let target = -(ONE - dirichlet.value()).powi(mu);
            out.push(PartialSumReport::new(n, powers.value(), target));
        }
    }
    Ok(out)
}

/// Product of `(1 − χ(p) p^(−s))^(−1)` over the given `(m, p, χ(p))`.
fn euler_product_over<I>(factors: I, s: SeriesPoint) -> Result<Complex64>
where
    I: IntoIterator<Item = (u64, u64, Complex64)>,
{
    let mut product = ONE;
    for (m, p, chi) in factors {
        let factor = ONE - chi * s.pow_neg(p);
        if factor.norm() < SINGULAR_FACTOR_TOL {
            return Err(Error::EulerFactorSingular { m, p });
        }
        product /= factor;
    }
    Ok(product)
}

/// `Π_{m<=M} (1 − χ(p_m) p_m^(−s))^(−1)`; `M = 0` gives 1.
pub fn euler_product_partial(s: SeriesPoint, primes: u64) -> Result<Complex64> {
    let entries = chi_primes(primes as usize)?;
    euler_product_over(entries.iter().map(|e| (e.index, e.prime, e.chi.to_complex())), s)
}

/// Euler product trajectory; each report's target is the truncated
/// Dirichlet series up to `p_M`.
pub fn euler_reports(s: SeriesPoint, primes: u64, step: u64) -> Result<Vec<PartialSumReport>> {
    require_depth(primes, "euler_product_partial")?;
    let entries = chi_primes(primes as usize)?;
    let last_prime = entries.last().expect("primes >= 1").prime;
    let assignment = CharacterAssignment::new(last_prime as usize)?;
    let mut walk = DirichletWalk::new(&assignment, s, last_prime)?;
    let mut series = ONE;
    let mut product = ONE;
    let mut out = Vec::new();
    for e in &entries {
        product *= euler_product_over([(e.index, e.prime, e.chi.to_complex())], s)?;
        for st in walk.by_ref() {
            series = st.dirichlet;
            if st.n == e.prime {
                break;
            }
        }
        if is_checkpoint(e.index, primes, step) {
            out.push(PartialSumReport::new(e.index, product, series));
        }
    }
    Ok(out)
}

/// `−log(1 − z)` with `ln_1p` for the modulus so small `|z|` keeps full
/// relative accuracy.
pub fn neg_log_one_minus(z: Complex64) -> Complex64 {
    let d = -2.0 * z.re + z.norm_sqr();
    Complex64::new(-0.5 * d.ln_1p(), -(-z.im).atan2(1.0 - z.re))
}

fn require_unit_disk(z: Complex64) -> Result<()> {
    if !(z.norm() < 1.0) {
        return Err(Error::OutOfDomain {
            what: "log expansion argument",
            detail: format!("|z| = {} must be < 1", z.norm()),
        });
    }
    Ok(())
}

/// Partial sums `Σ_{μ<=k} z^μ/μ` against `−log(1 − z)`.
pub fn log_expansion_reports(z: Complex64, terms: u64, step: u64) -> Result<Vec<PartialSumReport>> {
    require_unit_disk(z)?;
    require_depth(terms, "log expansion terms")?;
    let target = neg_log_one_minus(z);
    let mut acc = ComplexSum::new();
    let mut power = ONE;
    let mut out = Vec::new();
    for mu in 1..=terms {
        power *= z;
        acc.add(power / mu as f64);
        if is_checkpoint(mu, terms, step) {
            out.push(PartialSumReport::new(mu, acc.value(), target));
        }
    }
    Ok(out)
}

/// `|−log(1 − z) − Σ_{μ<=K} z^μ/μ|`.
pub fn log_expansion_residual(z: Complex64, terms: u64) -> Result<f64> {
    if terms == 0 {
        require_unit_disk(z)?;
        return Ok(neg_log_one_minus(z).norm());
    }
    Ok(log_expansion_reports(z, terms, 0)?.last().expect("terms >= 1").residual)
}

/// `|z|^(K+1) / ((K+1)(1 − |z|))`.
pub fn log_expansion_tail_bound(z: Complex64, terms: u64) -> f64 {
    let r = z.norm();
    r.powf(terms as f64 + 1.0) / ((terms as f64 + 1.0) * (1.0 - r))
}

/// Rounding floor of any f64 evaluation of the expansion at `z`:
/// `4ε · (−ln(1 − |z|))`, the l1 mass of the series.
pub fn log_expansion_rounding_floor(z: Complex64) -> f64 {
    4.0 * f64::EPSILON * (-(-z.norm()).ln_1p())
}

/// Real non-principal character mod 3 or mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceCharacter {
    Mod3,
    Mod4,
}

impl ReferenceCharacter {
    pub fn from_modulus(q: u64) -> Result<Self> {
        match q {
            3 => Ok(Self::Mod3),
            4 => Ok(Self::Mod4),
            other => Err(Error::UnsupportedModulus(other)),
        }
    }

    pub fn modulus(self) -> u64 {
        match self {
            Self::Mod3 => 3,
            Self::Mod4 => 4,
        }
    }

    pub fn value(self, n: u64) -> f64 {
        match self {
            Self::Mod3 => [0.0, 1.0, -1.0][(n % 3) as usize],
            Self::Mod4 => [0.0, 1.0, 0.0, -1.0][(n % 4) as usize],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceCheck {
    pub series: Complex64,
    pub product: Complex64,
    pub residual: f64,
}

/// Truncated series (`N` terms) and Euler product (`M` primes) of a genuine
/// character, where the two provably share a limit for `σ > 1`.
pub fn reference_character_l(
    modulus: u64,
    s: SeriesPoint,
    series_terms: u64,
    product_primes: u64,
) -> Result<ReferenceCheck> {
    let chi = ReferenceCharacter::from_modulus(modulus)?;
    require_depth(series_terms, "reference series terms")?;
    let series = (1..=series_terms)
        .filter(|&n| chi.value(n) != 0.0)
        .map(|n| s.pow_neg(n) * chi.value(n))
        .sum::<ComplexSum>()
        .value();
    let product = euler_product_over(
        primes::first_primes(product_primes as usize)
            .into_iter()
            .map(|e| (e.index, e.value, Complex64::new(chi.value(e.value), 0.0))),
        s,
    )?;
    Ok(ReferenceCheck {
        series,
        product,
        residual: (series - product).norm(),
    })
}
