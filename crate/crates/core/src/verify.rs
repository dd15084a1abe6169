//! Seeded randomized cross-checks of every construction against the others
//! and against the root-product oracles, with newline-delimited JSON reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::ToPrimitive;
use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_cubic, lagrange_roots, pairing_distance, root_structure};
use crate::disc::*;
use crate::error::{Error, Result};
use crate::linalg::{bezout_resultant, sylvester_resultant};
use crate::mpoly::{MPoly, Var};
use crate::ring::Rational;

/// A rational `p/q` with `|p| ≤ bound` and `1 ≤ q ≤ bound`.
pub fn random_rational(rng: &mut impl Rng, bound: u32) -> Rational {
    let b = i64::from(bound.max(1));
    let p = rng.random_range(-b..=b);
    let q = rng.random_range(1..=b);
    Rational::new(p, q).expect("positive denominator")
}

/// `n` seeded random rationals with numerator and denominator magnitudes at
/// most `bound`.
pub fn random_rational_roots(n: usize, seed: u64, bound: u32) -> Vec<Rational> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    (0..n).map(|_| random_rational(&mut rng, bound)).collect()
}

/// A seeded random monic polynomial of degree `n` with coefficients drawn
/// like [`random_rational`].
pub fn random_monic(n: usize, seed: u64, bound: u32) -> MonicPoly {
    MonicPoly::from_rationals(&random_rational_roots(n, seed, bound)).expect("n ≥ 1")
}

/// Independent seed for one trial of a run.
pub fn trial_seed(seed: u64, n: usize, trial: usize) -> u64 {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let base = rng.next_u64();
    let mut rng = SplitMix64::seed_from_u64(base ^ ((n as u64) << 40) ^ trial as u64);
    rng.next_u64()
}

/// Draws from `seed` until the roots are distinct and free of symmetric
/// triples.
pub fn generic_roots(n: usize, seed: u64, bound: u32) -> Vec<Rational> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    loop {
        let roots: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng, bound)).collect();
        if !has_repeated_root(&roots) && !has_symmetric_triple(&roots) {
            return roots;
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    Generic,
    /// The third root is the average of the first two.
    PlantedTriple,
    /// The second root repeats the first.
    PlantedDouble,
}

/// One planted instance per `ratio + 1` trials, alternating between the two
/// planted kinds.
pub fn instance_kind(trial: usize, ratio: usize) -> InstanceKind {
    let period = ratio + 1;
    if trial % period != 0 {
        InstanceKind::Generic
    } else if (trial / period) % 2 == 0 {
        InstanceKind::PlantedTriple
    } else {
        InstanceKind::PlantedDouble
    }
}

pub fn instance_roots(n: usize, kind: InstanceKind, seed: u64, bound: u32) -> Vec<Rational> {
    let mut roots = generic_roots(n, seed, bound);
    match kind {
        InstanceKind::Generic => {}
        InstanceKind::PlantedTriple => {
            roots[2] = (&roots[0] + &roots[1]) * Rational::new(1, 2).expect("nonzero");
        }
        InstanceKind::PlantedDouble => roots[1] = roots[0].clone(),
    }
    roots
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `D₂` via `H` and `D₁` via `f′` equal the root products.
    Oracle,
    /// `H(r_k) = Π_{i<j, k∉{i,j}} (2r_k − rᵢ − rⱼ)`.
    HFactor,
    /// `res(g₁*, g₃*, z)² = H²`.
    GH2,
    /// `E = c·D₂²` with the per-degree constant.
    ECD2,
    /// Vanishing of `D₁`, `D₂`, `E` and `res(f, res(f₁, f₂, y), x)` matches
    /// the root structure.
    ZeroSets,
    /// Bézout and Sylvester resultants of `f` and `H` agree.
    Bezout,
    /// Cubic class matches the root-structure oracle; radical roots match
    /// the iterative ones.
    Classify,
}

impl Check {
    pub const ALL: [Check; 7] =
        [Check::Oracle, Check::HFactor, Check::GH2, Check::ECD2, Check::ZeroSets, Check::Bezout, Check::Classify];

    pub fn name(self) -> &'static str {
        match self {
            Check::Oracle => "oracle",
            Check::HFactor => "h-factor",
            Check::GH2 => "g-h2",
            Check::ECD2 => "e-cd2",
            Check::ZeroSets => "zero-sets",
            Check::Bezout => "bezout",
            Check::Classify => "classify",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Parse(s.to_string()))
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub millis: Option<f64>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TrialReport {
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub kind: InstanceKind,
    pub roots: Vec<Rational>,
    pub checks: Vec<CheckOutcome>,
    /// Measured `E / D₂²`, when `D₂ ≠ 0` and the check ran.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<Rational>,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub degrees: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    /// Bound on numerators and denominators of the random roots.
    pub bound: u32,
    /// Generic instances per planted one.
    pub ratio: usize,
    /// Record per-check wall-clock times (makes reports nondeterministic).
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            degrees: vec![3, 4, 5],
            trials: 10,
            seed: 1,
            checks: Check::ALL.to_vec(),
            bound: 10,
            ratio: 4,
            timings: false,
        }
    }
}

type Outcome = std::result::Result<(), String>;

fn expect(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond { Ok(()) } else { Err(what()) }
}

fn value(p: MPoly) -> std::result::Result<Rational, String> {
    p.constant_value().ok_or_else(|| format!("expected a constant, got {p}"))
}

/// Shared, lazily computed ingredients of one trial.
struct Instance<'a> {
    roots: &'a [Rational],
    kind: InstanceKind,
    f: MonicPoly,
    h: Option<MPoly>,
    d2: Option<Rational>,
}

impl Instance<'_> {
    fn h(&mut self) -> std::result::Result<MPoly, String> {
        if self.h.is_none() {
            self.h = Some(build_h(&self.f).map_err(|e| e.to_string())?);
        }
        Ok(self.h.clone().expect("set"))
    }

    fn d2(&mut self) -> std::result::Result<Rational, String> {
        if self.d2.is_none() {
            self.d2 = Some(value(d2_via_h(&self.f).map_err(|e| e.to_string())?)?);
        }
        Ok(self.d2.clone().expect("set"))
    }
}

fn run_check(check: Check, inst: &mut Instance, c_out: &mut Option<Rational>) -> Outcome {
    let err = |e: Error| e.to_string();
    let roots = inst.roots;
    let n = roots.len();
    match check {
        Check::Oracle => {
            let d2 = inst.d2()?;
            let want = d2_from_roots(roots);
            expect(d2 == want, || format!("D2 via H = {d2}, root product = {want}"))?;
            let d1v = value(d1(&inst.f).map_err(err)?)?;
            let want = d1_from_roots(roots);
            expect(d1v == want, || format!("D1 = {d1v}, root product = {want}"))
        }
        Check::HFactor => {
            let h = inst.h()?;
            let two = Rational::from(2);
            for (k, rk) in roots.iter().enumerate() {
                let at = value(h.evaluate(&[(Var::X, rk.clone())]))?;
                let mut want = Rational::one();
                for i in 0..n {
                    for j in i + 1..n {
                        if k != i && k != j {
                            want *= &(&(&two * rk) - &(&roots[i] + &roots[j]));
                        }
                    }
                }
                expect(at == want, || format!("H(r{k}) = {at}, product = {want}"))?;
            }
            Ok(())
        }
        Check::GH2 => {
            let h = inst.h()?;
            let g = big_g(&inst.f).map_err(err)?;
            expect(g == &h * &h, || "G differs from H^2".into())
        }
        Check::ECD2 => {
            let e = value(big_e(&inst.f).map_err(err)?)?;
            let d2 = inst.d2()?;
            let c = e_constant(n).map_err(err)?;
            let want = &c * &(&d2 * &d2);
            if !d2.is_zero() {
                *c_out = Some(&e / &(&d2 * &d2));
            }
            expect(e == want, || format!("E = {e}, c*D2^2 = {want}"))
        }
        Check::ZeroSets => {
            let d1v = value(d1(&inst.f).map_err(err)?)?;
            let d2 = inst.d2()?;
            let e = value(big_e(&inst.f).map_err(err)?)?;
            let zero12 = d1d2_zero_test(&inst.f).map_err(err)?;
            let triple = has_symmetric_triple(roots);
            let repeated = has_repeated_root(roots);
            expect(d2.is_zero() == triple, || format!("D2 = {d2} but symmetric triple = {triple}"))?;
            expect(e.is_zero() == triple, || format!("E = {e} but symmetric triple = {triple}"))?;
            expect(d2_from_roots(roots).is_zero() == triple, || "root product disagrees".into())?;
            expect(d1v.is_zero() == repeated, || format!("D1 = {d1v} but repeated root = {repeated}"))?;
            expect(zero12 == (d1v.is_zero() || d2.is_zero()), || format!("zero test = {zero12}"))?;
            match inst.kind {
                InstanceKind::PlantedTriple => expect(d2.is_zero() && e.is_zero(), || "planted triple missed".into()),
                InstanceKind::PlantedDouble => expect(d1v.is_zero() && zero12, || "planted double missed".into()),
                InstanceKind::Generic => {
                    expect(!d1v.is_zero() && !d2.is_zero() && !zero12, || "generic instance vanished".into())
                }
            }
        }
        Check::Bezout => {
            let h = inst.h()?;
            let fx = inst.f.in_var(Var::X).univariate_view(Var::X);
            let hx = h.univariate_view(Var::X);
            let b = bezout_resultant(&fx, &hx).map_err(err)?;
            let s = sylvester_resultant(&fx, &hx).map_err(err)?;
            expect(b == s, || format!("Bezout {b} vs Sylvester {s}"))
        }
        Check::Classify => {
            if n != 3 {
                return Ok(());
            }
            let class = classify_cubic(&inst.f).map_err(err)?;
            let oracle = root_structure(&inst.f, 1e-7).map_err(err)?;
            expect(class.configuration == oracle.configuration, || {
                format!("class {} vs oracle {}", class.configuration, oracle.configuration)
            })?;
            let lag = lagrange_roots(&inst.f).map_err(err)?;
            let reference: Vec<_> = if class.d1_sign != 0 {
                durand_kerner(&inst.f, DK_TOL, DK_MAX_ITER).map_err(err)?
            } else {
                // Iteration resolves multiple roots only to about √tol.
                roots.iter().map(|r| num_complex::Complex64::new(r.to_f64(), 0.0)).collect()
            };
            let dist = pairing_distance(&lag.roots, &reference);
            expect(dist <= 1e-7, || format!("radical roots off by {dist:e}"))
        }
    }
}

/// Runs the requested checks on trial `trial` of degree `n`.
pub fn run_trial(n: usize, trial: usize, cfg: &SuiteConfig) -> TrialReport {
    let seed = trial_seed(cfg.seed, n, trial);
    let kind = instance_kind(trial, cfg.ratio);
    let roots = instance_roots(n, kind, seed, cfg.bound);
    let mut inst = Instance { roots: &roots, kind, f: from_roots(&roots), h: None, d2: None };
    let mut c = None;
    let mut checks: Vec<Check> = cfg.checks.clone();
    checks.sort();
    checks.dedup();
    let checks = checks
        .into_iter()
        .map(|check| {
            let start = Instant::now();
            let result = run_check(check, &mut inst, &mut c);
            let millis = cfg.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
            CheckOutcome { check, pass: result.is_ok(), detail: result.err(), millis }
        })
        .collect();
    TrialReport { n, trial, seed, kind, roots, checks, c }
}

/// All trials for all degrees, run in parallel and returned in
/// `(n, trial)` order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<TrialReport>> {
    if let Some(&n) = cfg.degrees.iter().find(|&&n| n < 3) {
        return Err(Error::DegreeTooSmall { got: n, need: 3 });
    }
    let jobs: Vec<(usize, usize)> =
        cfg.degrees.iter().flat_map(|&n| (0..cfg.trials).map(move |t| (n, t))).collect();
    let mut reports: Vec<TrialReport> = jobs.par_iter().map(|&(n, t)| run_trial(n, t, cfg)).collect();
    reports.sort_by_key(|r| (r.n, r.trial));
    Ok(reports)
}

/// One JSON object per line.
pub fn to_ndjson(reports: &[TrialReport]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("reports serialize") + "\n")
        .collect()
}

/// Tallies `D₂ mod 4` over seeded random monic integer polynomials of
/// degree `n` with coefficients in `[-bound, bound]`. Exploratory only.
pub fn d2_mod4_histogram(n: usize, samples: usize, seed: u64, bound: i64) -> Result<[usize; 4]> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut counts = [0usize; 4];
    for _ in 0..samples {
        let coeffs: Vec<Rational> = (0..n).map(|_| Rational::from(rng.random_range(-bound..=bound))).collect();
        let d2 = d2_via_h(&MonicPoly::from_rationals(&coeffs)?)?;
        let v = d2.constant_value().ok_or(Error::NotNumeric)?;
        let r = v.numer().as_bigint().mod_floor(&BigInt::from(4));
        counts[r.to_usize().expect("in 0..4")] += 1;
    }
    Ok(counts)
}

/// Per-degree summary of a run: trials, failures and the distinct measured
/// constants.
pub fn summarize(reports: &[TrialReport]) -> BTreeMap<usize, (usize, usize, Vec<Rational>)> {
    let mut out: BTreeMap<usize, (usize, usize, Vec<Rational>)> = BTreeMap::new();
    for r in reports {
        let e = out.entry(r.n).or_default();
        e.0 += 1;
        if !r.passed() {
            e.1 += 1;
        }
        if let Some(c) = &r.c {
            if !e.2.contains(c) {
                e.2.push(c.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_are_deterministic() {
        assert_eq!(random_rational_roots(3, 42, 10), random_rational_roots(3, 42, 10));
        assert_ne!(random_rational_roots(3, 42, 10), random_rational_roots(3, 43, 10));
        let unit = [Rational::from(-1), Rational::zero(), Rational::one()];
        for seed in 0..50 {
            assert!(random_rational_roots(4, seed, 1).iter().all(|r| unit.contains(r)));
        }
        for r in random_rational_roots(20, 7, 5) {
            assert!(r.denom().to_i64().unwrap() <= 5 && r.numer().to_i64().unwrap().abs() <= 5);
        }
    }

    #[test]
    fn kinds_mix_one_to_four() {
        let kinds: Vec<_> = (0..10).map(|t| instance_kind(t, 4)).collect();
        assert_eq!(kinds[0], InstanceKind::PlantedTriple);
        assert_eq!(kinds[5], InstanceKind::PlantedDouble);
        assert_eq!(kinds.iter().filter(|k| **k == InstanceKind::Generic).count(), 8);
    }

    #[test]
    fn planted_instances() {
        let t = instance_roots(4, InstanceKind::PlantedTriple, 9, 10);
        assert!(has_symmetric_triple(&t));
        let d = instance_roots(4, InstanceKind::PlantedDouble, 9, 10);
        assert!(has_repeated_root(&d));
        let g = instance_roots(4, InstanceKind::Generic, 9, 10);
        assert!(!has_repeated_root(&g) && !has_symmetric_triple(&g));
    }

    #[test]
    fn oracle_suite_passes() {
        let cfg = SuiteConfig { degrees: vec![3], trials: 10, checks: vec![Check::Oracle], ..Default::default() };
        let reports = run_suite(&cfg).unwrap();
        assert_eq!(reports.len(), 10);
        assert!(reports.iter().all(TrialReport::passed));
    }

    #[test]
    fn full_suite_small() {
        let cfg = SuiteConfig { degrees: vec![3, 4], trials: 6, ..Default::default() };
        let reports = run_suite(&cfg).unwrap();
        for r in &reports {
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(to_ndjson(&reports), to_ndjson(&run_suite(&cfg).unwrap()));
        let line = to_ndjson(&reports[..1]);
        let back: TrialReport = serde_json::from_str(line.trim()).unwrap();
        assert_eq!(back, reports[0]);
    }

    #[test]
    fn planted_reports() {
        let cfg = SuiteConfig { degrees: vec![4], trials: 6, ..Default::default() };
        let reports = run_suite(&cfg).unwrap();
        assert_eq!(reports[0].kind, InstanceKind::PlantedTriple);
        assert!(reports[0].c.is_none());
        assert_eq!(reports[5].kind, InstanceKind::PlantedDouble);
        assert!(reports[1].c.is_some());
    }

    #[test]
    fn rejects_small_degrees() {
        let cfg = SuiteConfig { degrees: vec![2], ..Default::default() };
        assert!(run_suite(&cfg).is_err());
    }

    #[test]
    fn mod4_histogram_counts_every_sample() {
        let h = d2_mod4_histogram(4, 20, 3, 5).unwrap();
        assert_eq!(h.iter().sum::<usize>(), 20);
    }

    #[test]
    fn check_names_roundtrip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
    }
}
