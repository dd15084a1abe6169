//! Real cubics classified by the exact signs of `(D₁, D₂)`, and their roots
//! by radicals.
//!
//! The nine sign pairs correspond to these root configurations:
//!
//! | `D₁` | `D₂` | roots |
//! |------|------|-------|
//! | + | + | three real, middle one below the midpoint of the outer two |
//! | + | 0 | three real in arithmetic progression |
//! | + | − | three real, middle one above the midpoint |
//! | 0 | + | double root below the simple root |
//! | 0 | 0 | triple root |
//! | 0 | − | double root above the simple root |
//! | − | + | one real root, right of the real part of the complex pair |
//! | − | 0 | one real root, equal to the real part of the complex pair |
//! | − | − | one real root, left of the real part of the complex pair |
//!
//! For three real roots `r₁ < r₂ < r₃` only the factor `2r₂ − r₁ − r₃` of
//! `D₂` can change sign; for a real root `ρ` and a pair `α ± iβ`,
//! `D₂ = 2(ρ − α)·|α − ρ + 3iβ|²`.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disc::{d1, d2_via_h, durand_kerner, eval_complex, residual_scale, MonicPoly, DK_MAX_ITER, DK_TOL};
use crate::error::{Error, Result};
use crate::ring::{rat_sign, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Configuration {
    ThreeRealMiddleBelow,
    ThreeRealProgression,
    ThreeRealMiddleAbove,
    DoubleBelowSimple,
    TripleRoot,
    DoubleAboveSimple,
    OneRealRightOfPair,
    OneRealAtPairCenter,
    OneRealLeftOfPair,
}

impl Configuration {
    pub const ALL: [Configuration; 9] = [
        Configuration::ThreeRealMiddleBelow,
        Configuration::ThreeRealProgression,
        Configuration::ThreeRealMiddleAbove,
        Configuration::DoubleBelowSimple,
        Configuration::TripleRoot,
        Configuration::DoubleAboveSimple,
        Configuration::OneRealRightOfPair,
        Configuration::OneRealAtPairCenter,
        Configuration::OneRealLeftOfPair,
    ];

    /// The configuration a pair of signs stands for.
    pub fn from_signs(d1_sign: i8, d2_sign: i8) -> Configuration {
        use Configuration::*;
        match (d1_sign.signum(), d2_sign.signum()) {
            (1, 1) => ThreeRealMiddleBelow,
            (1, 0) => ThreeRealProgression,
            (1, _) => ThreeRealMiddleAbove,
            (0, 1) => DoubleBelowSimple,
            (0, 0) => TripleRoot,
            (0, _) => DoubleAboveSimple,
            (_, 1) => OneRealRightOfPair,
            (_, 0) => OneRealAtPairCenter,
            _ => OneRealLeftOfPair,
        }
    }

    pub fn signs(self) -> (i8, i8) {
        let i = Self::ALL.iter().position(|&c| c == self).expect("listed") as i8;
        (1 - i / 3, 1 - i % 3)
    }

    /// Stable identifier, used in reports and fixtures.
    pub fn key(self) -> &'static str {
        use Configuration::*;
        match self {
            ThreeRealMiddleBelow => "three-real-middle-below",
            ThreeRealProgression => "three-real-progression",
            ThreeRealMiddleAbove => "three-real-middle-above",
            DoubleBelowSimple => "double-below-simple",
            TripleRoot => "triple-root",
            DoubleAboveSimple => "double-above-simple",
            OneRealRightOfPair => "one-real-right-of-pair",
            OneRealAtPairCenter => "one-real-at-pair-center",
            OneRealLeftOfPair => "one-real-left-of-pair",
        }
    }

    pub fn description(self) -> &'static str {
        use Configuration::*;
        match self {
            ThreeRealMiddleBelow => {
                "three distinct real roots; the middle one lies below the midpoint of the outer two"
            }
            ThreeRealProgression => "three distinct real roots in arithmetic progression",
            ThreeRealMiddleAbove => {
                "three distinct real roots; the middle one lies above the midpoint of the outer two"
            }
            DoubleBelowSimple => "a real double root below a simple real root",
            TripleRoot => "a real triple root",
            DoubleAboveSimple => "a real double root above a simple real root",
            OneRealRightOfPair => {
                "one real root, to the right of the real part of a complex-conjugate pair"
            }
            OneRealAtPairCenter => {
                "one real root, equal to the real part of a complex-conjugate pair"
            }
            OneRealLeftOfPair => {
                "one real root, to the left of the real part of a complex-conjugate pair"
            }
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl std::str::FromStr for Configuration {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.key() == s).ok_or_else(|| Error::Parse(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CubicClass {
    pub d1_sign: i8,
    pub d2_sign: i8,
    pub configuration: Configuration,
}

impl CubicClass {
    pub fn from_signs(d1_sign: i8, d2_sign: i8) -> Self {
        CubicClass { d1_sign, d2_sign, configuration: Configuration::from_signs(d1_sign, d2_sign) }
    }
}

fn cubic_coeffs(f: &MonicPoly) -> Result<Vec<Rational>> {
    if f.degree() != 3 {
        return Err(Error::WrongDegree(f.degree()));
    }
    f.rational_coeffs().ok_or(Error::NotNumeric)
}

/// Exact `(D₁, D₂)` of a numeric cubic.
pub fn cubic_discriminants(f: &MonicPoly) -> Result<(Rational, Rational)> {
    cubic_coeffs(f)?;
    let value = |p: crate::mpoly::MPoly| p.constant_value().ok_or(Error::NotNumeric);
    Ok((value(d1(f)?)?, value(d2_via_h(f)?)?))
}

/// Class of a rational cubic from the exact signs of `D₁` and `D₂`.
pub fn classify_cubic(f: &MonicPoly) -> Result<CubicClass> {
    let (a, b) = cubic_discriminants(f)?;
    Ok(CubicClass::from_signs(rat_sign(&a), rat_sign(&b)))
}

/// Roots of a cubic by the radical formula.
#[derive(Clone, Debug, PartialEq)]
pub struct LagrangeRoots {
    pub c1: Complex64,
    pub c2: Complex64,
    pub omega: Complex64,
    pub roots: [Complex64; 3],
    pub residuals: [f64; 3],
    /// `|c₁c₂ − (a₂² − 3a₁)| / (1 + |a₂² − 3a₁|)`.
    pub pairing_error: f64,
}

/// Default residual tolerance (relative to `1 + max|aⱼ|`) for [`lagrange_roots`].
pub const LAGRANGE_TOL: f64 = 1e-9;

/// [`lagrange_roots_with_tol`] at [`LAGRANGE_TOL`].
pub fn lagrange_roots(f: &MonicPoly) -> Result<LagrangeRoots> {
    lagrange_roots_with_tol(f, LAGRANGE_TOL)
}

/// Roots `(−a₂ + ωᵏc₁ + ω²ᵏc₂)/3`, `k = 0, 1, 2`, where `c₁` is the principal
/// cube root of `(D₂ ± 3√(−3D₁))/2` (the sign giving the larger modulus, for
/// accuracy) and `c₂ = (a₂² − 3a₁)/c₁`.
///
/// Every root is checked against `|f(r)| ≤ tol·(1 + max|aⱼ|)`; a violation is
/// reported as [`Error::ResidualTooLarge`].
pub fn lagrange_roots_with_tol(f: &MonicPoly, tol: f64) -> Result<LagrangeRoots> {
    let exact = cubic_coeffs(f)?;
    let (d1, d2) = cubic_discriminants(f)?;
    let a: Vec<f64> = exact.iter().map(Rational::to_f64).collect();
    let delta0 = a[2] * a[2] - 3.0 * a[1];
    let root = Complex64::new(-3.0 * d1.to_f64(), 0.0).sqrt() * 3.0;
    let d2 = Complex64::new(d2.to_f64(), 0.0);
    let (plus, minus) = ((d2 + root) / 2.0, (d2 - root) / 2.0);
    let (big, small) = if plus.norm() >= minus.norm() { (plus, minus) } else { (minus, plus) };
    let c1 = big.cbrt();
    let c2 = if c1.norm() == 0.0 { small.cbrt() } else { delta0 / c1 };
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let roots: [Complex64; 3] = std::array::from_fn(|k| {
        let w = omega.powu(k as u32);
        (-a[2] + w * c1 + w * w * c2) / 3.0
    });
    let scale = residual_scale(&a);
    let residuals = roots.map(|r| eval_complex(&a, r).norm());
    if let Some(index) = residuals.iter().position(|&r| r.is_nan() || r > tol * scale) {
        return Err(Error::ResidualTooLarge { index, residual: residuals[index], tol: tol * scale });
    }
    let pairing_error = (c1 * c2 - delta0).norm() / (1.0 + delta0.abs());
    Ok(LagrangeRoots { c1, c2, omega, roots, residuals, pairing_error })
}

/// Smallest achievable maximum distance between the two root lists over all
/// pairings (brute force over permutations; fine for small degrees).
pub fn pairing_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    fn go(a: &[Complex64], b: &mut Vec<Complex64>, i: usize, worst: f64, best: &mut f64) {
        if worst >= *best {
            return;
        }
        if i == a.len() {
            *best = worst;
            return;
        }
        for j in 0..b.len() {
            let z = b.swap_remove(j);
            go(a, b, i + 1, worst.max((a[i] - z).norm()), best);
            b.push(z);
            let last = b.len() - 1;
            b.swap(j, last);
        }
    }
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut best = f64::INFINITY;
    go(a, &mut b.to_vec(), 0, 0.0, &mut best);
    best
}

/// Whether some root is within `tol` of the average of two others, i.e.
/// `|2r_k − rᵢ − rⱼ| ≤ tol`.
pub fn numeric_symmetric_triple(roots: &[Complex64], tol: f64) -> bool {
    (0..roots.len()).any(|i| {
        (i + 1..roots.len()).any(|j| {
            roots
                .iter()
                .enumerate()
                .any(|(k, &rk)| k != i && k != j && (2.0 * rk - roots[i] - roots[j]).norm() <= tol)
        })
    })
}

/// Remainder of `p` modulo `q` (ascending coefficients, `q` trimmed).
fn poly_rem(mut p: Vec<Rational>, q: &[Rational]) -> Vec<Rational> {
    let dq = q.len() - 1;
    let inv = q[dq].recip().expect("trimmed");
    while p.len() > dq {
        let top = p.pop().expect("nonempty");
        let factor = &top * &inv;
        let shift = p.len() - dq;
        for (i, c) in q[..dq].iter().enumerate() {
            p[shift + i] -= &(&factor * c);
        }
    }
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

/// Monic `gcd(p, q)` by the Euclidean algorithm over `ℚ`.
pub fn poly_gcd(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    let trim = |v: &[Rational]| {
        let len = v.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
        v[..len].to_vec()
    };
    let (mut a, mut b) = (trim(p), trim(q));
    while !b.is_empty() {
        let r = poly_rem(a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c = &*c / &lead;
        }
    }
    a
}

/// What the roots of a real cubic look like, determined without `D₁` or `D₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootStructure {
    /// Number of distinct real roots.
    pub distinct_real: usize,
    /// Largest root multiplicity.
    pub max_multiplicity: usize,
    /// Whether some root is the average of two others (numerically, at the
    /// given tolerance, for simple roots).
    pub symmetric_triple: bool,
    pub configuration: Configuration,
}

/// The exact roots of a rational cubic with a multiple root, read off
/// `gcd(f, f′)`: a linear gcd gives the double root `r` (and the simple root
/// `−a₂ − 2r`), a quadratic one the triple root `−a₂/3`. `None` when the
/// roots are simple.
pub fn multiple_roots(f: &MonicPoly) -> Result<Option<[Rational; 3]>> {
    let c = cubic_coeffs(f)?;
    let full: Vec<Rational> = c.iter().cloned().chain([Rational::one()]).collect();
    let deriv: Vec<Rational> = (1..full.len()).map(|k| &full[k] * &Rational::from(k as i64)).collect();
    let g = poly_gcd(&full, &deriv);
    Ok(match g.len().saturating_sub(1) {
        0 => None,
        1 => {
            let double = -&g[0];
            let simple = &(-&c[2]) - &(&double * &Rational::from(2));
            Some([double.clone(), double, simple])
        }
        _ => {
            let r = &(-&c[2]) / &Rational::from(3);
            Some([r.clone(), r.clone(), r])
        }
    })
}

/// Independent root-structure oracle for a rational cubic.
///
/// Multiple roots come exactly from [`multiple_roots`]. Otherwise the roots
/// are simple and located numerically by [`durand_kerner`]; comparisons use
/// `tol·(1 + max|rᵢ|)`.
pub fn root_structure(f: &MonicPoly, tol: f64) -> Result<RootStructure> {
    use Configuration::*;
    if let Some([r, _, s]) = multiple_roots(f)? {
        let (distinct_real, max_multiplicity, configuration) = match s.cmp(&r) {
            std::cmp::Ordering::Equal => (1, 3, TripleRoot),
            std::cmp::Ordering::Greater => (2, 2, DoubleBelowSimple),
            std::cmp::Ordering::Less => (2, 2, DoubleAboveSimple),
        };
        return Ok(RootStructure {
            distinct_real,
            max_multiplicity,
            symmetric_triple: max_multiplicity == 3,
            configuration,
        });
    }
    let roots = durand_kerner(f, DK_TOL, DK_MAX_ITER)?;
    let eps = tol * (1.0 + roots.iter().fold(0.0f64, |m, r| m.max(r.norm())));
    let symmetric_triple = numeric_symmetric_triple(&roots, eps);
    let mut real: Vec<f64> = roots.iter().filter(|r| r.im.abs() <= eps).map(|r| r.re).collect();
    real.sort_by(f64::total_cmp);
    let cmp = |v: f64| {
        if v.abs() <= eps {
            0
        } else {
            v.signum() as i8
        }
    };
    let configuration = match real.len() {
        3 => match cmp(real[1] - (real[0] + real[2]) / 2.0) {
            -1 => ThreeRealMiddleBelow,
            0 => ThreeRealProgression,
            _ => ThreeRealMiddleAbove,
        },
        1 => {
            let pair = roots.iter().find(|r| r.im.abs() > eps).expect("complex pair");
            match cmp(real[0] - pair.re) {
                1 => OneRealRightOfPair,
                0 => OneRealAtPairCenter,
                _ => OneRealLeftOfPair,
            }
        }
        k => return Err(Error::BadInput(format!("numeric oracle found {k} real roots of a cubic"))),
    };
    Ok(RootStructure { distinct_real: real.len(), max_multiplicity: 1, symmetric_triple, configuration })
}
