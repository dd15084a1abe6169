//! Sparse multivariate polynomials over ℚ.
//!
//! Every polynomial lives in the same fixed variable universe
//! `a0 < a1 < … < a11 < x < y < z < w`. Exponent vectors are packed one byte
//! per variable into a `u128`, with `w` in the most significant byte, so the
//! derived ordering on [`Monomial`] (total degree, then packed value) is
//! graded lexicographic with later variables dominating.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};

/// Number of coefficient symbols `a0…a11` the universe can hold.
pub const MAX_COEFF_SYMBOLS: usize = 12;

const SLOT_X: u32 = 12;
const SLOT_Y: u32 = 13;
const SLOT_Z: u32 = 14;
const SLOT_W: u32 = 15;

/// Bit `8k` set for every byte boundary `k = 1..15`; a carry or borrow into
/// any of them means some exponent left the `0..=255` range.
const BYTE_BOUNDARIES: u128 = 0x0101_0101_0101_0101_0101_0101_0101_0100;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Coefficient symbol `a_i`.
    A(u8),
    X,
    Y,
    Z,
    W,
}

impl Var {
    pub fn a(i: usize) -> Result<Var> {
        if i < MAX_COEFF_SYMBOLS {
            Ok(Var::A(i as u8))
        } else {
            Err(Error::TooManySymbols { requested: i + 1, max: MAX_COEFF_SYMBOLS })
        }
    }

    fn slot(self) -> u32 {
        match self {
            Var::A(i) => u32::from(i),
            Var::X => SLOT_X,
            Var::Y => SLOT_Y,
            Var::Z => SLOT_Z,
            Var::W => SLOT_W,
        }
    }

    fn from_slot(slot: u32) -> Var {
        match slot {
            SLOT_X => Var::X,
            SLOT_Y => Var::Y,
            SLOT_Z => Var::Z,
            SLOT_W => Var::W,
            i => Var::A(i as u8),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A(i) => write!(f, "a{i}"),
            Var::X => f.write_str("x"),
            Var::Y => f.write_str("y"),
            Var::Z => f.write_str("z"),
            Var::W => f.write_str("w"),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        match s {
            "x" => Ok(Var::X),
            "y" => Ok(Var::Y),
            "z" => Ok(Var::Z),
            "w" => Ok(Var::W),
            _ => {
                let idx = s
                    .strip_prefix('a')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(s.to_string()))?;
                Var::a(idx)
            }
        }
    }
}

/// A power product of the universe variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    degree: u16,
    packed: u128,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { degree: 0, packed: 0 };

    /// `v^exp`. Panics if `exp > 255`.
    pub fn var_pow(v: Var, exp: u32) -> Monomial {
        assert!(exp <= 255, "exponent {exp} out of range");
        Monomial { degree: exp as u16, packed: u128::from(exp) << (8 * v.slot()) }
    }

    pub fn total_degree(&self) -> u32 {
        u32::from(self.degree)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        ((self.packed >> (8 * v.slot())) & 0xff) as u32
    }

    pub fn is_one(&self) -> bool {
        self.packed == 0
    }

    /// Product of two monomials. Panics when an exponent would exceed 255.
    pub fn mul(self, other: Monomial) -> Monomial {
        let sum = self
            .packed
            .checked_add(other.packed)
            .filter(|s| (self.packed ^ other.packed ^ s) & BYTE_BOUNDARIES == 0)
            .expect("monomial exponent overflow");
        Monomial { degree: self.degree + other.degree, packed: sum }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        let diff = self.packed.checked_sub(other.packed)?;
        if (self.packed ^ other.packed ^ diff) & BYTE_BOUNDARIES != 0 {
            return None;
        }
        Some(Monomial { degree: self.degree - other.degree, packed: diff })
    }

    /// The monomial with the exponent of `v` cleared.
    pub fn without(self, v: Var) -> Monomial {
        let e = self.exponent(v);
        Monomial {
            degree: self.degree - e as u16,
            packed: self.packed & !(0xffu128 << (8 * v.slot())),
        }
    }

    /// `(variable, exponent)` pairs with nonzero exponent, ascending by variable.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        (0..16u32).filter_map(move |s| {
            let e = ((self.packed >> (8 * s)) & 0xff) as u32;
            (e > 0).then(|| (Var::from_slot(s), e))
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.factors().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse polynomial with rational coefficients.
///
/// Terms are kept strictly descending by monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> MPoly {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> MPoly {
        MPoly::monomial(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::monomial(Monomial::var_pow(v, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> MPoly {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(m, c)] }
        }
    }

    /// `Σ coeffs[k]·v^k`.
    pub fn from_univariate(v: Var, coeffs: &[Rational]) -> MPoly {
        MPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var_pow(v, k as u32), c.clone())),
        )
    }

    /// Collects arbitrary terms into canonical form, merging duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> MPoly {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += &c;
        }
        MPoly::from_ascending(acc)
    }

    fn from_ascending(map: BTreeMap<Monomial, Rational>) -> MPoly {
        MPoly { terms: map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.total_degree())
    }

    /// Total degree in the given subset of variables; 0 for the zero polynomial.
    pub fn degree_in_vars(&self, vars: &[Var]) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| vars.iter().map(|&v| m.exponent(v)).sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Degree in a single variable; 0 for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) > 0)
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    /// `self · c·m`; monomial multiplication preserves term order.
    pub fn mul_term(&self, m: Monomial, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    fn merge(&self, other: &MPoly, negate_other: bool) -> MPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &Rational| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0, rhs(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, rhs(c))));
        MPoly { terms: out }
    }

    pub fn pow(&self, exp: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::NotDivisible`] when the remainder is nonzero and
    /// [`Error::DivisionByZero`] when `divisor` is zero.
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly> {
        let Some((lead_m, lead_c)) = divisor.terms.first() else {
            return Err(Error::DivisionByZero);
        };
        if self.is_zero() {
            return Ok(MPoly::zero());
        }
        if divisor.terms.len() == 1 {
            let inv = lead_c.recip().expect("stored coefficients are nonzero");
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| m.checked_div(*lead_m).map(|q| (q, c * &inv)))
                .collect::<Option<Vec<_>>>()
                .ok_or(Error::NotDivisible)?;
            return Ok(MPoly { terms });
        }
        if self.total_degree() < divisor.total_degree() {
            return Err(Error::NotDivisible);
        }
        // Work over ℤ: with p = P/dp and q = g·Q'/dq for a primitive integer
        // Q', Gauss's lemma makes P/Q' integral whenever it is a polynomial,
        // so every step is an exact integer division and no gcds are needed.
        let (p_int, dp) = self.integer_form();
        let (mut q_int, dq) = divisor.integer_form();
        let mut g = q_int.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        if q_int[0].1.is_negative() {
            g = -g;
        }
        for (_, c) in &mut q_int {
            *c /= &g;
        }
        let lead = q_int[0].1.clone();
        let mut rem: BTreeMap<Monomial, BigInt> = p_int.into_iter().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.checked_div(*lead_m).ok_or(Error::NotDivisible)?;
            let (qc, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (dm, dc) in &q_int[1..] {
                let delta = dc * &qc;
                match rem.entry(dm.mul(qm)) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= &delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        let (num, den) = (dq, &dp * &g);
        let terms = quotient
            .into_iter()
            .map(|(m, c)| (m, Rational::from_bigints(c * &num, den.clone())))
            .collect();
        Ok(MPoly { terms })
    }

    /// `(P, d)` with integer coefficients `P = d·self`, `d > 0` the lcm of
    /// the denominators.
    fn integer_form(&self) -> (Vec<(Monomial, BigInt)>, BigInt) {
        let d = self.terms.iter().fold(BigInt::one(), |d, (_, c)| d.lcm(c.denom_ref()));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let scaled = if c.denom_ref().is_one() {
                    c.numer_ref() * &d
                } else {
                    c.numer_ref() * (&d / c.denom_ref())
                };
                (*m, scaled)
            })
            .collect();
        (terms, d)
    }

    /// Simultaneous substitution of polynomials for variables; unbound
    /// variables are left in place.
    pub fn substitute(&self, bindings: &[(Var, MPoly)]) -> MPoly {
        let mut powers: HashMap<(Var, u32), MPoly> = HashMap::new();
        let mut pow_of = |v: Var, e: u32, image: &MPoly| -> MPoly {
            powers.entry((v, e)).or_insert_with(|| image.pow(e)).clone()
        };
        let mut acc = MPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = *m;
            let mut term = MPoly::one();
            for (v, image) in bindings {
                let e = m.exponent(*v);
                if e > 0 {
                    kept = kept.without(*v);
                    term = &term * &pow_of(*v, e, image);
                }
            }
            acc = &acc + &term.mul_term(kept, c);
        }
        acc
    }

    /// Substitutes rational values for variables.
    pub fn evaluate(&self, values: &[(Var, Rational)]) -> MPoly {
        let bindings: Vec<_> =
            values.iter().map(|(v, c)| (*v, MPoly::constant(c.clone()))).collect();
        self.substitute(&bindings)
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> MPoly {
        MPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            (e > 0).then(|| {
                let lowered = m.checked_div(Monomial::var_pow(v, 1)).expect("e > 0");
                (lowered, c * &Rational::from(i64::from(e)))
            })
        }))
    }

    /// Coefficients grouped by powers of `v`.
    pub fn univariate_view(&self, v: Var) -> UniView {
        let deg = self.degree_in(v) as usize;
        if self.is_zero() {
            return UniView { main: v, coeffs: Vec::new() };
        }
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg + 1];
        // Terms sharing the exponent of `v` keep their relative order once it
        // is cleared, so each bucket stays sorted.
        for (m, c) in &self.terms {
            buckets[m.exponent(v) as usize].push((m.without(v), c.clone()));
        }
        let coeffs = buckets.into_iter().map(|terms| MPoly { terms }).collect();
        UniView { main: v, coeffs }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.signum() < 0;
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MPoly {
    type Err = Error;

    /// Parses sums of products such as `-2*a2^3 + 9*a1*a2 - 27*a0` or
    /// `3/2*x^2*y`. Whitespace is ignored.
    fn from_str(s: &str) -> Result<MPoly> {
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || Error::Parse(s.to_string());
        if src.is_empty() {
            return Err(err());
        }
        let mut pos = 0;
        let mut terms = Vec::new();
        while pos < src.len() {
            let mut negative = false;
            let mut signs = 0;
            while pos < src.len() && (src[pos] == '+' || src[pos] == '-') {
                negative ^= src[pos] == '-';
                signs += 1;
                pos += 1;
            }
            if signs == 0 && !terms.is_empty() {
                return Err(err());
            }
            let mut coeff = Rational::one();
            let mut mono = Monomial::ONE;
            loop {
                let start = pos;
                if pos < src.len() && src[pos].is_ascii_digit() {
                    while pos < src.len() && src[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos + 1 < src.len() && src[pos] == '/' && src[pos + 1].is_ascii_digit() {
                        pos += 1;
                        while pos < src.len() && src[pos].is_ascii_digit() {
                            pos += 1;
                        }
                    }
                    let text: String = src[start..pos].iter().collect();
                    coeff = &coeff * &text.parse::<Rational>()?;
                } else if pos < src.len() && src[pos].is_ascii_alphabetic() {
                    pos += 1;
                    while pos < src.len() && src[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let name: String = src[start..pos].iter().collect();
                    let v: Var = name.parse()?;
                    let mut exp = 1u32;
                    if pos < src.len() && src[pos] == '^' {
                        pos += 1;
                        let e0 = pos;
                        while pos < src.len() && src[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        let digits: String = src[e0..pos].iter().collect();
                        exp = digits.parse().map_err(|_| err())?;
                        if exp > 255 {
                            return Err(err());
                        }
                    }
                    mono = mono.mul(Monomial::var_pow(v, exp));
                } else {
                    return Err(err());
                }
                if pos < src.len() && src[pos] == '*' {
                    pos += 1;
                } else {
                    break;
                }
            }
            if negative {
                coeff = -coeff;
            }
            terms.push((mono, coeff));
            if pos < src.len() && src[pos] != '+' && src[pos] != '-' {
                return Err(err());
            }
        }
        Ok(MPoly::from_terms(terms))
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.merge(rhs, false)
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.merge(rhs, true)
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let (small, large) =
            if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        match small.terms.len() {
            0 => MPoly::zero(),
            1 => large.mul_term(small.terms[0].0, &small.terms[0].1),
            _ => {
                // Accumulate over ℤ and reduce each output coefficient once.
                let (a, da) = small.integer_form();
                let (b, db) = large.integer_form();
                let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(a.len() * b.len());
                for (ma, ca) in &a {
                    for (mb, cb) in &b {
                        *acc.entry(ma.mul(*mb)).or_default() += ca * cb;
                    }
                }
                let d = da * db;
                let mut terms: Vec<_> = acc
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m, Rational::from_bigints(c, d.clone())))
                    .collect();
                terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MPoly { terms }
            }
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.exact_div(rhs).ok()
    }
}

/// `(term count, total degree)` of the canonical expanded form.
pub fn terms_and_degree(p: &MPoly) -> (usize, u32) {
    (p.term_count(), p.total_degree())
}

/// A polynomial seen as univariate in `main`, coefficients ascending.
///
/// The coefficient list is empty for the zero polynomial; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct UniView {
    main: Var,
    coeffs: Vec<MPoly>,
}

impl UniView {
    pub fn main(&self) -> Var {
        self.main
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&MPoly> {
        self.coeffs.last()
    }

    /// `Σ coeffs[k]·main^k`.
    pub fn reassemble(&self) -> MPoly {
        self.coeffs.iter().enumerate().fold(MPoly::zero(), |acc, (k, c)| {
            &acc + &c.mul_term(Monomial::var_pow(self.main, k as u32), &Rational::one())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(p("x + y") * p("x - y"), p("x^2 - y^2"));
        let q = p("3*a1*x^2 - 1/2*y");
        assert_eq!(&q * &MPoly::one(), q);
        assert_eq!(p("a2 + 3*x") * p("a2 - 3*x"), p("a2^2 - 9*x^2"));
        assert!((p("x") * MPoly::zero()).is_zero());
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("y^3 - x^3").exact_div(&p("y - x")).unwrap(), p("x^2 + x*y + y^2"));
        let q = p("a0*x + 2");
        assert_eq!(q.exact_div(&MPoly::one()).unwrap(), q);
        assert_eq!(p("x^2 - y^2").exact_div(&p("x + y")).unwrap(), p("x - y"));
        assert_eq!(p("x^2 + 1").exact_div(&p("x + 1")), Err(Error::NotDivisible));
        assert_eq!(p("x").exact_div(&p("y")), Err(Error::NotDivisible));
        assert_eq!(p("x").exact_div(&MPoly::zero()), Err(Error::DivisionByZero));
        assert_eq!(p("4*x^2*y").exact_div(&p("2*x")).unwrap(), p("2*x*y"));
    }

    #[test]
    fn substitution() {
        let (x, y) = (MPoly::var(Var::X), MPoly::var(Var::Y));
        let shifted = [(Var::X, &x - &y)];
        assert_eq!(p("x^2").substitute(&shifted), p("x^2 - 2*x*y + y^2"));
        let both = [(Var::X, &x - &y), (Var::Y, &x + &y)];
        assert_eq!(p("x + y").substitute(&both), p("2*x"));
        // (x−y)² + (x−y)(x+y) + (x+y)² expanded by hand
        assert_eq!(p("x^2 + x*y + y^2").substitute(&both), p("3*x^2 + y^2"));
    }

    #[test]
    fn counts_and_degrees() {
        assert_eq!(terms_and_degree(&p("x^2 - y^2")), (2, 2));
        assert_eq!(terms_and_degree(&MPoly::zero()), (0, 0));
        let q = p("a0*a1^2*x + y^4 + 3");
        assert_eq!(q.degree_in(Var::A(1)), 2);
        assert_eq!(q.degree_in_vars(&[Var::A(0), Var::A(1)]), 3);
        assert_eq!(q.total_degree(), 4);
    }

    #[test]
    fn views() {
        let v = p("x^2 + a1*x + a0").univariate_view(Var::X);
        assert_eq!(v.coeffs(), &[p("a0"), p("a1"), MPoly::one()]);
        let v = p("a0").univariate_view(Var::X);
        assert_eq!(v.coeffs(), &[p("a0")]);
        assert_eq!(v.degree(), Some(0));
        let v = p("3*x^2 + y^2").univariate_view(Var::Y);
        assert_eq!(v.coeffs(), &[p("3*x^2"), MPoly::zero(), MPoly::one()]);
        assert_eq!(MPoly::zero().univariate_view(Var::X).degree(), None);
    }

    #[test]
    fn canonical_text() {
        let q = p("-27*a0 + 9*a2*a1 - 2*a2^3");
        assert_eq!(q.to_string(), "-2*a2^3 + 9*a1*a2 - 27*a0");
        assert_eq!(p("x*y - 3/2").to_string(), "x*y - 3/2");
        assert_eq!(p("-x").to_string(), "-x");
        assert_eq!(MPoly::zero().to_string(), "0");
        assert_eq!(p("x - x").to_string(), "0");
        assert_eq!(p("2*3*x*x").to_string(), "6*x^2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "x +", "x ^", "2**x", "q", "a12", "x^300", "x y"] {
            assert!(bad.parse::<MPoly>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn exponent_overflow_panics() {
        let _ = p("x^200") * p("x^100");
    }

    #[test]
    fn monomial_order_is_graded_with_later_vars_dominant() {
        let m = |s: &str| p(s).terms()[0].0;
        assert!(m("a2^3") > m("a1*a2"));
        assert!(m("a1*a2") > m("a0"));
        assert!(m("x") > m("a11"));
        assert!(m("a0^2") > m("x"));
        assert!(m("w") > m("z"));
    }

    fn arb_mpoly() -> impl Strategy<Value = MPoly> {
        let var = prop::sample::select(vec![Var::A(0), Var::A(1), Var::X, Var::Y]);
        let term = (-5i64..=5, prop::collection::vec((var, 0u32..3), 0..3));
        prop::collection::vec(term, 0..5).prop_map(|ts| {
            MPoly::from_terms(ts.into_iter().map(|(c, fs)| {
                let m = fs.into_iter().fold(Monomial::ONE, |m, (v, e)| m.mul(Monomial::var_pow(v, e)));
                (m, Rational::from(c))
            }))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_mpoly(), b in arb_mpoly(), c in arb_mpoly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn div_undoes_mul(a in arb_mpoly(), b in arb_mpoly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn substitution_is_homomorphism(a in arb_mpoly(), b in arb_mpoly(), s in arb_mpoly(), t in arb_mpoly()) {
            let bind = [(Var::X, s), (Var::Y, t)];
            prop_assert_eq!((&a * &b).substitute(&bind), &a.substitute(&bind) * &b.substitute(&bind));
        }

        #[test]
        fn view_reassembles(a in arb_mpoly()) {
            for v in [Var::X, Var::Y, Var::A(1)] {
                let view = a.univariate_view(v);
                prop_assert_eq!(view.reassemble(), a.clone());
                prop_assert!(view.coeffs().iter().all(|c| !c.involves(v)));
                prop_assert!(view.leading_coeff().map_or(true, |c| !c.is_zero()));
            }
        }

        #[test]
        fn text_roundtrip(a in arb_mpoly()) {
            prop_assert_eq!(a.to_string().parse::<MPoly>().unwrap(), a);
        }
    }
}
