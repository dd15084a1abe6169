//! The polynomial `f = xⁿ + a_{n−1}xⁿ⁻¹ + … + a₀` and every construction
//! derived from it: the normalized derivative ladder, the divided differences
//! `f₁, f₂, f₃`, the even/odd generating polynomials `g₁*, g₃*`, the shifted
//! derivative matrix `M` and its minor `H`.
//!
//! All constructions work in two modes. In symbolic mode the coefficients are
//! the generic symbols `a0…a(n−1)`; in numeric mode they are rational
//! constants and every result only involves `x`, `y`, `z`.

mod discriminant;
mod roots;

pub use discriminant::*;
pub use roots::*;

use crate::error::{Error, Result};
use crate::linalg::RingMatrix;
use crate::mpoly::{MPoly, Monomial, Var};
use crate::ring::Rational;

/// A monic polynomial given by its lower coefficients `a₀…a_{n−1}`.
#[derive(Clone, PartialEq, Debug)]
pub struct MonicPoly {
    coeffs: Vec<MPoly>,
}

impl MonicPoly {
    /// `xⁿ + a_{n−1}xⁿ⁻¹ + … + a₀` with symbolic coefficients.
    pub fn generic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DegreeTooSmall { got: 0, need: 1 });
        }
        let coeffs = (0..n).map(|i| Var::a(i).map(MPoly::var)).collect::<Result<_>>()?;
        Ok(MonicPoly { coeffs })
    }

    /// Monic polynomial with the given rational `a₀…a_{n−1}`.
    pub fn from_rationals(lower: &[Rational]) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::DegreeTooSmall { got: 0, need: 1 });
        }
        Ok(MonicPoly { coeffs: lower.iter().cloned().map(MPoly::constant).collect() })
    }

    /// Normalizes a full ascending coefficient list (leading coefficient
    /// last) by dividing through by the leading coefficient. The divisor is
    /// returned when it was not already 1.
    pub fn normalize(full: &[Rational]) -> Result<(Self, Option<Rational>)> {
        let Some((lead, lower)) = full.split_last() else {
            return Err(Error::BadInput("empty coefficient list".into()));
        };
        if lead.is_zero() {
            return Err(Error::BadInput("leading coefficient is zero".into()));
        }
        let inv = lead.recip().expect("nonzero");
        let scaled: Vec<Rational> = lower.iter().map(|c| c * &inv).collect();
        let f = Self::from_rationals(&scaled)?;
        Ok((f, (!lead.is_one()).then(|| lead.clone())))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a₀…a_{n−1}`.
    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    /// The coefficients as rationals, in numeric mode.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.constant_value()).collect()
    }

    pub fn is_numeric(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_constant)
    }

    /// `f(arg)` by Horner's rule.
    pub fn compose(&self, arg: &MPoly) -> MPoly {
        self.coeffs.iter().rev().fold(MPoly::one(), |acc, c| &(&acc * arg) + c)
    }

    /// `f(v)`.
    pub fn in_var(&self, v: Var) -> MPoly {
        let n = self.degree() as u32;
        let lead = MPoly::monomial(Monomial::var_pow(v, n), Rational::one());
        self.coeffs.iter().enumerate().fold(lead, |acc, (i, c)| {
            &acc + &c.mul_term(Monomial::var_pow(v, i as u32), &Rational::one())
        })
    }

    /// `f(r)` for numeric `f`.
    pub fn eval(&self, r: &Rational) -> Option<Rational> {
        let coeffs = self.rational_coeffs()?;
        Some(coeffs.iter().rev().fold(Rational::one(), |acc, c| &(&acc * r) + c))
    }
}

fn require_degree(f: &MonicPoly, need: usize) -> Result<()> {
    if f.degree() < need {
        Err(Error::DegreeTooSmall { got: f.degree(), need })
    } else {
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut c = Rational::one();
    for i in 0..k {
        c = &(&c * &Rational::from((n - i) as i64)) / &Rational::from((i + 1) as i64);
    }
    c
}

/// `[f⁽¹⁾/1!, f⁽²⁾/2!, …, f⁽ⁿ⁾/n!]` as polynomials in `x`.
///
/// `f⁽ᵏ⁾/k! = Σ_{j≥k} C(j,k)·a_j·x^{j−k}` with `a_n = 1`; the last entry is
/// always 1.
pub fn derivative_ladder(f: &MonicPoly) -> Vec<MPoly> {
    let n = f.degree();
    (1..=n)
        .map(|k| {
            let lead = MPoly::monomial(Monomial::var_pow(Var::X, (n - k) as u32), binomial(n, k));
            (k..n).fold(lead, |acc, j| {
                let shift = Monomial::var_pow(Var::X, (j - k) as u32);
                &acc + &f.coeffs[j].mul_term(shift, &binomial(j, k))
            })
        })
        .collect()
}

/// `f⁽ᵏ⁾/k!` from a ladder, zero outside `1..=n`.
fn ladder_entry(ladder: &[MPoly], order: i64) -> MPoly {
    if order >= 1 && (order as usize) <= ladder.len() {
        ladder[order as usize - 1].clone()
    } else {
        MPoly::zero()
    }
}

fn half() -> Rational {
    Rational::new(1, 2).expect("nonzero denominator")
}

fn x_y() -> (MPoly, MPoly) {
    (MPoly::var(Var::X), MPoly::var(Var::Y))
}

/// `f₁(x, y) = (f(y) − f(x)) / (y − x)`.
pub fn build_f1(f: &MonicPoly) -> Result<MPoly> {
    let (x, y) = x_y();
    (f.in_var(Var::Y) - f.in_var(Var::X)).exact_div(&(&y - &x))
}

/// `f₂(x, y) = (f((x+y)/2) − f(x)) / ((y − x)/2)`.
pub fn build_f2(f: &MonicPoly) -> Result<MPoly> {
    let (x, y) = x_y();
    let mid = f.compose(&(&x + &y).scale(&half()));
    (mid - f.in_var(Var::X)).exact_div(&(&y - &x).scale(&half()))
}

/// `f₃(x, y) = (f(y) − 2f((x+y)/2) + f(x)) / ((y − x)²/2)`.
pub fn build_f3(f: &MonicPoly) -> Result<MPoly> {
    require_degree(f, 2)?;
    let (x, y) = x_y();
    let mid = f.compose(&(&x + &y).scale(&half()));
    let num = f.in_var(Var::Y) - mid.scale(&Rational::from(2)) + f.in_var(Var::X);
    let d = &y - &x;
    num.exact_div(&(&d * &d).scale(&half()))
}

/// `Σ_k ladder[order(k)]·zᵏ` for the given derivative orders.
fn z_series(ladder: &[MPoly], orders: impl Iterator<Item = usize>) -> MPoly {
    orders.enumerate().fold(MPoly::zero(), |acc, (k, order)| {
        &acc + &ladder_entry(ladder, order as i64).mul_term(Monomial::var_pow(Var::Z, k as u32), &Rational::one())
    })
}

/// `g₁* = Σ_k f⁽²ᵏ⁺¹⁾/(2k+1)!·zᵏ`, the odd-derivative series.
pub fn build_g1_star(f: &MonicPoly) -> Result<MPoly> {
    require_degree(f, 3)?;
    let n = f.degree();
    Ok(z_series(&derivative_ladder(f), (0..=(n - 1) / 2).map(|k| 2 * k + 1)))
}

/// `g₃* = Σ_k f⁽²ᵏ⁺²⁾/(2k+2)!·zᵏ`, the even-derivative series.
pub fn build_g3_star(f: &MonicPoly) -> Result<MPoly> {
    require_degree(f, 3)?;
    let n = f.degree();
    Ok(z_series(&derivative_ladder(f), (0..n / 2).map(|k| 2 * k + 2)))
}

fn diagonal_shift(p: &MPoly) -> MPoly {
    let (x, y) = x_y();
    p.substitute(&[(Var::X, &x - &y), (Var::Y, &x + &y)])
}

/// `g₁(x, y) = f₁(x − y, x + y)`.
pub fn build_g1(f: &MonicPoly) -> Result<MPoly> {
    Ok(diagonal_shift(&build_f1(f)?))
}

/// `g₃(x, y) = f₃(x − y, x + y)`.
pub fn build_g3(f: &MonicPoly) -> Result<MPoly> {
    Ok(diagonal_shift(&build_f3(f)?))
}

/// The `n×n` window of the shifted derivative matrix.
///
/// Row pair `p` (rows `2p` and `2p+1`, zero-based) carries
/// `f⁽²⁽ᶜ⁻ᵖ⁾⁾/(2(c−p))!` and `f⁽²⁽ᶜ⁻ᵖ⁾⁻¹⁾/(2(c−p)−1)!` in one-based column `c`.
pub fn build_m(f: &MonicPoly) -> Result<RingMatrix<MPoly>> {
    require_degree(f, 3)?;
    let ladder = derivative_ladder(f);
    let n = f.degree();
    let rows = (0..n)
        .map(|r| {
            let pair = (r / 2) as i64;
            (1..=n as i64)
                .map(|c| {
                    let order = 2 * (c - pair) - (r % 2) as i64;
                    ladder_entry(&ladder, order)
                })
                .collect()
        })
        .collect();
    RingMatrix::from_rows(rows)
}

/// `H`, the leading principal minor of order `n − 2` of [`build_m`].
pub fn build_h(f: &MonicPoly) -> Result<MPoly> {
    build_m(f)?.leading_principal_minor(f.degree() - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    fn numeric(c: &[i64]) -> MonicPoly {
        MonicPoly::from_rationals(&c.iter().map(|&v| Rational::from(v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn ladder() {
        assert_eq!(derivative_ladder(&numeric(&[0, 0, 0])), vec![p("3*x^2"), p("3*x"), p("1")]);
        let g = MonicPoly::generic(3).unwrap();
        let l = derivative_ladder(&g);
        assert_eq!(l[0], p("3*x^2 + 2*a2*x + a1"));
        assert_eq!(l[1], p("3*x + a2"));
        for n in 1..8 {
            assert_eq!(derivative_ladder(&MonicPoly::generic(n).unwrap()).last().unwrap(), &MPoly::one());
        }
    }

    #[test]
    fn divided_differences() {
        let cube = numeric(&[0, 0, 0]);
        assert_eq!(build_f1(&cube).unwrap(), p("x^2 + x*y + y^2"));
        assert_eq!(build_f2(&numeric(&[0, 0])).unwrap(), p("3/2*x + 1/2*y"));
        assert_eq!(build_f3(&cube).unwrap(), p("3/2*x + 3/2*y"));
        assert!(build_f3(&numeric(&[5])).is_err());
    }

    /// `f₃ = Σ_{k≤n−2} (2 − 2⁻ᵏ)·f⁽ᵏ⁺²⁾(x)/(k+2)!·(y − x)ᵏ`.
    #[test]
    fn f3_matches_taylor_form() {
        for n in 2..=6 {
            let f = MonicPoly::generic(n).unwrap();
            let ladder = derivative_ladder(&f);
            let (x, y) = x_y();
            let d = &y - &x;
            let taylor = (0..=n - 2).fold(MPoly::zero(), |acc, k| {
                let w = &Rational::from(2) - &Rational::new(1, 1i64 << k).unwrap();
                &acc + &(&ladder[k + 1] * &d.pow(k as u32)).scale(&w)
            });
            assert_eq!(build_f3(&f).unwrap(), taylor, "n = {n}");
        }
    }

    #[test]
    fn g_star_series() {
        let cube = numeric(&[0, 0, 0]);
        assert_eq!(build_g1_star(&cube).unwrap(), p("3*x^2 + z"));
        assert_eq!(build_g3_star(&cube).unwrap(), p("3*x"));
        let g1 = build_g1_star(&cube).unwrap().substitute(&[(Var::Z, p("y^2"))]);
        assert_eq!(g1, p("3*x^2 + y^2"));
        for n in 3..=7 {
            let f = MonicPoly::generic(n).unwrap();
            assert_eq!(build_g3_star(&f).unwrap().degree_in(Var::Z) as usize, n / 2 - 1);
            assert_eq!(build_g1_star(&f).unwrap().degree_in(Var::Z) as usize, (n - 1) / 2);
        }
    }

    #[test]
    fn g_star_is_g_with_z_for_y_squared() {
        for n in 3..=6 {
            let f = MonicPoly::generic(n).unwrap();
            let y2 = [(Var::Z, p("y^2"))];
            assert_eq!(build_g1_star(&f).unwrap().substitute(&y2), build_g1(&f).unwrap());
            assert_eq!(build_g3_star(&f).unwrap().substitute(&y2), build_g3(&f).unwrap());
        }
    }

    #[test]
    fn h_small_cases() {
        let g3 = MonicPoly::generic(3).unwrap();
        assert_eq!(build_h(&g3).unwrap(), p("3*x + a2"));
        assert_eq!(build_h(&numeric(&[0, 0, 0, 0])).unwrap(), p("20*x^3"));
        assert!(matches!(build_h(&numeric(&[1, 1])), Err(Error::DegreeTooSmall { .. })));
        let m = build_m(&MonicPoly::generic(4).unwrap()).unwrap();
        assert_eq!(m.get(0, 1), &MPoly::one());
        assert_eq!(m.get(1, 1), &p("4*x + a3"));
        assert!(m.get(2, 0).is_zero());
        assert_eq!(m.get(3, 1), &derivative_ladder(&MonicPoly::generic(4).unwrap())[0]);
    }

    #[test]
    fn normalization() {
        let full: Vec<Rational> = [0, 0, 0, 2].iter().map(|&v| Rational::from(v)).collect();
        let (f, lead) = MonicPoly::normalize(&full).unwrap();
        assert_eq!(f, numeric(&[0, 0, 0]));
        assert_eq!(lead, Some(Rational::from(2)));
        assert!(MonicPoly::normalize(&[Rational::from(1), Rational::zero()]).is_err());
        assert!(MonicPoly::normalize(&[]).is_err());
        assert!(matches!(MonicPoly::normalize(&[Rational::from(3)]), Err(Error::DegreeTooSmall { .. })));
    }

    #[test]
    fn compose_and_eval() {
        let f = numeric(&[-2, 5, -4]);
        assert_eq!(f.in_var(Var::X), f.compose(&MPoly::var(Var::X)));
        assert_eq!(f.eval(&Rational::from(2)), Some(Rational::zero()));
        assert_eq!(MonicPoly::generic(2).unwrap().eval(&Rational::one()), None);
    }
}
