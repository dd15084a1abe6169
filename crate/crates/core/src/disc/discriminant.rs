use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::*;
use crate::linalg::sylvester_resultant;

/// `res(p, q, v)` by the Sylvester determinant.
fn res(p: &MPoly, q: &MPoly, v: Var) -> Result<MPoly> {
    sylvester_resultant(&p.univariate_view(v), &q.univariate_view(v))
}

/// Coefficients `[c₀…c_{n−1}]` of `g mod f` in `x`.
fn reduce_coeffs(g: &MPoly, f: &MonicPoly) -> Vec<MPoly> {
    let n = f.degree();
    let mut c = g.univariate_view(Var::X).coeffs().to_vec();
    if c.len() < n {
        c.resize(n, MPoly::zero());
    }
    for d in (n..c.len()).rev() {
        let top = std::mem::replace(&mut c[d], MPoly::zero());
        if top.is_zero() {
            continue;
        }
        for (i, a) in f.coeffs().iter().enumerate() {
            c[d - n + i] = &c[d - n + i] - &(&top * a);
        }
    }
    c.truncate(n);
    c
}

/// `res(f, g, x)` for monic `f` as the determinant of multiplication by `g`
/// on `ℚ[a][x]/(f)`: its eigenvalues are `g(rᵢ)`, so the determinant is
/// `Π g(rᵢ)`. Row `i` holds the coefficients of `xⁱ·g mod f`.
pub fn res_monic_mult(f: &MonicPoly, g: &MPoly) -> Result<MPoly> {
    let n = f.degree();
    let mut row = reduce_coeffs(g, f);
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let next = {
            // x·row mod f: shift up, fold the overflow back through f.
            let top = row[n - 1].clone();
            let mut next = Vec::with_capacity(n);
            for i in 0..n {
                let lower = if i == 0 { MPoly::zero() } else { row[i - 1].clone() };
                next.push(&lower - &(&top * &f.coeffs()[i]));
            }
            next
        };
        rows.push(std::mem::replace(&mut row, next));
    }
    RingMatrix::from_rows(rows)?.det()
}

/// `g mod f` in the variable `x`.
///
/// For monic `f`, `res(f, g, x) = res(f, g mod f, x)`: both equal the product
/// of `g` over the roots of `f`. Reducing first shrinks the Sylvester matrix
/// from `n + deg g` to at most `2n − 1` rows.
pub fn reduce_mod(g: &MPoly, f: &MonicPoly) -> MPoly {
    let n = f.degree();
    let mut c = g.univariate_view(Var::X).coeffs().to_vec();
    for d in (n..c.len()).rev() {
        let top = std::mem::replace(&mut c[d], MPoly::zero());
        if top.is_zero() {
            continue;
        }
        for (i, a) in f.coeffs().iter().enumerate() {
            c[d - n + i] = &c[d - n + i] - &(&top * a);
        }
    }
    c.truncate(n.min(c.len()));
    c.iter().enumerate().fold(MPoly::zero(), |acc, (k, ck)| {
        &acc + &ck.mul_term(Monomial::var_pow(Var::X, k as u32), &Rational::one())
    })
}

/// `res(f, g, x)` for the monic `f`, via [`reduce_mod`].
pub fn res_monic(f: &MonicPoly, g: &MPoly) -> Result<MPoly> {
    res(&f.in_var(Var::X), &reduce_mod(g, f), Var::X)
}

/// `D₁ = (−1)^{n(n−1)/2}·res(f, f′, x)`, the classical discriminant.
pub fn d1(f: &MonicPoly) -> Result<MPoly> {
    let n = f.degree();
    let fx = f.in_var(Var::X);
    let r = res(&fx, &fx.derivative(Var::X), Var::X)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

/// `D₂ = res(f, H, x)`.
pub fn d2_via_h(f: &MonicPoly) -> Result<MPoly> {
    res_monic(f, &build_h(f)?)
}

/// `D₂` by the full `(n + deg H)`-row Sylvester determinant, without
/// reducing `H` modulo `f` first. Slower; kept as a cross-check.
pub fn d2_via_h_full(f: &MonicPoly) -> Result<MPoly> {
    res(&f.in_var(Var::X), &build_h(f)?, Var::X)
}

/// `F = res(f₁, f₃, y)`.
pub fn big_f(f: &MonicPoly) -> Result<MPoly> {
    require_degree(f, 3)?;
    res(&build_f1(f)?, &build_f3(f)?, Var::Y)
}

/// `E = res(f, F, x)`.
pub fn big_e(f: &MonicPoly) -> Result<MPoly> {
    res_monic(f, &big_f(f)?)
}

/// `E` from an already computed `F`.
pub fn big_e_from_f(f: &MonicPoly, big_f: &MPoly) -> Result<MPoly> {
    res_monic(f, big_f)
}

/// `G = res(g₁*, g₃*, z)²`.
pub fn big_g(f: &MonicPoly) -> Result<MPoly> {
    let r = res(&build_g1_star(f)?, &build_g3_star(f)?, Var::Z)?;
    Ok(&r * &r)
}

/// `G = res(g₁, g₃, y)`, directly in `y` without the `z = y²` reduction.
pub fn big_g_via_y(f: &MonicPoly) -> Result<MPoly> {
    res(&build_g1(f)?, &build_g3(f)?, Var::Y)
}

/// `res(f, res(f₁, f₂, y), x)`.
pub fn f1f2_resultant(f: &MonicPoly) -> Result<MPoly> {
    require_degree(f, 3)?;
    res_monic(f, &res(&build_f1(f)?, &build_f2(f)?, Var::Y)?)
}

/// Whether `D₁·D₂ = 0`, decided by the vanishing of [`f1f2_resultant`].
pub fn d1d2_zero_test(f: &MonicPoly) -> Result<bool> {
    if !f.is_numeric() {
        return Err(Error::NotNumeric);
    }
    Ok(f1f2_resultant(f)?.is_zero())
}

/// The constant `c` in `E = c·D₂²` for degree `n`, measured once on the
/// witness with roots `2ⁱ − 1` and cached.
///
/// Those roots are distinct and contain no symmetric triple
/// (`2^{k+1} = 2ⁱ + 2ʲ` forces `i = j`), so `D₂ ≠ 0`.
pub fn e_constant(n: usize) -> Result<Rational> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Rational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("cache poisoned").get(&n) {
        return Ok(c.clone());
    }
    if n < 3 {
        return Err(Error::DegreeTooSmall { got: n, need: 3 });
    }
    let roots: Vec<Rational> = (0..n).map(|i| Rational::from((1i64 << i) - 1)).collect();
    let f = from_roots(&roots);
    let e = big_e(&f)?.constant_value().ok_or(Error::NotNumeric)?;
    let d2 = d2_from_roots(&roots);
    let c = &e / &(&d2 * &d2);
    cache.lock().expect("cache poisoned").insert(n, c.clone());
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::mpoly::terms_and_degree;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    fn numeric(c: &[i64]) -> MonicPoly {
        MonicPoly::from_rationals(&c.iter().map(|&v| q(v)).collect::<Vec<_>>()).unwrap()
    }

    fn value(p: MPoly) -> Rational {
        p.constant_value().expect("numeric")
    }

    #[test]
    fn d1_examples() {
        assert_eq!(value(d1(&numeric(&[0, -1, 0])).unwrap()), q(4));
        assert_eq!(value(d1(&numeric(&[0, 0, 0])).unwrap()), q(0));
        assert_eq!(value(d1(&numeric(&[-2, 5, -4])).unwrap()), q(0));
        assert_eq!(value(d1(&numeric(&[0, 3, -4])).unwrap()), q(36));
        assert_eq!(d1(&MonicPoly::generic(2).unwrap()).unwrap(), p("a1^2 - 4*a0"));
        assert_eq!(
            d1(&MonicPoly::generic(3).unwrap()).unwrap(),
            p("a1^2*a2^2 - 4*a1^3 - 4*a0*a2^3 + 18*a0*a1*a2 - 27*a0^2")
        );
    }

    #[test]
    fn d2_cubic() {
        let g = MonicPoly::generic(3).unwrap();
        assert_eq!(d2_via_h(&g).unwrap(), p("-2*a2^3 + 9*a1*a2 - 27*a0"));
        assert_eq!(d2_via_h_full(&g).unwrap(), p("-2*a2^3 + 9*a1*a2 - 27*a0"));
        assert_eq!(value(d2_via_h(&numeric(&[0, 3, -4])).unwrap()), q(20));
        assert_eq!(value(d2_via_h(&numeric(&[0, -1, 0])).unwrap()), q(0));
        assert!(matches!(d2_via_h(&numeric(&[1, 1])), Err(Error::DegreeTooSmall { .. })));
    }

    #[test]
    fn reduced_and_full_routes_agree() {
        let g = MonicPoly::generic(4).unwrap();
        assert_eq!(d2_via_h(&g).unwrap(), d2_via_h_full(&g).unwrap());
    }

    #[test]
    fn reduction_is_remainder() {
        let f = MonicPoly::generic(2).unwrap();
        let g = p("x^3");
        let r = reduce_mod(&g, &f);
        assert!(r.degree_in(Var::X) < 2);
        let quot = (&g - &r).exact_div(&f.in_var(Var::X)).unwrap();
        assert_eq!(quot, p("x - a1"));
    }

    #[test]
    fn quartic_degrees() {
        let g = MonicPoly::generic(4).unwrap();
        let d2 = d2_via_h(&g).unwrap();
        assert_eq!(terms_and_degree(&d2), (29, 9));
        assert_eq!(big_f(&g).unwrap().degree_in(Var::X), 6);
    }

    #[test]
    fn g_is_h_squared() {
        for n in 3..=4 {
            let f = MonicPoly::generic(n).unwrap();
            let h = build_h(&f).unwrap();
            assert_eq!(big_g(&f).unwrap(), &h * &h, "n = {n}");
        }
        assert_eq!(big_g(&numeric(&[0, 0, 0])).unwrap(), p("9*x^2"));
        let f = numeric(&[3, -1, 4, 1, -5]);
        assert_eq!(big_g_via_y(&f).unwrap(), big_g(&f).unwrap());
    }

    #[test]
    fn e_is_multiple_of_d2_squared() {
        let f = MonicPoly::generic(3).unwrap();
        let d2 = d2_via_h(&f).unwrap();
        let c = big_e(&f).unwrap().exact_div(&(&d2 * &d2)).unwrap();
        assert_eq!(c.constant_value(), Some(e_constant(3).unwrap()));
        assert!(value(big_e(&numeric(&[0, 0, 0])).unwrap()).is_zero());
    }

    #[test]
    fn zero_test() {
        assert!(d1d2_zero_test(&numeric(&[0, 0, 0])).unwrap());
        assert!(d1d2_zero_test(&numeric(&[0, -1, 0])).unwrap());
        assert!(!d1d2_zero_test(&numeric(&[0, 3, -4])).unwrap());
        assert_eq!(d1d2_zero_test(&MonicPoly::generic(3).unwrap()), Err(Error::NotNumeric));
    }
}
