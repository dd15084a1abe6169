use num_complex::Complex64;

use super::*;

/// `[s₀, s₁, …, s_n]`, the elementary symmetric polynomials of `roots`.
pub fn elementary_symmetric(roots: &[Rational]) -> Vec<Rational> {
    let mut s = vec![Rational::one()];
    for r in roots {
        s.push(Rational::zero());
        for i in (1..s.len()).rev() {
            let add = &s[i - 1] * r;
            s[i] += &add;
        }
    }
    s
}

/// `Π (x − rᵢ)`, so `a_{n−i} = (−1)ⁱ·sᵢ`.
///
/// # Panics
/// If `roots` is empty.
pub fn from_roots(roots: &[Rational]) -> MonicPoly {
    let s = elementary_symmetric(roots);
    let n = roots.len();
    let lower: Vec<Rational> = (0..n)
        .map(|j| {
            let i = n - j;
            if i % 2 == 0 { s[i].clone() } else { -&s[i] }
        })
        .collect();
    MonicPoly::from_rationals(&lower).expect("at least one root")
}

/// `Π_{i<j} (rᵢ − rⱼ)²`.
pub fn d1_from_roots(roots: &[Rational]) -> Rational {
    let mut prod = Rational::one();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = &roots[i] - &roots[j];
            prod *= &(&d * &d);
        }
    }
    prod
}

/// `Π_{i<j, k∉{i,j}} (2r_k − rᵢ − rⱼ)`.
pub fn d2_from_roots(roots: &[Rational]) -> Rational {
    let two = Rational::from(2);
    let mut prod = Rational::one();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let s = &roots[i] + &roots[j];
            for (k, rk) in roots.iter().enumerate() {
                if k != i && k != j {
                    prod *= &(&(&two * rk) - &s);
                }
            }
        }
    }
    prod
}

/// Whether some root is the average of two others (at distinct indices).
pub fn has_symmetric_triple(roots: &[Rational]) -> bool {
    let two = Rational::from(2);
    (0..roots.len()).any(|i| {
        (i + 1..roots.len()).any(|j| {
            let s = &roots[i] + &roots[j];
            roots.iter().enumerate().any(|(k, rk)| k != i && k != j && &two * rk == s)
        })
    })
}

pub fn has_repeated_root(roots: &[Rational]) -> bool {
    roots.iter().enumerate().any(|(i, r)| roots[i + 1..].contains(r))
}

/// `f(z)` in double precision.
pub fn eval_complex(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(1.0, 0.0), |acc, &c| acc * z + c)
}

/// `1 + max|aⱼ|`, the scale for residual tolerances.
pub fn residual_scale(coeffs: &[f64]) -> f64 {
    1.0 + coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()))
}

/// Default relative tolerance of [`durand_kerner`].
pub const DK_TOL: f64 = 1e-12;
/// Default sweep limit of [`durand_kerner`].
pub const DK_MAX_ITER: usize = 500;

/// All complex roots of a numeric monic polynomial by Durand–Kerner
/// (Weierstrass) iteration, updating in place.
///
/// Starts from `(0.4 + 0.9i)^k`. Once every residual satisfies
/// `|f(rᵢ)| ≤ tol·(1 + max|aⱼ|)` the sweeps continue only while the largest
/// correction still shrinks, which tightens the clusters that multiple roots
/// converge to (slowly) without chasing rounding noise.
pub fn durand_kerner(f: &MonicPoly, tol: f64, max_iter: usize) -> Result<Vec<Complex64>> {
    let coeffs: Vec<f64> =
        f.rational_coeffs().ok_or(Error::NotNumeric)?.iter().map(Rational::to_f64).collect();
    let n = coeffs.len();
    let bound = tol * residual_scale(&coeffs);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    let converged = |z: &[Complex64]| z.iter().all(|&r| eval_complex(&coeffs, r).norm() <= bound);
    let mut prev_step = f64::INFINITY;
    for _ in 0..max_iter {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = if denom.norm() == 0.0 {
                // Coincident approximations: nudge apart instead of dividing by zero.
                Complex64::new(-1e-8, -1e-8) * (1.0 + z[i].norm())
            } else {
                eval_complex(&coeffs, z[i]) / denom
            };
            z[i] -= step;
            max_step = max_step.max(step.norm());
        }
        let zscale = 1.0 + z.iter().fold(0.0f64, |m, r| m.max(r.norm()));
        if converged(&z) && (max_step <= tol * zscale || max_step >= prev_step) {
            return Ok(z);
        }
        prev_step = max_step;
    }
    if converged(&z) { Ok(z) } else { Err(Error::NoConvergence(max_iter)) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn assert_roots(found: &[Complex64], expected: &[Complex64], tol: f64) {
        let mut left: Vec<Complex64> = found.to_vec();
        for e in expected {
            let (pos, d) = left
                .iter()
                .enumerate()
                .map(|(i, z)| (i, (z - e).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            assert!(d <= tol, "{e} missing from {found:?}");
            left.remove(pos);
        }
    }

    #[test]
    fn vieta() {
        assert_eq!(from_roots(&qs(&[0, 1, 3])), MonicPoly::from_rationals(&qs(&[0, 3, -4])).unwrap());
        assert_eq!(from_roots(&qs(&[0, 0, 0])), MonicPoly::from_rationals(&qs(&[0, 0, 0])).unwrap());
        assert_eq!(from_roots(&qs(&[1, -1, 0])), MonicPoly::from_rationals(&qs(&[0, -1, 0])).unwrap());
        assert_eq!(elementary_symmetric(&qs(&[1, 2, 3])), qs(&[1, 6, 11, 6]));
    }

    #[test]
    fn root_products() {
        assert_eq!(d2_from_roots(&qs(&[0, 1, 3])), Rational::from(20));
        assert_eq!(d2_from_roots(&qs(&[1, 0, -1])), Rational::zero());
        assert_eq!(d2_from_roots(&qs(&[5, 5, 5])), Rational::zero());
        assert_eq!(d2_from_roots(&qs(&[1, 1, 3])), Rational::from(16));
        assert_eq!(d1_from_roots(&qs(&[0, 1, 3])), Rational::from(36));
        assert_eq!(d1_from_roots(&qs(&[1, 0, -1])), Rational::from(4));
        assert!(has_symmetric_triple(&qs(&[4, 1, 7, 20])));
        assert!(!has_symmetric_triple(&qs(&[0, 1, 3, 7])));
        assert!(has_repeated_root(&qs(&[2, 5, 2])));
        assert!(!has_repeated_root(&qs(&[2, 5, 3])));
    }

    #[test]
    fn dk_simple_roots() {
        let f = MonicPoly::from_rationals(&qs(&[0, -1, 0])).unwrap();
        let r = durand_kerner(&f, DK_TOL, DK_MAX_ITER).unwrap();
        let c = |re, im| Complex64::new(re, im);
        assert_roots(&r, &[c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 1e-10);
        let f = MonicPoly::from_rationals(&qs(&[1, 0, 0])).unwrap();
        let r = durand_kerner(&f, DK_TOL, DK_MAX_ITER).unwrap();
        let h = 3f64.sqrt() / 2.0;
        assert_roots(&r, &[c(-1.0, 0.0), c(0.5, h), c(0.5, -h)], 1e-10);
    }

    #[test]
    fn dk_double_root_cluster() {
        let f = from_roots(&qs(&[2, 2, -1]));
        let r = durand_kerner(&f, DK_TOL, DK_MAX_ITER).unwrap();
        let mut near: Vec<_> = r.iter().filter(|z| (*z - 2.0).norm() < 1e-3).collect();
        assert_eq!(near.len(), 2);
        near.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((near[0] - near[1]).norm() <= 1e-6);
    }

    #[test]
    fn dk_rejects_symbolic_and_reports_failure() {
        let g = MonicPoly::generic(3).unwrap();
        assert_eq!(durand_kerner(&g, DK_TOL, 10), Err(Error::NotNumeric));
        let f = MonicPoly::from_rationals(&qs(&[-7, 3, 11, -2, 5])).unwrap();
        assert_eq!(durand_kerner(&f, DK_TOL, 1), Err(Error::NoConvergence(1)));
    }
}
