//! Dense matrices over a [`Ring`], fraction-free determinants and the
//! Sylvester and Bézout resultants.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mpoly::{MPoly, UniView};
use crate::ring::Ring;

/// Elimination steps with fewer remaining rows than this stay sequential.
const PARALLEL_ROWS: usize = 6;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct RingMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> RingMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::Shape { rows: r, cols: bad.len(), expected: format!("{c} columns") });
        }
        Ok(RingMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Top-left `k×k` block.
    pub fn leading_block(&self, k: usize) -> Result<Self> {
        if k > self.rows || k > self.cols {
            return Err(Error::MinorOutOfRange { k, rows: self.rows, cols: self.cols });
        }
        let rows = (0..k).map(|i| self.row(i)[..k].to_vec()).collect();
        Self::from_rows(rows)
    }

    /// Determinant by Bareiss fraction-free elimination.
    ///
    /// Every division in the elimination is exact in an integral domain, so
    /// this works unchanged over ℚ and over polynomial rings. The pivot is the
    /// first nonzero entry at or below the diagonal.
    pub fn det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::Shape {
                rows: self.rows,
                cols: self.cols,
                expected: "a square matrix".into(),
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            let (head, tail) = a.split_at_mut(k + 1);
            let pivot_row = &head[k];
            let pivot = &pivot_row[k];
            let step = |row: &mut Vec<T>| {
                let factor = row[k].clone();
                for j in k + 1..n {
                    let mut v = pivot.mul_ref(&row[j]);
                    if !factor.is_zero() {
                        v = v.sub_ref(&factor.mul_ref(&pivot_row[j]));
                    }
                    row[j] = if prev.is_one() {
                        v
                    } else {
                        v.div_exact(&prev).expect("Bareiss step must divide exactly")
                    };
                }
                row[k] = T::zero();
            };
            if tail.len() >= PARALLEL_ROWS {
                tail.par_iter_mut().for_each(step);
            } else {
                tail.iter_mut().for_each(step);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { d.neg_ref() } else { d })
    }

    /// Determinant of the top-left `k×k` block.
    pub fn leading_principal_minor(&self, k: usize) -> Result<T> {
        self.leading_block(k)?.det()
    }
}

/// Determinant of a square matrix (see [`RingMatrix::det`]).
pub fn bareiss_det<T: Ring>(m: &RingMatrix<T>) -> Result<T> {
    m.det()
}

/// Determinant of the top-left `k×k` submatrix.
pub fn leading_principal_minor<T: Ring>(m: &RingMatrix<T>, k: usize) -> Result<T> {
    m.leading_principal_minor(k)
}

fn trimmed<T: Ring>(c: &[T]) -> &[T] {
    let len = c.iter().rposition(|v| !v.is_zero()).map_or(0, |i| i + 1);
    &c[..len]
}

/// Sylvester matrix of two polynomials given by ascending coefficients.
///
/// Trailing zero coefficients are stripped first. The first `deg q` rows
/// carry the coefficients of `p`, highest first, each shifted one column to
/// the right; the remaining `deg p` rows do the same for `q`.
pub fn sylvester_matrix<T: Ring>(p: &[T], q: &[T]) -> RingMatrix<T> {
    let (p, q) = (trimmed(p), trimmed(q));
    let dp = p.len().saturating_sub(1);
    let dq = q.len().saturating_sub(1);
    let size = dp + dq;
    let mut m = RingMatrix::zeros(size, size);
    for i in 0..dq {
        for (k, c) in p.iter().rev().enumerate() {
            m.set(i, i + k, c.clone());
        }
    }
    for i in 0..dp {
        for (k, c) in q.iter().rev().enumerate() {
            m.set(dq + i, i + k, c.clone());
        }
    }
    m
}

/// Resultant as the determinant of the Sylvester matrix.
///
/// A zero argument gives zero (the zero polynomial shares every root); two
/// nonzero constants give one.
pub fn sylvester_resultant_coeffs<T: Ring>(p: &[T], q: &[T]) -> Result<T> {
    let (p, q) = (trimmed(p), trimmed(q));
    match (p.is_empty(), q.is_empty()) {
        (true, true) => return Err(Error::BothZero),
        (true, false) | (false, true) => return Ok(T::zero()),
        _ => {}
    }
    sylvester_matrix(p, q).det()
}

/// Bézout matrix from the Cayley quotient
/// `(p(y)q(α) − q(y)p(α)) / (y − α) = Σ B[i][j]·yⁱ·αʲ`,
/// of size `max(deg p, deg q)`.
pub fn bezout_matrix<T: Ring>(p: &[T], q: &[T]) -> RingMatrix<T> {
    let (p, q) = (trimmed(p), trimmed(q));
    let m = p.len().max(q.len()).saturating_sub(1);
    let coeff = |c: &[T], k: usize| c.get(k).cloned().unwrap_or_else(T::zero);
    let mut b: RingMatrix<T> = RingMatrix::zeros(m, m);
    // y^a α^b − y^b α^a = −(y − α)·Σ_{k<b−a} y^{a+k} α^{b−1−k} for a < b.
    for lo in 0..=m {
        for hi in lo + 1..=m {
            let d = coeff(p, lo).mul_ref(&coeff(q, hi)).sub_ref(&coeff(p, hi).mul_ref(&coeff(q, lo)));
            if d.is_zero() {
                continue;
            }
            for k in 0..hi - lo {
                let (i, j) = (lo + k, hi - 1 - k);
                let v = b.get(i, j).sub_ref(&d);
                b.set(i, j, v);
            }
        }
    }
    b
}

/// Resultant through the Bézout matrix, normalized to agree exactly with
/// [`sylvester_resultant_coeffs`].
///
/// For `deg p = m ≥ deg q`, `det B = (−1)^{m(m−1)/2} · lc(p)^{m − deg q} · res(p, q)`.
pub fn bezout_resultant_coeffs<T: Ring>(p: &[T], q: &[T]) -> Result<T> {
    let (p, q) = (trimmed(p), trimmed(q));
    match (p.is_empty(), q.is_empty()) {
        (true, true) => return Err(Error::BothZero),
        (true, false) | (false, true) => return Ok(T::zero()),
        _ => {}
    }
    let (dp, dq) = (p.len() - 1, q.len() - 1);
    if dp < dq {
        let r = bezout_resultant_coeffs(q, p)?;
        return Ok(if dp * dq % 2 == 1 { r.neg_ref() } else { r });
    }
    let mut det = bezout_matrix(p, q).det()?;
    if (dp * dp.saturating_sub(1) / 2) % 2 == 1 {
        det = det.neg_ref();
    }
    let lc = &p[dp];
    for _ in 0..dp - dq {
        det = det.div_exact(lc).ok_or(Error::NotDivisible)?;
    }
    Ok(det)
}

fn check_views(p: &UniView, q: &UniView) -> Result<()> {
    if p.main() != q.main() {
        return Err(Error::VariableMismatch(p.main().to_string(), q.main().to_string()));
    }
    Ok(())
}

/// `res(p, q, v)` for polynomials viewed in the same variable `v`.
pub fn sylvester_resultant(p: &UniView, q: &UniView) -> Result<MPoly> {
    check_views(p, q)?;
    sylvester_resultant_coeffs(p.coeffs(), q.coeffs())
}

/// Same value as [`sylvester_resultant`], computed from the Bézout matrix.
pub fn bezout_resultant(p: &UniView, q: &UniView) -> Result<MPoly> {
    check_views(p, q)?;
    bezout_resultant_coeffs(p.coeffs(), q.coeffs())
}
