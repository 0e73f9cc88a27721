//! The Gram matrix of fundamental weights and the direct Casimir eigenvalue.
//!
//! In the minimal normalization (long roots of squared length 2) the scalar
//! products of the su(n) fundamental weights are
//!
//! ```text
//! F[i][j] = (w_i, w_j) = min(i, j) - i*j/n = min(i, j) * (n - max(i, j)) / n
//! ```
//!
//! and each row sums to `(w_i, rho) = i * (n - i) / 2`, where `rho` is the
//! Weyl vector, the sum of all fundamental weights. The Casimir eigenvalue of
//! a highest-weight representation is then
//!
//! ```text
//! C = (lambda, lambda) + 2 * (lambda, rho)
//! ```
//!
//! computed here exactly, term by term, from the closed-form entries. The
//! matrix is never materialized: the double sum runs over nonzero labels
//! only, so dense label vectors and sparse stable realizations both stay
//! cheap.

use crate::error::Error;
use crate::rational::Rational;
use crate::young::DynkinLabels;

/// Scalar product of fundamental weights `(w_i, w_j)` for su(n), exactly.
///
/// Indices are 1-based and must lie in `1..=n-1`.
pub fn gram_entry(i: usize, j: usize, n: usize) -> Result<Rational, Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    check_index(i, n)?;
    check_index(j, n)?;
    Ok(entry_unchecked(i, j, n))
}

/// Row sum of the Gram matrix: `(w_i, rho) = i * (n - i) / 2`, exactly.
pub fn weyl_row_sum(i: usize, n: usize) -> Result<Rational, Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    check_index(i, n)?;
    Ok(row_sum_unchecked(i, n))
}

/// Casimir eigenvalue `(lambda, lambda) + 2 * (lambda, rho)` of the
/// representation with the given Dynkin labels, exactly.
pub fn casimir_direct(labels: &DynkinLabels) -> Rational {
    let n = labels.n();
    let nonzero: Vec<(usize, i64)> = labels
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, &l)| l != 0)
        .map(|(i, &l)| (i + 1, i64::from(l)))
        .collect();
    let mut sum = Rational::zero();
    for &(i, li) in &nonzero {
        for &(j, lj) in &nonzero {
            sum = sum + Rational::from_integer(li * lj) * entry_unchecked(i, j, n);
        }
        sum = sum + Rational::from_integer(2 * li) * row_sum_unchecked(i, n);
    }
    sum
}

fn check_index(i: usize, n: usize) -> Result<(), Error> {
    if i == 0 || i > n - 1 {
        return Err(Error::IndexOutOfRange { index: i, max: n - 1 });
    }
    Ok(())
}

pub(crate) fn entry_unchecked(i: usize, j: usize, n: usize) -> Rational {
    let (i, j, n) = (i as i64, j as i64, n as i64);
    Rational::new(i.min(j) * n - i * j, n)
}

pub(crate) fn row_sum_unchecked(i: usize, n: usize) -> Rational {
    let (i, n) = (i as i64, n as i64);
    Rational::new(i * (n - i), 2)
}
