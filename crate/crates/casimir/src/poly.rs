//! The Casimir eigenvalue of a stable sequence as a closed form in N.
//!
//! For a stable representation with head labels `h` and tail labels `t` the
//! eigenvalue, as a function of the rank parameter N, collapses to a
//! three-term Laurent polynomial
//!
//! ```text
//! C(N) = a1 * N + a0 + am1 / N
//!
//! a1  = sum_i i * (h_i + t_i)
//! a0  = sum_{i,j} min(i,j) * h_i h_j + sum_{i,j} min(i,j) * t_i t_j
//!       - sum_i i^2 * (h_i + t_i)
//! am1 = -(sum_i i * h_i - sum_i i * t_i)^2
//! ```
//!
//! so `a1` is the total Young-diagram area, and `-am1` is the *square* of the
//! area difference. The 1/N term therefore vanishes exactly when the head and
//! tail diagram areas balance — that equivalence is the criterion this crate
//! exists to check, and it is verified against the Gram-matrix route
//! ([`crate::gram::casimir_direct`]) in the tests and the acceptance suite.

use std::fmt;

use crate::error::Error;
use crate::rational::Rational;
use crate::young::StableRep;

/// A Laurent polynomial `a1 * N + a0 + am1 / N` with exact coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CasimirPoly {
    a1: Rational,
    a0: Rational,
    am1: Rational,
}

impl CasimirPoly {
    pub fn new(a1: Rational, a0: Rational, am1: Rational) -> Self {
        CasimirPoly { a1, a0, am1 }
    }

    /// Coefficient of N.
    pub fn a1(&self) -> &Rational {
        &self.a1
    }

    /// Constant term.
    pub fn a0(&self) -> &Rational {
        &self.a0
    }

    /// Coefficient of 1/N.
    pub fn am1(&self) -> &Rational {
        &self.am1
    }

    /// Exact value `a1 * n + a0 + am1 / n`. Rejects `n == 0`.
    pub fn evaluate(&self, n: usize) -> Result<Rational, Error> {
        if n == 0 {
            return Err(Error::EvaluateAtZero);
        }
        let n = Rational::from_integer(n as i64);
        Ok(&self.a1 * &n + &self.a0 + &self.am1 / &n)
    }

    /// True when the 1/N term is absent.
    pub fn is_linear(&self) -> bool {
        self.am1.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a1.is_zero() && self.a0.is_zero() && self.am1.is_zero()
    }
}

impl fmt::Display for CasimirPoly {
    /// Renders `a1*N + a0 + am1/N` with zero terms omitted, `0` when all
    /// three vanish, e.g. `2*N + 2 - 4/N`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Rational, &str)> = Vec::new();
        if !self.a1.is_zero() {
            terms.push((self.a1.clone(), "*N"));
        }
        if !self.a0.is_zero() {
            terms.push((self.a0.clone(), ""));
        }
        if !self.am1.is_zero() {
            terms.push((self.am1.clone(), "/N"));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (coeff, suffix)) in terms.iter().enumerate() {
            if pos == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            // Parenthesize fractional coefficients attached to *N or /N.
            if !suffix.is_empty() && !mag.is_integer() {
                write!(f, "({mag}){suffix}")?;
            } else {
                write!(f, "{mag}{suffix}")?;
            }
        }
        Ok(())
    }
}

/// Closed-form Casimir eigenvalue of a stable sequence.
pub fn casimir_stable(rep: &StableRep) -> CasimirPoly {
    let area_head = rep.area_head();
    let area_tail = rep.area_tail();
    let a1 = area_head + area_tail;
    let a0 = min_pair_sum(rep.head()) + min_pair_sum(rep.tail()) - square_weighted_sum(rep);
    let diff = area_head - area_tail;
    CasimirPoly {
        a1: Rational::from_integer(a1),
        a0: Rational::from_integer(a0),
        am1: Rational::from_integer(-diff * diff),
    }
}

/// `sum_{i,j} min(i,j) * v_i * v_j` over 1-based indices.
fn min_pair_sum(v: &[u32]) -> i64 {
    let mut sum = 0i64;
    for (i, &vi) in v.iter().enumerate() {
        for (j, &vj) in v.iter().enumerate() {
            sum += (i.min(j) as i64 + 1) * i64::from(vi) * i64::from(vj);
        }
    }
    sum
}

/// `sum_i i^2 * (h_i + t_i)` over 1-based indices.
fn square_weighted_sum(rep: &StableRep) -> i64 {
    rep.head()
        .iter()
        .zip(rep.tail())
        .enumerate()
        .map(|(i, (&h, &t))| {
            let w = (i as i64 + 1) * (i as i64 + 1);
            w * (i64::from(h) + i64::from(t))
        })
        .sum()
}

// The four blocks of the derivation, each a function of (rep, n). Their sum
// equals the full eigenvalue; each one is checked against its literal
// Gram-matrix counterpart in the tests below.

/// `sum_{i,j} h_i h_j F[i][j]` in closed form.
#[cfg(test)]
fn head_head_block(rep: &StableRep, n: usize) -> Rational {
    let a = rep.area_head();
    Rational::from_integer(min_pair_sum(rep.head())) - Rational::new(a * a, n as i64)
}

/// `sum_{i,j} t_i t_j F[n-i][n-j]` in closed form.
#[cfg(test)]
fn tail_tail_block(rep: &StableRep, n: usize) -> Rational {
    let a = rep.area_tail();
    Rational::from_integer(min_pair_sum(rep.tail())) - Rational::new(a * a, n as i64)
}

/// `sum_{i,j} (h_i t_j F[i][n-j] + t_i h_j F[n-i][j])` in closed form.
#[cfg(test)]
fn cross_block(rep: &StableRep, n: usize) -> Rational {
    Rational::new(2 * rep.area_head() * rep.area_tail(), n as i64)
}

/// `2 * sum_i (R_i h_i + R_{n-i} t_i)` in closed form.
#[cfg(test)]
fn rho_block(rep: &StableRep, n: usize) -> Rational {
    let a1 = rep.area_head() + rep.area_tail();
    Rational::from_integer(n as i64 * a1 - square_weighted_sum(rep))
}
