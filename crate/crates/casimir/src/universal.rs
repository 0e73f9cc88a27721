//! Vogel's universal form for N-linear eigenvalues.
//!
//! su(N) sits at the point `(alpha, beta, gamma) = (-2, 2, N)` of Vogel's
//! parameter plane in the minimal normalization. An eigenvalue that is linear
//! in N, `C = a1 * N + a0`, can then be written as `alpha*x + beta*y +
//! gamma*z`. The pair (alpha, beta) only constrains `y - x`, so the triple is
//! fixed canonically at `x = 0`: any `(x, y + x, z)` with the same `y - x`
//! represents the same eigenvalue.

use crate::error::Error;
use crate::poly::CasimirPoly;
use crate::rational::Rational;

/// A point in Vogel's parameter plane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VogelPoint {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

/// Coefficients (x, y, z) with `alpha*x + beta*y + gamma*z` reproducing an
/// N-linear eigenvalue at the su(N) point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniversalCoeffs {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl UniversalCoeffs {
    /// `alpha*x + beta*y + gamma*z` at the given point.
    pub fn contract(&self, point: &VogelPoint) -> Rational {
        &point.alpha * &self.x + &point.beta * &self.y + &point.gamma * &self.z
    }
}

/// The su(n) Vogel point `(-2, 2, n)` in the minimal normalization.
pub fn vogel_su(n: usize) -> VogelPoint {
    VogelPoint {
        alpha: Rational::from_integer(-2),
        beta: Rational::from_integer(2),
        gamma: Rational::from_integer(n as i64),
    }
}

/// Canonical universal coefficients `x = 0, y = a0 / 2, z = a1` of a linear
/// polynomial. Errors when the 1/N coefficient is nonzero: only balanced
/// stable sequences admit the universal form.
pub fn universal_form(poly: &CasimirPoly) -> Result<UniversalCoeffs, Error> {
    if !poly.is_linear() {
        return Err(Error::NotLinear {
            am1: poly.am1().clone(),
        });
    }
    Ok(UniversalCoeffs {
        x: Rational::zero(),
        y: poly.a0() / &Rational::from_integer(2),
        z: poly.a1().clone(),
    })
}
