//! Verification that every constituent of ad^(x)k is a balanced stable
//! representation with an N-linear Casimir eigenvalue.

use std::collections::BTreeMap;

use num::BigInt;

use crate::error::Error;
use crate::gram::casimir_direct;
use crate::poly::{casimir_stable, CasimirPoly};
use crate::rational::Rational;
use crate::young::{extract_stable, DynkinLabels, StableRep};

use super::{ad_power_decompose_with_cap, dimension, Decomposition, DEFAULT_SUMMAND_CAP};

/// Outcome of the checks for one constituent of ad^(x)k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstituentFinding {
    /// Extracts to a balanced stable representation whose closed-form
    /// eigenvalue is linear and matches the direct Gram computation.
    Verified {
        stable: StableRep,
        poly: CasimirPoly,
    },
    /// A middle label was nonzero: not a stable representation at this
    /// (n, k). Would disprove the criterion; must never happen.
    NotStable(Error),
    /// Stable but with unequal Young-diagram areas.
    Unbalanced {
        stable: StableRep,
        poly: CasimirPoly,
    },
    /// The closed form kept a 1/N term despite balanced areas.
    Nonlinear {
        stable: StableRep,
        poly: CasimirPoly,
    },
    /// Closed form and direct Gram eigenvalue disagree at this n.
    Mismatch {
        stable: StableRep,
        poly: CasimirPoly,
        direct: Rational,
        from_poly: Rational,
    },
}

/// One constituent of the decomposition together with its verification
/// outcome.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstituentCheck {
    pub labels: DynkinLabels,
    pub multiplicity: u64,
    pub dimension: BigInt,
    pub finding: ConstituentFinding,
}

impl ConstituentCheck {
    pub fn passed(&self) -> bool {
        matches!(self.finding, ConstituentFinding::Verified { .. })
    }

    /// The stable form, when extraction succeeded.
    pub fn stable(&self) -> Option<&StableRep> {
        match &self.finding {
            ConstituentFinding::Verified { stable, .. }
            | ConstituentFinding::Unbalanced { stable, .. }
            | ConstituentFinding::Nonlinear { stable, .. }
            | ConstituentFinding::Mismatch { stable, .. } => Some(stable),
            ConstituentFinding::NotStable(_) => None,
        }
    }

    pub fn poly(&self) -> Option<&CasimirPoly> {
        match &self.finding {
            ConstituentFinding::Verified { poly, .. }
            | ConstituentFinding::Unbalanced { poly, .. }
            | ConstituentFinding::Nonlinear { poly, .. }
            | ConstituentFinding::Mismatch { poly, .. } => Some(poly),
            ConstituentFinding::NotStable(_) => None,
        }
    }
}

/// Result of checking every constituent of ad^(x)k of su(n).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    n: usize,
    k: usize,
    expected_dimension: BigInt,
    total_dimension: BigInt,
    constituents: Vec<ConstituentCheck>,
}

impl VerificationReport {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `(n^2 - 1)^k`.
    pub fn expected_dimension(&self) -> &BigInt {
        &self.expected_dimension
    }

    /// Sum of multiplicity x dimension over the constituents.
    pub fn total_dimension(&self) -> &BigInt {
        &self.total_dimension
    }

    /// Constituents in lexicographic label order.
    pub fn constituents(&self) -> &[ConstituentCheck] {
        &self.constituents
    }

    /// Every constituent verified and the dimension checksum holds.
    pub fn pass(&self) -> bool {
        self.expected_dimension == self.total_dimension
            && self.constituents.iter().all(ConstituentCheck::passed)
    }

    /// Human-readable descriptions of everything that failed.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.expected_dimension != self.total_dimension {
            out.push(format!(
                "dimension checksum {} != expected {}",
                self.total_dimension, self.expected_dimension
            ));
        }
        for check in &self.constituents {
            match &check.finding {
                ConstituentFinding::Verified { .. } => {}
                ConstituentFinding::NotStable(e) => {
                    out.push(format!("{}: not a stable representation: {e}", check.labels))
                }
                ConstituentFinding::Unbalanced { stable, .. } => out.push(format!(
                    "{}: unbalanced areas {} vs {}",
                    check.labels,
                    stable.area_head(),
                    stable.area_tail()
                )),
                ConstituentFinding::Nonlinear { poly, .. } => out.push(format!(
                    "{}: 1/N coefficient {} is nonzero",
                    check.labels,
                    poly.am1()
                )),
                ConstituentFinding::Mismatch {
                    direct, from_poly, ..
                } => out.push(format!(
                    "{}: closed form gives {from_poly}, direct route gives {direct}",
                    check.labels
                )),
            }
        }
        out
    }
}

/// Decomposes ad^(x)k of su(n) and checks each constituent: stable
/// extraction, balanced areas, linear closed form, and agreement with the
/// direct Gram eigenvalue. Uses the default summand cap.
pub fn verify_ad_power(n: usize, k: usize) -> Result<VerificationReport, Error> {
    verify_ad_power_with_cap(n, k, DEFAULT_SUMMAND_CAP)
}

/// [`verify_ad_power`] with an explicit summand cap.
pub fn verify_ad_power_with_cap(
    n: usize,
    k: usize,
    cap: u64,
) -> Result<VerificationReport, Error> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if n < 2 * k + 1 {
        return Err(Error::NotInStableRange { n, k });
    }
    let decomposition = ad_power_decompose_with_cap(n, k, cap)?;
    verify_decomposition(&decomposition, k)
}

/// Checks an already-computed ad^(x)k decomposition. Requires the stable
/// range `n >= 2k + 1` so extraction is well-defined.
pub fn verify_decomposition(
    decomposition: &Decomposition,
    k: usize,
) -> Result<VerificationReport, Error> {
    let n = decomposition.n();
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if n < 2 * k + 1 {
        return Err(Error::NotInStableRange { n, k });
    }
    let constituents = decomposition
        .iter()
        .map(|(labels, multiplicity)| ConstituentCheck {
            labels: labels.clone(),
            multiplicity,
            dimension: dimension(labels),
            finding: check_constituent(labels, k),
        })
        .collect();
    Ok(VerificationReport {
        n,
        k,
        expected_dimension: num::pow::pow(BigInt::from(n * n - 1), k),
        total_dimension: decomposition.total_dimension(),
        constituents,
    })
}

fn check_constituent(labels: &DynkinLabels, k: usize) -> ConstituentFinding {
    let stable = match extract_stable(labels, k) {
        Ok(s) => s,
        Err(e) => return ConstituentFinding::NotStable(e),
    };
    let poly = casimir_stable(&stable);
    if !stable.is_balanced() {
        return ConstituentFinding::Unbalanced { stable, poly };
    }
    if !poly.is_linear() {
        return ConstituentFinding::Nonlinear { stable, poly };
    }
    let from_poly = poly
        .evaluate(labels.n())
        .expect("n >= 2k + 1 > 0 by precondition");
    let direct = casimir_direct(labels);
    if from_poly != direct {
        return ConstituentFinding::Mismatch {
            stable,
            poly,
            direct,
            from_poly,
        };
    }
    ConstituentFinding::Verified { stable, poly }
}

/// The multiset of stable forms of the constituents of ad^(x)k of su(n).
/// Identical across every n in the stable range — that is the stability of
/// the sequence made testable.
pub fn stable_constituents(
    n: usize,
    k: usize,
    cap: u64,
) -> Result<BTreeMap<StableRep, u64>, Error> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if n < 2 * k + 1 {
        return Err(Error::NotInStableRange { n, k });
    }
    let decomposition: Decomposition = ad_power_decompose_with_cap(n, k, cap)?;
    let mut out = BTreeMap::new();
    for (labels, mult) in decomposition.iter() {
        let stable = extract_stable(labels, k)?;
        *out.entry(stable).or_insert(0) += mult;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_adjoint_power_passes() {
        let report = verify_ad_power(9, 1).unwrap();
        assert!(report.pass());
        assert_eq!(report.constituents().len(), 1);
        let check = &report.constituents()[0];
        assert_eq!(check.labels, DynkinLabels::adjoint(9).unwrap());
        assert_eq!(check.multiplicity, 1);
        assert_eq!(check.dimension, BigInt::from(80));
        let poly = check.poly().unwrap();
        assert_eq!(poly.to_string(), "2*N");
    }

    #[test]
    fn su5_squared_passes() {
        let report = verify_ad_power(5, 2).unwrap();
        assert!(report.pass(), "failures: {:?}", report.failures());
        assert_eq!(report.constituents().len(), 6);
        assert_eq!(report.total_dimension(), &BigInt::from(576));
    }

    #[test]
    fn su7_cubed_passes() {
        let report = verify_ad_power(7, 3).unwrap();
        assert!(report.pass(), "failures: {:?}", report.failures());
    }

    #[test]
    fn rejects_outside_stable_range() {
        assert_eq!(
            verify_ad_power(4, 2),
            Err(Error::NotInStableRange { n: 4, k: 2 })
        );
    }

    #[test]
    fn stable_multisets_agree_across_n() {
        let cap = DEFAULT_SUMMAND_CAP;
        let at5 = stable_constituents(5, 2, cap).unwrap();
        let at7 = stable_constituents(7, 2, cap).unwrap();
        let at9 = stable_constituents(9, 2, cap).unwrap();
        assert_eq!(at5, at7);
        assert_eq!(at7, at9);
        assert_eq!(at5.values().sum::<u64>(), 7);
    }
}
