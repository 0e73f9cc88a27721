//! The exhaustive verification sweep behind the `verify` subcommand.
//!
//! Representations are checked in parallel; every aggregation is
//! order-independent and the findings are sorted before printing, so output
//! is byte-identical whatever the thread count.

use casimir::{
    casimir_direct, casimir_stable, stable_constituents, universal_form, vogel_su,
    verify_ad_power_with_cap, Error, Rational, StableRep,
};
use rayon::prelude::*;

use crate::record::AdPowerRun;

pub struct SweepOutcome {
    pub reps_checked: u64,
    pub eigenvalue_checks: u64,
    pub ad_power_runs: Vec<AdPowerRun>,
    pub violations: Vec<String>,
}

/// Every canonical stable representation with window at most `k_max` and
/// labels at most `bound`.
pub fn enumerate_reps(k_max: usize, bound: u32) -> Vec<StableRep> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        let mut digits = vec![0u32; 2 * k];
        loop {
            let head = digits[..k].to_vec();
            let tail = digits[k..].to_vec();
            // Skip windows that canonicalize to a smaller k (already listed).
            if k == 1 || head[k - 1] != 0 || tail[k - 1] != 0 {
                out.push(StableRep::new(head, tail).unwrap());
            }
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    break;
                }
                if digits[pos] < bound {
                    digits[pos] += 1;
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
    }
    out
}

/// Checks one representation at every requested rank: closed form ==
/// direct Gram route, linearity iff balance, the perfect-square identity,
/// and the universal-form round trip.
fn check_rep(rep: &StableRep, n_list: &[usize]) -> (u64, Vec<String>) {
    let mut violations = Vec::new();
    let poly = casimir_stable(rep);

    if poly.is_linear() != rep.is_balanced() {
        violations.push(format!(
            "{rep}: is_linear = {} but is_balanced = {}",
            poly.is_linear(),
            rep.is_balanced()
        ));
    }
    let diff = rep.area_head() - rep.area_tail();
    if -poly.am1() != Rational::from_integer(diff * diff) {
        violations.push(format!(
            "{rep}: -am1 = {} is not the squared area difference {}",
            -poly.am1(),
            diff * diff
        ));
    }
    let universal = universal_form(&poly);
    if universal.is_ok() != poly.is_linear() {
        violations.push(format!(
            "{rep}: universal form exists = {}, linear = {}",
            universal.is_ok(),
            poly.is_linear()
        ));
    }

    let mut checks = 0;
    for &n in n_list {
        let direct = casimir_direct(&rep.realize(n).expect("stable range checked upfront"));
        let value = poly.evaluate(n).expect("n >= 1");
        if value != direct {
            violations.push(format!(
                "{rep}: closed form gives {value} at N = {n}, direct route gives {direct}"
            ));
        }
        if let Ok(coeffs) = &universal {
            let contracted = coeffs.contract(&vogel_su(n));
            if contracted != value {
                violations.push(format!(
                    "{rep}: universal form gives {contracted} at N = {n}, expected {value}"
                ));
            }
        }
        checks += 1;
    }
    (checks, violations)
}

/// Runs the whole sweep. `Err` carries resource-cap violations from the
/// ad-power runs; theorem violations land in the outcome instead.
pub fn run(
    k_max: usize,
    n_list: &[usize],
    bound: u32,
    cap: u64,
) -> Result<SweepOutcome, Error> {
    let reps = enumerate_reps(k_max, bound);
    let (eigenvalue_checks, mut violations) = reps
        .par_iter()
        .map(|rep| check_rep(rep, n_list))
        .reduce(
            || (0, Vec::new()),
            |(c1, mut v1), (c2, v2)| {
                v1.extend(v2);
                (c1 + c2, v1)
            },
        );

    let mut ad_power_runs = Vec::new();
    for k in 1..=k_max {
        let mut multisets = Vec::new();
        for &n in n_list {
            let report = verify_ad_power_with_cap(n, k, cap)?;
            if !report.pass() {
                violations.extend(
                    report
                        .failures()
                        .into_iter()
                        .map(|f| format!("ad^{k} of su({n}): {f}")),
                );
            }
            ad_power_runs.push(AdPowerRun {
                n,
                k,
                constituents: report.constituents().len(),
                pass: report.pass(),
            });
            multisets.push((n, stable_constituents(n, k, cap)?));
        }
        // The extracted stable multiset must not depend on n.
        for pair in multisets.windows(2) {
            let (n1, first) = &pair[0];
            let (n2, second) = &pair[1];
            if first != second {
                violations.push(format!(
                    "ad^{k}: stable constituents differ between su({n1}) and su({n2})"
                ));
            }
        }
    }

    violations.sort();
    Ok(SweepOutcome {
        reps_checked: reps.len() as u64,
        eigenvalue_checks,
        ad_power_runs,
        violations,
    })
}
