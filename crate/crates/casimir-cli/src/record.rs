//! The serialized record shape shared by every subcommand.
//!
//! Big integers (dimensions) and rationals are strings so that consumers in
//! any language keep full precision. Field order is fixed; JSON output
//! round-trips byte-identically through these structs.

use casimir::{
    universal_form, CasimirPoly, ConstituentCheck, StableRep, UniversalCoeffs,
};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct PolyJson {
    pub a1: String,
    pub a0: String,
    pub am1: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct UniversalJson {
    pub x: String,
    pub y: String,
    pub z: String,
}

/// One representation record: the stable datum, optional decomposition
/// context (multiplicity and dimension), the eigenvalue polynomial, the
/// balance verdict, the two Young-diagram areas, and the universal
/// coefficients when the eigenvalue is linear.
#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct RepRecord {
    pub k: usize,
    pub head: Vec<u32>,
    pub tail: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<String>,
    pub poly: PolyJson,
    pub balanced: bool,
    pub areas: [i64; 2],
    pub universal: Option<UniversalJson>,
}

impl RepRecord {
    pub fn from_stable(rep: &StableRep, poly: &CasimirPoly) -> Self {
        let universal = universal_form(poly).ok().map(|u| universal_json(&u));
        RepRecord {
            k: rep.k(),
            head: rep.head().to_vec(),
            tail: rep.tail().to_vec(),
            mult: None,
            dim: None,
            poly: PolyJson {
                a1: poly.a1().to_string(),
                a0: poly.a0().to_string(),
                am1: poly.am1().to_string(),
            },
            balanced: rep.is_balanced(),
            areas: [rep.area_head(), rep.area_tail()],
            universal,
        }
    }

    /// Record for one verified decomposition constituent. `None` when the
    /// constituent has no stable form (a theorem violation, reported
    /// separately).
    pub fn from_constituent(check: &ConstituentCheck) -> Option<Self> {
        let stable = check.stable()?;
        let poly = check.poly()?;
        let mut record = RepRecord::from_stable(stable, poly);
        record.mult = Some(check.multiplicity);
        record.dim = Some(check.dimension.to_string());
        Some(record)
    }
}

fn universal_json(u: &UniversalCoeffs) -> UniversalJson {
    UniversalJson {
        x: u.x.to_string(),
        y: u.y.to_string(),
        z: u.z.to_string(),
    }
}

/// The JSON document emitted by `eig`.
#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct EigDoc {
    pub n: usize,
    pub labels: Vec<u32>,
    pub casimir: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decimal: Option<f64>,
}

/// The JSON document emitted by `decompose`.
#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct DecomposeDoc {
    pub n: usize,
    pub k: usize,
    pub records: Vec<RepRecord>,
    pub checksum: String,
    pub pass: bool,
}

/// The JSON document emitted by `verify`.
#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct VerifyDoc {
    pub k_max: usize,
    pub n_list: Vec<usize>,
    pub label_bound: u32,
    pub reps_checked: u64,
    pub eigenvalue_checks: u64,
    pub ad_power_runs: Vec<AdPowerRun>,
    pub violations: Vec<String>,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct AdPowerRun {
    pub n: usize,
    pub k: usize,
    pub constituents: usize,
    pub pass: bool,
}
