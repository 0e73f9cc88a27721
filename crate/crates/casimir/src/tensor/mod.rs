//! Tensor powers of the adjoint representation and their decomposition.
//!
//! Products with the adjoint are decomposed by the Racah–Speiser/Klimyk rule:
//! for each weight `mu` of the adjoint, shift `lambda + mu + rho` into the
//! dominant chamber with the Weyl group and accumulate the resulting highest
//! weights with alternating signs. For su(n) the shifted Weyl action is plain
//! sorting of the epsilon coordinates — the sign is the parity of the sorting
//! permutation, and a coordinate collision kills the term — so no explicit
//! Weyl-group enumeration is ever needed.
//!
//! [`oracle::oracle_decompose`] implements the same contract by brute force
//! (full weight systems via Freudenthal's recursion, then peeling highest
//! weights) and serves as the independent second algorithm in tests.

mod oracle;
mod verify;

pub use oracle::{oracle_decompose, weight_system, ORACLE_DIMENSION_GUARD};
pub use verify::{
    stable_constituents, verify_ad_power, verify_ad_power_with_cap, verify_decomposition,
    ConstituentCheck, ConstituentFinding, VerificationReport,
};

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;
use num::One;

use crate::error::Error;
use crate::young::DynkinLabels;

/// Default bound on the summand count (multiplicities included) of any
/// intermediate adjoint-power decomposition.
pub const DEFAULT_SUMMAND_CAP: u64 = 1_000_000;

/// A weight in the fundamental-weight basis: n - 1 integer coefficients,
/// negative entries allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// The rank parameter n this weight lives in.
    pub fn n(&self) -> usize {
        self.coords.len() + 1
    }
}

impl From<&DynkinLabels> for Weight {
    fn from(labels: &DynkinLabels) -> Self {
        Weight {
            coords: labels.labels().iter().map(|&l| i64::from(l)).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Epsilon coordinates of a weight: suffix sums of the fundamental-weight
/// coefficients, length n, last entry 0. Defined up to a common shift, which
/// every consumer here is invariant under.
pub(crate) fn to_eps(coords: &[i64]) -> Vec<i64> {
    let n = coords.len() + 1;
    let mut v = vec![0i64; n];
    for i in (0..n - 1).rev() {
        v[i] = v[i + 1] + coords[i];
    }
    v
}

/// Inverse of [`to_eps`]: consecutive differences.
pub(crate) fn eps_to_coords(v: &[i64]) -> Vec<i64> {
    v.windows(2).map(|w| w[0] - w[1]).collect()
}

/// Sorts into strictly decreasing order, returning the permutation's sign,
/// or `None` when two entries collide (the weight sits on a chamber wall).
pub(crate) fn signed_sort_desc(v: &mut [i64]) -> Option<i64> {
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j] > v[j - 1] {
            v.swap(j, j - 1);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j] == v[j - 1] {
            return None;
        }
    }
    Some(sign)
}

/// The weight system of the adjoint of su(n): the n^2 - n roots with
/// multiplicity 1 plus the zero weight with multiplicity n - 1.
pub fn adjoint_weights(n: usize) -> Vec<(Weight, u64)> {
    let mut out = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let mut eps = vec![0i64; n];
            eps[a] += 1;
            eps[b] -= 1;
            out.push((Weight::new(eps_to_coords(&eps)), 1));
        }
    }
    out.push((Weight::new(vec![0; n - 1]), (n - 1) as u64));
    out
}

/// A multiset of irreducible su(n) representations with positive
/// multiplicities, kept in lexicographic label order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    n: usize,
    entries: BTreeMap<DynkinLabels, u64>,
}

impl Decomposition {
    pub(crate) fn from_entries(n: usize, entries: BTreeMap<DynkinLabels, u64>) -> Self {
        debug_assert!(entries.keys().all(|l| l.n() == n));
        debug_assert!(entries.values().all(|&m| m > 0));
        Decomposition { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Constituents in lexicographic label order.
    pub fn iter(&self) -> impl Iterator<Item = (&DynkinLabels, u64)> {
        self.entries.iter().map(|(l, &m)| (l, m))
    }

    pub fn multiplicity(&self, labels: &DynkinLabels) -> u64 {
        self.entries.get(labels).copied().unwrap_or(0)
    }

    /// Number of distinct irreducible constituents.
    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// Number of irreducible summands, multiplicities included.
    pub fn summand_count(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Exact total dimension: sum of multiplicity x dimension.
    pub fn total_dimension(&self) -> BigInt {
        let mut total = BigInt::from(0);
        for (labels, mult) in self.iter() {
            total += BigInt::from(mult) * dimension(labels);
        }
        total
    }

    /// Same multiset with every constituent conjugated.
    pub fn conjugate(&self) -> Decomposition {
        let entries = self
            .entries
            .iter()
            .map(|(l, &m)| (l.conjugate(), m))
            .collect();
        Decomposition {
            n: self.n,
            entries,
        }
    }
}

/// Decomposes `labels (x) adjoint` into irreducibles with exact
/// multiplicities.
pub fn tensor_with_adjoint(labels: &DynkinLabels) -> Decomposition {
    let n = labels.n();
    let shifted: Vec<i64> = labels.labels().iter().map(|&l| i64::from(l) + 1).collect();
    let base = to_eps(&shifted);
    let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (weight, mult) in adjoint_weights(n) {
        let weps = to_eps(weight.coords());
        let mut v: Vec<i64> = base.iter().zip(&weps).map(|(a, b)| a + b).collect();
        let Some(sign) = signed_sort_desc(&mut v) else {
            continue;
        };
        let dynkin: Vec<u32> = eps_to_coords(&v)
            .iter()
            .map(|&c| {
                debug_assert!(c >= 1);
                (c - 1) as u32
            })
            .collect();
        *acc.entry(dynkin).or_insert(0) += sign * mult as i64;
    }
    let mut entries = BTreeMap::new();
    for (dynkin, count) in acc {
        if count == 0 {
            continue;
        }
        assert!(count > 0, "negative multiplicity from Klimyk accumulation");
        entries.insert(DynkinLabels::new(n, dynkin).unwrap(), count as u64);
    }
    Decomposition::from_entries(n, entries)
}

/// Decomposes the k-th tensor power of the adjoint of su(n), with the
/// default summand cap.
pub fn ad_power_decompose(n: usize, k: usize) -> Result<Decomposition, Error> {
    ad_power_decompose_with_cap(n, k, DEFAULT_SUMMAND_CAP)
}

/// Decomposes ad^(x)k, refusing to continue once an intermediate
/// decomposition holds more than `cap` summands (multiplicities included).
pub fn ad_power_decompose_with_cap(n: usize, k: usize, cap: u64) -> Result<Decomposition, Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let adjoint = DynkinLabels::adjoint(n)?;
    let mut current = Decomposition::from_entries(n, BTreeMap::from([(adjoint, 1)]));
    for _ in 1..k {
        let mut acc: BTreeMap<DynkinLabels, u64> = BTreeMap::new();
        let mut count: u64 = 0;
        for (labels, mult) in current.iter() {
            for (constituent, m) in tensor_with_adjoint(labels).iter() {
                let add = mult
                    .checked_mul(m)
                    .ok_or(Error::CapExceeded { count: u64::MAX, cap })?;
                let slot = acc.entry(constituent.clone()).or_insert(0);
                *slot = slot
                    .checked_add(add)
                    .ok_or(Error::CapExceeded { count: u64::MAX, cap })?;
                count = count
                    .checked_add(add)
                    .ok_or(Error::CapExceeded { count: u64::MAX, cap })?;
            }
        }
        if count > cap {
            return Err(Error::CapExceeded { count, cap });
        }
        current = Decomposition::from_entries(n, acc);
    }
    Ok(current)
}

/// Exact dimension by the Weyl formula: the product over pairs of shifted
/// epsilon coordinates divided by the same product for the zero weight.
pub fn dimension(labels: &DynkinLabels) -> BigInt {
    let shifted: Vec<i64> = labels.labels().iter().map(|&l| i64::from(l) + 1).collect();
    let r = to_eps(&shifted);
    let n = labels.n();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num *= BigInt::from(r[i] - r[j]);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, rem) = num::Integer::div_rem(&num, &den);
    debug_assert!(num::Zero::is_zero(&rem));
    q
}
