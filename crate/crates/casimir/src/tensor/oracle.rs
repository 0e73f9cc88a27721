//! Brute-force tensor decomposition, used as an independent second algorithm.
//!
//! The route is deliberately different from the Klimyk path: build the full
//! weight multiset of each factor with Freudenthal's recursion, convolve the
//! two multisets, then repeatedly peel off the highest remaining weight
//! together with its whole irreducible weight system. Nothing here shares
//! code with [`super::tensor_with_adjoint`] beyond the coordinate helpers.

use std::collections::BTreeMap;

use num::BigInt;

use crate::error::Error;
use crate::young::DynkinLabels;

use super::{dimension, eps_to_coords, to_eps, Decomposition, Weight};

/// Largest product dimension the brute-force route will accept.
pub const ORACLE_DIMENSION_GUARD: u64 = 100_000;

/// `2n * (x, y)` for weights in the fundamental-weight basis. Scaling by 2n
/// clears every denominator of the Gram form, so the whole recursion runs in
/// plain integers.
fn pairing_2n(x: &[i64], y: &[i64], n: usize) -> i64 {
    let n = n as i64;
    let mut sum = 0i64;
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        let i = i as i64 + 1;
        for (j, &yj) in y.iter().enumerate() {
            if yj == 0 {
                continue;
            }
            let j = j as i64 + 1;
            sum += xi * yj * (2 * n * i.min(j) - 2 * i * j);
        }
    }
    sum
}

/// Dominant representative of a weight's Weyl orbit: epsilon coordinates
/// sorted into (weakly) decreasing order.
fn dominant_rep(coords: &[i64]) -> Vec<i64> {
    let mut eps = to_eps(coords);
    eps.sort_unstable_by(|a, b| b.cmp(a));
    eps_to_coords(&eps)
}

/// The positive roots of su(n) in the fundamental-weight basis.
fn positive_roots(n: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::with_capacity(n * (n - 1) / 2);
    for a in 0..n {
        for b in (a + 1)..n {
            let mut eps = vec![0i64; n];
            eps[a] += 1;
            eps[b] -= 1;
            roots.push(eps_to_coords(&eps));
        }
    }
    roots
}

/// The simple roots of su(n) in the fundamental-weight basis (the columns of
/// the Cartan matrix).
fn simple_roots(n: usize) -> Vec<Vec<i64>> {
    let rank = n - 1;
    (0..rank)
        .map(|i| {
            let mut a = vec![0i64; rank];
            a[i] = 2;
            if i > 0 {
                a[i - 1] = -1;
            }
            if i + 1 < rank {
                a[i + 1] = -1;
            }
            a
        })
        .collect()
}

/// Every weight of the irreducible representation with the given highest
/// weight, with its exact multiplicity.
///
/// Works level by level away from the highest weight. Multiplicities are
/// Weyl-invariant, so Freudenthal's recursion runs only on dominant weights;
/// every other weight copies the value of its dominant representative, which
/// always lives on an earlier level.
pub fn weight_system(labels: &DynkinLabels) -> BTreeMap<Weight, u64> {
    let n = labels.n();
    let top: Vec<i64> = labels.labels().iter().map(|&l| i64::from(l)).collect();
    let top_shifted: Vec<i64> = top.iter().map(|&c| c + 1).collect();
    let top_norm = pairing_2n(&top_shifted, &top_shifted, n);
    let proots = positive_roots(n);
    let sroots = simple_roots(n);

    let mut mults: BTreeMap<Vec<i64>, u64> = BTreeMap::from([(top.clone(), 1)]);
    let mut level = vec![top];
    while !level.is_empty() {
        let mut candidates: std::collections::BTreeSet<Vec<i64>> =
            std::collections::BTreeSet::new();
        for mu in &level {
            for alpha in &sroots {
                let down: Vec<i64> = mu.iter().zip(alpha).map(|(m, a)| m - a).collect();
                if !mults.contains_key(&down) {
                    candidates.insert(down);
                }
            }
        }
        let mut next = Vec::new();
        for mu in candidates {
            let dom = dominant_rep(&mu);
            let mult = if dom == mu {
                freudenthal(&mu, top_norm, &proots, &mults, n)
            } else {
                // Same orbit, strictly earlier level: already known if a weight.
                mults.get(&dom).copied().unwrap_or(0)
            };
            if mult > 0 {
                mults.insert(mu.clone(), mult);
                next.push(mu);
            }
        }
        level = next;
    }
    mults
        .into_iter()
        .map(|(coords, m)| (Weight::new(coords), m))
        .collect()
}

/// Freudenthal's recursion for a dominant weight `mu` strictly below the
/// highest weight: sums `2 m(mu + t*alpha) (mu + t*alpha, alpha)` over
/// positive roots and the unbroken string above `mu`, divided by
/// `|top + rho|^2 - |mu + rho|^2`.
fn freudenthal(
    mu: &[i64],
    top_norm: i64,
    proots: &[Vec<i64>],
    mults: &BTreeMap<Vec<i64>, u64>,
    n: usize,
) -> u64 {
    let mu_shifted: Vec<i64> = mu.iter().map(|&c| c + 1).collect();
    let denom = top_norm - pairing_2n(&mu_shifted, &mu_shifted, n);
    debug_assert!(denom > 0, "Freudenthal denominator must be positive");
    let mut numer = 0i64;
    for alpha in proots {
        let mut t = 1i64;
        loop {
            let up: Vec<i64> = mu
                .iter()
                .zip(alpha)
                .map(|(m, a)| m + t * a)
                .collect();
            let m_up = mults.get(&dominant_rep(&up)).copied().unwrap_or(0);
            if m_up == 0 {
                break;
            }
            numer += 2 * m_up as i64 * pairing_2n(&up, alpha, n);
            t += 1;
        }
    }
    debug_assert!(numer >= 0 && numer % denom == 0);
    (numer / denom) as u64
}

/// `2n * (w, rho)`: the height functional that orders the peeling.
fn rho_height_2n(coords: &[i64], n: usize) -> i64 {
    let n = n as i64;
    coords
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let i = i as i64 + 1;
            c * i * (n - i)
        })
        .sum()
}

/// Brute-force decomposition of `a (x) b`: convolve the two weight systems,
/// then repeatedly subtract the full weight system of the highest remaining
/// weight. Refuses products larger than [`ORACLE_DIMENSION_GUARD`].
pub fn oracle_decompose(
    a: &DynkinLabels,
    b: &DynkinLabels,
) -> Result<Decomposition, Error> {
    let n = a.n();
    if b.n() != n {
        return Err(Error::RankMismatch {
            left: n,
            right: b.n(),
        });
    }
    let product_dim = dimension(a) * dimension(b);
    if product_dim > BigInt::from(ORACLE_DIMENSION_GUARD) {
        return Err(Error::OracleGuard {
            dim: product_dim,
            guard: ORACLE_DIMENSION_GUARD,
        });
    }

    let wa = weight_system(a);
    let wb = weight_system(b);
    let mut product: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (w1, m1) in &wa {
        for (w2, m2) in &wb {
            let sum: Vec<i64> = w1
                .coords()
                .iter()
                .zip(w2.coords())
                .map(|(x, y)| x + y)
                .collect();
            *product.entry(sum).or_insert(0) += m1 * m2;
        }
    }

    let mut systems: BTreeMap<Vec<i64>, BTreeMap<Weight, u64>> = BTreeMap::new();
    let mut entries: BTreeMap<DynkinLabels, u64> = BTreeMap::new();
    while !product.is_empty() {
        let highest = product
            .keys()
            .max_by_key(|w| (rho_height_2n(w, n), (*w).clone()))
            .expect("nonempty")
            .clone();
        assert!(
            highest.iter().all(|&c| c >= 0),
            "highest remaining weight must be dominant"
        );
        let mult = product[&highest];
        let system = systems.entry(highest.clone()).or_insert_with(|| {
            weight_system(&DynkinLabels::new(n, highest.iter().map(|&c| c as u32).collect()).unwrap())
        });
        for (w, m) in system.iter() {
            let coords = w.coords().to_vec();
            let have = product.get(&coords).copied().unwrap_or(0);
            let subtract = mult * m;
            assert!(have >= subtract, "peeling drove a multiplicity negative");
            if have == subtract {
                product.remove(&coords);
            } else {
                product.insert(coords, have - subtract);
            }
        }
        let labels = DynkinLabels::new(n, highest.iter().map(|&c| c as u32).collect()).unwrap();
        entries.insert(labels, mult);
    }
    Ok(Decomposition::from_entries(n, entries))
}
