//! Dynkin labels, stable sequences, and Young-diagram area bookkeeping.
//!
//! A [`StableRep`] is an N-independent datum: a window width `k`, the first
//! `k` Dynkin labels (`head`), and the last `k` labels read from the right
//! end inward (`tail`). Realizing it at a concrete `n` pads the middle with
//! zeros. Conversely, [`extract_stable`] recovers the stable datum from
//! concrete labels whose middle window is zero.
//!
//! The head and tail each describe a Young diagram with `head[i]` (resp.
//! `tail[i]`) columns of height `i + 1`. Their areas drive the linearity
//! criterion: the Casimir eigenvalue of the sequence is linear in N exactly
//! when the two areas agree (see [`crate::poly`]).

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Highest weight of an irreducible su(n) representation: n - 1 non-negative
/// Dynkin labels in the standard enumeration of simple roots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DynkinLabels {
    n: usize,
    labels: Vec<u32>,
}

impl DynkinLabels {
    pub fn new(n: usize, labels: Vec<u32>) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        if labels.len() != n - 1 {
            return Err(Error::LabelCount {
                n,
                expected: n - 1,
                got: labels.len(),
            });
        }
        Ok(DynkinLabels { n, labels })
    }

    /// The trivial representation: all labels zero.
    pub fn trivial(n: usize) -> Result<Self, Error> {
        Self::new(n, vec![0; n.saturating_sub(1)])
    }

    /// The fundamental representation (1, 0, ..., 0).
    pub fn fundamental(n: usize) -> Result<Self, Error> {
        let mut labels = vec![0; n.saturating_sub(1)];
        if let Some(first) = labels.first_mut() {
            *first = 1;
        }
        Self::new(n, labels)
    }

    /// The adjoint representation (1, 0, ..., 0, 1); (2) for su(2).
    pub fn adjoint(n: usize) -> Result<Self, Error> {
        if n == 2 {
            return Self::new(2, vec![2]);
        }
        let mut labels = vec![0; n.saturating_sub(1)];
        if n >= 3 {
            labels[0] = 1;
            labels[n - 2] = 1;
        }
        Self::new(n, labels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// True for the trivial representation.
    pub fn is_trivial(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// The conjugate representation: labels reversed.
    pub fn conjugate(&self) -> Self {
        let mut labels = self.labels.clone();
        labels.reverse();
        DynkinLabels { n: self.n, labels }
    }
}

impl fmt::Display for DynkinLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// An N-independent member of a stable sequence: window width `k`, the first
/// `k` Dynkin labels, and the last `k` labels in tail order (`tail[i]` holds
/// the label at position n - 1 - i, counting from the right end inward).
///
/// Values are kept canonical: `k` is minimal, i.e. the trailing head/tail
/// pair is not (0, 0) unless `k == 1`. The trivial representation is
/// `(k = 1, [0], [0])`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StableRep {
    head: Vec<u32>,
    tail: Vec<u32>,
}

impl StableRep {
    /// Builds a stable representation, trimming trailing (0, 0) pairs so the
    /// stored window is minimal.
    pub fn new(head: Vec<u32>, tail: Vec<u32>) -> Result<Self, Error> {
        if head.len() != tail.len() || head.is_empty() {
            return Err(Error::HeadTailLength {
                head: head.len(),
                tail: tail.len(),
            });
        }
        let mut head = head;
        let mut tail = tail;
        while head.len() > 1 && *head.last().unwrap() == 0 && *tail.last().unwrap() == 0 {
            head.pop();
            tail.pop();
        }
        Ok(StableRep { head, tail })
    }

    /// The trivial sequence (k = 1, [0], [0]).
    pub fn trivial() -> Self {
        StableRep {
            head: vec![0],
            tail: vec![0],
        }
    }

    /// The adjoint sequence (k = 1, [1], [1]).
    pub fn adjoint() -> Self {
        StableRep {
            head: vec![1],
            tail: vec![1],
        }
    }

    pub fn k(&self) -> usize {
        self.head.len()
    }

    pub fn head(&self) -> &[u32] {
        &self.head
    }

    pub fn tail(&self) -> &[u32] {
        &self.tail
    }

    /// Head and tail swapped: the conjugate sequence.
    pub fn conjugate(&self) -> Self {
        StableRep {
            head: self.tail.clone(),
            tail: self.head.clone(),
        }
    }

    /// Concrete Dynkin labels at rank `n`: head, zeros, reversed tail.
    ///
    /// Requires `n >= 2k + 1` so the head and tail windows cannot touch.
    pub fn realize(&self, n: usize) -> Result<DynkinLabels, Error> {
        let k = self.k();
        if n < 2 * k + 1 {
            return Err(Error::NotInStableRange { n, k });
        }
        let mut labels = vec![0u32; n - 1];
        for i in 0..k {
            labels[i] = self.head[i];
            labels[n - 2 - i] = self.tail[i];
        }
        DynkinLabels::new(n, labels)
    }

    /// Area of the head Young diagram: sum of i * head[i] over 1-based i.
    pub fn area_head(&self) -> i64 {
        area(&self.head)
    }

    /// Area of the tail Young diagram: sum of i * tail[i] over 1-based i.
    pub fn area_tail(&self) -> i64 {
        area(&self.tail)
    }

    /// The equal-areas criterion: head and tail diagrams have the same area.
    pub fn is_balanced(&self) -> bool {
        self.area_head() == self.area_tail()
    }

    /// Every canonical stable representation with window width at most
    /// `max_k` and labels at most `label_bound`, each listed exactly once,
    /// in enumeration order. The workhorse behind exhaustive sweeps.
    pub fn enumerate(max_k: usize, label_bound: u32) -> Vec<StableRep> {
        let mut out = Vec::new();
        for k in 1..=max_k {
            let mut digits = vec![0u32; 2 * k];
            loop {
                let head = digits[..k].to_vec();
                let tail = digits[k..].to_vec();
                // Windows that canonicalize to a smaller k were already
                // listed at that k.
                if k == 1 || head[k - 1] != 0 || tail[k - 1] != 0 {
                    out.push(StableRep { head, tail });
                }
                let mut pos = 0;
                loop {
                    if pos == digits.len() {
                        break;
                    }
                    if digits[pos] < label_bound {
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
}

fn area(v: &[u32]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(i, &l)| (i as i64 + 1) * i64::from(l))
        .sum()
}

/// Recovers the stable datum from concrete labels using a window of width
/// `k`, then canonicalizes. Every label strictly between the windows must be
/// zero; the first offending position (1-based) is reported otherwise.
pub fn extract_stable(labels: &DynkinLabels, k: usize) -> Result<StableRep, Error> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let n = labels.n();
    if n < 2 * k + 1 {
        return Err(Error::NotInStableRange { n, k });
    }
    for position in (k + 1)..=(n - k - 1) {
        if labels.labels()[position - 1] != 0 {
            return Err(Error::MiddleLabelNonzero { position, k, n });
        }
    }
    let head = labels.labels()[..k].to_vec();
    let tail = (0..k).map(|i| labels.labels()[n - 2 - i]).collect();
    StableRep::new(head, tail)
}

impl fmt::Display for StableRep {
    /// The line format `k | h1 .. hk / t1 .. tk`, e.g. `1 | 1 / 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |", self.k())?;
        for h in &self.head {
            write!(f, " {h}")?;
        }
        write!(f, " /")?;
        for t in &self.tail {
            write!(f, " {t}")?;
        }
        Ok(())
    }
}

impl FromStr for StableRep {
    type Err = String;

    /// Parses the line format `k | h1 .. hk / t1 .. tk` (whitespace-separated).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (k_part, rest) = s.split_once('|').ok_or("missing '|' separator")?;
        let k: usize = k_part
            .trim()
            .parse()
            .map_err(|_| format!("invalid k: {:?}", k_part.trim()))?;
        let (head_part, tail_part) = rest.split_once('/').ok_or("missing '/' separator")?;
        let parse_list = |part: &str| -> Result<Vec<u32>, String> {
            part.split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| format!("invalid label {t:?}")))
                .collect()
        };
        let head = parse_list(head_part)?;
        let tail = parse_list(tail_part)?;
        if head.len() != k || tail.len() != k {
            return Err(format!(
                "expected {k} head and {k} tail labels, got {} and {}",
                head.len(),
                tail.len()
            ));
        }
        StableRep::new(head, tail).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realize_adjoint_su5() {
        let rep = StableRep::new(vec![1], vec![1]).unwrap();
        let labels = rep.realize(5).unwrap();
        assert_eq!(labels.labels(), &[1, 0, 0, 1]);
        assert_eq!(labels, DynkinLabels::adjoint(5).unwrap());
    }

    #[test]
    fn realize_fundamental_su4() {
        let rep = StableRep::new(vec![1], vec![0]).unwrap();
        let labels = rep.realize(4).unwrap();
        assert_eq!(labels.labels(), &[1, 0, 0]);
        assert_eq!(labels, DynkinLabels::fundamental(4).unwrap());
    }

    #[test]
    fn realize_trivial_su3() {
        let rep = StableRep::new(vec![0], vec![0]).unwrap();
        let labels = rep.realize(3).unwrap();
        assert_eq!(labels.labels(), &[0, 0]);
    }

    #[test]
    fn realize_rejects_small_n() {
        let rep = StableRep::new(vec![1], vec![1]).unwrap();
        assert_eq!(
            rep.realize(2),
            Err(Error::NotInStableRange { n: 2, k: 1 })
        );
        let rep2 = StableRep::new(vec![0, 1], vec![2, 0]).unwrap();
        assert_eq!(
            rep2.realize(4),
            Err(Error::NotInStableRange { n: 4, k: 2 })
        );
    }

    #[test]
    fn extract_canonicalizes_window() {
        // su(7) (2,0,0,0,0,1) with k = 2: trailing pair (0, 0) trims to k = 1.
        let labels = DynkinLabels::new(7, vec![2, 0, 0, 0, 0, 1]).unwrap();
        let rep = extract_stable(&labels, 2).unwrap();
        assert_eq!(rep.k(), 1);
        assert_eq!(rep.head(), &[2]);
        assert_eq!(rep.tail(), &[1]);
    }

    #[test]
    fn extract_adjoint_su5() {
        let labels = DynkinLabels::new(5, vec![1, 0, 0, 1]).unwrap();
        let rep = extract_stable(&labels, 1).unwrap();
        assert_eq!(rep, StableRep::adjoint());
    }

    #[test]
    fn extract_rejects_nonzero_middle() {
        // su(5) (0,1,1,0) with k = 1: positions 2 and 3 sit in the middle window.
        let labels = DynkinLabels::new(5, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(
            extract_stable(&labels, 1),
            Err(Error::MiddleLabelNonzero {
                position: 2,
                k: 1,
                n: 5
            })
        );
    }

    #[test]
    fn extract_rejects_zero_k_and_small_n() {
        let labels = DynkinLabels::new(5, vec![1, 0, 0, 1]).unwrap();
        assert_eq!(extract_stable(&labels, 0), Err(Error::ZeroK));
        assert_eq!(
            extract_stable(&labels, 3),
            Err(Error::NotInStableRange { n: 5, k: 3 })
        );
        // k = 2 at n = 5 is the boundary of the stable range: windows touch
        // but do not overlap, and the result canonicalizes down to k = 1.
        assert_eq!(extract_stable(&labels, 2).unwrap(), StableRep::adjoint());
    }

    #[test]
    fn areas() {
        let rep = StableRep::new(vec![1, 1], vec![0, 0]).unwrap();
        assert_eq!(rep.area_head(), 3);
        assert_eq!(rep.area_tail(), 0);

        assert_eq!(StableRep::adjoint().area_head(), 1);
        assert_eq!(StableRep::adjoint().area_tail(), 1);

        let rep = StableRep::new(vec![0, 0, 2], vec![2, 2, 0]).unwrap();
        assert_eq!(rep.area_head(), 6);
        assert_eq!(rep.area_tail(), 6);
    }

    #[test]
    fn balance() {
        assert!(StableRep::adjoint().is_balanced());
        assert!(!StableRep::new(vec![1], vec![0]).unwrap().is_balanced());
        assert!(StableRep::new(vec![0, 1], vec![2, 0]).unwrap().is_balanced());
    }

    #[test]
    fn trivial_is_k1_zero_zero() {
        let rep = StableRep::new(vec![0, 0, 0], vec![0, 0, 0]).unwrap();
        assert_eq!(rep, StableRep::trivial());
        assert_eq!(rep.k(), 1);
    }

    #[test]
    fn line_format_round_trip() {
        for rep in [
            StableRep::adjoint(),
            StableRep::trivial(),
            StableRep::new(vec![0, 1], vec![2, 0]).unwrap(),
        ] {
            let s = rep.to_string();
            let back: StableRep = s.parse().unwrap();
            assert_eq!(back, rep);
        }
        assert_eq!(StableRep::adjoint().to_string(), "1 | 1 / 1");
    }

    #[test]
    fn line_format_rejects_length_mismatch() {
        assert!("2 | 0 1 / 1".parse::<StableRep>().is_err());
        assert!("1 | 1 1".parse::<StableRep>().is_err());
    }

    #[test]
    fn labels_validate_length_and_rank() {
        assert_eq!(
            DynkinLabels::new(4, vec![1, 0]),
            Err(Error::LabelCount {
                n: 4,
                expected: 3,
                got: 2
            })
        );
        assert_eq!(DynkinLabels::new(1, vec![]), Err(Error::RankTooSmall(1)));
    }

    #[test]
    fn adjoint_su2_is_spin_one() {
        assert_eq!(DynkinLabels::adjoint(2).unwrap().labels(), &[2]);
    }

    #[test]
    fn enumeration_counts_and_uniqueness() {
        // k = 1 contributes (b+1)^2 reps; each further k contributes
        // (b+1)^2k minus the (b+1)^(2k-2) windows ending in (0, 0).
        assert_eq!(StableRep::enumerate(1, 3).len(), 16);
        assert_eq!(StableRep::enumerate(2, 3).len(), 16 + 256 - 16);
        assert_eq!(StableRep::enumerate(3, 3).len(), 16 + 240 + 4096 - 256);
        assert_eq!(StableRep::enumerate(2, 2).len(), 9 + 81 - 9);

        let reps = StableRep::enumerate(3, 2);
        let mut seen = std::collections::BTreeSet::new();
        for rep in &reps {
            assert_eq!(rep, &StableRep::new(rep.head().to_vec(), rep.tail().to_vec()).unwrap());
            assert!(seen.insert(rep.clone()), "duplicate {rep}");
        }
    }
}
