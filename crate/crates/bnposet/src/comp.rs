//! Compositions of types A and B, and their bijections with subsets.
//!
//! A (type A) composition of `n` is a sequence of positive parts summing
//! to `n`; it corresponds to a subset of `[1, n-1]` via partial sums.
//! A type B composition, or pseudo-composition, allows its *first* part to
//! be zero and corresponds to a subset of `[0, n-1]`.

use crate::error::{Error, Result};
use std::fmt;

/// A composition of `n` with all parts positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompA {
    parts: Vec<u32>,
}

impl CompA {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(
                parts,
                "all parts must be positive".into(),
            ));
        }
        Ok(CompA { parts })
    }

    /// The empty composition of 0.
    pub fn empty() -> Self {
        CompA { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The partial-sum subset of `[1, n-1]`.
    pub fn to_set(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut acc = 0usize;
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    /// The composition of `n` whose partial sums are the given subset of
    /// `[1, n-1]` (strictly increasing).
    pub fn from_set(set: &[usize], n: usize) -> Result<Self> {
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0usize;
        for &s in set {
            if s <= prev || s >= n {
                return Err(Error::InvalidComposition(
                    set.iter().map(|&x| x as u32).collect(),
                    format!("not a strictly increasing subset of [1, {}]", n - 1),
                ));
            }
            parts.push((s - prev) as u32);
            prev = s;
        }
        if n > 0 {
            parts.push((n - prev) as u32);
        }
        Ok(CompA { parts })
    }

    /// `self` refines `other` iff the partial-sum set of `other` is
    /// contained in that of `self`.
    pub fn refines(&self, other: &CompA) -> bool {
        self.size() == other.size() && {
            let fine = self.to_set();
            other.to_set().iter().all(|s| fine.contains(s))
        }
    }

    /// Concatenation `(a_1, ..., a_p, b_1, ..., b_q)`.
    pub fn concat(&self, other: &CompA) -> CompA {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        CompA { parts }
    }

    /// Near-concatenation `(a_1, ..., a_p + b_1, ..., b_q)`; errors if
    /// either factor is empty.
    pub fn near_concat(&self, other: &CompA) -> Result<CompA> {
        if self.parts.is_empty() || other.parts.is_empty() {
            return Err(Error::EmptyInput(
                "near-concatenation needs nonempty factors",
            ));
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Ok(CompA { parts })
    }

    /// All compositions of `n`, ordered lexicographically.
    pub fn all(n: usize) -> Vec<CompA> {
        let mut subsets: Vec<Vec<usize>> = vec![vec![]];
        for s in 1..n {
            for k in 0..subsets.len() {
                let mut ext = subsets[k].clone();
                ext.push(s);
                subsets.push(ext);
            }
        }
        let mut out: Vec<CompA> = subsets
            .into_iter()
            .map(|set| {
                let mut set = set;
                set.sort_unstable();
                CompA::from_set(&set, n).unwrap()
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for CompA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CompA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A type B composition: first part nonnegative, remaining parts positive.
/// The unique composition of 0 is canonically stored as the empty list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompB {
    parts: Vec<u32>,
}

impl CompB {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().skip(1).any(|&p| p == 0) {
            return Err(Error::InvalidComposition(
                parts,
                "only the first part may be zero".into(),
            ));
        }
        // Canonical degree-0 representative is the empty list.
        if parts == [0] {
            return Ok(CompB { parts: vec![] });
        }
        Ok(CompB { parts })
    }

    pub fn empty() -> Self {
        CompB { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The partial-sum subset of `[0, n-1]`; the first part being zero is
    /// what puts 0 into the set.
    pub fn to_set(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut acc = 0usize;
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    /// The type B composition of `n` whose partial sums are the given
    /// subset of `[0, n-1]` (strictly increasing, may start at 0).
    pub fn from_set(set: &[usize], n: usize) -> Result<Self> {
        let mut parts: Vec<u32> = Vec::with_capacity(set.len() + 1);
        let mut prev = 0usize;
        for (k, &s) in set.iter().enumerate() {
            if (k > 0 && s <= prev) || s >= n {
                return Err(Error::InvalidComposition(
                    set.iter().map(|&x| x as u32).collect(),
                    format!("not a strictly increasing subset of [0, {}]", n as i64 - 1),
                ));
            }
            parts.push((s - prev) as u32);
            prev = s;
        }
        if n > 0 || set.is_empty() {
            parts.push((n - prev) as u32);
        }
        CompB::new(parts)
    }

    /// `self` refines `other` iff the partial-sum set of `other` is
    /// contained in that of `self`.
    pub fn refines(&self, other: &CompB) -> bool {
        self.size() == other.size() && {
            let fine = self.to_set();
            other.to_set().iter().all(|s| fine.contains(s))
        }
    }

    /// All type B compositions of `n`, ordered lexicographically.
    pub fn all(n: usize) -> Vec<CompB> {
        let mut subsets: Vec<Vec<usize>> = vec![vec![]];
        for s in 0..n {
            for k in 0..subsets.len() {
                let mut ext = subsets[k].clone();
                ext.push(s);
                subsets.push(ext);
            }
        }
        let mut out: Vec<CompB> = subsets
            .into_iter()
            .map(|set| {
                let mut set = set;
                set.sort_unstable();
                CompB::from_set(&set, n).unwrap()
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for CompB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            // Degree 0: render the canonical empty representative as (0).
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CompB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a composition literal like `(0,2,1)` into its part list.
pub fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|u| u.strip_suffix(')'))
        .unwrap_or(t);
    let mut parts = Vec::new();
    for piece in inner.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        parts.push(
            piece
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad part {piece:?}: {e}")))?,
        );
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ca(parts: &[u32]) -> CompA {
        CompA::new(parts.to_vec()).unwrap()
    }

    fn cb(parts: &[u32]) -> CompB {
        CompB::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn type_a_set_bijection_round_trips() {
        let a = ca(&[2, 1, 3]);
        assert_eq!(a.to_set(), vec![2, 3]);
        assert_eq!(CompA::from_set(&[2, 3], 6).unwrap(), a);
        assert_eq!(ca(&[4]).to_set(), Vec::<usize>::new());
        for n in 0..=5 {
            for c in CompA::all(n) {
                assert_eq!(CompA::from_set(&c.to_set(), n).unwrap(), c);
            }
        }
    }

    #[test]
    fn type_b_set_bijection_round_trips() {
        let b = cb(&[0, 2, 1]);
        assert_eq!(b.size(), 3);
        assert_eq!(b.to_set(), vec![0, 2]);
        assert_eq!(CompB::from_set(&[0, 2], 3).unwrap(), b);
        assert_eq!(cb(&[3]).to_set(), Vec::<usize>::new());
        for n in 0..=5 {
            for c in CompB::all(n) {
                assert_eq!(CompB::from_set(&c.to_set(), n).unwrap(), c);
            }
        }
    }

    #[test]
    fn counts_match_subset_counts() {
        // 2^{n-1} type A compositions, 2^n type B compositions.
        assert_eq!(CompA::all(4).len(), 8);
        assert_eq!(CompB::all(4).len(), 16);
        assert_eq!(CompA::all(0).len(), 1);
        assert_eq!(CompB::all(0).len(), 1);
    }

    #[test]
    fn degree_zero_type_b_is_canonical() {
        assert_eq!(CompB::new(vec![0]).unwrap(), CompB::empty());
        assert_eq!(CompB::from_set(&[], 0).unwrap(), CompB::empty());
        assert_eq!(CompB::empty().to_string(), "(0)");
    }

    #[test]
    fn refinement_is_partial_sum_containment() {
        // (1,1,2) refines (2,2); (2,2) does not refine (1,1,2).
        assert!(ca(&[1, 1, 2]).refines(&ca(&[2, 2])));
        assert!(!ca(&[2, 2]).refines(&ca(&[1, 1, 2])));
        assert!(cb(&[0, 1, 1]).refines(&cb(&[0, 2])));
        assert!(cb(&[0, 2]).refines(&cb(&[2])));
        assert!(!cb(&[2]).refines(&cb(&[0, 2])));
        assert!(cb(&[1, 1]).refines(&cb(&[2])));
        assert!(!cb(&[1, 1]).refines(&cb(&[0, 2])));
    }

    #[test]
    fn concatenations() {
        assert_eq!(ca(&[2, 1]).concat(&ca(&[3])), ca(&[2, 1, 3]));
        assert_eq!(ca(&[2, 1]).near_concat(&ca(&[3])).unwrap(), ca(&[2, 4]));
        assert_eq!(ca(&[1]).near_concat(&ca(&[1])).unwrap(), ca(&[2]));
    }

    #[test]
    fn first_part_zero_only_in_first_slot() {
        assert!(CompB::new(vec![1, 0, 2]).is_err());
        assert!(CompA::new(vec![1, 0]).is_err());
        assert!(CompB::new(vec![0, 1, 2]).is_ok());
    }

    #[test]
    fn comp_b_of_set_excludes_total() {
        // For n = 3 and subset {0, 2}: parts (0, 2, 1).
        assert_eq!(CompB::from_set(&[0, 2], 3).unwrap(), cb(&[0, 2, 1]));
        // Out-of-range member rejected.
        assert!(CompB::from_set(&[3], 3).is_err());
        assert!(CompA::from_set(&[0], 3).is_err());
    }
}
