//! `B_n` posets and plain finite posets.
//!
//! A `B_n` poset is a partial order on `{-n, ..., n}` satisfying
//! `i <= j  iff  -j <= -i`.  Its type B linear extensions are total
//! `B_n` orders refining it; each is recorded by the signed permutation
//! listing the elements above 0 from bottom to top.

use crate::comp::CompB;
use crate::error::{Error, Result};
use crate::perm::{Perm, SignedPerm};
use crate::poly::Poly;
use crate::qsym::{BasisB, QSymB};
use num::BigInt;
use std::fmt;

/// A `B_n` poset stored as its full (reflexive, transitive) relation
/// matrix on `{-n, ..., n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BnPoset {
    n: usize,
    rel: Vec<bool>,
}

impl BnPoset {
    fn idx(&self, i: i32, j: i32) -> usize {
        let n = self.n as i32;
        debug_assert!(i.abs() <= n && j.abs() <= n);
        ((i + n) * (2 * n + 1) + (j + n)) as usize
    }

    /// The antichain `B_n` poset: no relations besides reflexivity.
    pub fn antichain(n: usize) -> Self {
        let mut p = BnPoset {
            n,
            rel: vec![false; (2 * n + 1) * (2 * n + 1)],
        };
        for i in -(n as i32)..=n as i32 {
            let k = p.idx(i, i);
            p.rel[k] = true;
        }
        p
    }

    /// Builds a `B_n` poset from strict cover (or relation) pairs
    /// `(a, b)` meaning `a < b`.  When `symmetrize` is set, the mirrored
    /// pairs `(-b, -a)` are added automatically; otherwise the closure
    /// must already be symmetric under negation.
    pub fn from_covers(n: usize, covers: &[(i32, i32)], symmetrize: bool) -> Result<Self> {
        let mut p = BnPoset::antichain(n);
        let bound = n as i32;
        for &(a, b) in covers {
            if a.abs() > bound || b.abs() > bound {
                return Err(Error::IndexOutOfRange(
                    if a.abs() > bound { a } else { b },
                    format!("cover entries must lie in [-{n}, {n}]"),
                ));
            }
            let k = p.idx(a, b);
            p.rel[k] = true;
            if symmetrize {
                let k = p.idx(-b, -a);
                p.rel[k] = true;
            }
        }
        p.close();
        p.validate()?;
        Ok(p)
    }

    /// The total `B_n` order induced by a signed permutation:
    /// `w(-n) < ... < w(-1) < 0 < w(1) < ... < w(n)`.
    pub fn from_linear(w: &SignedPerm) -> Self {
        let n = w.rank();
        let mut p = BnPoset::antichain(n);
        let chain: Vec<i32> = (-(n as i32)..=n as i32).map(|i| w.apply(i)).collect();
        for a in 0..chain.len() {
            for b in (a + 1)..chain.len() {
                let k = p.idx(chain[a], chain[b]);
                p.rel[k] = true;
            }
        }
        p
    }

    /// Transitive closure in place.
    fn close(&mut self) {
        let m = 2 * self.n + 1;
        for k in 0..m {
            for i in 0..m {
                if self.rel[i * m + k] {
                    for j in 0..m {
                        if self.rel[k * m + j] {
                            self.rel[i * m + j] = true;
                        }
                    }
                }
            }
        }
    }

    /// Checks antisymmetry and negation symmetry of the closed relation.
    fn validate(&self) -> Result<()> {
        let n = self.n as i32;
        for i in -n..=n {
            for j in -n..=n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Err(Error::RelationCycle(i, j));
                }
                if self.leq(i, j) && !self.leq(-j, -i) {
                    return Err(Error::AsymmetricRelation(i, j, -j, -i));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn leq(&self, i: i32, j: i32) -> bool {
        self.rel[self.idx(i, j)]
    }

    pub fn lt(&self, i: i32, j: i32) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: i32, j: i32) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// All strict relation pairs `(a, b)` with `a < b`.
    pub fn strict_pairs(&self) -> Vec<(i32, i32)> {
        let n = self.n as i32;
        let mut out = Vec::new();
        for i in -n..=n {
            for j in -n..=n {
                if self.lt(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Cover relations of the Hasse diagram.
    pub fn covers(&self) -> Vec<(i32, i32)> {
        let n = self.n as i32;
        let mut out = Vec::new();
        for i in -n..=n {
            for j in -n..=n {
                if self.lt(i, j)
                    && !(-n..=n).any(|k| k != i && k != j && self.lt(i, k) && self.lt(k, j))
                {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The dual poset (all relations reversed).  For a `B_n` poset this
    /// coincides with relabeling through the reversing bijection.
    pub fn dual(&self) -> BnPoset {
        let n = self.n as i32;
        let mut p = BnPoset::antichain(self.n);
        for i in -n..=n {
            for j in -n..=n {
                if self.leq(j, i) {
                    let k = p.idx(i, j);
                    p.rel[k] = true;
                }
            }
        }
        p
    }

    /// Type B linear extensions, as signed permutations in lexicographic
    /// window order.  The extension is built from the bottom: at each step
    /// any unplaced nonzero element minimal among the unplaced elements
    /// and 0 may go next; placing `x` below 0 forces `-x` at the mirrored
    /// position above.
    pub fn extensions(&self) -> Vec<SignedPerm> {
        let n = self.n as i32;
        let mut live: Vec<i32> = (-n..=n).filter(|&x| x != 0).collect();
        let mut seq: Vec<i32> = Vec::with_capacity(self.n);
        let mut out = Vec::new();
        self.extend_rec(&mut live, &mut seq, &mut out);
        out.sort();
        out
    }

    fn extend_rec(&self, live: &mut Vec<i32>, seq: &mut Vec<i32>, out: &mut Vec<SignedPerm>) {
        if seq.len() == self.n {
            let window: Vec<i32> = (0..self.n).map(|i| -seq[self.n - 1 - i]).collect();
            out.push(SignedPerm::from_window(window).expect("valid window"));
            return;
        }
        let snapshot = live.clone();
        for &x in &snapshot {
            if self.lt(0, x) {
                continue;
            }
            if snapshot.iter().any(|&z| z != x && self.lt(z, x)) {
                continue;
            }
            live.retain(|&z| z != x && z != -x);
            seq.push(x);
            self.extend_rec(live, seq, out);
            seq.pop();
            *live = snapshot.clone();
        }
    }

    /// The enumerator `K^B_P` in the type B fundamental basis: the sum of
    /// `F^B` over the right descent sets of the linear extensions.
    pub fn kbp(&self) -> QSymB {
        let mut f = QSymB::zero(BasisB::Fundamental);
        for w in self.extensions() {
            f.add_term(
                CompB::from_set(&w.descents(), self.n).unwrap(),
                BigInt::from(1),
            );
        }
        f
    }

    /// All order-preserving symmetric maps with values in `[-v, v]`:
    /// `f(-i) = -f(i)`, `f` weakly increasing along the order and strictly
    /// increasing on relations `i < j` that invert the integer order
    /// (`i > j` as integers).  Each map is recorded by `(f(1), ..., f(n))`.
    pub fn p_partitions_bounded(&self, v: i32) -> Vec<Vec<i32>> {
        let n = self.n;
        let pairs = self.strict_pairs();
        let mut vals = vec![0i32; n];
        let mut out = Vec::new();
        fn full(f: &[i32], i: i32) -> i32 {
            if i == 0 {
                0
            } else if i > 0 {
                f[(i - 1) as usize]
            } else {
                -f[(-i - 1) as usize]
            }
        }
        fn go(
            k: usize,
            n: usize,
            v: i32,
            pairs: &[(i32, i32)],
            vals: &mut Vec<i32>,
            out: &mut Vec<Vec<i32>>,
        ) {
            if k == n {
                for &(i, j) in pairs {
                    let (fi, fj) = (full(vals, i), full(vals, j));
                    if fi > fj || (i > j && fi >= fj) {
                        return;
                    }
                }
                out.push(vals.clone());
                return;
            }
            for x in -v..=v {
                vals[k] = x;
                go(k + 1, n, v, pairs, vals, out);
            }
        }
        go(0, n, v, &pairs, &mut vals, &mut out);
        out.sort();
        out
    }

    /// The truncated enumerator computed directly from bounded
    /// P-partitions: the sum over maps of `x_{|f(1)|} ... x_{|f(n)|}`,
    /// a polynomial in `x_0..x_v`.  Serves as an independent oracle for
    /// [`Self::kbp`].
    pub fn kbp_from_partitions(&self, v: i32) -> Poly {
        let mut poly = Poly::zero(v as usize + 1);
        for f in self.p_partitions_bounded(v) {
            let mut expo = vec![0u32; v as usize + 1];
            for &x in &f {
                expo[x.unsigned_abs() as usize] += 1;
            }
            poly.add_term(expo, BigInt::from(1));
        }
        poly
    }

    /// Ordered pairs `(u, v)` of distinct nonzero elements whose relative
    /// order differs across two linear extensions.
    pub fn inc_b(&self) -> Vec<(i32, i32)> {
        let exts = self.extensions();
        let n = self.n as i32;
        let mut out = Vec::new();
        for u in -n..=n {
            for v in -n..=n {
                if u == 0 || v == 0 || u == v {
                    continue;
                }
                let mut before = false;
                let mut after = false;
                for w in &exts {
                    let inv = w.inverse();
                    if inv.apply(u) < inv.apply(v) {
                        before = true;
                    } else {
                        after = true;
                    }
                }
                if before && after {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Extends the order by `u < v` (and the mirrored `-v < -u`), closing
    /// transitively.  The pair must lie in [`Self::inc_b`].
    pub fn extend_pair(&self, u: i32, v: i32) -> Result<BnPoset> {
        if !self.inc_b().contains(&(u, v)) {
            return Err(Error::PairNotIncB(u, v));
        }
        let mut p = self.clone();
        let k = p.idx(u, v);
        p.rel[k] = true;
        let k = p.idx(-v, -u);
        p.rel[k] = true;
        p.close();
        p.validate()?;
        Ok(p)
    }

    /// The disjoint union with a plain poset `q` on `[1, k]`: the result
    /// has rank `n + k`, keeps `self` on `{-n, ..., n}`, installs `q`
    /// shifted to `{n+1, ..., n+k}`, and mirrors it on the negatives; no
    /// relations connect the three blocks.
    pub fn disjoint_union_b(&self, q: &FinitePoset) -> Result<BnPoset> {
        let m = self.n as i32;
        let k = q.size() as i32;
        if q.elements() != (1..=k).collect::<Vec<_>>() {
            return Err(Error::Unsupported(
                "disjoint union needs the type A factor on ground set [1, k]".into(),
            ));
        }
        let mut p = BnPoset::antichain((m + k) as usize);
        for i in -m..=m {
            for j in -m..=m {
                if self.leq(i, j) {
                    let t = p.idx(i, j);
                    p.rel[t] = true;
                }
            }
        }
        for i in 1..=k {
            for j in 1..=k {
                if q.leq(i, j) {
                    let t = p.idx(i + m, j + m);
                    p.rel[t] = true;
                    let t = p.idx(-j - m, -i - m);
                    p.rel[t] = true;
                }
            }
        }
        p.validate()?;
        Ok(p)
    }
}

impl fmt::Display for BnPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BnPoset(n={}; covers:", self.n)?;
        for (k, (a, b)) in self.covers().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, " {a}<{b}")?;
        }
        write!(f, ")")
    }
}

/// A finite poset on an arbitrary sorted ground set of integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    elems: Vec<i32>,
    rel: Vec<bool>,
}

impl FinitePoset {
    fn pos(&self, x: i32) -> usize {
        self.elems.binary_search(&x).expect("element of ground set")
    }

    /// The antichain on a sorted, duplicate-free ground set.
    pub fn antichain(elems: Vec<i32>) -> Result<Self> {
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Unsupported(
                "ground set must be sorted and duplicate-free".into(),
            ));
        }
        let k = elems.len();
        let mut rel = vec![false; k * k];
        for i in 0..k {
            rel[i * k + i] = true;
        }
        Ok(FinitePoset { elems, rel })
    }

    /// Builds a poset from strict pairs `(a, b)` meaning `a < b`.
    pub fn from_covers(elems: Vec<i32>, covers: &[(i32, i32)]) -> Result<Self> {
        let mut p = FinitePoset::antichain(elems)?;
        let k = p.elems.len();
        for &(a, b) in covers {
            if !p.elems.contains(&a) || !p.elems.contains(&b) {
                return Err(Error::IndexOutOfRange(
                    if p.elems.contains(&a) { b } else { a },
                    "cover entry outside ground set".into(),
                ));
            }
            let (i, j) = (p.pos(a), p.pos(b));
            p.rel[i * k + j] = true;
        }
        // Warshall closure.
        for t in 0..k {
            for i in 0..k {
                if p.rel[i * k + t] {
                    for j in 0..k {
                        if p.rel[t * k + j] {
                            p.rel[i * k + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                if i != j && p.rel[i * k + j] && p.rel[j * k + i] {
                    return Err(Error::RelationCycle(p.elems[i], p.elems[j]));
                }
            }
        }
        Ok(p)
    }

    /// The poset on `[1, k]` with no relations.
    pub fn antichain_on(k: usize) -> Self {
        FinitePoset::antichain((1..=k as i32).collect()).unwrap()
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> Vec<i32> {
        self.elems.clone()
    }

    pub fn leq(&self, a: i32, b: i32) -> bool {
        let k = self.elems.len();
        self.rel[self.pos(a) * k + self.pos(b)]
    }

    pub fn lt(&self, a: i32, b: i32) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn strict_pairs(&self) -> Vec<(i32, i32)> {
        let mut out = Vec::new();
        for &a in &self.elems {
            for &b in &self.elems {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn covers(&self) -> Vec<(i32, i32)> {
        let mut out = Vec::new();
        for &a in &self.elems {
            for &b in &self.elems {
                if self.lt(a, b) && !self.elems.iter().any(|&c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Relabels the ground set order-isomorphically (by integer sort) to
    /// `[1, k]`.
    pub fn standardize(&self) -> FinitePoset {
        let k = self.elems.len();
        let mut p = FinitePoset::antichain_on(k);
        for i in 0..k {
            for j in 0..k {
                if self.rel[i * k + j] {
                    p.rel[i * k + j] = true;
                }
            }
        }
        p
    }

    /// The dual poset: all relations reversed, same ground set.
    pub fn dual(&self) -> FinitePoset {
        let k = self.elems.len();
        let mut p = self.clone();
        for i in 0..k {
            for j in 0..k {
                p.rel[i * k + j] = self.rel[j * k + i];
            }
        }
        p
    }

    /// The reverse of a poset on `[1, k]`: relabel through `x -> k+1-x`.
    pub fn reverse(&self) -> Result<FinitePoset> {
        let k = self.elems.len() as i32;
        if self.elements() != (1..=k).collect::<Vec<_>>() {
            return Err(Error::Unsupported("reverse needs ground set [1, k]".into()));
        }
        let mut p = FinitePoset::antichain_on(k as usize);
        for a in 1..=k {
            for b in 1..=k {
                if self.leq(k + 1 - a, k + 1 - b) {
                    let (i, j) = (p.pos(a), p.pos(b));
                    p.rel[i * (k as usize) + j] = true;
                }
            }
        }
        Ok(p)
    }

    /// Linear extensions of a poset on `[1, k]`, as the permutations
    /// listing the elements from bottom to top, in lexicographic order.
    pub fn extensions(&self) -> Result<Vec<Perm>> {
        let k = self.elems.len() as i32;
        if self.elements() != (1..=k).collect::<Vec<_>>() {
            return Err(Error::Unsupported(
                "linear extensions need ground set [1, k]".into(),
            ));
        }
        let mut live: Vec<i32> = (1..=k).collect();
        let mut seq = Vec::with_capacity(k as usize);
        let mut out = Vec::new();
        self.ext_rec(&mut live, &mut seq, &mut out);
        out.sort();
        Ok(out)
    }

    fn ext_rec(&self, live: &mut Vec<i32>, seq: &mut Vec<i32>, out: &mut Vec<Perm>) {
        if live.is_empty() {
            out.push(Perm::from_word(seq.clone()).expect("valid word"));
            return;
        }
        let snapshot = live.clone();
        for &x in &snapshot {
            if snapshot.iter().any(|&z| z != x && self.lt(z, x)) {
                continue;
            }
            live.retain(|&z| z != x);
            seq.push(x);
            self.ext_rec(live, seq, out);
            seq.pop();
            *live = snapshot.clone();
        }
    }
}

impl fmt::Display for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({:?}; covers:", self.elems)?;
        for (k, (a, b)) in self.covers().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, " {a}<{b}")?;
        }
        write!(f, ")")
    }
}

/// Exhaustively enumerates all `B_n` posets for tiny ranks by iterating
/// over negation-symmetric strict relations and keeping the partial
/// orders.  Capped at `n <= 2`.
pub fn all_bn_posets(n: usize) -> Result<Vec<BnPoset>> {
    if n > 2 {
        return Err(Error::RankTooLarge(n, 2));
    }
    let nn = n as i32;
    // Orbits of ordered pairs under (a, b) -> (-b, -a).
    let mut orbits: Vec<Vec<(i32, i32)>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for a in -nn..=nn {
        for b in -nn..=nn {
            if a == b || seen.contains(&(a, b)) {
                continue;
            }
            seen.insert((a, b));
            seen.insert((-b, -a));
            if (a, b) == (-b, -a) {
                orbits.push(vec![(a, b)]);
            } else {
                orbits.push(vec![(a, b), (-b, -a)]);
            }
        }
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << orbits.len()) {
        let mut pairs = Vec::new();
        for (k, orbit) in orbits.iter().enumerate() {
            if mask >> k & 1 == 1 {
                pairs.extend_from_slice(orbit);
            }
        }
        // The mask encodes the full strict relation; a candidate counts
        // only if it is already transitively closed and acyclic, so each
        // poset arises exactly once.
        if let Ok(p) = BnPoset::from_covers(n, &pairs, false) {
            if p.strict_pairs() == {
                let mut q = pairs.clone();
                q.sort_unstable();
                q
            } {
                out.push(p);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(w: &[i32]) -> SignedPerm {
        SignedPerm::from_window(w.to_vec()).unwrap()
    }

    // Rank 2 poset with 1 and -2 below 0 (and mirrored relations).
    fn vee() -> BnPoset {
        BnPoset::from_covers(2, &[(1, 0), (-2, 0), (0, -1), (0, 2)], false).unwrap()
    }

    #[test]
    fn extensions_of_the_vee_poset() {
        assert_eq!(vee().extensions(), vec![sp(&[-1, 2]), sp(&[2, -1])]);
    }

    #[test]
    fn extensions_of_chains_and_antichains() {
        let chain1 = BnPoset::from_covers(1, &[(-1, 0), (0, 1)], false).unwrap();
        assert_eq!(chain1.extensions(), vec![sp(&[1])]);
        let anti = BnPoset::antichain(2);
        assert_eq!(anti.extensions().len(), 8);
        let anti3 = BnPoset::antichain(3);
        assert_eq!(anti3.extensions().len(), 48);
    }

    #[test]
    fn from_linear_has_unique_extension() {
        for w in crate::perm::all_signed_perms(2).unwrap() {
            let l = BnPoset::from_linear(&w);
            assert_eq!(l.extensions(), vec![w.clone()], "L_{w}");
        }
    }

    #[test]
    fn symmetrize_flag_mirrors_covers() {
        let p = BnPoset::from_covers(2, &[(1, 0), (-2, 0)], true).unwrap();
        assert_eq!(p, vee());
        // Without the flag the asymmetric input is rejected.
        assert!(BnPoset::from_covers(2, &[(1, 0)], false).is_err());
    }

    #[test]
    fn cyclic_input_is_rejected() {
        assert!(BnPoset::from_covers(2, &[(1, 2), (2, 1)], true).is_err());
        // A cycle through the mirror: 1 < 2 and -1 < -2 closes to a cycle
        // only if it relates 2 and 1 both ways; here it does not.
        assert!(BnPoset::from_covers(2, &[(1, 2), (-1, -2)], true).is_err());
    }

    #[test]
    fn kbp_of_the_vee_poset() {
        // Extensions [-1,2] and [2,-1] have descent sets {0} and {1}.
        let f = vee().kbp();
        let terms = f.iter_terms();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].0, CompB::from_set(&[0], 2).unwrap());
        assert_eq!(terms[1].0, CompB::from_set(&[1], 2).unwrap());
    }

    #[test]
    fn kbp_matches_bounded_partitions() {
        for p in [
            vee(),
            BnPoset::antichain(2),
            BnPoset::from_covers(2, &[(-2, 1), (1, 0), (0, -1), (-1, 2)], false).unwrap(),
            BnPoset::from_covers(1, &[(-1, 1)], false).unwrap(),
        ] {
            let v = p.rank() as i32 + 1;
            assert_eq!(
                p.kbp().expand(v as usize),
                p.kbp_from_partitions(v),
                "poset {p}"
            );
        }
    }

    #[test]
    fn partitions_decompose_over_extensions() {
        // Bounded P-partitions are exactly the disjoint union of the
        // bounded partitions of the linear extensions.
        for p in [vee(), BnPoset::antichain(2)] {
            let v = 3;
            let all = p.p_partitions_bounded(v);
            let mut pieces: Vec<Vec<i32>> = Vec::new();
            for w in p.extensions() {
                pieces.extend(BnPoset::from_linear(&w).p_partitions_bounded(v));
            }
            pieces.sort();
            // Disjointness: concatenation has no duplicates.
            let mut dedup = pieces.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), pieces.len(), "overlap for {p}");
            assert_eq!(all, pieces, "cover failure for {p}");
        }
    }

    #[test]
    fn inc_b_and_extend_pair() {
        let p = vee();
        let inc = p.inc_b();
        // 1 and -2 are the incomparable lower pair; mirrors included.
        assert!(inc.contains(&(1, -2)) && inc.contains(&(-2, 1)));
        assert!(inc.contains(&(2, -1)) && inc.contains(&(-1, 2)));
        assert!(!inc.contains(&(1, 0)));
        let q = p.extend_pair(-2, 1).unwrap();
        assert_eq!(q.extensions(), vec![sp(&[-1, 2])]);
        let r = p.extend_pair(1, -2).unwrap();
        assert_eq!(r.extensions(), vec![sp(&[2, -1])]);
        assert!(p.extend_pair(1, 0).is_err());
    }

    #[test]
    fn extension_counts_split_across_extend_pair() {
        // |ext(P)| = |ext(P + (u,v))| + |ext(P + (v,u))| for (u,v) in inc^B.
        for p in [BnPoset::antichain(2), vee()] {
            for (u, v) in p.inc_b() {
                if u < v {
                    let a = p.extend_pair(u, v).unwrap().extensions().len();
                    let b = p.extend_pair(v, u).unwrap().extensions().len();
                    assert_eq!(p.extensions().len(), a + b, "pair ({u},{v}) of {p}");
                }
            }
        }
    }

    #[test]
    fn disjoint_union_blocks_stay_independent() {
        let p1 = BnPoset::from_covers(1, &[(-1, 0), (0, 1)], false).unwrap();
        let p2 = FinitePoset::from_covers(vec![1, 2], &[(2, 1)]).unwrap();
        let u = p1.disjoint_union_b(&p2).unwrap();
        assert_eq!(u.rank(), 3);
        assert!(u.leq(-1, 0) && u.leq(0, 1));
        assert!(u.leq(3, 2) && u.leq(-2, -3));
        assert!(!u.comparable(1, 2) && !u.comparable(0, 3));
    }

    #[test]
    fn finite_poset_extensions_and_standardize() {
        let p = FinitePoset::from_covers(vec![1, 2, 3], &[(2, 1)]).unwrap();
        let exts = p.extensions().unwrap();
        let words: Vec<Vec<i32>> = exts.iter().map(|w| w.word().to_vec()).collect();
        assert_eq!(words, vec![vec![2, 1, 3], vec![2, 3, 1], vec![3, 2, 1]]);
        let q = FinitePoset::from_covers(vec![-3, -1], &[(-1, -3)]).unwrap();
        let s = q.standardize();
        assert_eq!(s.elements(), vec![1, 2]);
        assert!(s.lt(2, 1));
    }

    #[test]
    fn finite_poset_dual_and_reverse() {
        let p = FinitePoset::from_covers(vec![1, 2, 3], &[(1, 2), (2, 3)]).unwrap();
        assert!(p.dual().lt(3, 1));
        let r = p.reverse().unwrap();
        // x <= y in reverse iff (4-x) <= (4-y) originally.
        assert!(r.lt(3, 2) && r.lt(2, 1));
    }

    #[test]
    fn all_b1_posets() {
        // On {-1, 0, 1}: the antichain, two chains through 0, and the
        // two-relation order -1 < 1 without 0.
        let all = all_bn_posets(1).unwrap();
        assert_eq!(all.len(), 5);
        let anti = all.iter().filter(|p| p.strict_pairs().is_empty()).count();
        assert_eq!(anti, 1);
    }

    #[test]
    fn all_b2_posets_have_valid_extensions() {
        let all = all_bn_posets(2).unwrap();
        // Each one's extensions refine it and are themselves valid.
        for p in all.iter().take(50) {
            for w in p.extensions() {
                let l = BnPoset::from_linear(&w);
                for (a, b) in p.strict_pairs() {
                    assert!(l.lt(a, b), "extension {w} of {p}");
                }
            }
        }
        assert!(!all.is_empty());
    }
}
