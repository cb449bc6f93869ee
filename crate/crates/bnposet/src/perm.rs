//! Signed permutations (the hyperoctahedral group) and ordinary permutations.
//!
//! A signed permutation of rank `n` is a bijection `w` of `{-n, ..., n}`
//! with `w(-i) = -w(i)`; it is stored by its window `[w(1), ..., w(n)]`.
//! The group is generated by `s_0 = [-1, 2, ..., n]` and the adjacent
//! transpositions `s_1, ..., s_{n-1}`.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Cap on ranks for exhaustive group enumeration (the group has `2^n n!`
/// elements, 46080 at the cap).
pub const MAX_ENUM_RANK: usize = 6;

/// A signed permutation, stored as its window `[w(1), ..., w(n)]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    /// Builds a signed permutation from its window notation.
    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(Error::InvalidWindow(window));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { window })
    }

    /// The identity element of rank `n`.
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            window: (1..=n as i32).collect(),
        }
    }

    /// The longest element `w_0 = [-1, -2, ..., -n]`.
    pub fn longest(n: usize) -> Self {
        SignedPerm {
            window: (1..=n as i32).map(|i| -i).collect(),
        }
    }

    /// The generator `s_0` (rank `n`), which negates the first window entry.
    /// For `1 <= i < n`, `s_i` swaps window slots `i` and `i + 1`.
    pub fn gen(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::BadGenerator(i, n));
        }
        let mut w = Self::identity(n);
        if i == 0 {
            w.window[0] = -1;
        } else {
            w.window.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Applies the permutation to `i` in `{-n, ..., n}`.
    pub fn apply(&self, i: i32) -> i32 {
        if i == 0 {
            0
        } else if i > 0 {
            self.window[(i - 1) as usize]
        } else {
            -self.window[(-i - 1) as usize]
        }
    }

    /// Group inverse.
    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut window = vec![0; n];
        for (k, &v) in self.window.iter().enumerate() {
            let slot = (v.unsigned_abs() - 1) as usize;
            window[slot] = if v > 0 { k as i32 + 1 } else { -(k as i32 + 1) };
        }
        SignedPerm { window }
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let window = (1..=self.rank() as i32)
            .map(|i| self.apply(other.apply(i)))
            .collect();
        Ok(SignedPerm { window })
    }

    /// Right multiplication by the generator `s_i`.
    pub fn right_mul_gen(&self, i: usize) -> Result<Self> {
        if i >= self.rank() {
            return Err(Error::BadGenerator(i, self.rank()));
        }
        let mut w = self.clone();
        if i == 0 {
            w.window[0] = -w.window[0];
        } else {
            w.window.swap(i - 1, i);
        }
        Ok(w)
    }

    /// Right descent set `{i in [0, n-1] : w(i) > w(i+1)}`, with `w(0) = 0`.
    pub fn descents(&self) -> Vec<usize> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            let prev = if i == 0 { 0 } else { self.window[i - 1] };
            if prev > self.window[i] {
                out.push(i);
            }
        }
        out
    }

    /// Right ascent set, the complement of [`Self::descents`] in `[0, n-1]`.
    pub fn ascents(&self) -> Vec<usize> {
        let des = self.descents();
        (0..self.rank()).filter(|i| !des.contains(i)).collect()
    }

    /// Inversion set as a set of reflections, encoded as a bitset.
    ///
    /// The reflections are `t_{(i,j)} = (i,j)(-i,-j)` for `1 <= i < j <= n`
    /// and `t_{(i,-k)} = (i,-k)(-i,k)` for `1 <= i <= k <= n` (so
    /// `t_{(i,-i)} = (i,-i)`), `n^2` reflections in total.  A reflection
    /// `t_{(i,j)}` with `j > 0` lies in the inversion set iff
    /// `w^{-1}(i) > w^{-1}(j)`; one with `j = -k < 0` lies in it iff
    /// `w^{-1}(-k) > w^{-1}(i)`.
    pub fn inversion_set(&self) -> ReflSet {
        let n = self.rank();
        let inv = self.inverse();
        let mut set = ReflSet::empty(n);
        for i in 1..=n as i32 {
            for j in (i + 1)..=n as i32 {
                if inv.apply(i) > inv.apply(j) {
                    set.insert(Reflection::positive(i, j));
                }
            }
            for k in i..=n as i32 {
                if inv.apply(-k) > inv.apply(i) {
                    set.insert(Reflection::negative(i, k));
                }
            }
        }
        set
    }

    /// Coxeter length, i.e. the size of the inversion set.
    pub fn length(&self) -> usize {
        self.inversion_set().len()
    }

    /// Right weak order: `self` is below `other` iff the inversion sets nest.
    pub fn leq_weak_r(&self, other: &Self) -> bool {
        self.rank() == other.rank() && self.inversion_set().subset_of(&other.inversion_set())
    }

    /// Number of negative window entries.
    pub fn neg_count(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SignedPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|u| u.strip_suffix(']'))
            .unwrap_or(t);
        let mut window = Vec::new();
        for piece in inner.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            window.push(
                piece
                    .parse::<i32>()
                    .map_err(|e| Error::Parse(format!("bad window entry {piece:?}: {e}")))?,
            );
        }
        SignedPerm::from_window(window)
    }
}

/// One of the `n^2` reflections of the rank-`n` hyperoctahedral group,
/// in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Reflection {
    /// `t_{(i,j)} = (i,j)(-i,-j)` with `1 <= i < j`.
    Positive(i32, i32),
    /// `t_{(i,-k)} = (i,-k)(-i,k)` with `1 <= i <= k`.
    Negative(i32, i32),
}

impl Reflection {
    pub fn positive(i: i32, j: i32) -> Self {
        debug_assert!(1 <= i && i < j);
        Reflection::Positive(i, j)
    }

    pub fn negative(i: i32, k: i32) -> Self {
        debug_assert!(1 <= i && i <= k);
        Reflection::Negative(i, k)
    }

    /// A dense index in `0..n^2`.
    pub fn index(&self, n: usize) -> usize {
        let n = n as i32;
        match *self {
            Reflection::Positive(i, j) => ((i - 1) * n - i * (i - 1) / 2 + (j - i - 1)) as usize,
            Reflection::Negative(i, k) => {
                (n * (n - 1) / 2 + (i - 1) * (n + 1) - (i - 1) * i / 2 + (k - i)) as usize
            }
        }
    }

    /// Enumerates all `n^2` reflections in index order.
    pub fn all(n: usize) -> Vec<Reflection> {
        let n = n as i32;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                out.push(Reflection::Positive(i, j));
            }
        }
        for i in 1..=n {
            for k in i..=n {
                out.push(Reflection::Negative(i, k));
            }
        }
        out
    }
}

/// A set of reflections for a fixed rank, as a bitset (`n <= 8`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ReflSet {
    n: usize,
    bits: u64,
}

impl ReflSet {
    pub fn empty(n: usize) -> Self {
        assert!(n * n <= 64, "reflection bitset supports rank <= 8");
        ReflSet { n, bits: 0 }
    }

    pub fn insert(&mut self, t: Reflection) {
        self.bits |= 1 << t.index(self.n);
    }

    pub fn contains(&self, t: Reflection) -> bool {
        self.bits >> t.index(self.n) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn subset_of(&self, other: &ReflSet) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    /// Lists the members in index order.
    pub fn members(&self) -> Vec<Reflection> {
        Reflection::all(self.n)
            .into_iter()
            .filter(|t| self.contains(*t))
            .collect()
    }
}

/// Enumerates the whole rank-`n` hyperoctahedral group in lexicographic
/// window order.
pub fn all_signed_perms(n: usize) -> Result<Vec<SignedPerm>> {
    if n > MAX_ENUM_RANK {
        return Err(Error::RankTooLarge(n, MAX_ENUM_RANK));
    }
    let mut out = Vec::new();
    let mut window = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn go(n: usize, window: &mut Vec<i32>, used: &mut Vec<bool>, out: &mut Vec<SignedPerm>) {
        if window.len() == n {
            out.push(SignedPerm {
                window: window.clone(),
            });
            return;
        }
        // Lexicographic on i32 windows: most-negative first.
        for v in (-(n as i32)..=n as i32).filter(|&v| v != 0) {
            let a = v.unsigned_abs() as usize;
            if !used[a] {
                used[a] = true;
                window.push(v);
                go(n, window, used, out);
                window.pop();
                used[a] = false;
            }
        }
    }
    go(n, &mut window, &mut used, &mut out);
    Ok(out)
}

/// The closed interval `[u, w]` in right weak order, in lexicographic
/// window order.  Errors unless `u <= w`.
pub fn interval_weak_r(u: &SignedPerm, w: &SignedPerm) -> Result<Vec<SignedPerm>> {
    if u.rank() != w.rank() {
        return Err(Error::RankMismatch(u.rank(), w.rank()));
    }
    if !u.leq_weak_r(w) {
        return Err(Error::NotComparable);
    }
    let top = w.inversion_set();
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(u.clone());
    queue.push_back(u.clone());
    while let Some(v) = queue.pop_front() {
        for i in v.ascents() {
            let up = v.right_mul_gen(i)?;
            if up.inversion_set().subset_of(&top) && seen.insert(up.clone()) {
                queue.push_back(up);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Edges of the right weak order Hasse diagram on the full group:
/// pairs `(w, w s_i)` with `i` an ascent of `w`.
pub fn permutohedron_edges(n: usize) -> Result<Vec<(SignedPerm, SignedPerm)>> {
    let mut edges = Vec::new();
    for w in all_signed_perms(n)? {
        for i in w.ascents() {
            let up = w.right_mul_gen(i)?;
            edges.push((w.clone(), up));
        }
    }
    Ok(edges)
}

/// An ordinary permutation of `{1, ..., n}`, stored in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    word: Vec<i32>,
}

impl Perm {
    pub fn from_word(word: Vec<i32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v < 1 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidWindow(word));
            }
            seen[v as usize] = true;
        }
        Ok(Perm { word })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            word: (1..=n as i32).collect(),
        }
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Perm {
            word: (1..=n as i32).rev().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn apply(&self, i: i32) -> i32 {
        self.word[(i - 1) as usize]
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.rank()];
        for (k, &v) in self.word.iter().enumerate() {
            word[(v - 1) as usize] = k as i32 + 1;
        }
        Perm { word }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let word = (1..=self.rank() as i32)
            .map(|i| self.apply(other.apply(i)))
            .collect();
        Ok(Perm { word })
    }

    /// Right multiplication by the adjacent transposition `s_i`,
    /// `1 <= i <= n-1`, which swaps slots `i` and `i + 1`.
    pub fn right_mul_gen(&self, i: usize) -> Result<Self> {
        if i < 1 || i >= self.rank() {
            return Err(Error::BadGenerator(i, self.rank()));
        }
        let mut w = self.clone();
        w.word.swap(i - 1, i);
        Ok(w)
    }

    /// Descent set `{i in [1, n-1] : w(i) > w(i+1)}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.rank())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    pub fn length(&self) -> usize {
        let mut inv = 0;
        for a in 0..self.rank() {
            for b in (a + 1)..self.rank() {
                if self.word[a] > self.word[b] {
                    inv += 1;
                }
            }
        }
        inv
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Enumerates the symmetric group of rank `n` in lexicographic order.
pub fn all_perms(n: usize) -> Result<Vec<Perm>> {
    if n > MAX_ENUM_RANK {
        return Err(Error::RankTooLarge(n, MAX_ENUM_RANK));
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn go(n: usize, word: &mut Vec<i32>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if word.len() == n {
            out.push(Perm { word: word.clone() });
            return;
        }
        for v in 1..=n as i32 {
            if !used[v as usize] {
                used[v as usize] = true;
                word.push(v);
                go(n, word, used, out);
                word.pop();
                used[v as usize] = false;
            }
        }
    }
    go(n, &mut word, &mut used, &mut out);
    Ok(out)
}

/// Standardization of a word with distinct entries: the permutation whose
/// `k`-th letter is the rank (from 1) of the `k`-th letter of `word`.
pub fn standardize(word: &[i32]) -> Perm {
    let mut sorted: Vec<i32> = word.to_vec();
    sorted.sort_unstable();
    let word = word
        .iter()
        .map(|v| sorted.binary_search(v).expect("distinct entries") as i32 + 1)
        .collect();
    Perm { word }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(w: &[i32]) -> SignedPerm {
        SignedPerm::from_window(w.to_vec()).unwrap()
    }

    #[test]
    fn compose_follows_right_to_left_convention() {
        let a = sp(&[3, 1, -2, 5, 4]);
        let b = sp(&[1, 2, 5, -4, 3]);
        assert_eq!(a.compose(&b).unwrap(), sp(&[3, 1, 4, -5, -2]));
    }

    #[test]
    fn descent_sets_of_rank_two_windows() {
        assert_eq!(sp(&[-1, 2]).descents(), vec![0]);
        assert_eq!(sp(&[2, -1]).descents(), vec![1]);
        assert_eq!(sp(&[1, 2]).descents(), Vec::<usize>::new());
        assert_eq!(sp(&[-2, -1]).descents(), vec![0]);
        assert_eq!(sp(&[-2, 1]).descents(), vec![0]);
        assert_eq!(sp(&[-1, -2]).descents(), vec![0, 1]);
    }

    #[test]
    fn longest_element_has_full_inversion_set() {
        for n in 1..=4 {
            let w0 = SignedPerm::longest(n);
            assert_eq!(w0.length(), n * n);
            assert_eq!(w0.descents(), (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn length_matches_inversions_plus_negative_sum() {
        // |I^B(w)| agrees with inv(w) + sum of |w_i| over negative entries.
        for w in all_signed_perms(3).unwrap() {
            let win = w.window();
            let mut inv = 0usize;
            for a in 0..3 {
                for b in (a + 1)..3 {
                    if win[a] > win[b] {
                        inv += 1;
                    }
                }
            }
            let negsum: usize = win
                .iter()
                .filter(|&&v| v < 0)
                .map(|v| v.unsigned_abs() as usize)
                .sum();
            assert_eq!(w.length(), inv + negsum, "window {w}");
        }
    }

    #[test]
    fn generators_are_involutions_and_satisfy_braid_relations() {
        let n = 4;
        let id = SignedPerm::identity(n);
        for i in 0..n {
            let s = SignedPerm::gen(n, i).unwrap();
            assert_eq!(s.compose(&s).unwrap(), id);
        }
        let s0 = SignedPerm::gen(n, 0).unwrap();
        let s1 = SignedPerm::gen(n, 1).unwrap();
        // Length-four relation at the left end of the diagram.
        let lhs = s0
            .compose(&s1)
            .unwrap()
            .compose(&s0)
            .unwrap()
            .compose(&s1)
            .unwrap();
        let rhs = s1
            .compose(&s0)
            .unwrap()
            .compose(&s1)
            .unwrap()
            .compose(&s0)
            .unwrap();
        assert_eq!(lhs, rhs);
        for i in 1..n - 1 {
            let a = SignedPerm::gen(n, i).unwrap();
            let b = SignedPerm::gen(n, i + 1).unwrap();
            let lhs = a.compose(&b).unwrap().compose(&a).unwrap();
            let rhs = b.compose(&a).unwrap().compose(&b).unwrap();
            assert_eq!(lhs, rhs, "braid at {i}");
        }
        for i in 0..n {
            for j in 0..n {
                if i + 2 <= j {
                    let a = SignedPerm::gen(n, i).unwrap();
                    let b = SignedPerm::gen(n, j).unwrap();
                    assert_eq!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
                }
            }
        }
    }

    #[test]
    fn right_multiplication_by_ascent_raises_length_by_one() {
        for w in all_signed_perms(3).unwrap() {
            for i in 0..3 {
                let v = w.right_mul_gen(i).unwrap();
                if w.descents().contains(&i) {
                    assert_eq!(v.length() + 1, w.length());
                } else {
                    assert_eq!(v.length(), w.length() + 1);
                }
            }
        }
    }

    #[test]
    fn weak_order_containment_matches_prefix_characterization() {
        // u <= w in right weak order iff some reduced word for w has a
        // reduced word for u as a prefix; equivalently iff
        // l(u) + l(u^{-1} w) = l(w).
        let all = all_signed_perms(2).unwrap();
        for u in &all {
            for w in &all {
                let additive = u.length() + u.inverse().compose(w).unwrap().length() == w.length();
                assert_eq!(u.leq_weak_r(w), additive, "u={u} w={w}");
            }
        }
    }

    #[test]
    fn group_enumeration_counts() {
        assert_eq!(all_signed_perms(1).unwrap().len(), 2);
        assert_eq!(all_signed_perms(2).unwrap().len(), 8);
        assert_eq!(all_signed_perms(3).unwrap().len(), 48);
        assert_eq!(all_perms(4).unwrap().len(), 24);
    }

    #[test]
    fn interval_between_identity_and_longest_is_whole_group() {
        let n = 2;
        let id = SignedPerm::identity(n);
        let w0 = SignedPerm::longest(n);
        let interval = interval_weak_r(&id, &w0).unwrap();
        assert_eq!(interval.len(), 8);
        let single = interval_weak_r(&w0, &w0).unwrap();
        assert_eq!(single, vec![w0]);
    }

    #[test]
    fn interval_agrees_with_brute_force_filter() {
        let all = all_signed_perms(3).unwrap();
        let u = sp(&[2, -1, 3]);
        for w in &all {
            if !u.leq_weak_r(w) {
                continue;
            }
            let fast = interval_weak_r(&u, w).unwrap();
            let brute: Vec<SignedPerm> = all
                .iter()
                .filter(|v| u.leq_weak_r(v) && v.leq_weak_r(w))
                .cloned()
                .collect();
            assert_eq!(fast, brute, "interval [{u}, {w}]");
        }
    }

    #[test]
    fn permutohedron_edge_count() {
        // Every element has exactly n upward covers distributed over
        // ascent positions; total edges = |group| * n / 1 counted once each.
        let edges = permutohedron_edges(2).unwrap();
        assert_eq!(edges.len(), 8);
        for (lo, hi) in &edges {
            assert!(lo.leq_weak_r(hi));
            assert_eq!(lo.length() + 1, hi.length());
        }
    }

    #[test]
    fn inverse_and_parse_round_trip() {
        let w = sp(&[3, 1, -2]);
        assert_eq!(w.compose(&w.inverse()).unwrap(), SignedPerm::identity(3));
        assert_eq!(w.inverse().compose(&w).unwrap(), SignedPerm::identity(3));
        let parsed: SignedPerm = "[3,1,-2]".parse().unwrap();
        assert_eq!(parsed, w);
        assert_eq!(w.to_string(), "[3,1,-2]");
    }

    #[test]
    fn standardization_ranks_letters() {
        assert_eq!(standardize(&[5, 2, 7]).word(), &[2, 1, 3]);
        assert_eq!(standardize(&[-4, 3, -1]).word(), &[1, 3, 2]);
        assert_eq!(standardize(&[2, 1]).word(), &[2, 1]);
    }

    #[test]
    fn perm_descents_and_length() {
        let p = Perm::from_word(vec![3, 1, 2]).unwrap();
        assert_eq!(p.descents(), vec![1]);
        assert_eq!(p.length(), 2);
        assert_eq!(Perm::longest(4).length(), 6);
    }
}
