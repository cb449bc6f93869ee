//! Quasisymmetric functions of types A and B.
//!
//! Type A elements live in the monomial basis `M_a` or the fundamental
//! basis `F_a`, indexed by compositions; the type B analogues `M^B_a`,
//! `F^B_a` are indexed by type B compositions and involve a distinguished
//! variable `x_0`.  Elements are stored exactly, one coefficient map per
//! degree, and can be expanded into honest truncated polynomials, which
//! serves as an independent oracle for every algebraic operation here.

use crate::comp::{CompA, CompB};
use crate::error::{Error, Result};
use crate::perm::{all_signed_perms, standardize, Perm, SignedPerm};
use crate::poly::Poly;
use num::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Basis tags for type A.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisA {
    Monomial,
    Fundamental,
}

/// Basis tags for type B.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisB {
    Monomial,
    Fundamental,
}

/// A type A quasisymmetric function expressed in a fixed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymA {
    basis: BasisA,
    terms: BTreeMap<usize, BTreeMap<CompA, BigInt>>,
}

/// A type B quasisymmetric function expressed in a fixed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymB {
    basis: BasisB,
    terms: BTreeMap<usize, BTreeMap<CompB, BigInt>>,
}

fn insert_term<K: Ord + Clone>(
    terms: &mut BTreeMap<usize, BTreeMap<K, BigInt>>,
    degree: usize,
    key: K,
    coeff: BigInt,
) {
    if coeff == BigInt::from(0) {
        return;
    }
    let bucket = terms.entry(degree).or_default();
    let entry = bucket.entry(key.clone()).or_insert_with(|| BigInt::from(0));
    *entry += coeff;
    if *entry == BigInt::from(0) {
        bucket.remove(&key);
        if bucket.is_empty() {
            terms.remove(&degree);
        }
    }
}

impl QSymA {
    pub fn zero(basis: BasisA) -> Self {
        QSymA {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The single basis element indexed by `alpha`.
    pub fn basis_elem(basis: BasisA, alpha: CompA) -> Self {
        let mut f = QSymA::zero(basis);
        f.add_term(alpha, BigInt::from(1));
        f
    }

    pub fn basis(&self) -> BasisA {
        self.basis
    }

    pub fn add_term(&mut self, alpha: CompA, coeff: BigInt) {
        insert_term(&mut self.terms, alpha.size(), alpha, coeff);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// All terms, ordered by degree and then lexicographically.
    pub fn iter_terms(&self) -> Vec<(CompA, BigInt)> {
        self.terms
            .values()
            .flat_map(|b| b.iter().map(|(a, c)| (a.clone(), c.clone())))
            .collect()
    }

    pub fn add(&self, other: &QSymA) -> Result<QSymA> {
        if self.basis != other.basis {
            return Err(Error::WrongBasis("same"));
        }
        let mut out = self.clone();
        for (a, c) in other.iter_terms() {
            out.add_term(a, c);
        }
        Ok(out)
    }

    /// Change of basis to the fundamental basis:
    /// `M_a = sum over refinements b of a of (-1)^{l(b)-l(a)} F_b`.
    pub fn to_fundamental(&self) -> QSymA {
        match self.basis {
            BasisA::Fundamental => self.clone(),
            BasisA::Monomial => {
                let mut out = QSymA::zero(BasisA::Fundamental);
                for (alpha, c) in self.iter_terms() {
                    let n = alpha.size();
                    let base = alpha.to_set();
                    for sup in supersets(&base, 1, n) {
                        let sign = if (sup.len() - base.len()) % 2 == 0 {
                            1
                        } else {
                            -1
                        };
                        out.add_term(
                            CompA::from_set(&sup, n).unwrap(),
                            c.clone() * BigInt::from(sign),
                        );
                    }
                }
                out
            }
        }
    }

    /// Change of basis to the monomial basis:
    /// `F_a = sum over refinements b of a of M_b`.
    pub fn to_monomial(&self) -> QSymA {
        match self.basis {
            BasisA::Monomial => self.clone(),
            BasisA::Fundamental => {
                let mut out = QSymA::zero(BasisA::Monomial);
                for (alpha, c) in self.iter_terms() {
                    let n = alpha.size();
                    let base = alpha.to_set();
                    for sup in supersets(&base, 1, n) {
                        out.add_term(CompA::from_set(&sup, n).unwrap(), c.clone());
                    }
                }
                out
            }
        }
    }

    /// Product, computed in the fundamental basis via shuffles of descent
    /// class representatives.
    pub fn product(&self, other: &QSymA) -> QSymA {
        let f = self.to_fundamental();
        let g = other.to_fundamental();
        let mut out = QSymA::zero(BasisA::Fundamental);
        for (alpha, ca) in f.iter_terms() {
            for (beta, cb) in g.iter_terms() {
                let coeff = &ca * &cb;
                let m = alpha.size();
                let n = beta.size();
                let u = descent_rep_a(&alpha.to_set(), m).unwrap();
                let v = descent_rep_a(&beta.to_set(), n).unwrap();
                let shifted: Vec<i32> = v.word().iter().map(|&x| x + m as i32).collect();
                for w in shuffle_words(u.word(), &shifted) {
                    let p = Perm::from_word(w).unwrap();
                    out.add_term(
                        CompA::from_set(&p.descents(), m + n).unwrap(),
                        coeff.clone(),
                    );
                }
            }
        }
        out
    }

    /// Coproduct in the fundamental basis, as a list of
    /// `(left, right, coefficient)` triples: `F_a` splits across every
    /// deconcatenation or near-deconcatenation of `a`.
    pub fn coproduct(&self) -> Vec<(CompA, CompA, BigInt)> {
        let f = self.to_fundamental();
        let mut acc: BTreeMap<(CompA, CompA), BigInt> = BTreeMap::new();
        for (alpha, c) in f.iter_terms() {
            let n = alpha.size();
            let set = alpha.to_set();
            for i in 0..=n {
                let left_set: Vec<usize> = set.iter().copied().filter(|&s| s < i).collect();
                let right_set: Vec<usize> = set
                    .iter()
                    .copied()
                    .filter(|&s| s > i)
                    .map(|s| s - i)
                    .collect();
                let left = CompA::from_set(&left_set, i).unwrap();
                let right = CompA::from_set(&right_set, n - i).unwrap();
                *acc.entry((left, right)).or_insert_with(|| BigInt::from(0)) += c.clone();
            }
        }
        acc.into_iter()
            .filter(|(_, c)| *c != BigInt::from(0))
            .map(|((l, r), c)| (l, r, c))
            .collect()
    }

    /// Expansion in the variables `x_1, ..., x_v` (slot 0 of the exponent
    /// vectors is unused), exact in every degree.
    pub fn expand(&self, v: usize) -> Poly {
        let mut out = Poly::zero(v + 1);
        for (alpha, c) in self.iter_terms() {
            let piece = match self.basis {
                BasisA::Monomial => expand_monomial_a(&alpha, v),
                BasisA::Fundamental => expand_fundamental_a(&alpha, v),
            };
            out = out.add(&piece.scale(&c));
        }
        out
    }
}

impl QSymB {
    pub fn zero(basis: BasisB) -> Self {
        QSymB {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_elem(basis: BasisB, alpha: CompB) -> Self {
        let mut f = QSymB::zero(basis);
        f.add_term(alpha, BigInt::from(1));
        f
    }

    pub fn basis(&self) -> BasisB {
        self.basis
    }

    pub fn add_term(&mut self, alpha: CompB, coeff: BigInt) {
        insert_term(&mut self.terms, alpha.size(), alpha, coeff);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter_terms(&self) -> Vec<(CompB, BigInt)> {
        self.terms
            .values()
            .flat_map(|b| b.iter().map(|(a, c)| (a.clone(), c.clone())))
            .collect()
    }

    pub fn add(&self, other: &QSymB) -> Result<QSymB> {
        if self.basis != other.basis {
            return Err(Error::WrongBasis("same"));
        }
        let mut out = self.clone();
        for (a, c) in other.iter_terms() {
            out.add_term(a, c);
        }
        Ok(out)
    }

    /// `M^B_a = sum over refinements b of a of (-1)^{l(b)-l(a)} F^B_b`,
    /// where `b` refines `a` iff the partial-sum sets nest.
    pub fn to_fundamental(&self) -> QSymB {
        match self.basis {
            BasisB::Fundamental => self.clone(),
            BasisB::Monomial => {
                let mut out = QSymB::zero(BasisB::Fundamental);
                for (alpha, c) in self.iter_terms() {
                    let n = alpha.size();
                    let base = alpha.to_set();
                    for sup in supersets(&base, 0, n) {
                        let sign = if (sup.len() - base.len()) % 2 == 0 {
                            1
                        } else {
                            -1
                        };
                        out.add_term(
                            CompB::from_set(&sup, n).unwrap(),
                            c.clone() * BigInt::from(sign),
                        );
                    }
                }
                out
            }
        }
    }

    /// `F^B_a = sum over refinements b of a of M^B_b`.
    pub fn to_monomial(&self) -> QSymB {
        match self.basis {
            BasisB::Monomial => self.clone(),
            BasisB::Fundamental => {
                let mut out = QSymB::zero(BasisB::Monomial);
                for (alpha, c) in self.iter_terms() {
                    let n = alpha.size();
                    let base = alpha.to_set();
                    for sup in supersets(&base, 0, n) {
                        out.add_term(CompB::from_set(&sup, n).unwrap(), c.clone());
                    }
                }
                out
            }
        }
    }

    /// The external action of a type A element on a type B element,
    /// computed in the fundamental bases:
    /// `F^B_I (.) F_J = sum over w in the signed shuffle of representatives
    /// of F^B after the right descent set of w`.
    pub fn action(&self, other: &QSymA) -> Result<QSymB> {
        let f = self.to_fundamental();
        let g = other.to_fundamental();
        let mut out = QSymB::zero(BasisB::Fundamental);
        for (alpha, ca) in f.iter_terms() {
            for (beta, cb) in g.iter_terms() {
                let coeff = &ca * &cb;
                let m = alpha.size();
                let n = beta.size();
                let u = descent_rep_b(&alpha.to_set(), m)?;
                let v = descent_rep_a(&beta.to_set(), n)?;
                for w in shuffle_b(&u, &v)? {
                    out.add_term(
                        CompB::from_set(&w.descents(), m + n).unwrap(),
                        coeff.clone(),
                    );
                }
            }
        }
        Ok(out)
    }

    /// The coaction into (type B) x (type A), as `(left, right, coeff)`
    /// triples: `F^B_a` splits at every cut point `i`, the left factor
    /// keeping the partial sums below `i` and the right factor the shifted
    /// partial sums above `i`.
    pub fn coaction(&self) -> Vec<(CompB, CompA, BigInt)> {
        let f = self.to_fundamental();
        let mut acc: BTreeMap<(CompB, CompA), BigInt> = BTreeMap::new();
        for (alpha, c) in f.iter_terms() {
            let n = alpha.size();
            let set = alpha.to_set();
            for i in 0..=n {
                let left_set: Vec<usize> = set.iter().copied().filter(|&s| s < i).collect();
                let right_set: Vec<usize> = set
                    .iter()
                    .copied()
                    .filter(|&s| s > i)
                    .map(|s| s - i)
                    .collect();
                let left = CompB::from_set(&left_set, i).unwrap();
                let right = CompA::from_set(&right_set, n - i).unwrap();
                *acc.entry((left, right)).or_insert_with(|| BigInt::from(0)) += c.clone();
            }
        }
        acc.into_iter()
            .filter(|(_, c)| *c != BigInt::from(0))
            .map(|((l, r), c)| (l, r, c))
            .collect()
    }

    /// Expansion in the variables `x_0, x_1, ..., x_v`.
    pub fn expand(&self, v: usize) -> Poly {
        let mut out = Poly::zero(v + 1);
        for (alpha, c) in self.iter_terms() {
            let piece = match self.basis {
                BasisB::Monomial => expand_monomial_b(&alpha, v),
                BasisB::Fundamental => expand_fundamental_b(&alpha, v),
            };
            out = out.add(&piece.scale(&c));
        }
        out
    }
}

/// All supersets of `base` inside `[lo, n-1]`, each sorted.
fn supersets(base: &[usize], lo: usize, n: usize) -> Vec<Vec<usize>> {
    let free: Vec<usize> = (lo..n).filter(|s| !base.contains(s)).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u32..(1 << free.len()) {
        let mut set: Vec<usize> = base.to_vec();
        for (k, &s) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                set.push(s);
            }
        }
        set.sort_unstable();
        out.push(set);
    }
    out
}

/// `M_a` truncated to `x_1..x_v`: strictly increasing supports.
fn expand_monomial_a(alpha: &CompA, v: usize) -> Poly {
    let parts = alpha.parts();
    let mut out = Poly::zero(v + 1);
    let mut support = Vec::new();
    fn go(parts: &[u32], v: usize, next: usize, support: &mut Vec<usize>, out: &mut Poly) {
        if support.len() == parts.len() {
            let mut expo = vec![0u32; v + 1];
            for (k, &i) in support.iter().enumerate() {
                expo[i] += parts[k];
            }
            out.add_term(expo, BigInt::from(1));
            return;
        }
        for i in next..=v {
            support.push(i);
            go(parts, v, i + 1, support, out);
            support.pop();
        }
    }
    go(parts, v, 1, &mut support, &mut out);
    out
}

/// `M^B_a` truncated to `x_0..x_v`: the first part sits on `x_0`, the
/// remaining parts on strictly increasing positive variables.
fn expand_monomial_b(alpha: &CompB, v: usize) -> Poly {
    let mut out = Poly::zero(v + 1);
    if alpha.num_parts() == 0 {
        out.add_term(vec![0; v + 1], BigInt::from(1));
        return out;
    }
    let parts = alpha.parts();
    let rest = &parts[1..];
    let mut support = Vec::new();
    fn go(
        rest: &[u32],
        first: u32,
        v: usize,
        next: usize,
        support: &mut Vec<usize>,
        out: &mut Poly,
    ) {
        if support.len() == rest.len() {
            let mut expo = vec![0u32; v + 1];
            expo[0] = first;
            for (k, &i) in support.iter().enumerate() {
                expo[i] += rest[k];
            }
            out.add_term(expo, BigInt::from(1));
            return;
        }
        for i in next..=v {
            support.push(i);
            go(rest, first, v, i + 1, support, out);
            support.pop();
        }
    }
    go(rest, parts[0], v, 1, &mut support, &mut out);
    out
}

/// `F_a` truncated to `x_1..x_v`: weakly increasing index words with
/// strict growth across the partial-sum set of `a`.
fn expand_fundamental_a(alpha: &CompA, v: usize) -> Poly {
    let n = alpha.size();
    let strict = alpha.to_set();
    let mut out = Poly::zero(v + 1);
    let mut idx = Vec::with_capacity(n);
    fn go(n: usize, strict: &[usize], v: usize, idx: &mut Vec<usize>, out: &mut Poly) {
        if idx.len() == n {
            let mut expo = vec![0u32; v + 1];
            for &i in idx.iter() {
                expo[i] += 1;
            }
            out.add_term(expo, BigInt::from(1));
            return;
        }
        let j = idx.len(); // choosing i_{j+1}
        let lo = if j == 0 {
            1
        } else if strict.contains(&j) {
            idx[j - 1] + 1
        } else {
            idx[j - 1]
        };
        for i in lo..=v {
            idx.push(i);
            go(n, strict, v, idx, out);
            idx.pop();
        }
    }
    go(n, &strict, v, &mut idx, &mut out);
    out
}

/// `F^B_a` truncated to `x_0..x_v`: weakly increasing index words starting
/// from the phantom `i_0 = 0`, with strict growth across the partial-sum
/// set of `a` (a first part of zero forces `i_1 > 0`).
fn expand_fundamental_b(alpha: &CompB, v: usize) -> Poly {
    let n = alpha.size();
    let strict = alpha.to_set();
    let mut out = Poly::zero(v + 1);
    let mut idx = Vec::with_capacity(n);
    fn go(n: usize, strict: &[usize], v: usize, idx: &mut Vec<usize>, out: &mut Poly) {
        if idx.len() == n {
            let mut expo = vec![0u32; v + 1];
            for &i in idx.iter() {
                expo[i] += 1;
            }
            out.add_term(expo, BigInt::from(1));
            return;
        }
        let j = idx.len();
        let prev = if j == 0 { 0 } else { idx[j - 1] };
        let lo = if strict.contains(&j) { prev + 1 } else { prev };
        for i in lo..=v {
            idx.push(i);
            go(n, strict, v, idx, out);
            idx.pop();
        }
    }
    go(n, &strict, v, &mut idx, &mut out);
    out
}

/// All interleavings of two words (entries assumed disjoint).
pub fn shuffle_words(a: &[i32], b: &[i32]) -> Vec<Vec<i32>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut w in shuffle_words(&a[1..], b) {
        w.insert(0, a[0]);
        out.push(w);
    }
    for mut w in shuffle_words(a, &b[1..]) {
        w.insert(0, b[0]);
        out.push(w);
    }
    out
}

/// A permutation of `[1, n]` whose descent set is exactly `set`, built by
/// filling increasing runs with decreasing blocks of values.
pub fn descent_rep_a(set: &[usize], n: usize) -> Result<Perm> {
    let alpha = CompA::from_set(set, n)?;
    let mut word = Vec::with_capacity(n);
    let mut hi = n as i32;
    for &p in alpha.parts() {
        for k in 0..p as i32 {
            word.push(hi - (p as i32 - 1) + k);
        }
        hi -= p as i32;
    }
    Perm::from_word(word)
}

/// A signed permutation of rank `n` whose right descent set is exactly
/// `set` (a subset of `[0, n-1]`): take a type A representative when 0 is
/// not required, otherwise negate one with the complementary descents.
pub fn descent_rep_b(set: &[usize], n: usize) -> Result<SignedPerm> {
    if set.contains(&0) {
        let co: Vec<usize> = (1..n).filter(|i| !set.contains(i)).collect();
        let u = descent_rep_a(&co, n)?;
        SignedPerm::from_window(u.word().iter().map(|&x| -x).collect())
    } else {
        let u = descent_rep_a(set, n)?;
        SignedPerm::from_window(u.word().to_vec())
    }
}

/// The set of negative window positions of `w`, in increasing order.
fn negative_positions(w: &SignedPerm) -> Vec<usize> {
    (0..w.rank()).filter(|&i| w.window()[i] < 0).collect()
}

/// The auxiliary word: negated entries from the negative positions in
/// reverse position order, followed by the remaining entries in position
/// order.  Its letters are the values `1..rank` without signs.
fn hat_word(w: &SignedPerm) -> Vec<i32> {
    let neg = negative_positions(w);
    let mut out: Vec<i32> = neg.iter().rev().map(|&i| -w.window()[i]).collect();
    out.extend(
        (0..w.rank())
            .filter(|i| !neg.contains(i))
            .map(|i| w.window()[i]),
    );
    out
}

/// The signed shuffle of a rank-`m` signed permutation and a rank-`n`
/// permutation: all signed permutations of rank `m + n` whose restriction
/// to values `1..m` is `u` and whose standardized auxiliary subword on
/// values `m+1..m+n` is `v`.
pub fn shuffle_b(u: &SignedPerm, v: &Perm) -> Result<Vec<SignedPerm>> {
    let m = u.rank();
    let n = v.rank();
    let mut out = Vec::new();
    for w in all_signed_perms(m + n)? {
        let low: Vec<i32> = w
            .window()
            .iter()
            .copied()
            .filter(|x| x.unsigned_abs() as usize <= m)
            .collect();
        if low != u.window() {
            continue;
        }
        let hat = hat_word(&w);
        let high: Vec<i32> = hat
            .into_iter()
            .filter(|x| x.unsigned_abs() as usize > m)
            .collect();
        if standardize(&high) == *v {
            out.push(w);
        }
    }
    Ok(out)
}

fn fmt_terms<K: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    label: &str,
    terms: Vec<(K, BigInt)>,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (a, c)) in terms.into_iter().enumerate() {
        if k > 0 {
            write!(f, " + ")?;
        }
        if c == BigInt::from(1) {
            write!(f, "{label}[{a}]")?;
        } else if c == BigInt::from(-1) {
            write!(f, "-{label}[{a}]")?;
        } else {
            write!(f, "{c}*{label}[{a}]")?;
        }
    }
    Ok(())
}

impl fmt::Display for QSymA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.basis {
            BasisA::Monomial => "M",
            BasisA::Fundamental => "F",
        };
        fmt_terms(f, label, self.iter_terms())
    }
}

impl fmt::Display for QSymB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.basis {
            BasisB::Monomial => "M^B",
            BasisB::Fundamental => "F^B",
        };
        fmt_terms(f, label, self.iter_terms())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_perms;

    fn ca(parts: &[u32]) -> CompA {
        CompA::new(parts.to_vec()).unwrap()
    }

    fn cb(parts: &[u32]) -> CompB {
        CompB::new(parts.to_vec()).unwrap()
    }

    fn fb(parts: &[u32]) -> QSymB {
        QSymB::basis_elem(BasisB::Fundamental, cb(parts))
    }

    fn fa(parts: &[u32]) -> QSymA {
        QSymA::basis_elem(BasisA::Fundamental, ca(parts))
    }

    #[test]
    fn descent_representatives_hit_every_descent_set() {
        for n in 0..=4 {
            for alpha in CompA::all(n) {
                let set = alpha.to_set();
                let u = descent_rep_a(&set, n).unwrap();
                assert_eq!(u.descents(), set, "type A rep for {alpha}");
            }
            for alpha in CompB::all(n) {
                let set = alpha.to_set();
                let u = descent_rep_b(&set, n).unwrap();
                assert_eq!(u.descents(), set, "type B rep for {alpha}");
            }
        }
    }

    #[test]
    fn monomial_expansions() {
        // M^B_(1) = x_0 exactly, at every truncation.
        let m1 = QSymB::basis_elem(BasisB::Monomial, cb(&[1]));
        assert_eq!(m1.expand(2).to_string(), "x0");
        // M^B_(0,1) at v = 2 is x_1 + x_2.
        let m01 = QSymB::basis_elem(BasisB::Monomial, cb(&[0, 1]));
        assert_eq!(m01.expand(2).to_string(), "x2 + x1");
        // M_(2,1) at v = 2: x_1^2 x_2 only.
        let m21 = QSymA::basis_elem(BasisA::Monomial, ca(&[2, 1]));
        assert_eq!(m21.expand(2).to_string(), "x1^2*x2");
    }

    #[test]
    fn fundamental_expansions_degree_one() {
        // F^B_(1) = x_0 + x_1 + ... ; F^B_(0,1) = x_1 + x_2 + ... .
        assert_eq!(fb(&[1]).expand(1).to_string(), "x1 + x0");
        assert_eq!(fb(&[0, 1]).expand(1).to_string(), "x1");
        assert_eq!(fa(&[1]).expand(2).to_string(), "x2 + x1");
    }

    #[test]
    fn base_change_type_b_degree_one() {
        // F^B_(1) = M^B_(1) + M^B_(0,1) and F^B_(0,1) = M^B_(0,1).
        let f1 = fb(&[1]).to_monomial();
        assert_eq!(
            f1.iter_terms(),
            vec![(cb(&[0, 1]), BigInt::from(1)), (cb(&[1]), BigInt::from(1)),]
        );
        let f01 = fb(&[0, 1]).to_monomial();
        assert_eq!(f01.iter_terms(), vec![(cb(&[0, 1]), BigInt::from(1))]);
    }

    #[test]
    fn base_change_round_trips_and_matches_expansion() {
        for n in 0..=4 {
            for alpha in CompB::all(n) {
                let f = fb(alpha.parts());
                assert_eq!(f.to_monomial().to_fundamental(), f, "round trip {alpha}");
                let m = QSymB::basis_elem(BasisB::Monomial, alpha.clone());
                assert_eq!(m.to_fundamental().to_monomial(), m);
                // Expansions agree across the base change.
                assert_eq!(f.expand(n + 1), f.to_monomial().expand(n + 1), "{alpha}");
            }
            for alpha in CompA::all(n) {
                let f = fa(alpha.parts());
                assert_eq!(f.to_monomial().to_fundamental(), f);
                assert_eq!(f.expand(n + 1), f.to_monomial().expand(n + 1), "{alpha}");
            }
        }
    }

    #[test]
    fn product_of_degree_one_fundamentals() {
        let p = fa(&[1]).product(&fa(&[1]));
        assert_eq!(
            p.iter_terms(),
            vec![(ca(&[1, 1]), BigInt::from(1)), (ca(&[2]), BigInt::from(1))]
        );
    }

    #[test]
    fn products_match_polynomial_oracle() {
        for (a, b) in [
            (ca(&[1]), ca(&[2])),
            (ca(&[1, 1]), ca(&[1])),
            (ca(&[2]), ca(&[2])),
            (ca(&[1, 2]), ca(&[1])),
        ] {
            let fa_ = QSymA::basis_elem(BasisA::Fundamental, a.clone());
            let fb_ = QSymA::basis_elem(BasisA::Fundamental, b.clone());
            let v = a.size() + b.size() + 1;
            let lhs = fa_.product(&fb_).expand(v);
            let rhs = fa_.expand(v).mul(&fb_.expand(v));
            assert_eq!(lhs, rhs, "product {a} * {b}");
        }
    }

    #[test]
    fn coproduct_of_f2_splits_three_ways() {
        let cop = fa(&[2]).coproduct();
        assert_eq!(
            cop,
            vec![
                (CompA::empty(), ca(&[2]), BigInt::from(1)),
                (ca(&[1]), ca(&[1]), BigInt::from(1)),
                (ca(&[2]), CompA::empty(), BigInt::from(1)),
            ]
        );
    }

    #[test]
    fn coproduct_matches_alphabet_splitting() {
        // Evaluate F_a on x_1..x_v followed by y_1..y_w and compare with
        // the sum over coproduct terms of products of separate expansions.
        let (v, w) = (2, 2);
        for n in 0..=4 {
            for alpha in CompA::all(n) {
                let f = fa(alpha.parts());
                let lhs = remap_split_a(&f.expand(v + w), v, w);
                let mut rhs = Poly::zero(v + w + 1);
                for (l, r, c) in f.coproduct() {
                    let lp = embed_left(&fa(l.parts()).expand(v), v + w);
                    let rp = embed_right_a(&fa(r.parts()).expand(w), v, v + w);
                    rhs = rhs.add(&lp.mul(&rp).scale(&c));
                }
                assert_eq!(lhs, rhs, "coproduct of F_{alpha}");
            }
        }
    }

    #[test]
    fn coaction_of_f01() {
        let triples = fb(&[0, 1]).coaction();
        assert_eq!(
            triples,
            vec![
                (CompB::empty(), ca(&[1]), BigInt::from(1)),
                (cb(&[0, 1]), CompA::empty(), BigInt::from(1)),
            ]
        );
    }

    #[test]
    fn coaction_matches_alphabet_splitting() {
        // Evaluate F^B_a on x_0..x_v followed by y_1..y_w.
        let (v, w) = (2, 2);
        for n in 0..=4 {
            for alpha in CompB::all(n) {
                let f = fb(alpha.parts());
                let lhs = f.expand(v + w); // variables x_0..x_v, then y block
                let mut rhs = Poly::zero(v + w + 1);
                for (l, r, c) in f.coaction() {
                    let lp = embed_left(&fb(l.parts()).expand(v), v + w);
                    let rp = embed_right_a(&fa(r.parts()).expand(w), v, v + w);
                    rhs = rhs.add(&lp.mul(&rp).scale(&c));
                }
                assert_eq!(lhs, rhs, "coaction of F^B_{alpha}");
            }
        }
    }

    // Pads a polynomial in x_0..x_v with zero exponents up to x_0..x_total.
    fn embed_left(p: &Poly, total: usize) -> Poly {
        let mut out = Poly::zero(total + 1);
        for (e, c) in p.terms() {
            let mut expo = vec![0u32; total + 1];
            expo[..e.len()].copy_from_slice(e);
            out.add_term(expo, c.clone());
        }
        out
    }

    // Shifts a type A polynomial in x_1..x_w to live on slots v+1..v+w.
    fn embed_right_a(p: &Poly, v: usize, total: usize) -> Poly {
        let mut out = Poly::zero(total + 1);
        for (e, c) in p.terms() {
            let mut expo = vec![0u32; total + 1];
            for (j, &pw) in e.iter().enumerate().skip(1) {
                expo[v + j] = pw;
            }
            out.add_term(expo, c.clone());
        }
        out
    }

    // Identity remap for a type A expansion at v + w variables: slots are
    // already x_1..x_v, y_1..y_w in order.
    fn remap_split_a(p: &Poly, _v: usize, _w: usize) -> Poly {
        p.clone()
    }

    #[test]
    fn signed_shuffle_action_is_representative_independent() {
        // Summing F^B over right descent sets of the signed shuffle must
        // not depend on which representatives carry the descent sets.
        for m in 0..=2usize {
            for n in 0..=2usize {
                if m + n == 0 || m + n > 4 {
                    continue;
                }
                let mut by_class: BTreeMap<(Vec<usize>, Vec<usize>), Vec<QSymB>> = BTreeMap::new();
                for u in all_signed_perms(m).unwrap() {
                    for v in all_perms(n).unwrap() {
                        let mut f = QSymB::zero(BasisB::Fundamental);
                        for w in shuffle_b(&u, &v).unwrap() {
                            f.add_term(
                                CompB::from_set(&w.descents(), m + n).unwrap(),
                                BigInt::from(1),
                            );
                        }
                        by_class
                            .entry((u.descents(), v.descents()))
                            .or_default()
                            .push(f);
                    }
                }
                for ((du, dv), sums) in by_class {
                    for s in &sums {
                        assert_eq!(
                            s, &sums[0],
                            "shuffle sum varies within class ({du:?}, {dv:?})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn action_in_degree_one() {
        // F^B_(1) . F_(1): shuffles of u = [1] and v = [1].
        let act = fb(&[1]).action(&fa(&[1])).unwrap();
        // Total multiplicity is the number of shuffle elements.
        let u = SignedPerm::from_window(vec![1]).unwrap();
        let v = Perm::from_word(vec![1]).unwrap();
        let count: BigInt = act.iter_terms().into_iter().map(|(_, c)| c).sum();
        assert_eq!(count, BigInt::from(shuffle_b(&u, &v).unwrap().len()));
        // Degree is preserved.
        assert!(act.iter_terms().iter().all(|(a, _)| a.size() == 2));
    }

    #[test]
    fn shuffle_of_trivial_factors() {
        let u = SignedPerm::from_window(vec![-1]).unwrap();
        let v = Perm::from_word(vec![]).unwrap();
        assert_eq!(shuffle_b(&u, &v).unwrap(), vec![u.clone()]);
        let e = SignedPerm::from_window(vec![]).unwrap();
        let v1 = Perm::from_word(vec![1]).unwrap();
        let shuffled = shuffle_b(&e, &v1).unwrap();
        // Both [1] and [-1] restrict to the empty window; the auxiliary
        // word of [-1] is (1), which standardizes to v.
        assert_eq!(shuffled.len(), 2);
    }

    #[test]
    fn display_forms() {
        assert_eq!(fb(&[0, 2, 1]).to_string(), "F^B[(0,2,1)]");
        let mut f = QSymA::zero(BasisA::Monomial);
        f.add_term(ca(&[1, 2]), BigInt::from(2));
        assert_eq!(f.to_string(), "2*M[(1,2)]");
    }
}
