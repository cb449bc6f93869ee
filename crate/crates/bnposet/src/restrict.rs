//! Combinatorics of restriction: symmetric lower subposets, upper
//! transversals of the complement, standardization maps, and the
//! factorization of a linear extension into a lower and an upper part.

use crate::error::{Error, Result};
use crate::perm::{Perm, SignedPerm};
use crate::poset::{BnPoset, FinitePoset};

/// Element sets of the symmetric lower subposets of `p` with `m` positive
/// pairs: convex sets `Q` containing 0, closed under negation, of size
/// `2m + 1`, where convex means `v <= y <= x` with `v, x` in `Q` forces `y`
/// into `Q`.  These are exactly the sets that can occupy the middle `2m + 1`
/// positions of a linear extension.
pub fn lower_subposets_b(p: &BnPoset, m: usize) -> Vec<Vec<i32>> {
    let n = p.rank();
    let mut out = Vec::new();
    let positives: Vec<i32> = (1..=n as i32).collect();
    let mut choose = Vec::new();
    fn go(
        p: &BnPoset,
        positives: &[i32],
        m: usize,
        start: usize,
        choose: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        if choose.len() == m {
            let mut q: Vec<i32> = choose.iter().flat_map(|&a| [a, -a]).collect();
            q.push(0);
            q.sort_unstable();
            if is_lower_subposet(p, &q) {
                out.push(q);
            }
            return;
        }
        for k in start..positives.len() {
            choose.push(positives[k]);
            go(p, positives, m, k + 1, choose, out);
            choose.pop();
        }
    }
    go(p, &positives, m, 0, &mut choose, &mut out);
    out
}

fn is_lower_subposet(p: &BnPoset, q: &[i32]) -> bool {
    let n = p.rank() as i32;
    for y in -n..=n {
        if q.contains(&y) {
            continue;
        }
        let above = q.iter().any(|&v| p.leq(v, y));
        let below = q.iter().any(|&x| p.leq(y, x));
        if above && below {
            return false;
        }
    }
    true
}

/// The down-closure of `q` in `p`.
pub fn down_closure(p: &BnPoset, q: &[i32]) -> Vec<i32> {
    let n = p.rank() as i32;
    (-n..=n)
        .filter(|&y| q.iter().any(|&x| p.leq(y, x)))
        .collect()
}

/// Element sets of the upper subposets attached to a lower subposet `q`:
/// transversals of the absolute-value classes of the complement of the
/// down-closure that are upward closed inside that complement.
pub fn upper_subposets(p: &BnPoset, q: &[i32]) -> Vec<Vec<i32>> {
    let n = p.rank() as i32;
    let shadow = down_closure(p, q);
    let rest: Vec<i32> = (-n..=n).filter(|x| !shadow.contains(x)).collect();
    let mut classes: Vec<Vec<i32>> = Vec::new();
    for a in 1..=n {
        let class: Vec<i32> = rest.iter().copied().filter(|x| x.abs() == a).collect();
        if !class.is_empty() {
            classes.push(class);
        }
    }
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn go(
        p: &BnPoset,
        rest: &[i32],
        classes: &[Vec<i32>],
        k: usize,
        pick: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        if k == classes.len() {
            let ok = rest
                .iter()
                .all(|&x| !pick.iter().any(|&y| p.leq(y, x)) || pick.contains(&x));
            if ok {
                let mut u = pick.clone();
                u.sort_unstable();
                out.push(u);
            }
            return;
        }
        for &x in &classes[k] {
            pick.push(x);
            go(p, rest, classes, k + 1, pick, out);
            pick.pop();
        }
    }
    go(p, &rest, &classes, 0, &mut pick, &mut out);
    out.sort();
    out
}

/// The induced subposet of `p` on an arbitrary element set (sorted).
pub fn sub_poset(p: &BnPoset, elems: &[i32]) -> Result<FinitePoset> {
    let mut sorted = elems.to_vec();
    sorted.sort_unstable();
    let pairs: Vec<(i32, i32)> = sorted
        .iter()
        .flat_map(|&a| sorted.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| a != b && p.lt(a, b))
        .collect();
    FinitePoset::from_covers(sorted, &pairs)
}

/// Standardizes a symmetric lower subposet to a `B_m` poset: the sorted
/// elements `x_{-m} < ... < x_m` are relabeled to `-m..m`.
pub fn standardize_b(p: &BnPoset, q: &[i32]) -> Result<BnPoset> {
    let mut sorted = q.to_vec();
    sorted.sort_unstable();
    let m = sorted.len() / 2;
    if sorted.len() != 2 * m + 1 || !sorted.contains(&0) {
        return Err(Error::Unsupported(
            "standardization needs a symmetric set containing 0".into(),
        ));
    }
    let label = |x: i32| -> i32 { sorted.iter().position(|&y| y == x).unwrap() as i32 - m as i32 };
    let pairs: Vec<(i32, i32)> = sorted
        .iter()
        .flat_map(|&a| sorted.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| a != b && p.lt(a, b))
        .map(|(a, b)| (label(a), label(b)))
        .collect();
    BnPoset::from_covers(m, &pairs, false)
}

/// The signed standardization of the low window entries: slot `i` of the
/// result records how many of the first `m` entries are at most `gamma(i)`
/// in absolute value, signed like `gamma(i)`.
pub fn st_plus(gamma: &SignedPerm, m: usize) -> Result<SignedPerm> {
    if m > gamma.rank() {
        return Err(Error::RankMismatch(m, gamma.rank()));
    }
    let window: Vec<i32> = (1..=m as i32)
        .map(|i| {
            let v = gamma.apply(i);
            let r = (1..=m as i32)
                .filter(|&j| gamma.apply(j).abs() <= v.abs())
                .count() as i32;
            if v < 0 {
                -r
            } else {
                r
            }
        })
        .collect();
    SignedPerm::from_window(window)
}

/// The plain standardization of the high window entries: slot `i` records
/// how many of the last `n - m` entries are at most `gamma(m + i)` as
/// integers.
pub fn st_minus(gamma: &SignedPerm, m: usize) -> Result<Perm> {
    let n = gamma.rank();
    if m > n {
        return Err(Error::RankMismatch(m, n));
    }
    let word: Vec<i32> = (1..=(n - m) as i32)
        .map(|i| {
            ((m as i32 + 1)..=n as i32)
                .filter(|&j| gamma.apply(j) <= gamma.apply(m as i32 + i))
                .count() as i32
        })
        .collect();
    Perm::from_word(word)
}

/// The element set `{gamma(i) : -m <= i <= m}`, sorted.
pub fn low_values(gamma: &SignedPerm, m: usize) -> Vec<i32> {
    let mut out: Vec<i32> = (-(m as i32)..=m as i32).map(|i| gamma.apply(i)).collect();
    out.sort_unstable();
    out
}

/// The element set `{gamma(i) : m < i <= n}`, sorted.
pub fn high_values(gamma: &SignedPerm, m: usize) -> Vec<i32> {
    let n = gamma.rank() as i32;
    let mut out: Vec<i32> = ((m as i32 + 1)..=n).map(|i| gamma.apply(i)).collect();
    out.sort_unstable();
    out
}

/// Reassembles a linear extension from the factor data: `q` (sorted,
/// symmetric with 0) carries `g1` on the middle block and `u` (sorted)
/// carries `g2` on the high block; the low block is forced by oddness.
pub fn conc(q: &[i32], u: &[i32], g1: &SignedPerm, g2: &Perm) -> Result<SignedPerm> {
    let m = g1.rank();
    let n = m + g2.rank();
    if q.len() != 2 * m + 1 || u.len() != g2.rank() {
        return Err(Error::DimensionMismatch(q.len(), 2 * m + 1));
    }
    let x = |k: i32| -> i32 { q[(k + m as i32) as usize] };
    let y = |k: i32| -> i32 { u[(k - 1) as usize] };
    let mut window = Vec::with_capacity(n);
    for i in 1..=n as i32 {
        if i <= m as i32 {
            window.push(x(g1.apply(i)));
        } else {
            window.push(y(g2.apply(i - m as i32)));
        }
    }
    SignedPerm::from_window(window)
}

/// The full factorization datum of a linear extension at level `m`:
/// `(low element set, high element set, signed factor, plain factor)`.
pub fn restriction_data(
    gamma: &SignedPerm,
    m: usize,
) -> Result<(Vec<i32>, Vec<i32>, SignedPerm, Perm)> {
    Ok((
        low_values(gamma, m),
        high_values(gamma, m),
        st_plus(gamma, m)?,
        st_minus(gamma, m)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_signed_perms;
    use std::collections::BTreeMap;

    fn sp(w: &[i32]) -> SignedPerm {
        SignedPerm::from_window(w.to_vec()).unwrap()
    }

    // Rank 3 poset with covers -2 < 0, 0 < 2, 3 < 1, -1 < -3.
    fn sample() -> BnPoset {
        BnPoset::from_covers(3, &[(-2, 0), (0, 2), (3, 1), (-1, -3)], false).unwrap()
    }

    #[test]
    fn lower_subposets_at_each_level() {
        let p = sample();
        assert_eq!(lower_subposets_b(&p, 0), vec![vec![0]]);
        assert_eq!(
            lower_subposets_b(&p, 1),
            vec![vec![-1, 0, 1], vec![-2, 0, 2], vec![-3, 0, 3]]
        );
        assert_eq!(lower_subposets_b(&p, 3).len(), 1);
    }

    #[test]
    fn upper_subposets_of_each_lower() {
        let p = sample();
        assert_eq!(upper_subposets(&p, &[-1, 0, 1]), vec![vec![-3, 2]]);
        assert_eq!(
            upper_subposets(&p, &[-2, 0, 2]),
            vec![vec![-3, -1], vec![-3, 1], vec![1, 3]]
        );
        assert_eq!(upper_subposets(&p, &[-3, 0, 3]), vec![vec![1, 2]]);
    }

    #[test]
    fn standardizations_of_the_factors() {
        let p = sample();
        // The chain -2 < 0 < 2 standardizes to the full chain on B_1.
        let st_q2 = standardize_b(&p, &[-2, 0, 2]).unwrap();
        assert!(st_q2.lt(-1, 0) && st_q2.lt(0, 1));
        // The upper set {-3, -1} carries -1 < -3, standardizing to 2 < 1.
        let st_u22 = sub_poset(&p, &[-3, -1]).unwrap().standardize();
        assert!(st_u22.lt(2, 1));
        // The antichain lower set standardizes to the B_1 antichain.
        let st_q1 = standardize_b(&p, &[-1, 0, 1]).unwrap();
        assert!(!st_q1.comparable(-1, 1) && !st_q1.comparable(0, 1));
    }

    #[test]
    fn standardization_maps_on_a_long_window() {
        let g = sp(&[-4, 7, -1, 3, -6, 2, -5]);
        assert_eq!(st_plus(&g, 4).unwrap(), sp(&[-3, 4, -1, 2]));
        assert_eq!(
            st_minus(&g, 4).unwrap(),
            Perm::from_word(vec![1, 3, 2]).unwrap()
        );
    }

    #[test]
    fn factorization_of_a_sample_extension() {
        let g = sp(&[-1, 2, -3]);
        let (q, u, g1, g2) = restriction_data(&g, 1).unwrap();
        assert_eq!(q, vec![-1, 0, 1]);
        assert_eq!(u, vec![-3, 2]);
        assert_eq!(g1, sp(&[-1]));
        assert_eq!(g2, Perm::from_word(vec![2, 1]).unwrap());
        assert_eq!(conc(&q, &u, &g1, &g2).unwrap(), g);
    }

    #[test]
    fn factorization_partitions_the_extension_set() {
        // Extensions of the sample poset split by (low set, high set) into
        // blocks of sizes 4, 1, 1, 2, 4, and the factor maps biject each
        // block with the product of the factor extension sets.
        let p = sample();
        let exts = p.extensions();
        assert_eq!(exts.len(), 12);
        let m = 1usize;
        let mut blocks: BTreeMap<(Vec<i32>, Vec<i32>), Vec<SignedPerm>> = BTreeMap::new();
        for g in &exts {
            let (q, u, g1, g2) = restriction_data(g, m).unwrap();
            // The low set is a lower subposet and the high set an upper
            // subposet for it.
            assert!(lower_subposets_b(&p, m).contains(&q), "{g}");
            assert!(upper_subposets(&p, &q).contains(&u), "{g}");
            // The factors are extensions of the standardized factors.
            assert!(
                standardize_b(&p, &q).unwrap().extensions().contains(&g1),
                "{g}"
            );
            assert!(
                sub_poset(&p, &u)
                    .unwrap()
                    .standardize()
                    .extensions()
                    .unwrap()
                    .contains(&g2),
                "{g}"
            );
            // Reassembly inverts the factorization.
            assert_eq!(conc(&q, &u, &g1, &g2).unwrap(), *g);
            blocks.entry((q, u)).or_default().push(g.clone());
        }
        let sizes: Vec<usize> = blocks.values().map(|v| v.len()).collect();
        assert_eq!(sizes, vec![4, 1, 2, 1, 4]);
        assert_eq!(
            blocks.keys().cloned().collect::<Vec<_>>(),
            vec![
                (vec![-3, 0, 3], vec![1, 2]),
                (vec![-2, 0, 2], vec![-3, -1]),
                (vec![-2, 0, 2], vec![-3, 1]),
                (vec![-2, 0, 2], vec![1, 3]),
                (vec![-1, 0, 1], vec![-3, 2]),
            ]
        );
        // Surjectivity: every factor pair is hit.
        for ((q, u), members) in &blocks {
            let lows = standardize_b(&p, q).unwrap().extensions();
            let highs = sub_poset(&p, u)
                .unwrap()
                .standardize()
                .extensions()
                .unwrap();
            assert_eq!(members.len(), lows.len() * highs.len());
        }
    }

    #[test]
    fn factor_maps_invert_on_the_whole_group() {
        for n in 1..=3usize {
            for g in all_signed_perms(n).unwrap() {
                for m in 0..=n {
                    let (q, u, g1, g2) = restriction_data(&g, m).unwrap();
                    assert_eq!(conc(&q, &u, &g1, &g2).unwrap(), g, "gamma {g}, m {m}");
                }
            }
        }
    }
}
