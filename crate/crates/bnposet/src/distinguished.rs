//! Distinguished and regular `B_n` posets.
//!
//! A `B_n` poset is *distinguished* when any element comparable to its
//! own negative is comparable to 0.  Intersections of total `B_n` orders
//! are always distinguished, and every extension class of `B_n` posets
//! contains exactly one distinguished member.  *Regular* posets satisfy a
//! further betweenness condition and are exactly the posets whose
//! extension sets are intervals in the right weak order, with endpoints
//! produced by a greedy two-sided peeling algorithm.

use crate::error::{Error, Result};
use crate::perm::{interval_weak_r, SignedPerm};
use crate::poset::BnPoset;

/// The intersection of the total orders induced by the given signed
/// permutations.
pub fn poset_of(orders: &[SignedPerm]) -> Result<BnPoset> {
    let first = orders
        .first()
        .ok_or(Error::EmptyInput("poset_of needs at least one order"))?;
    let n = first.rank();
    let linears: Vec<BnPoset> = orders.iter().map(BnPoset::from_linear).collect();
    if linears.iter().any(|l| l.rank() != n) {
        return Err(Error::RankMismatch(n, 0));
    }
    let mut pairs = Vec::new();
    for i in -(n as i32)..=n as i32 {
        for j in -(n as i32)..=n as i32 {
            if i != j && linears.iter().all(|l| l.lt(i, j)) {
                pairs.push((i, j));
            }
        }
    }
    BnPoset::from_covers(n, &pairs, false)
}

/// Checks the distinguishing condition, returning a witness on failure.
pub fn check_distinguished(p: &BnPoset) -> Result<()> {
    let n = p.rank() as i32;
    for x in 1..=n {
        if p.comparable(x, -x) && !p.comparable(x, 0) {
            return Err(Error::NotDistinguished(x, -x));
        }
    }
    Ok(())
}

pub fn is_distinguished(p: &BnPoset) -> bool {
    check_distinguished(p).is_ok()
}

/// Checks regularity (distinguished plus betweenness), returning a
/// witness triple on failure.
pub fn check_regular(p: &BnPoset) -> Result<()> {
    check_distinguished(p)?;
    let n = p.rank() as i32;
    for x in -n..=n {
        for y in (x + 1)..=n {
            for z in (y + 1)..=n {
                if p.lt(x, z) && !p.lt(x, y) && !p.lt(y, z) {
                    return Err(Error::NotRegular(x, y, z));
                }
                if p.lt(z, x) && !p.lt(z, y) && !p.lt(y, x) {
                    return Err(Error::NotRegular(z, y, x));
                }
            }
        }
    }
    Ok(())
}

pub fn is_regular(p: &BnPoset) -> bool {
    check_regular(p).is_ok()
}

/// The distinguished representative of the extension class of `p`: the
/// intersection of all linear extensions of `p`.
pub fn distinguished_representative(p: &BnPoset) -> Result<BnPoset> {
    poset_of(&p.extensions())
}

/// The convex hull of a set of signed permutations in the right weak
/// order: the extension set of the intersection of their total orders.
pub fn convex_hull(orders: &[SignedPerm]) -> Result<Vec<SignedPerm>> {
    Ok(poset_of(orders)?.extensions())
}

/// The weak order endpoints of a regular poset's extension set, computed
/// by greedy peeling: starting from the elements above 0 together with
/// the positive (respectively negative) elements incomparable to 0,
/// repeatedly remove the smallest (respectively largest) integer among
/// the minimal elements.
pub fn sigma_rho(p: &BnPoset) -> Result<(SignedPerm, SignedPerm)> {
    check_regular(p)?;
    let n = p.rank() as i32;
    let mut q1: Vec<i32> = (-n..=n)
        .filter(|&x| x != 0 && (p.lt(0, x) || (!p.comparable(0, x) && x > 0)))
        .collect();
    let mut q2: Vec<i32> = (-n..=n)
        .filter(|&x| x != 0 && (p.lt(0, x) || (!p.comparable(0, x) && x < 0)))
        .collect();
    let mut sigma = Vec::with_capacity(n as usize);
    let mut rho = Vec::with_capacity(n as usize);
    for _ in 0..n {
        let a = *q1
            .iter()
            .filter(|&&x| !q1.iter().any(|&z| z != x && p.lt(z, x)))
            .min()
            .expect("regular poset peeling is never stuck");
        q1.retain(|&z| z != a);
        sigma.push(a);
        let b = *q2
            .iter()
            .filter(|&&x| !q2.iter().any(|&z| z != x && p.lt(z, x)))
            .max()
            .expect("regular poset peeling is never stuck");
        q2.retain(|&z| z != b);
        rho.push(b);
    }
    Ok((
        SignedPerm::from_window(sigma)?,
        SignedPerm::from_window(rho)?,
    ))
}

/// For a regular poset, the extension set as the weak order interval
/// between the two endpoints.
pub fn extensions_as_interval(p: &BnPoset) -> Result<Vec<SignedPerm>> {
    let (sigma, rho) = sigma_rho(p)?;
    interval_weak_r(&sigma, &rho)
}
