//! Combinatorics of parabolic induction: the block product of a signed
//! permutation with a permutation, minimal coset representatives, the
//! coset form of the signed shuffle, and its inverse factorization.

use crate::error::{Error, Result};
use crate::perm::{all_signed_perms, Perm, SignedPerm};

/// The block product: `sigma` acts on `{-m, ..., m}` as itself and `rho`
/// acts on `{m+1, ..., m+n}` shifted, extended oddly to the negatives.
pub fn bullet_b(sigma: &SignedPerm, rho: &Perm) -> SignedPerm {
    let m = sigma.rank() as i32;
    let n = rho.rank() as i32;
    let mut window = Vec::with_capacity((m + n) as usize);
    for i in 1..=m {
        window.push(sigma.apply(i));
    }
    for i in 1..=n {
        window.push(rho.apply(i) + m);
    }
    SignedPerm::from_window(window).expect("valid block product window")
}

/// Whether `delta` is the minimal-length representative of its coset for
/// the parabolic generated by all generators except the one at slot `m`:
/// the preimages of `1..m` are positive and increasing and the preimages
/// of `m+1..m+n` are increasing.
pub fn is_min_coset_rep(delta: &SignedPerm, m: usize) -> bool {
    let total = delta.rank() as i32;
    let m = m as i32;
    let inv = delta.inverse();
    let mut prev = 0;
    for v in 1..=m {
        let p = inv.apply(v);
        if p <= prev {
            return false;
        }
        prev = p;
    }
    let mut prev = -total - 1;
    for v in (m + 1)..=total {
        let p = inv.apply(v);
        if p <= prev {
            return false;
        }
        prev = p;
    }
    true
}

/// All minimal coset representatives for ranks `(m, n)`, in lexicographic
/// window order.
pub fn min_coset_reps(m: usize, n: usize) -> Result<Vec<SignedPerm>> {
    Ok(all_signed_perms(m + n)?
        .into_iter()
        .filter(|d| is_min_coset_rep(d, m))
        .collect())
}

/// The coset form of the signed shuffle: all `(sigma . rho) delta` over
/// minimal coset representatives `delta`.
pub fn shuffle_b_coset(sigma: &SignedPerm, rho: &Perm) -> Result<Vec<SignedPerm>> {
    let base = bullet_b(sigma, rho);
    let mut out = Vec::new();
    for d in min_coset_reps(sigma.rank(), rho.rank())? {
        out.push(base.compose(&d)?);
    }
    out.sort();
    Ok(out)
}

/// Splits `gamma` of rank `m + n` uniquely as `(sigma . rho) delta` with
/// `delta` a minimal coset representative: `sigma` is read off the
/// positive window positions carrying values of absolute value at most
/// `m`; `rho` from the positions (of either sign) carrying the values
/// `m+1..m+n`; and `delta` is the quotient.
pub fn factorize(gamma: &SignedPerm, m: usize) -> Result<(SignedPerm, Perm, SignedPerm)> {
    let total = gamma.rank();
    if m > total {
        return Err(Error::RankMismatch(m, total));
    }
    let n = total - m;
    let mut sigma_win = Vec::with_capacity(m);
    for x in 1..=total as i32 {
        let v = gamma.apply(x);
        if v.unsigned_abs() as usize <= m {
            sigma_win.push(v);
        }
    }
    let mut rho_word = Vec::with_capacity(n);
    for y in -(total as i32)..=total as i32 {
        if y == 0 {
            continue;
        }
        let v = gamma.apply(y);
        if v > m as i32 {
            rho_word.push(v - m as i32);
        }
    }
    let sigma = SignedPerm::from_window(sigma_win)?;
    let rho = Perm::from_word(rho_word)?;
    let delta = bullet_b(&sigma, &rho).inverse().compose(gamma)?;
    debug_assert!(is_min_coset_rep(&delta, m));
    Ok((sigma, rho, delta))
}
