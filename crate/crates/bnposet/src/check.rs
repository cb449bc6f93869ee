//! Verification harness: named suites that exercise the structural
//! identities of the crate on exhaustive and seeded-random poset families.
//!
//! Each suite either returns a [`SuiteReport`] with the number of individual
//! checks that ran, or the first error encountered.  Poset pools are
//! exhaustive for ranks `<= 2` and seeded-random beyond, so every run is
//! reproducible.

use std::collections::{BTreeMap, BTreeSet};

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::comp::{CompA, CompB};
use crate::distinguished::{
    distinguished_representative, is_distinguished, is_regular, poset_of, sigma_rho,
};
use crate::error::{Error, Result};
use crate::module::{
    certify_chi_induce, certify_theta_induce, certify_twist_restrict, certify_with_map,
    characteristic_b, check_relations, compose_maps, diag_sign_length, grothendieck_decompose,
    induce, induce_posets, label_identity_map, module_a_poset, module_b_poset,
    module_b_poset_signfree, restrict_module, restrict_poset, tensor, twist_chi, twist_theta, wbim,
    wbim_decompose,
};
use crate::perm::{all_signed_perms, interval_weak_r, SignedPerm};
use crate::poset::{all_bn_posets, BnPoset, FinitePoset};
use crate::qsym::{BasisA, QSymA};
use crate::restrict::{standardize_b, sub_poset};

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    /// Suite name.
    pub name: &'static str,
    /// Number of individual checks that ran.
    pub cases: usize,
    /// Human-readable summary of the coverage.
    pub detail: String,
}

/// Names of the available verification suites.
pub const SUITE_NAMES: &[&str] = &[
    "relations",
    "partition",
    "grothendieck",
    "induction",
    "restriction",
    "twists",
    "distinguished",
    "regular-interval",
    "wbim",
];

/// Run one named suite with the given rank bound, sample budget, and seed.
pub fn run_suite(name: &str, n: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    match name {
        "relations" => relations_suite(n, samples, seed),
        "partition" => partition_suite(n, samples, seed),
        "grothendieck" => grothendieck_suite(n, samples, seed),
        "induction" => induction_suite(n, samples, seed),
        "restriction" => restriction_suite(n, samples, seed),
        "twists" => twists_suite(n, samples, seed),
        "distinguished" => distinguished_suite(n),
        "regular-interval" => regular_interval_suite(n),
        "wbim" => wbim_suite(n),
        other => Err(Error::Unsupported(format!("unknown suite `{}`", other))),
    }
}

/// Seeded generator of `B_n` posets mixing two strategies: intersections of
/// up to three random linear orders, and random symmetrized cover relations
/// with rejection of cyclic candidates.
pub fn random_bn_posets(n: usize, count: usize, seed: u64) -> Result<Vec<BnPoset>> {
    let all = all_signed_perms(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut rounds = 0usize;
    while out.len() < count && rounds < 200 * count + 200 {
        rounds += 1;
        if rounds % 2 == 1 {
            let k = rng.gen_range(1..=3);
            let orders: Vec<SignedPerm> = (0..k)
                .map(|_| all[rng.gen_range(0..all.len())].clone())
                .collect();
            out.push(poset_of(&orders)?);
        } else {
            let m = n as i32;
            let tries = rng.gen_range(1..=2 * n.max(1));
            let mut covers = Vec::new();
            for _ in 0..tries {
                let a = rng.gen_range(-m..=m);
                let b = rng.gen_range(-m..=m);
                if a != b {
                    covers.push((a, b));
                }
            }
            if let Ok(p) = BnPoset::from_covers(n, &covers, true) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Seeded generator of posets on `[1, k]` by rejection of cyclic candidate
/// relation sets.
pub fn random_finite_posets(k: usize, count: usize, seed: u64) -> Result<Vec<FinitePoset>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elems: Vec<i32> = (1..=k as i32).collect();
    let mut out = Vec::new();
    let mut rounds = 0usize;
    while out.len() < count && rounds < 200 * count + 200 {
        rounds += 1;
        let tries = rng.gen_range(0..=2 * k);
        let mut covers = Vec::new();
        for _ in 0..tries {
            let a = elems[rng.gen_range(0..k)];
            let b = elems[rng.gen_range(0..k)];
            if a != b {
                covers.push((a, b));
            }
        }
        if let Ok(p) = FinitePoset::from_covers(elems.clone(), &covers) {
            out.push(p);
        }
    }
    Ok(out)
}

fn poset_pool(n: usize, samples: usize, seed: u64) -> Result<Vec<BnPoset>> {
    if n <= 2 {
        all_bn_posets(n)
    } else {
        random_bn_posets(n, samples, seed)
    }
}

/// The extension enumerator of a poset on `[1, k]` in the fundamental basis.
pub fn finite_kp(p: &FinitePoset) -> Result<QSymA> {
    let mut f = QSymA::zero(BasisA::Fundamental);
    let k = p.size();
    for w in p.extensions()? {
        f.add_term(CompA::from_set(&w.descents(), k)?, BigInt::from(1));
    }
    Ok(f)
}

/// Every defining relation of the acting algebra, checked on poset modules
/// in both families, twisted and restricted modules, sampled weak-order
/// interval modules, and small induced and tensor modules.
pub fn relations_suite(n_max: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut cases = 0;
    for n in 1..=n_max {
        let pool = poset_pool(n, samples, seed + n as u64)?;
        for p in &pool {
            let m = module_b_poset(p);
            check_relations(&m)?;
            check_relations(&module_b_poset_signfree(p))?;
            check_relations(&twist_theta(&m))?;
            check_relations(&twist_chi(&m))?;
            cases += 4;
            for mid in 0..n {
                check_relations(&restrict_module(&m, mid)?)?;
                cases += 1;
            }
        }
        let all = all_signed_perms(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa5a5 ^ n as u64);
        for _ in 0..samples.min(20) {
            let a = &all[rng.gen_range(0..all.len())];
            let b = &all[rng.gen_range(0..all.len())];
            let (lo, hi) = if a.leq_weak_r(b) {
                (a, b)
            } else if b.leq_weak_r(a) {
                (b, a)
            } else {
                continue;
            };
            check_relations(&wbim(lo, hi)?)?;
            cases += 1;
        }
    }
    for (m, k) in [(1usize, 1usize), (1, 2), (2, 1)] {
        if m + k > n_max.max(2) {
            continue;
        }
        let pool_b = poset_pool(m, 3, seed)?;
        let pool_a = random_finite_posets(k, 3, seed + 7)?;
        for p1 in pool_b.iter().take(3) {
            for p2 in pool_a.iter().take(3) {
                let mb = module_b_poset(p1);
                let ma = module_a_poset(p2)?;
                check_relations(&tensor(&mb, &ma)?)?;
                check_relations(&induce(&mb, &ma)?)?;
                cases += 2;
            }
        }
    }
    Ok(SuiteReport {
        name: "relations",
        cases,
        detail: format!(
            "ranks 1..={}; poset, twisted, restricted, interval, tensor, induced modules",
            n_max
        ),
    })
}

/// The enumerator identity: the characteristic of the poset module equals
/// the P-partition enumerator, compared both termwise and through the
/// truncated polynomial expansion against the direct bounded-map count.
pub fn partition_suite(n_max: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut cases = 0;
    for n in 1..=n_max {
        let pool = poset_pool(n, samples, seed + n as u64)?;
        for p in &pool {
            let ch = characteristic_b(&module_b_poset(p))?;
            let v = n + 1;
            if ch.expand(v) != p.kbp_from_partitions(v as i32) {
                return Err(Error::RelationFailure(format!(
                    "characteristic disagrees with the bounded P-partition count on {}",
                    p
                )));
            }
            if ch.iter_terms() != p.kbp().iter_terms() {
                return Err(Error::RelationFailure(format!(
                    "characteristic disagrees with the descent enumerator on {}",
                    p
                )));
            }
            cases += 2;
        }
    }
    Ok(SuiteReport {
        name: "partition",
        cases,
        detail: format!("ranks 1..={}; truncation at rank + 1 variables", n_max),
    })
}

/// The composition multiset from the submodule/quotient recursion matches
/// the descent multiset of the linear extensions.
pub fn grothendieck_suite(n_max: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut cases = 0;
    for n in 1..=n_max {
        let pool = poset_pool(n, samples, seed + n as u64)?;
        for p in &pool {
            let got = grothendieck_decompose(p)?;
            let mut direct = p
                .extensions()
                .iter()
                .map(|g| CompB::from_set(&g.descents(), n))
                .collect::<Result<Vec<CompB>>>()?;
            direct.sort();
            if got != direct {
                return Err(Error::RelationFailure(format!(
                    "composition recursion disagrees with extension descents on {}",
                    p
                )));
            }
            cases += 1;
        }
    }
    Ok(SuiteReport {
        name: "grothendieck",
        cases,
        detail: format!("ranks 1..={}; recursion vs direct descent multiset", n_max),
    })
}

/// Induced poset modules against the disjoint-union poset module via a
/// certified basis map, and independently the enumerator identity through
/// the external action on the fundamental basis.
pub fn induction_suite(total: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut cases = 0;
    for t in 2..=total.max(2) {
        for m in 1..t {
            let k = t - m;
            let pool_b = poset_pool(m, samples.min(6), seed + (t * 8 + m) as u64)?;
            let mut pool_a = vec![FinitePoset::antichain_on(k)];
            pool_a.extend(random_finite_posets(k, 3, seed + (t * 8 + m) as u64 + 1)?);
            for p1 in pool_b.iter().take(samples.min(6)) {
                for p2 in pool_a.iter().take(samples.min(4)) {
                    induce_posets(p1, p2)?;
                    let lhs = p1.disjoint_union_b(p2)?.kbp();
                    let rhs = p1.kbp().action(&finite_kp(p2)?)?;
                    if lhs.iter_terms() != rhs.iter_terms() {
                        return Err(Error::RelationFailure(format!(
                            "enumerator of the union differs from the action on {} and {}",
                            p1, p2
                        )));
                    }
                    cases += 2;
                }
            }
        }
    }
    Ok(SuiteReport {
        name: "induction",
        cases,
        detail: format!(
            "all splits of total ranks 2..={}; certified module maps and enumerators",
            total.max(2)
        ),
    })
}

/// Restriction block decompositions (certified basis maps) and the coproduct
/// identity: the coaction of the enumerator equals the block-wise enumerator
/// sum in each bidegree.
pub fn restriction_suite(n_max: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut cases = 0;
    for n in 1..=n_max {
        let mut pool = poset_pool(n, samples, seed + n as u64)?;
        // Linear posets make the coaction identity explicit bidegree by
        // bidegree, so a spread of them is always included.
        let windows = all_signed_perms(n)?;
        let step = (windows.len() / 4).max(1);
        pool.extend(
            windows
                .iter()
                .step_by(step)
                .take(4)
                .map(BnPoset::from_linear),
        );
        for p in &pool {
            let co = p.kbp().coaction();
            for mid in 0..n {
                let iso = restrict_poset(p, mid)?;
                let mut acc: BTreeMap<(CompB, CompA), BigInt> = BTreeMap::new();
                for (q, u) in &iso.blocks {
                    let kq = standardize_b(p, q)?.kbp();
                    let ku = finite_kp(&sub_poset(p, u)?.standardize())?;
                    for (a, ca) in kq.iter_terms() {
                        for (b, cb) in ku.iter_terms() {
                            *acc.entry((a.clone(), b)).or_default() += &ca * &cb;
                        }
                    }
                }
                let lhs: BTreeMap<(CompB, CompA), BigInt> = co
                    .iter()
                    .filter(|(a, _, _)| a.size() == mid)
                    .map(|(a, b, c)| ((a.clone(), b.clone()), c.clone()))
                    .collect();
                if lhs != acc {
                    return Err(Error::RelationFailure(format!(
                        "coaction bidegree ({}, {}) differs from the block sum on {}",
                        mid,
                        n - mid,
                        p
                    )));
                }
                cases += 2;
            }
        }
    }
    Ok(SuiteReport {
        name: "restriction",
        cases,
        detail: format!(
            "ranks 1..={}; every cut (linear posets included), certified block maps and coaction bidegrees",
            n_max
        ),
    })
}

/// Twisted modules against their closed-form partners via certified basis
/// maps, twist involutivity, commutation with restriction, and the induction
/// compatibilities of both twists.
pub fn twists_suite(n_max: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut cases = 0;
    for n in 1..=n_max {
        let pool = poset_pool(n, samples, seed + n as u64)?;
        for p in &pool {
            let m = module_b_poset(p);
            let th = twist_theta(&m);
            let sf = module_b_poset_signfree(p);
            certify_with_map(&th, &sf, &diag_sign_length(&th)?)?;
            let chi = twist_chi(&m);
            let dual = p.dual();
            let sfd = module_b_poset_signfree(&dual);
            let map = label_identity_map(&chi, &sfd)?;
            certify_with_map(&chi, &sfd, &map)?;
            let md = module_b_poset(&dual);
            let composed = compose_maps(&map, &diag_sign_length(&md)?);
            certify_with_map(&twist_theta(&chi), &md, &composed)?;
            if twist_theta(&th) != m || twist_chi(&chi) != m {
                return Err(Error::RelationFailure(format!(
                    "a twist fails to be involutive on {}",
                    p
                )));
            }
            cases += 4;
            for mid in 0..n {
                certify_twist_restrict(&m, mid)?;
                cases += 1;
            }
        }
    }
    for (m, k) in [(1usize, 1usize), (1, 2)] {
        let pool_b = all_bn_posets(m)?;
        let mut pool_a = vec![FinitePoset::antichain_on(k)];
        pool_a.extend(random_finite_posets(k, 2, seed + k as u64)?);
        for p1 in pool_b.iter().take(samples.max(2)) {
            for p2 in pool_a.iter().take(2) {
                certify_theta_induce(&module_b_poset(p1), &module_a_poset(p2)?)?;
                certify_chi_induce(p1, p2, seed)?;
                cases += 2;
            }
        }
    }
    Ok(SuiteReport {
        name: "twists",
        cases,
        detail: format!(
            "ranks 1..={}; certified twist maps, involutivity, restriction and induction compatibility",
            n_max
        ),
    })
}

/// Exhaustively group all posets of the given rank by extension set: each
/// class contains exactly one distinguished poset, and the representative
/// computation lands on it from every member.
pub fn distinguished_suite(n: usize) -> Result<SuiteReport> {
    let posets = all_bn_posets(n)?;
    let mut classes: BTreeMap<Vec<Vec<i32>>, Vec<usize>> = BTreeMap::new();
    for (i, p) in posets.iter().enumerate() {
        let key: Vec<Vec<i32>> = p.extensions().iter().map(|w| w.window().to_vec()).collect();
        classes.entry(key).or_default().push(i);
    }
    let mut cases = 0;
    for members in classes.values() {
        let dist: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&i| is_distinguished(&posets[i]))
            .collect();
        if dist.len() != 1 {
            return Err(Error::RelationFailure(format!(
                "an extension class contains {} distinguished posets",
                dist.len()
            )));
        }
        let rep = &posets[dist[0]];
        for &i in members {
            if &distinguished_representative(&posets[i])? != rep {
                return Err(Error::RelationFailure(format!(
                    "representative of {} misses the class representative",
                    posets[i]
                )));
            }
            cases += 1;
        }
    }
    Ok(SuiteReport {
        name: "distinguished",
        cases,
        detail: format!(
            "{} posets of rank {} in {} extension classes",
            posets.len(),
            n,
            classes.len()
        ),
    })
}

/// For every comparable pair in the right weak order: the two-order
/// intersection poset is regular, its extensions are exactly the interval,
/// and the endpoint algorithm recovers the endpoints.
pub fn regular_interval_suite(n: usize) -> Result<SuiteReport> {
    let all = all_signed_perms(n)?;
    let mut cases = 0;
    for s in &all {
        for r in &all {
            if !s.leq_weak_r(r) {
                continue;
            }
            let p = poset_of(&[s.clone(), r.clone()])?;
            if !is_regular(&p) {
                return Err(Error::RelationFailure(format!(
                    "pair poset of {} and {} is not regular",
                    s, r
                )));
            }
            let mut exts = p.extensions();
            exts.sort();
            let mut ival = interval_weak_r(s, r)?;
            ival.sort();
            if exts != ival {
                return Err(Error::RelationFailure(format!(
                    "extensions of the pair poset of {} and {} miss the interval",
                    s, r
                )));
            }
            let (lo, hi) = sigma_rho(&p)?;
            if (&lo, &hi) != (s, r) {
                return Err(Error::RelationFailure(format!(
                    "endpoint algorithm returns ({}, {}) instead of ({}, {})",
                    lo, hi, s, r
                )));
            }
            cases += 3;
        }
    }
    Ok(SuiteReport {
        name: "regular-interval",
        cases,
        detail: format!("every comparable pair of rank {}", n),
    })
}

/// Interval modules: every interval splits through verified submodules into
/// simples matching the descent multiset, every interval module matches the
/// pair poset module via a certified map, and the simples over all intervals
/// cover every composition.
pub fn wbim_suite(n: usize) -> Result<SuiteReport> {
    let all = all_signed_perms(n)?;
    let mut seen: BTreeSet<CompB> = BTreeSet::new();
    let mut cases = 0;
    for s in &all {
        for r in &all {
            if !s.leq_weak_r(r) {
                continue;
            }
            let comps = wbim_decompose(s, r)?;
            let interval = interval_weak_r(s, r)?;
            let mut direct = interval
                .iter()
                .map(|g| CompB::from_set(&g.descents(), n))
                .collect::<Result<Vec<CompB>>>()?;
            direct.sort();
            if comps != direct {
                return Err(Error::RelationFailure(format!(
                    "interval splitting on [{}, {}] misses the descent multiset",
                    s, r
                )));
            }
            seen.extend(comps);
            let module = wbim(s, r)?;
            let pm = module_b_poset(&poset_of(&[s.clone(), r.clone()])?);
            certify_with_map(&module, &pm, &label_identity_map(&module, &pm)?)?;
            cases += 2;
        }
    }
    for c in CompB::all(n) {
        if !seen.contains(&c) {
            return Err(Error::RelationFailure(format!(
                "composition {} never appears in an interval decomposition",
                c
            )));
        }
        cases += 1;
    }
    Ok(SuiteReport {
        name: "wbim",
        cases,
        detail: format!(
            "every comparable pair of rank {}; all compositions covered",
            n
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_pools_are_reproducible() {
        let a = random_bn_posets(2, 10, 42).unwrap();
        let b = random_bn_posets(2, 10, 42).unwrap();
        assert_eq!(a.len(), 10);
        assert_eq!(a, b);
        let c = random_finite_posets(3, 10, 42).unwrap();
        let d = random_finite_posets(3, 10, 42).unwrap();
        assert_eq!(c.len(), 10);
        assert_eq!(c, d);
    }

    #[test]
    fn every_suite_passes_at_small_rank() {
        for name in SUITE_NAMES {
            let report = run_suite(name, 2, 8, 42).unwrap();
            assert!(report.cases > 0, "suite {} ran no checks", name);
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(
            run_suite("no-such-suite", 2, 1, 1),
            Err(Error::Unsupported(_))
        ));
    }
}
