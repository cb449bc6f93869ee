//! End-to-end acceptance run: ten named criteria, each printed on its own
//! `PASS`/`FAIL` line with runtime and coverage.  Together they exercise the
//! crate from signed permutations through enumerators, modules, induction,
//! restriction, twists, distinguished posets, and interval modules.
//!
//! Run `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::time::Instant;

use bnposet::check::{
    distinguished_suite, induction_suite, partition_suite, regular_interval_suite, relations_suite,
    restriction_suite, twists_suite, wbim_suite,
};
use bnposet::distinguished::{poset_of, sigma_rho};
use bnposet::induct::{bullet_b, factorize};
use bnposet::module::{check_relations, induce_posets, module_b_poset, restrict_poset, Label};
use bnposet::perm::{Perm, SignedPerm};
use bnposet::poset::{all_bn_posets, BnPoset, FinitePoset};
use bnposet::restrict::{conc, restriction_data, st_minus, st_plus};
use bnposet::{Error, Result};

fn sp(s: &str) -> SignedPerm {
    s.parse().expect("valid window")
}

fn pm(word: &[i32]) -> Perm {
    Perm::from_word(word.to_vec()).expect("valid word")
}

fn ensure(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::RelationFailure(what.to_string()))
    }
}

/// Run one criterion, print exactly one line for it, and fold the outcome
/// into the shared flag.
fn criterion(name: &str, ok: &mut bool, f: impl FnOnce() -> Result<String>) {
    let start = Instant::now();
    match f() {
        Ok(detail) => {
            println!(
                "PASS {:<17} [{:>6.2}s] {}",
                name,
                start.elapsed().as_secs_f64(),
                detail
            );
        }
        Err(e) => {
            *ok = false;
            println!(
                "FAIL {:<17} [{:>6.2}s] {}",
                name,
                start.elapsed().as_secs_f64(),
                e
            );
        }
    }
}

#[test]
fn acceptance() {
    let mut ok = true;

    // 1. Every constructed module satisfies the defining relations exactly.
    criterion("relations", &mut ok, || {
        let pool = all_bn_posets(1)?.len() + all_bn_posets(2)?.len() + 40;
        let r = relations_suite(3, 40, 42)?;
        ensure(pool >= 100, "poset pool smaller than 100")?;
        Ok(format!(
            "{} exact relation checks over {} posets",
            r.cases, pool
        ))
    });

    // 2. The module characteristic equals the enumerator, with the
    //    enumerator recomputed independently from bounded partitions.
    criterion("characteristic", &mut ok, || {
        let r = partition_suite(3, 50, 42)?;
        Ok(format!("{} checks; {}", r.cases, r.detail))
    });

    // 3. The bounded partition set of a poset is the disjoint union of the
    //    bounded partition sets of its linear extensions.
    criterion("partition-split", &mut ok, || {
        let mut cases = 0;
        for n in 1..=2usize {
            for p in all_bn_posets(n)? {
                let mut whole = p.p_partitions_bounded(3);
                whole.sort();
                let mut pieces = Vec::new();
                for g in p.extensions() {
                    pieces.extend(BnPoset::from_linear(&g).p_partitions_bounded(3));
                }
                pieces.sort();
                ensure(
                    pieces.windows(2).all(|w| w[0] != w[1]),
                    "extension blocks overlap",
                )?;
                ensure(
                    whole == pieces,
                    "partition set differs from the block union",
                )?;
                cases += 2;
            }
        }
        Ok(format!(
            "{} checks; values in [-3, 3], ranks 1..=2 exhaustive",
            cases
        ))
    });

    // 4. Pinned worked examples, reproduced bit-exactly.
    criterion("worked-examples", &mut ok, || {
        // Extension set of the vee poset: exactly two linear extensions.
        let vee = BnPoset::from_covers(2, &[(1, 0), (-2, 0), (0, -1), (0, 2)], false)?;
        ensure(
            vee.extensions() == vec![sp("[-1,2]"), sp("[2,-1]")],
            "vee extension set",
        )?;

        // Window composition, block product, and the five-letter
        // factorization, which recomposes to the original window.
        let gamma = sp("[3,1,4,-5,-2]");
        ensure(
            sp("[3,1,-2,5,4]").compose(&sp("[1,2,5,-4,3]"))? == gamma,
            "window composition",
        )?;
        ensure(
            bullet_b(&sp("[3,1,-2]"), &pm(&[1, 2])) == sp("[3,1,-2,4,5]"),
            "block product",
        )?;
        let (sg, rh, dl) = factorize(&gamma, 3)?;
        ensure(
            sg == sp("[3,1,-2]") && rh == pm(&[2, 1]) && dl == sp("[1,2,5,-4,3]"),
            "three-factor coset factorization",
        )?;
        ensure(
            bullet_b(&sg, &rh).compose(&dl)? == gamma,
            "factorization recomposes",
        )?;

        // Standardization maps on a seven-letter window.
        let g7 = sp("[-4,7,-1,3,-6,2,-5]");
        ensure(
            st_plus(&g7, 4)? == sp("[-3,4,-1,2]"),
            "positive standardization",
        )?;
        ensure(
            st_minus(&g7, 4)? == pm(&[1, 3, 2]),
            "negative standardization",
        )?;

        // Restriction of a rank-3 poset at the middle cut: the lower/upper
        // block list with upper-set counts (1, 3, 1), and the factor maps of
        // one extension together with the concatenation inverse.
        let p3 = BnPoset::from_covers(3, &[(-2, 0), (0, 2), (3, 1), (-1, -3)], false)?;
        let iso = restrict_poset(&p3, 1)?;
        let blocks = vec![
            (vec![-3, 0, 3], vec![1, 2]),
            (vec![-2, 0, 2], vec![-3, -1]),
            (vec![-2, 0, 2], vec![-3, 1]),
            (vec![-2, 0, 2], vec![1, 3]),
            (vec![-1, 0, 1], vec![-3, 2]),
        ];
        ensure(iso.blocks == blocks, "restriction block list")?;
        let (q, u, g1, g2) = restriction_data(&sp("[-1,2,-3]"), 1)?;
        ensure(
            q == vec![-1, 0, 1] && u == vec![-3, 2] && g1 == sp("[-1]") && g2 == pm(&[2, 1]),
            "restriction factor pair",
        )?;
        ensure(
            conc(&q, &u, &g1, &g2)? == sp("[-1,2,-3]"),
            "concatenation inverse",
        )?;

        // Intersection order of two linear orders: the exact relation set.
        let pu = poset_of(&[sp("[2,1]"), sp("[1,-2]")])?;
        let want: BTreeSet<(i32, i32)> = [(-1, -2), (-1, 0), (-1, 1), (0, 1), (2, 1)]
            .into_iter()
            .collect();
        let got: BTreeSet<(i32, i32)> = pu.strict_pairs().into_iter().collect();
        ensure(got == want, "intersection order relation set")?;

        // Endpoint algorithm on the rank-6 regular poset.
        let big = BnPoset::from_covers(
            6,
            &[
                (-4, -1),
                (-4, 3),
                (-1, -2),
                (-1, 0),
                (3, 0),
                (3, 2),
                (-2, -3),
                (0, -3),
                (0, 1),
                (2, 1),
                (-3, 4),
                (1, 4),
                (6, 5),
                (-5, -6),
            ],
            true,
        )?;
        let (lo, hi) = sigma_rho(&big)?;
        ensure(
            lo == sp("[-3,2,1,4,6,5]") && hi == sp("[1,-2,-3,4,-5,-6]"),
            "rank-6 endpoint pair",
        )?;

        // The twelve-dimensional module of a rank-2 poset joined with a
        // one-element antichain: the full generator action table.
        let quiver = BnPoset::from_covers(2, &[(-1, 0), (2, 0), (0, 1), (0, -2)], false)?;
        let union = quiver.disjoint_union_b(&FinitePoset::antichain_on(1))?;
        let m = module_b_poset(&union);
        ensure(m.dim() == 12, "module dimension 12")?;
        check_relations(&m)?;
        // One row per basis element: window, loop generators, arrows.
        type Row = (
            &'static str,
            &'static [usize],
            &'static [(usize, &'static str)],
        );
        let table: &[Row] = &[
            ("[-2,1,3]", &[0], &[(1, "[1,-2,3]"), (2, "[-2,3,1]")]),
            ("[1,-2,3]", &[1], &[(2, "[1,3,-2]")]),
            ("[-2,3,1]", &[0, 2], &[(1, "[3,-2,1]")]),
            ("[1,3,-2]", &[2], &[(1, "[3,1,-2]")]),
            ("[3,-2,1]", &[1], &[(2, "[3,1,-2]"), (0, "[-3,-2,1]")]),
            ("[3,1,-2]", &[1, 2], &[(0, "[-3,1,-2]")]),
            ("[-3,-2,1]", &[0], &[(2, "[-3,1,-2]"), (1, "[-2,-3,1]")]),
            ("[-3,1,-2]", &[0, 2], &[(1, "[1,-3,-2]")]),
            ("[-2,-3,1]", &[0, 1], &[(2, "[-2,1,-3]")]),
            ("[1,-3,-2]", &[1], &[(2, "[1,-2,-3]")]),
            ("[-2,1,-3]", &[0, 2], &[(1, "[1,-2,-3]")]),
            ("[1,-2,-3]", &[1, 2], &[]),
        ];
        ensure(table.len() == m.dim(), "action table covers the basis")?;
        for &(window, loops, arrows) in table {
            let b = m
                .label_index(&Label::Signed(sp(window)))
                .ok_or_else(|| Error::RelationFailure(format!("missing basis {}", window)))?;
            for g in 0..3 {
                let row = m.row(g, b);
                if loops.contains(&g) {
                    ensure(row == &vec![(b, -1)], "loop entry in the action table")?;
                } else if let Some(&(_, target)) = arrows.iter().find(|&&(ag, _)| ag == g) {
                    let t = m.label_index(&Label::Signed(sp(target))).ok_or_else(|| {
                        Error::RelationFailure(format!("missing basis {}", target))
                    })?;
                    ensure(row == &vec![(t, 1)], "arrow entry in the action table")?;
                } else {
                    ensure(row.is_empty(), "zero entry in the action table")?;
                }
            }
        }

        // Induction sends the coset basis vector over the five-letter
        // factorization to the matching extension with coefficient one.
        let p1 = BnPoset::from_covers(
            3,
            &[(2, -3), (-1, -3), (-3, 0), (0, 3), (3, -2), (3, 1)],
            false,
        )?;
        let p2 = FinitePoset::from_covers(vec![1, 2], &[(2, 1)])?;
        let ind = induce_posets(&p1, &p2)?;
        let source = Label::Coset(
            Box::new(Label::Pair(
                Box::new(Label::Signed(sp("[3,1,-2]"))),
                Box::new(Label::Plain(pm(&[2, 1]))),
            )),
            sp("[1,2,5,-4,3]"),
        );
        let i = ind
            .induced
            .label_index(&source)
            .ok_or_else(|| Error::RelationFailure("missing induced basis label".into()))?;
        let j = ind
            .target
            .label_index(&Label::Signed(gamma.clone()))
            .ok_or_else(|| Error::RelationFailure("missing target basis label".into()))?;
        ensure(ind.map[i] == (j, 1), "induced basis vector image")?;

        Ok("12 pinned identities reproduced bit-exactly".into())
    });

    // 5. Induction: shuffles of extension sets, certified module maps, and
    //    the product identity of enumerators across disjoint unions.
    criterion("induction", &mut ok, || {
        let r = induction_suite(4, 6, 42)?;
        Ok(format!("{} checks; {}", r.cases, r.detail))
    });

    // 6. Restriction: certified block decompositions at every cut and the
    //    coaction identity, bidegree by bidegree.
    criterion("restriction", &mut ok, || {
        let r = restriction_suite(3, 25, 42)?;
        Ok(format!("{} checks; {}", r.cases, r.detail))
    });

    // 7. Twists: certified isomorphisms with the closed-form partners and
    //    both induction compatibilities.
    criterion("twists", &mut ok, || {
        let r = twists_suite(3, 20, 42)?;
        Ok(format!("{} checks; {}", r.cases, r.detail))
    });

    // 8. Distinguished posets: exactly one per extension class at rank 2,
    //    reached by the representative construction.
    criterion("distinguished", &mut ok, || {
        let r = distinguished_suite(2)?;
        Ok(format!("{} checks; {}", r.cases, r.detail))
    });

    // 9. Regular posets are exactly the two-element intersections, with the
    //    endpoint algorithm inverting the construction on every comparable
    //    pair at ranks 2 and 3.
    criterion("regular-interval", &mut ok, || {
        let a = regular_interval_suite(2)?;
        let b = regular_interval_suite(3)?;
        Ok(format!(
            "{} checks; every comparable pair at ranks 2 and 3",
            a.cases + b.cases
        ))
    });

    // 10. Interval modules split into the simples named by the interval's
    //     descent sets, and the classes cover every composition.
    criterion("wbim", &mut ok, || {
        let a = wbim_suite(2)?;
        let b = wbim_suite(3)?;
        Ok(format!(
            "{} checks; every interval at ranks 2 and 3, all compositions covered",
            a.cases + b.cases
        ))
    });

    assert!(ok, "one or more acceptance criteria failed");
}
