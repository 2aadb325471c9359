mod common;

use common::{arb_preorder, letters, preorders};
use egpkit::preorder::{enumerate_total_preorders, DownSetFamily};
use egpkit::{Limits, Preorder};
use proptest::prelude::*;

#[test]
fn counts() {
    let totals: Vec<usize> = (0..=4)
        .map(|n| {
            enumerate_total_preorders(&letters(n), &Limits::default())
                .unwrap()
                .len()
        })
        .collect();
    assert_eq!(totals, [1, 1, 3, 13, 75]);
    let all: Vec<usize> = (0..=4).map(|n| preorders(n).len()).collect();
    assert_eq!(all, [1, 1, 4, 29, 355]);
}

#[test]
fn alexandroff_round_trips() {
    for n in 0..=4 {
        for p in preorders(n) {
            let fam = p.down_set_family();
            assert_eq!(&fam.preorder(), p);
            let again = DownSetFamily::new(letters(n), fam.preorder().down_sets()).unwrap();
            assert_eq!(again, fam);
        }
    }
}

#[test]
fn galois_adjunction() {
    for n in 0..=3 {
        let all = preorders(n);
        for p in all {
            let below: Vec<_> = all.iter().filter(|r| r.is_below(p)).collect();
            let above: Vec<_> = all.iter().filter(|q| p.is_below(q)).collect();
            for r in &below {
                let f = p.galois_f(r).unwrap();
                for q in &above {
                    let g = p.galois_g(q).unwrap();
                    assert_eq!(r.is_below(&g), f.is_below(q), "R={r} P={p} Q={q}");
                }
            }
        }
    }
}

#[test]
fn subdivision_characterizations_agree() {
    for n in 0..=4 {
        let all = preorders(n);
        let mut convex_only = 0;
        for r in all {
            for p in all {
                let fix = Preorder::is_subdivision(r, p);
                assert_eq!(
                    fix,
                    Preorder::is_subdivision_admissible(r, p),
                    "R={r} P={p}"
                );
                let convex = Preorder::is_subdivision_convex(r, p);
                assert!(!fix || convex, "R={r} P={p}");
                if convex && !fix {
                    convex_only += 1;
                }
            }
        }
        assert_eq!(convex_only, if n == 4 { 36 } else { 0 }, "n={n}");
    }
}

#[test]
fn convex_test_overaccepts_crossing_pair() {
    let r = Preorder::from_relations(letters(4), &[("c", "a"), ("d", "b")]).unwrap();
    let p = Preorder::from_relations(
        letters(4),
        &[("c", "a"), ("c", "b"), ("d", "a"), ("d", "b")],
    )
    .unwrap();
    assert!(Preorder::is_subdivision_convex(&r, &p));
    assert!(!Preorder::is_subdivision(&r, &p));
}

#[test]
fn contraction_characterizations_agree() {
    for n in 0..=4 {
        let all = preorders(n);
        for p in all {
            for q in all {
                assert_eq!(
                    Preorder::is_contraction(p, q),
                    Preorder::is_contraction_fixpoint(p, q),
                    "P={p} Q={q}"
                );
                assert_eq!(
                    Preorder::is_contraction(p, q),
                    Preorder::is_contraction_convex(p, q),
                    "P={p} Q={q}"
                );
            }
        }
    }
}

#[test]
fn galois_maps_pair_subdivisions_with_contractions() {
    let lim = Limits::default();
    for n in 0..=4 {
        for p in preorders(n) {
            let subs = p.subdivisions(&lim).unwrap();
            let cons = p.contractions(&lim).unwrap();
            assert_eq!(subs.len(), cons.len(), "P={p}");
            for r in &subs {
                let q = p.galois_f(r).unwrap();
                assert!(Preorder::is_contraction(p, &q));
                assert_eq!(&p.galois_g(&q).unwrap(), r);
            }
            for q in &cons {
                let r = p.galois_g(q).unwrap();
                assert!(Preorder::is_subdivision(&r, p));
                assert_eq!(&p.galois_f(&r).unwrap(), q);
            }
        }
    }
}

fn check_lattice_laws(p: &Preorder, lim: &Limits) {
    let subs = p.subdivisions(lim).unwrap();
    for a in &subs {
        for b in &subs {
            assert!(Preorder::is_subdivision(&a.meet(b).unwrap(), p));
        }
    }
    let cons = p.contractions(lim).unwrap();
    for a in &cons {
        for b in &cons {
            assert!(Preorder::is_contraction(p, &a.join(b).unwrap()));
        }
    }
}

#[test]
fn lattice_laws_exhaustive_small() {
    let lim = Limits::default();
    for n in 0..=3 {
        for p in preorders(n) {
            check_lattice_laws(p, &lim);
        }
    }
}

#[test]
fn contraction_is_a_partial_order() {
    for n in 0..=3 {
        let all = preorders(n);
        for p in all {
            assert!(Preorder::is_contraction(p, p));
            for q in all.iter().filter(|q| Preorder::is_contraction(p, q)) {
                if Preorder::is_contraction(q, p) {
                    assert_eq!(p, q);
                }
                if p.bubbles() == q.bubbles() {
                    assert_eq!(p, q);
                }
                for r in all.iter().filter(|r| Preorder::is_contraction(q, r)) {
                    assert!(Preorder::is_contraction(p, r), "P={p} Q={q} R={r}");
                }
            }
        }
    }
}

#[test]
fn linear_extensions_are_total_and_above() {
    for p in preorders(4) {
        for l in p.linear_extensions() {
            assert!(l.is_total() && p.is_below(&l) && l.bubbles() == p.bubbles());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lattice_laws_sampled_on_four(p in arb_preorder(4)) {
        check_lattice_laws(&p, &Limits::default());
    }

    #[test]
    fn meet_and_join_bound(p in arb_preorder(4), q in arb_preorder(4)) {
        let m = p.meet(&q).unwrap();
        let j = p.join(&q).unwrap();
        prop_assert!(m.is_below(&p) && m.is_below(&q));
        prop_assert!(p.is_below(&j) && q.is_below(&j));
        prop_assert_eq!(m.opposite().opposite(), m);
    }
}
