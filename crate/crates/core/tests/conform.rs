mod common;

use common::{arb_function, letters, preorders};
use egpkit::conform::{self, cone_fn, face_fn, low_of};
use egpkit::preorder::{enumerate_preorders, enumerate_total_preorders};
use egpkit::{corpus, geometry};
use egpkit::{Limits, Preorder, SubmodFn};
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

fn check_oracle(z: &SubmodFn) {
    let fast = conform::conforming_preorders(z, &lim()).unwrap();
    let slow = conform::conforming_oracle(z, &lim()).unwrap();
    assert_eq!(fast, slow, "{z}");
}

fn check_closure(z: &SubmodFn) {
    for p in &enumerate_preorders(z.ground(), &lim()).unwrap() {
        if !conform::is_compatible(p, z).unwrap() {
            continue;
        }
        let q = conform::closure(z, p).unwrap();
        assert!(q.is_below(p));
        assert!(conform::is_conforming(&q, z).unwrap());
        assert_eq!(conform::closure(z, &q).unwrap(), q);
    }
}

fn check_pre_structure(z: &SubmodFn) {
    let pre = conform::conforming_preorders(z, &lim()).unwrap();
    let maxima: Vec<_> = pre
        .iter()
        .filter(|p| !pre.iter().any(|q| q != *p && p.is_below(q)))
        .collect();
    assert_eq!(maxima.len(), 1, "{z}");
    let comps = maxima[0].components();
    assert!(maxima[0].is_totally_disconnected());
    assert_eq!(comps, z.ctop_components());
    for p in &pre {
        assert_eq!(p.components(), comps);
        for q in pre.iter().filter(|q| p.is_below(q)) {
            assert!(Preorder::is_contraction(p, q), "P={p} Q={q}");
        }
    }
    let degree = conform::min_preorders(z, &lim()).unwrap();
    let first = degree[0].bubbles().len();
    assert!(degree.iter().all(|p| p.bubbles().len() == first));
}

/// `(z^P)|_S = (z|_S)^{P|_S}` and `(z^P)_{/S} = (z_{/S})^{P|_{I∖S}}` for down-sets `S`.
fn check_cone_minors(z: &SubmodFn) {
    for p in conform::conforming_preorders(z, &lim()).unwrap() {
        let zp = cone_fn(z, &p).unwrap();
        for s in p.down_sets() {
            let rest = z.full().minus(s);
            let left = cone_fn(&z.restrict(s), &p.restrict(s)).unwrap();
            assert_eq!(zp.restrict(s), left);
            let right = cone_fn(&z.corestrict(s).unwrap(), &p.restrict(rest)).unwrap();
            assert_eq!(zp.corestrict(s).unwrap(), right);
        }
    }
}

/// `(z^P)_Q = (z_Q)^R` when `R ◁ P` corresponds to `P ◀ Q`.
fn check_exchange(z: &SubmodFn) {
    let pre = conform::conforming_preorders(z, &lim()).unwrap();
    for p in &pre {
        for q in pre.iter().filter(|q| p.is_below(q)) {
            let r = p.galois_g(q).unwrap();
            let lhs = face_fn(&cone_fn(z, p).unwrap(), q).unwrap();
            let rhs = cone_fn(&face_fn(z, q).unwrap(), &r).unwrap();
            assert_eq!(lhs, rhs, "P={p} Q={q}");
        }
    }
}

/// For finite `z`, the face of `P` is spanned by the vertices of the minimal faces below it.
fn check_face_dimensions(z: &SubmodFn) {
    let lattice = conform::enumerate_faces(z, &lim()).unwrap();
    let vertices: Vec<_> = lattice
        .minimal()
        .into_iter()
        .map(|f| {
            let l = &f.preorder.linear_extensions()[0];
            (f.preorder.clone(), geometry::alin_point(z, l).unwrap())
        })
        .collect();
    for face in &lattice.faces {
        assert_eq!(face.dim, geometry::alin_dimension(&face.preorder));
        assert_eq!(face.dim, z.n() - face.preorder.bubbles().len());
        if z.is_finite() {
            let pts: Vec<_> = vertices
                .iter()
                .filter(|(v, _)| v.is_below(&face.preorder))
                .map(|(_, x)| x.clone())
                .collect();
            assert_eq!(
                geometry::affine_dimension(&pts),
                face.dim,
                "{}",
                face.preorder
            );
        }
    }
}

#[test]
fn corpus_oracle_and_structure() {
    for s in corpus::samples() {
        check_oracle(&s.z);
        check_closure(&s.z);
        check_pre_structure(&s.z);
        check_cone_minors(&s.z);
        check_exchange(&s.z);
        check_face_dimensions(&s.z);
    }
}

#[test]
fn minimal_posets_partition_total_orders() {
    for z in [corpus::hexagon(), corpus::pentagon()] {
        let mins = conform::min_preorders(&z, &lim()).unwrap();
        let mut covered: Vec<Preorder> = mins.iter().flat_map(|p| p.linear_extensions()).collect();
        let count = covered.len();
        covered.sort();
        covered.dedup();
        assert_eq!(covered.len(), count, "linear extension sets overlap");
        let orders: Vec<Preorder> = enumerate_total_preorders(&letters(3), &lim())
            .unwrap()
            .into_iter()
            .filter(Preorder::is_poset)
            .collect();
        assert_eq!(covered, orders);
    }
}

#[test]
fn cone_of_a_preorder_conforms_to_its_contractions() {
    for n in 0..=4 {
        for p in preorders(n) {
            let pre = conform::conforming_preorders(&low_of(p), &lim()).unwrap();
            assert_eq!(pre, p.contractions(&lim()).unwrap(), "P={p}");
        }
    }
}

#[test]
fn face_lattice_order_is_containment() {
    let z = corpus::hexagon();
    let lattice = conform::enumerate_faces(&z, &lim()).unwrap();
    for (i, fi) in lattice.faces.iter().enumerate() {
        for (j, fj) in lattice.faces.iter().enumerate() {
            let expected = i != j && fi.preorder.is_below(&fj.preorder);
            assert_eq!(lattice.order.contains(&(i, j)), expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_functions_match_oracle(z in arb_function()) {
        check_oracle(&z);
        check_closure(&z);
        check_pre_structure(&z);
        check_exchange(&z);
    }
}
