mod common;

use common::letters;
use egpkit::generators::{self, BuildingSet, Matroid};
use egpkit::preorder::canonical_set;
use egpkit::value::int;
use egpkit::{conform, corpus, Limits};

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn generated_functions_are_submodular() {
    for n in 1..=4 {
        assert!(generators::standard_permutahedron(n)
            .unwrap()
            .is_submodular());
    }
    for s in corpus::samples() {
        assert!(s.z.is_submodular(), "{}", s.name);
    }
}

#[test]
fn forests_index_nestohedron_faces() {
    let mut checked = 0;
    for n in 1..=4 {
        for b in BuildingSet::enumerate_all(&letters(n), &lim()).unwrap() {
            let z = generators::nestohedron(&b).unwrap();
            let faces = conform::conforming_preorders(&z, &lim()).unwrap();
            let forests = canonical_set(generators::b_forests(&b, &lim()).unwrap());
            assert_eq!(forests, faces, "{:?}", b.members());
            let weights: Vec<_> = b.members().iter().map(|&j| (j, int(1))).collect();
            assert_eq!(
                generators::minkowski(b.ground().clone(), &weights).unwrap(),
                z
            );
            checked += 1;
        }
    }
    assert!(checked > 0);
    let path = corpus::path_building_set(3);
    assert_eq!(generators::b_forests(&path, &lim()).unwrap().len(), 11);
}

fn check_matroid(m: &Matroid, all_rank_one: bool) {
    let z = generators::matroid_rank(m).unwrap();
    let mins = conform::min_preorders(&z, &lim()).unwrap();
    let mut from_bases = Vec::new();
    for &b in m.bases() {
        let p = generators::basis_vertex_poset(m, b).unwrap();
        assert!(mins.contains(&p), "basis {b:?}");
        assert!(p.rank() <= 1);
        for l in p.linear_extensions() {
            assert_eq!(conform::closure(&z, &l).unwrap(), p);
        }
        from_bases.push(p);
    }
    assert_eq!(canonical_set(from_bases), mins);
    let max_rank = conform::conforming_preorders(&z, &lim())
        .unwrap()
        .iter()
        .map(|p| p.rank())
        .max()
        .unwrap();
    assert_eq!(max_rank <= 1, all_rank_one);
}

#[test]
fn matroid_vertex_posets() {
    for (name, m) in corpus::matroids() {
        check_matroid(&m, name != "U(2,4)");
    }
    check_matroid(&Matroid::uniform(1, 3).unwrap(), true);
}

/// Edges of a hypersimplex can carry conforming preorders of rank two.
#[test]
fn uniform_two_four_has_a_rank_two_edge() {
    let z = generators::matroid_rank(&corpus::uniform(2, 4)).unwrap();
    let q = egpkit::Preorder::from_relations(
        letters(4),
        &[("d", "b"), ("b", "c"), ("c", "b"), ("b", "a")],
    )
    .unwrap();
    assert!(conform::is_conforming(&q, &z).unwrap());
    assert_eq!(q.rank(), 2);
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(generators::permutahedron(&[int(1), int(2)]).is_err());
    assert!(Matroid::new(letters(2), vec![]).is_err());
}
