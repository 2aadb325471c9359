//! A fixed collection of small named functions on at most four points, used
//! by the test suites and the `oracle` command.

use crate::conform::{cone_fn, low_of};
use crate::error::Result;
use crate::extfun::SubmodFn;
use crate::generators::{self, BuildingSet, Matroid};
use crate::ground::{GroundSet, Subset};
use crate::preorder::Preorder;
use crate::value::{int, ExtValue};

#[derive(Clone, Debug)]
pub struct Sample {
    pub name: String,
    pub z: SubmodFn,
}

fn letters(n: usize) -> GroundSet {
    GroundSet::letters(n).expect("small ground set")
}

fn table(n: usize, values: &[i64]) -> SubmodFn {
    SubmodFn::new(
        letters(n),
        values.iter().map(|&v| ExtValue::int(v)).collect(),
    )
    .expect("corpus table is submodular")
}

/// The standard hexagon `z(S) = 3, 5, 6` by cardinality.
pub fn hexagon() -> SubmodFn {
    generators::standard_permutahedron(3).expect("hexagon")
}

/// `z(a) = z(b) = z(c) = 3`, `z(ab) = z(bc) = 5`, `z(ac) = z(abc) = 6`.
pub fn pentagon() -> SubmodFn {
    table(3, &[0, 3, 3, 5, 3, 6, 5, 6])
}

/// The two-point permutahedron with levels 2, 1.
pub fn segment() -> SubmodFn {
    generators::standard_permutahedron(2).expect("segment")
}

pub fn chain(n: usize) -> Preorder {
    let g = letters(n);
    let labels = g.labels().to_vec();
    Preorder::chain(g, &labels).expect("chain")
}

pub fn v_poset() -> Preorder {
    Preorder::from_relations(letters(3), &[("a", "b"), ("a", "c")]).expect("V poset")
}

/// `a < b` next to an isolated `c`.
pub fn chain_plus_point() -> Preorder {
    Preorder::from_relations(letters(3), &[("a", "b")]).expect("preorder")
}

pub fn uniform(r: usize, n: usize) -> Matroid {
    Matroid::uniform(r, n).expect("uniform matroid")
}

/// The graphic matroid of a triangle.
pub fn triangle() -> Matroid {
    Matroid::graphic(&[("x", "y"), ("y", "z"), ("x", "z")]).expect("triangle")
}

/// Rank one on `{a, b}` with `b` a loop.
pub fn with_loop() -> Matroid {
    let g = letters(2);
    Matroid::new(g, vec![Subset::singleton(0)]).expect("loop matroid")
}

pub fn path_building_set(n: usize) -> BuildingSet {
    let g = letters(n);
    let labels = g.labels().to_vec();
    let edges: Vec<(&str, &str)> = labels
        .windows(2)
        .map(|w| (w[0].as_str(), w[1].as_str()))
        .collect();
    BuildingSet::graphical(g, &edges).expect("path building set")
}

/// The test matroids with their names.
pub fn matroids() -> Vec<(&'static str, Matroid)> {
    vec![
        ("U(1,2)", uniform(1, 2)),
        ("U(2,3)", uniform(2, 3)),
        ("K3", triangle()),
        ("U(2,4)", uniform(2, 4)),
        ("loop", with_loop()),
    ]
}

/// Every sample, finite and extended.
pub fn samples() -> Vec<Sample> {
    let mut out = Vec::new();
    let mut push = |name: &str, z: Result<SubmodFn>| {
        out.push(Sample {
            name: name.to_string(),
            z: z.expect(name),
        })
    };
    push("point", Ok(table(1, &[0, 1])));
    push("segment", Ok(segment()));
    push("hexagon", Ok(hexagon()));
    push("pentagon", Ok(pentagon()));
    push("permutahedron-4", generators::standard_permutahedron(4));
    push(
        "cardinality-3",
        SubmodFn::from_fn(letters(3), |s| ExtValue::int(s.len() as i64)),
    );
    push("triangle-simplex", Ok(table(3, &[0, 1, 1, 1, 1, 1, 1, 1])));
    push(
        "segment-times-point",
        segment().product(&table(1, &[0, 1]).relabel(|_| "c".into()).expect("relabel")),
    );
    push("low-chain-2", Ok(low_of(&chain(2))));
    push("low-chain-3", Ok(low_of(&chain(3))));
    push("low-v", Ok(low_of(&v_poset())));
    push("low-chain-plus-point", Ok(low_of(&chain_plus_point())));
    push("low-coarse-3", Ok(low_of(&Preorder::coarse(letters(3)))));
    push(
        "low-discrete-2",
        Ok(low_of(&Preorder::discrete(letters(2)))),
    );
    push(
        "hexagon-vertex-cone",
        cone_fn(
            &hexagon(),
            &Preorder::chain(letters(3), &["b", "c", "a"]).expect("chain"),
        ),
    );
    push(
        "hexagon-edge-cone",
        cone_fn(
            &hexagon(),
            &Preorder::total(letters(3), &[Subset(0b010), Subset(0b101)]).expect("total"),
        ),
    );
    push("half-hexagon", half_hexagon());
    for (name, m) in matroids() {
        push(&format!("matroid-{name}"), generators::matroid_rank(&m));
    }
    push(
        "nestohedron-path-3",
        generators::nestohedron(&path_building_set(3)),
    );
    push(
        "nestohedron-path-4",
        generators::nestohedron(&path_building_set(4)),
    );
    push(
        "minkowski-ab-bc",
        generators::minkowski(
            letters(3),
            &[(Subset(0b011), int(1)), (Subset(0b110), int(2))],
        ),
    );
    out
}

/// The hexagon on the down-sets of `a < b` (with `c` free), infinite elsewhere.
fn half_hexagon() -> Result<SubmodFn> {
    let p = chain_plus_point();
    let z = hexagon();
    SubmodFn::from_fn(z.ground().clone(), |s| {
        if p.is_down_set(s) {
            z.value(s).clone()
        } else {
            ExtValue::Infinity
        }
    })
}

/// The samples with finite values everywhere.
pub fn finite_samples() -> Vec<Sample> {
    samples().into_iter().filter(|s| s.z.is_finite()).collect()
}

pub fn by_name(name: &str) -> Option<SubmodFn> {
    samples().into_iter().find(|s| s.name == name).map(|s| s.z)
}
