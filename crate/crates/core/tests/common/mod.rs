#![allow(dead_code)]

use std::sync::OnceLock;

use egpkit::preorder::enumerate_preorders;
use egpkit::value::int;
use egpkit::{generators, ExtValue, GroundSet, Limits, Preorder, SubmodFn, Subset};
use proptest::prelude::*;

pub fn letters(n: usize) -> GroundSet {
    GroundSet::letters(n).unwrap()
}

/// All preorders on `{a, …}` with `n ≤ 4` points, computed once.
pub fn preorders(n: usize) -> &'static [Preorder] {
    static CACHE: OnceLock<Vec<Vec<Preorder>>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..=4)
            .map(|k| enumerate_preorders(&letters(k), &Limits::default()).unwrap())
            .collect()
    })[n]
}

pub fn arb_preorder(n: usize) -> impl Strategy<Value = Preorder> {
    (0..preorders(n).len()).prop_map(move |i| preorders(n)[i].clone())
}

/// A Minkowski sum of weighted simplices on `n` points.
pub fn arb_minkowski(n: usize) -> impl Strategy<Value = SubmodFn> {
    let full = (1u32 << n) - 1;
    proptest::collection::vec((1..=full, 0i64..4), 1..5).prop_map(move |ws| {
        let weights: Vec<_> = ws.into_iter().map(|(s, y)| (Subset(s), int(y))).collect();
        generators::minkowski(letters(n), &weights).unwrap()
    })
}

/// A Minkowski sum cut down to the down-sets of a preorder: finite on
/// a lattice of sets, hence still submodular.
pub fn arb_extended(n: usize) -> impl Strategy<Value = SubmodFn> {
    (arb_minkowski(n), arb_preorder(n)).prop_map(|(z, p)| {
        SubmodFn::from_fn(z.ground().clone(), |s| {
            if p.is_down_set(s) {
                z.value(s).clone()
            } else {
                ExtValue::Infinity
            }
        })
        .unwrap()
    })
}

pub fn arb_function() -> impl Strategy<Value = SubmodFn> {
    (1usize..=4).prop_flat_map(|n| prop_oneof![arb_minkowski(n), arb_extended(n)])
}
