//! Example families: permutahedra, preorder cones, matroid rank functions,
//! Minkowski sums of simplices, nestohedra and their forests.

use num_traits::{Signed, Zero};

use crate::conform::low_of;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::extfun::SubmodFn;
use crate::ground::{GroundSet, Limits, Partition, Subset};
use crate::preorder::{self, Preorder};
use crate::value::{ExtValue, Rational};

/// `z(S) = ℓ₁ + ⋯ + ℓ_{|S|}` on `{a, b, …}` for strictly decreasing levels.
pub fn permutahedron(levels: &[Rational]) -> Result<SubmodFn> {
    if levels.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Validation(
            "levels must be strictly decreasing".into(),
        ));
    }
    let prefix: Vec<Rational> = std::iter::once(Rational::zero())
        .chain(levels.iter().scan(Rational::zero(), |acc, l| {
            *acc += l;
            Some(acc.clone())
        }))
        .collect();
    let ground = GroundSet::letters(levels.len())?;
    SubmodFn::from_fn(ground, |s| ExtValue::Finite(prefix[s.len()].clone()))
}

/// The standard permutahedron with levels `n, n−1, …, 1`.
pub fn standard_permutahedron(n: usize) -> Result<SubmodFn> {
    let levels: Vec<Rational> = (1..=n as i64).rev().map(crate::value::int).collect();
    permutahedron(&levels)
}

/// The preorder cone: `low_P`.
pub fn preorder_cone(p: &Preorder) -> SubmodFn {
    low_of(p)
}

/// A matroid given by its list of bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    ground: GroundSet,
    bases: Vec<Subset>,
}

impl Matroid {
    /// Validates equicardinality and basis exchange.
    pub fn new(ground: GroundSet, mut bases: Vec<Subset>) -> Result<Self> {
        bases.sort();
        bases.dedup();
        let Some(first) = bases.first() else {
            return Err(Error::Validation(
                "a matroid needs at least one basis".into(),
            ));
        };
        let r = first.len();
        if bases
            .iter()
            .any(|b| b.len() != r || !b.is_subset_of(ground.full()))
        {
            return Err(Error::Validation(
                "bases must be equicardinal subsets".into(),
            ));
        }
        let is_basis = |s: Subset| bases.binary_search(&s).is_ok();
        for &b1 in &bases {
            for &b2 in &bases {
                for x in b1.minus(b2).iter() {
                    let ok = b2.minus(b1).iter().any(|y| is_basis(b1.without(x).with(y)));
                    if !ok {
                        return Err(Error::Validation(format!(
                            "basis exchange fails for {} and {}",
                            ground.format_subset(b1),
                            ground.format_subset(b2)
                        )));
                    }
                }
            }
        }
        Ok(Matroid { ground, bases })
    }

    /// `U_{r,n}` on `{a, b, …}`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::Validation(format!("U({r},{n}) needs r ≤ n")));
        }
        let ground = GroundSet::letters(n)?;
        let bases = ground.full().subsets().filter(|s| s.len() == r).collect();
        Matroid::new(ground, bases)
    }

    /// The cycle matroid of a graph. Each edge `(u, v)` becomes the element
    /// labeled `uv`; an edge `(u, u)` is a loop.
    pub fn graphic<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = edges
            .iter()
            .map(|(u, v)| format!("{}{}", u.as_ref(), v.as_ref()))
            .collect();
        let ground = GroundSet::new(labels.clone())?;
        let mut verts: Vec<&str> = edges
            .iter()
            .flat_map(|(u, v)| [u.as_ref(), v.as_ref()])
            .collect();
        verts.sort();
        verts.dedup();
        // Edge endpoints by element index.
        let mut ends = vec![(0, 0); edges.len()];
        for ((u, v), l) in edges.iter().zip(&labels) {
            let i = ground.index_of(l)?;
            let a = verts.binary_search(&u.as_ref()).expect("vertex");
            let b = verts.binary_search(&v.as_ref()).expect("vertex");
            ends[i] = (a, b);
        }
        let acyclic = |s: Subset| {
            let mut parent: Vec<usize> = (0..verts.len()).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut x = x;
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            s.iter().all(|e| {
                let (a, b) = ends[e];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    false
                } else {
                    parent[ra] = rb;
                    true
                }
            })
        };
        let forests: Vec<Subset> = ground.full().subsets().filter(|&s| acyclic(s)).collect();
        let r = forests.iter().map(|s| s.len()).max().unwrap_or(0);
        let bases = forests.into_iter().filter(|s| s.len() == r).collect();
        Matroid::new(ground, bases)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn rank(&self) -> usize {
        self.bases[0].len()
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// Elements in no basis.
    pub fn loops(&self) -> Subset {
        let covered = self.bases.iter().fold(Subset::EMPTY, |a, b| a.union(*b));
        self.ground.full().minus(covered)
    }
}

/// `z_M(A) = max_B |A ∩ B|`.
pub fn matroid_rank(m: &Matroid) -> Result<SubmodFn> {
    SubmodFn::from_fn(m.ground.clone(), |a| {
        let r = m.bases.iter().map(|b| b.inter(a).len()).max().unwrap_or(0);
        ExtValue::int(r as i64)
    })
}

/// The vertex poset of a basis `B`: each `c ∉ B` that is not a loop sits
/// above the elements `b ∈ B` with `B − b + c` a basis, i.e. its fundamental
/// circuit minus itself.
pub fn basis_vertex_poset(m: &Matroid, b: Subset) -> Result<Preorder> {
    if !m.is_basis(b) {
        return Err(Error::Precondition(format!(
            "{} is not a basis",
            m.ground.format_subset(b)
        )));
    }
    let outside = m.ground.full().minus(b).minus(m.loops());
    let mut pairs = Vec::new();
    for c in outside.iter() {
        for x in b.iter() {
            if m.is_basis(b.without(x).with(c)) {
                pairs.push((x, c));
            }
        }
    }
    Preorder::from_index_pairs(m.ground.clone(), &pairs)
}

/// `z(A) = Σ_{J ∩ A ≠ ∅} y_J`: the Minkowski sum of the simplices `y_J Δ_J`.
pub fn minkowski(ground: GroundSet, weights: &[(Subset, Rational)]) -> Result<SubmodFn> {
    for (j, y) in weights {
        if j.is_empty() || !j.is_subset_of(ground.full()) {
            return Err(Error::Validation(
                "weights need nonempty subsets of the ground".into(),
            ));
        }
        if y.is_negative() {
            return Err(Error::Validation(format!(
                "negative weight on {}",
                ground.format_subset(*j)
            )));
        }
    }
    SubmodFn::from_fn(ground, |a| {
        ExtValue::Finite(
            weights
                .iter()
                .filter(|(j, _)| j.intersects(a))
                .map(|(_, y)| y.clone())
                .sum(),
        )
    })
}

/// A family containing all singletons and closed under unions of intersecting members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingSet {
    ground: GroundSet,
    members: Vec<Subset>,
}

impl BuildingSet {
    pub fn new(ground: GroundSet, mut members: Vec<Subset>) -> Result<Self> {
        members.sort();
        members.dedup();
        if members
            .iter()
            .any(|s| s.is_empty() || !s.is_subset_of(ground.full()))
        {
            return Err(Error::Validation("members must be nonempty subsets".into()));
        }
        let has = |s: Subset| members.binary_search(&s).is_ok();
        if (0..ground.len()).any(|i| !has(Subset::singleton(i))) {
            return Err(Error::Validation(
                "a building set contains every singleton".into(),
            ));
        }
        for &j in &members {
            for &k in &members {
                if j.intersects(k) && !has(j.union(k)) {
                    return Err(Error::Validation(format!(
                        "{} and {} intersect but their union is missing",
                        ground.format_subset(j),
                        ground.format_subset(k)
                    )));
                }
            }
        }
        Ok(BuildingSet { ground, members })
    }

    /// Adds singletons and unions of intersecting members until closed.
    pub fn closure_of(ground: GroundSet, generators: &[Subset]) -> Result<Self> {
        let mut members: Vec<Subset> = generators.to_vec();
        members.extend((0..ground.len()).map(Subset::singleton));
        loop {
            members.sort();
            members.dedup();
            let mut added = Vec::new();
            for &j in &members {
                for &k in &members {
                    let u = j.union(k);
                    if j.intersects(k) && members.binary_search(&u).is_err() {
                        added.push(u);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            members.extend(added);
        }
        BuildingSet::new(ground, members)
    }

    /// Vertex sets of the connected induced subgraphs of a graph on `ground`.
    pub fn graphical<S: AsRef<str>>(ground: GroundSet, edges: &[(S, S)]) -> Result<Self> {
        let pairs = edges
            .iter()
            .map(|(u, v)| Ok((ground.index_of(u.as_ref())?, ground.index_of(v.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        let connected = |s: Subset| {
            let Some(start) = s.first() else { return false };
            let mut seen = Subset::singleton(start);
            loop {
                let next = pairs.iter().fold(seen, |acc, &(u, v)| {
                    if s.contains(u) && s.contains(v) && (acc.contains(u) || acc.contains(v)) {
                        acc.with(u).with(v)
                    } else {
                        acc
                    }
                });
                if next == seen {
                    return seen == s;
                }
                seen = next;
            }
        };
        let members = ground.full().subsets().filter(|&s| connected(s)).collect();
        BuildingSet::new(ground, members)
    }

    /// Every building set on `ground`, for tiny grounds.
    pub fn enumerate_all(ground: &GroundSet, limits: &Limits) -> Result<Vec<BuildingSet>> {
        Limits::check(
            limits.max_preorder_n.min(4),
            "building set enumeration",
            ground.len(),
        )?;
        let optional: Vec<Subset> = ground.full().subsets().filter(|s| s.len() >= 2).collect();
        let singles: Vec<Subset> = (0..ground.len()).map(Subset::singleton).collect();
        let mut out = Vec::new();
        for pick in 0u32..1 << optional.len() {
            let mut members = singles.clone();
            members.extend(
                optional
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| pick >> k & 1 == 1)
                    .map(|(_, s)| *s),
            );
            if let Ok(b) = BuildingSet::new(ground.clone(), members) {
                out.push(b);
            }
        }
        Ok(out)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// The maximal members, which partition the ground set.
    pub fn components(&self) -> Partition {
        Partition::from_blocks(
            self.members
                .iter()
                .copied()
                .filter(|&j| !self.members.iter().any(|&k| k != j && j.is_subset_of(k)))
                .collect(),
        )
    }
}

/// `z(A) = #{J ∈ ℬ : J ∩ A ≠ ∅}`.
pub fn nestohedron(b: &BuildingSet) -> Result<SubmodFn> {
    SubmodFn::from_fn(b.ground.clone(), |a| {
        ExtValue::int(b.members.iter().filter(|j| j.intersects(a)).count() as i64)
    })
}

/// Incomparable elements have no common upper bound.
pub fn is_forest(p: &Preorder) -> bool {
    let n = p.n();
    (0..n)
        .all(|i| (i + 1..n).all(|j| p.le(i, j) || p.le(j, i) || !p.up_of(i).intersects(p.up_of(j))))
}

/// The forest conditions for `ℬ`: every `↑p ∈ ℬ`; no union of two or more
/// pairwise incomparable `↑p` lies in `ℬ`; the sets `↑r` over root bubbles
/// are exactly the components of `ℬ`.
pub fn is_b_forest(p: &Preorder, b: &BuildingSet) -> bool {
    if p.ground() != b.ground() || !is_forest(p) {
        return false;
    }
    let n = p.n();
    if (0..n).any(|i| !b.contains(p.up_of(i))) {
        return false;
    }
    let incomparable = |s: Subset| {
        s.iter()
            .all(|i| s.iter().all(|j| i == j || (!p.le(i, j) && !p.le(j, i))))
    };
    let bad_union = p
        .full()
        .subsets()
        .any(|s| s.len() >= 2 && incomparable(s) && b.contains(p.up_closure(s)));
    if bad_union {
        return false;
    }
    let roots: Vec<Subset> = p
        .bubbles()
        .blocks()
        .iter()
        .copied()
        .filter(|bb| p.down_closure(*bb) == *bb)
        .collect();
    let tops = Partition::from_blocks(roots.iter().map(|r| p.up_closure(*r)).collect());
    tops.len() == roots.len() && tops == b.components()
}

/// All `ℬ`-forests, by filtering every preorder on the ground set.
pub fn b_forests(b: &BuildingSet, limits: &Limits) -> Result<Vec<Preorder>> {
    b_forests_with(b, limits, Exec::default())
}

pub fn b_forests_with(b: &BuildingSet, limits: &Limits, exec: Exec) -> Result<Vec<Preorder>> {
    let all = preorder::enumerate_preorders_with(&b.ground, limits, exec)?;
    Ok(exec.filter(&all, |p| is_b_forest(p, b)))
}
