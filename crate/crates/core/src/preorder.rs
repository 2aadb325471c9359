//! Finite preorders as bit matrices, their down-set topologies, and the
//! subdivision and contraction relations.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ground::{GroundSet, Limits, Partition, Subset};

/// A reflexive, transitive relation on a ground set.
///
/// `up[i]` is the set of `j` with `i ≤ j`; `down[i]` the set of `j` with `j ≤ i`.
/// The ordering derived on this type is the canonical order used for sorting.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Preorder {
    ground: GroundSet,
    up: Vec<u32>,
    down: Vec<u32>,
}

impl Preorder {
    /// Reflexive-transitive closure of a relation given row by row (`rows[i]` ∋ j means i ≤ j).
    pub fn from_up_rows(ground: GroundSet, mut rows: Vec<u32>) -> Result<Self> {
        let n = ground.len();
        if rows.len() != n {
            return Err(Error::Validation(format!(
                "relation has {} rows, expected {n}",
                rows.len()
            )));
        }
        let full = Subset::full(n).0;
        for (i, r) in rows.iter_mut().enumerate() {
            if *r & !full != 0 {
                return Err(Error::Validation("relation row out of range".into()));
            }
            *r |= 1 << i;
        }
        for k in 0..n {
            let rk = rows[k];
            for r in rows.iter_mut() {
                if *r >> k & 1 == 1 {
                    *r |= rk;
                }
            }
        }
        Ok(Preorder::from_closed_rows(ground, rows))
    }

    fn from_closed_rows(ground: GroundSet, up: Vec<u32>) -> Self {
        let n = up.len();
        let mut down = vec![0u32; n];
        for (i, &r) in up.iter().enumerate() {
            for j in Subset(r).iter() {
                down[j] |= 1 << i;
            }
        }
        Preorder { ground, up, down }
    }

    /// Smallest preorder containing the index pairs `(i, j)` meaning `i ≤ j`.
    pub fn from_index_pairs(ground: GroundSet, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = ground.len();
        let mut rows = vec![0u32; n];
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::Validation(format!(
                    "index pair ({i}, {j}) out of range"
                )));
            }
            rows[i] |= 1 << j;
        }
        Preorder::from_up_rows(ground, rows)
    }

    /// Smallest preorder containing the labeled pairs `(x, y)` meaning `x ≤ y`.
    pub fn from_relations<S: AsRef<str>>(ground: GroundSet, pairs: &[(S, S)]) -> Result<Self> {
        let idx = pairs
            .iter()
            .map(|(x, y)| Ok((ground.index_of(x.as_ref())?, ground.index_of(y.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Preorder::from_index_pairs(ground, &idx)
    }

    /// Only `i ≤ i`.
    pub fn discrete(ground: GroundSet) -> Self {
        let up = (0..ground.len()).map(|i| 1u32 << i).collect();
        Preorder::from_closed_rows(ground, up)
    }

    /// Everything related to everything: one bubble.
    pub fn coarse(ground: GroundSet) -> Self {
        let full = ground.full().0;
        let up = vec![full; ground.len()];
        Preorder::from_closed_rows(ground, up)
    }

    /// The equivalence relation whose classes are the blocks of `p`.
    pub fn from_partition(ground: GroundSet, p: &Partition) -> Result<Self> {
        if p.support() != ground.full() {
            return Err(Error::Validation(
                "partition does not cover the ground set".into(),
            ));
        }
        let mut up = vec![0u32; ground.len()];
        for b in p.blocks() {
            for i in b.iter() {
                up[i] = b.0;
            }
        }
        Ok(Preorder::from_closed_rows(ground, up))
    }

    /// The total preorder whose bubbles are `levels`, listed bottom to top.
    pub fn total(ground: GroundSet, levels: &[Subset]) -> Result<Self> {
        let cover = levels.iter().fold(Subset::EMPTY, |acc, l| {
            if acc.intersects(*l) {
                Subset(u32::MAX)
            } else {
                acc.union(*l)
            }
        });
        if cover != ground.full() || levels.iter().any(|l| l.is_empty()) {
            return Err(Error::Validation(
                "levels must be nonempty and partition the ground set".into(),
            ));
        }
        let mut up = vec![0u32; ground.len()];
        let mut above = ground.full();
        for l in levels {
            for i in l.iter() {
                up[i] = above.0;
            }
            above = above.minus(*l);
        }
        Ok(Preorder::from_closed_rows(ground, up))
    }

    /// The chain `order[0] < order[1] < …` of labels.
    pub fn chain<S: AsRef<str>>(ground: GroundSet, order: &[S]) -> Result<Self> {
        let levels = order
            .iter()
            .map(|l| ground.index_of(l.as_ref()).map(Subset::singleton))
            .collect::<Result<Vec<_>>>()?;
        Preorder::total(ground, &levels)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> Subset {
        self.ground.full()
    }

    /// `i ≤ j`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.up[i] >> j & 1 == 1
    }

    /// `i < j`: `i ≤ j` but not `j ≤ i`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.le(i, j) && !self.le(j, i)
    }

    pub fn up_of(&self, i: usize) -> Subset {
        Subset(self.up[i])
    }

    pub fn down_of(&self, i: usize) -> Subset {
        Subset(self.down[i])
    }

    pub fn up_rows(&self) -> &[u32] {
        &self.up
    }

    /// All pairs `(i, j)` with `i ≤ j` and `i ≠ j`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|i| self.up_of(i).without(i).iter().map(move |j| (i, j)))
            .collect()
    }

    pub fn down_closure(&self, s: Subset) -> Subset {
        s.iter()
            .fold(Subset::EMPTY, |acc, i| acc.union(self.down_of(i)))
    }

    pub fn up_closure(&self, s: Subset) -> Subset {
        s.iter()
            .fold(Subset::EMPTY, |acc, i| acc.union(self.up_of(i)))
    }

    pub fn is_down_set(&self, s: Subset) -> bool {
        self.down_closure(s) == s
    }

    pub fn is_up_set(&self, s: Subset) -> bool {
        self.up_closure(s) == s
    }

    /// `x, z ∈ S` and `x ≤ y ≤ z` imply `y ∈ S`.
    pub fn is_convex(&self, s: Subset) -> bool {
        self.down_closure(s).inter(self.up_closure(s)) == s
    }

    /// Whether the restriction to `s` is connected (false for `∅`).
    pub fn is_connected_on(&self, s: Subset) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let mut seen = Subset::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = Subset::EMPTY;
            for i in frontier.iter() {
                next = next.union(self.up_of(i)).union(self.down_of(i));
            }
            next = next.inter(s).minus(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == s
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_on(self.full())
    }

    /// All down-sets (open sets), increasing by mask.
    pub fn down_sets(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        self.collect_down_sets(0, Subset::EMPTY, Subset::EMPTY, &mut out);
        out.sort();
        out
    }

    /// Decides elements in index order; `excluded` is up-closed.
    fn collect_down_sets(&self, i: usize, inc: Subset, exc: Subset, out: &mut Vec<Subset>) {
        if i == self.n() {
            out.push(inc);
            return;
        }
        if inc.contains(i) || exc.contains(i) {
            return self.collect_down_sets(i + 1, inc, exc, out);
        }
        let d = self.down_of(i);
        if !d.intersects(exc) {
            self.collect_down_sets(i + 1, inc.union(d), exc, out);
        }
        let u = self.up_of(i);
        if !u.intersects(inc) {
            self.collect_down_sets(i + 1, inc, exc.union(u), out);
        }
    }

    pub fn down_set_family(&self) -> DownSetFamily {
        DownSetFamily {
            ground: self.ground.clone(),
            sets: self.down_sets(),
        }
    }

    /// The preorder of a family of sets: `i ≤ j` iff every member containing
    /// `j` contains `i`.
    pub fn preo_of(ground: GroundSet, family: &[Subset]) -> Self {
        let n = ground.len();
        let mut up = vec![0u32; n];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if family.iter().all(|s| !s.contains(j) || s.contains(i)) {
                    *row |= 1 << j;
                }
            }
        }
        Preorder::from_closed_rows(ground, up)
    }

    /// Classes of mutual comparability.
    pub fn bubbles(&self) -> Partition {
        let mut blocks = Vec::new();
        let mut seen = Subset::EMPTY;
        for i in 0..self.n() {
            if !seen.contains(i) {
                let b = self.up_of(i).inter(self.down_of(i));
                seen = seen.union(b);
                blocks.push(b);
            }
        }
        Partition::from_blocks(blocks)
    }

    /// Classes of zigzag connectivity.
    pub fn components(&self) -> Partition {
        self.components_on(self.full())
    }

    /// Connected components of the restriction to `s`.
    pub fn components_on(&self, s: Subset) -> Partition {
        let mut blocks = Vec::new();
        let mut rest = s;
        while let Some(start) = rest.first() {
            let mut comp = Subset::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = Subset::EMPTY;
                for i in frontier.iter() {
                    next = next.union(self.up_of(i)).union(self.down_of(i));
                }
                next = next.inter(s).minus(comp);
                comp = comp.union(next);
                frontier = next;
            }
            rest = rest.minus(comp);
            blocks.push(comp);
        }
        Partition::from_blocks(blocks)
    }

    /// Bubbles, and for each bubble the set (as bubble indices) of bubbles strictly above it.
    pub fn bubble_order(&self) -> (Vec<Subset>, Vec<u32>) {
        let bubbles = self.bubbles().blocks().to_vec();
        let above = bubbles
            .iter()
            .map(|b| {
                let rep = b.first().expect("bubbles are nonempty");
                let ups = self.up_of(rep).minus(*b);
                bubbles
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.is_subset_of(ups))
                    .fold(0u32, |acc, (k, _)| acc | 1 << k)
            })
            .collect();
        (bubbles, above)
    }

    /// Length of the longest strict chain of bubbles, minus one (`0` for a single bubble layer).
    pub fn rank(&self) -> usize {
        let (bubbles, above) = self.bubble_order();
        let m = bubbles.len();
        // Longest chain starting at each bubble, computed top-down by memoized recursion.
        fn height(k: usize, above: &[u32], memo: &mut [Option<usize>]) -> usize {
            if let Some(h) = memo[k] {
                return h;
            }
            let h = Subset(above[k])
                .iter()
                .map(|j| 1 + height(j, above, memo))
                .max()
                .unwrap_or(0);
            memo[k] = Some(h);
            h
        }
        let mut memo = vec![None; m];
        (0..m)
            .map(|k| height(k, &above, &mut memo))
            .max()
            .unwrap_or(0)
    }

    /// Antisymmetric: every bubble is a singleton.
    pub fn is_poset(&self) -> bool {
        (0..self.n()).all(|i| self.up_of(i).inter(self.down_of(i)) == Subset::singleton(i))
    }

    /// Any two elements are comparable.
    pub fn is_total(&self) -> bool {
        (0..self.n()).all(|i| self.up_of(i).union(self.down_of(i)) == self.full())
    }

    /// Bubbles and components coincide, i.e. the relation is symmetric.
    pub fn is_totally_disconnected(&self) -> bool {
        self.up == self.down
    }

    /// `self ⪯ other`: the relation of `self` is contained in that of `other`.
    pub fn is_below(&self, other: &Preorder) -> bool {
        self.ground == other.ground && self.up.iter().zip(&other.up).all(|(a, b)| a & !b == 0)
    }

    fn check_same(&self, other: &Preorder) -> Result<()> {
        self.ground.ensure_same(&other.ground)
    }

    /// Entrywise AND.
    pub fn meet(&self, other: &Preorder) -> Result<Preorder> {
        self.check_same(other)?;
        let up = self.up.iter().zip(&other.up).map(|(a, b)| a & b).collect();
        Ok(Preorder::from_closed_rows(self.ground.clone(), up))
    }

    /// Transitive closure of entrywise OR.
    pub fn join(&self, other: &Preorder) -> Result<Preorder> {
        self.check_same(other)?;
        let rows = self.up.iter().zip(&other.up).map(|(a, b)| a | b).collect();
        Preorder::from_up_rows(self.ground.clone(), rows)
    }

    /// The transpose.
    pub fn opposite(&self) -> Preorder {
        Preorder {
            ground: self.ground.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// `P|_S` on the ground set formed by the labels of `s`.
    pub fn restrict(&self, s: Subset) -> Preorder {
        let up = s.iter().map(|i| self.up_of(i).compress(s).0).collect();
        Preorder::from_closed_rows(self.ground.sub(s), up)
    }

    /// Union of two preorders on disjoint grounds, with no relations across.
    pub fn disjoint_union(&self, other: &Preorder) -> Result<Preorder> {
        let ground = self.ground.disjoint_union(&other.ground)?;
        let mine = self.ground.positions_in(&ground)?;
        let theirs = other.ground.positions_in(&ground)?;
        let mut up = vec![0u32; ground.len()];
        for (k, &i) in mine.iter().enumerate() {
            up[i] = self.up_of(k).map_through(&mine).0;
        }
        for (k, &i) in theirs.iter().enumerate() {
            up[i] = other.up_of(k).map_through(&theirs).0;
        }
        Ok(Preorder::from_closed_rows(ground, up))
    }

    /// `F_P(R) = P ∨ R^op`, for `R ⪯ P`.
    pub fn galois_f(&self, r: &Preorder) -> Result<Preorder> {
        if !r.is_below(self) {
            return Err(Error::Precondition("F_P(R) needs R ⪯ P".into()));
        }
        self.join(&r.opposite())
    }

    /// `G_P(Q) = P ∧ Q^op`, for `P ⪯ Q`.
    pub fn galois_g(&self, q: &Preorder) -> Result<Preorder> {
        if !self.is_below(q) {
            return Err(Error::Precondition("G_P(Q) needs P ⪯ Q".into()));
        }
        self.meet(&q.opposite())
    }

    /// `R ◁ P`, tested as the fixpoint `R = P ∧ (P^op ∨ R)`.
    pub fn is_subdivision(r: &Preorder, p: &Preorder) -> bool {
        if !r.is_below(p) {
            return false;
        }
        let fix = p
            .opposite()
            .join(r)
            .and_then(|j| p.meet(&j))
            .map(|m| &m == r)
            .unwrap_or(false);
        debug_assert_eq!(fix, Preorder::is_subdivision_admissible(r, p));
        fix
    }

    /// `R ◁ P` via bubbles of `P ∨ R^op` and agreement on the components of `R`.
    pub fn is_subdivision_admissible(r: &Preorder, p: &Preorder) -> bool {
        if !r.is_below(p) {
            return false;
        }
        let Ok(f) = p.join(&r.opposite()) else {
            return false;
        };
        let comps = r.components();
        f.bubbles() == comps
            && comps
                .blocks()
                .iter()
                .all(|&c| r.restrict(c) == p.restrict(c))
    }

    /// Each `K` convex in `R` with `R|_K` connected is convex in `P` with
    /// `P|_K` connected. Implied by `R ◁ P` and equivalent to it up to three
    /// points; on four points it also accepts pairs such as
    /// `c<a, d<b` inside `{c,d}<{a,b}`.
    pub fn is_subdivision_convex(r: &Preorder, p: &Preorder) -> bool {
        r.is_below(p)
            && r.full().subsets().all(|k| {
                k.is_empty()
                    || !(r.is_convex(k) && r.is_connected_on(k))
                    || (p.is_convex(k) && p.is_connected_on(k))
            })
    }

    /// `P ◀ Q`: `P ⪯ Q`, each bubble of `Q` is connected in `P`, and every
    /// cover between bubbles of `Q` is witnessed by a relation of `P`.
    pub fn is_contraction(p: &Preorder, q: &Preorder) -> bool {
        let result = Preorder::is_contraction_covers(p, q);
        debug_assert_eq!(result, Preorder::is_contraction_fixpoint(p, q));
        result
    }

    fn is_contraction_covers(p: &Preorder, q: &Preorder) -> bool {
        if !p.is_below(q) {
            return false;
        }
        let (bubbles, above) = q.bubble_order();
        if !bubbles.iter().all(|&b| p.is_connected_on(b)) {
            return false;
        }
        (0..bubbles.len()).all(|k| {
            let covers = Subset(above[k])
                .iter()
                .filter(|&j| !Subset(above[k]).iter().any(|m| above[m] >> j & 1 == 1));
            covers
                .into_iter()
                .all(|j| bubbles[k].iter().any(|x| p.up_of(x).intersects(bubbles[j])))
        })
    }

    /// `P ◀ Q` as the fixpoint `Q = P ∨ (P^op ∧ Q)`.
    pub fn is_contraction_fixpoint(p: &Preorder, q: &Preorder) -> bool {
        p.is_below(q)
            && p.opposite()
                .meet(q)
                .and_then(|m| p.join(&m))
                .map(|j| &j == q)
                .unwrap_or(false)
    }

    /// `P ◀ Q` via connected convex sets of `Q`.
    pub fn is_contraction_convex(p: &Preorder, q: &Preorder) -> bool {
        p.is_below(q)
            && q.full().subsets().all(|k| {
                k.is_empty()
                    || !(q.is_convex(k) && q.is_connected_on(k))
                    || (p.is_convex(k) && p.is_connected_on(k))
            })
    }

    /// All `R` with `R ◁ self`, in canonical order.
    pub fn subdivisions(&self, limits: &Limits) -> Result<Vec<Preorder>> {
        let all = enumerate_preorders(&self.ground, limits)?;
        Ok(all
            .into_iter()
            .filter(|r| Preorder::is_subdivision(r, self))
            .collect())
    }

    /// All `Q` with `self ◀ Q`, in canonical order.
    pub fn contractions(&self, limits: &Limits) -> Result<Vec<Preorder>> {
        let all = enumerate_preorders(&self.ground, limits)?;
        Ok(all
            .into_iter()
            .filter(|q| Preorder::is_contraction(self, q))
            .collect())
    }

    /// Total preorders `L` with `self ⪯ L` and the same bubbles.
    pub fn linear_extensions(&self) -> Vec<Preorder> {
        let (bubbles, above) = self.bubble_order();
        let m = bubbles.len();
        let mut below = vec![0u32; m];
        for (k, &a) in above.iter().enumerate() {
            for j in Subset(a).iter() {
                below[j] |= 1 << k;
            }
        }
        let mut out = Vec::new();
        let mut order = Vec::with_capacity(m);
        fn go(
            placed: u32,
            below: &[u32],
            bubbles: &[Subset],
            order: &mut Vec<Subset>,
            out: &mut Vec<Vec<Subset>>,
        ) {
            let m = bubbles.len();
            if order.len() == m {
                out.push(order.clone());
                return;
            }
            for k in 0..m {
                if placed >> k & 1 == 0 && below[k] & !placed == 0 {
                    order.push(bubbles[k]);
                    go(placed | 1 << k, below, bubbles, order, out);
                    order.pop();
                }
            }
        }
        go(0, &below, &bubbles, &mut order, &mut out);
        let mut exts: Vec<Preorder> = out
            .iter()
            .map(|levels| Preorder::total(self.ground.clone(), levels).expect("valid levels"))
            .collect();
        exts.sort();
        exts
    }

    /// Whether the labels and relation agree with `other` up to nothing: exact equality.
    pub fn same_as(&self, other: &Preorder) -> Result<bool> {
        self.check_same(other)?;
        Ok(self == other)
    }

    fn format_bubble(&self, b: Subset) -> String {
        if b.len() == 1 {
            self.ground.label(b.first().unwrap()).to_string()
        } else {
            self.ground.format_subset(b)
        }
    }
}

/// Cover relations between bubbles, e.g. `a<b, a<c, d`; isolated bubbles are
/// listed on their own and multi-element bubbles are braced.
impl fmt::Display for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (bubbles, above) = self.bubble_order();
        let mut parts = Vec::new();
        let mut mentioned = 0u32;
        for k in 0..bubbles.len() {
            for j in Subset(above[k]).iter() {
                let is_cover = !Subset(above[k]).iter().any(|m| above[m] >> j & 1 == 1);
                if is_cover {
                    parts.push(format!(
                        "{}<{}",
                        self.format_bubble(bubbles[k]),
                        self.format_bubble(bubbles[j])
                    ));
                    mentioned |= 1 << k | 1 << j;
                }
            }
        }
        for (k, b) in bubbles.iter().enumerate() {
            if mentioned >> k & 1 == 0 {
                parts.push(self.format_bubble(*b));
            }
        }
        if parts.is_empty() {
            write!(f, "(empty)")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Preorder({self})")
    }
}

/// The open sets of a finite topology: a family closed under union and
/// intersection containing `∅` and `I`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DownSetFamily {
    ground: GroundSet,
    sets: Vec<Subset>,
}

impl DownSetFamily {
    pub fn new(ground: GroundSet, mut sets: Vec<Subset>) -> Result<Self> {
        sets.sort();
        sets.dedup();
        let full = ground.full();
        if sets.iter().any(|s| !s.is_subset_of(full)) {
            return Err(Error::Validation("set outside the ground set".into()));
        }
        let has = |s: Subset| sets.binary_search(&s).is_ok();
        if !has(Subset::EMPTY) || !has(full) {
            return Err(Error::Validation(
                "family must contain ∅ and the ground set".into(),
            ));
        }
        for (k, &a) in sets.iter().enumerate() {
            for &b in &sets[k + 1..] {
                if !has(a.union(b)) || !has(a.inter(b)) {
                    return Err(Error::Validation(format!(
                        "family not closed under union and intersection at {} and {}",
                        ground.format_subset(a),
                        ground.format_subset(b)
                    )));
                }
            }
        }
        Ok(DownSetFamily { ground, sets })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    pub fn preorder(&self) -> Preorder {
        Preorder::preo_of(self.ground.clone(), &self.sets)
    }
}

/// All preorders on `ground`, in canonical order.
///
/// Elements are inserted one at a time: the new element either joins an
/// existing bubble, or becomes a new bubble sitting above a down-set `D` and
/// below an up-set `U` with `D ∩ U = ∅` and every element of `D` below every
/// element of `U`. Each preorder arises exactly once.
pub fn enumerate_preorders(ground: &GroundSet, limits: &Limits) -> Result<Vec<Preorder>> {
    enumerate_preorders_with(ground, limits, Exec::default())
}

pub fn enumerate_preorders_with(
    ground: &GroundSet,
    limits: &Limits,
    exec: Exec,
) -> Result<Vec<Preorder>> {
    let n = ground.len();
    Limits::check(limits.max_preorder_n, "preorder enumeration", n)?;
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for k in 0..n {
        let sub = GroundSet::letters(k).expect("k < 26");
        let next = exec.map(&layer, |rows| extend_preorder(&sub, rows, k));
        layer = next.into_iter().flatten().collect();
    }
    let mut out: Vec<Preorder> = layer
        .into_iter()
        .map(|rows| Preorder::from_closed_rows(ground.clone(), rows))
        .collect();
    out.sort();
    Ok(out)
}

fn extend_preorder(sub: &GroundSet, rows: &[u32], k: usize) -> Vec<Vec<u32>> {
    let p = Preorder::from_closed_rows(sub.clone(), rows.to_vec());
    let me = 1u32 << k;
    let mut out = Vec::new();
    for b in p.bubbles().blocks() {
        let rep = b.first().expect("nonempty");
        let (ups, downs) = (p.up_of(rep), p.down_of(rep));
        let mut r: Vec<u32> = rows
            .iter()
            .enumerate()
            .map(|(i, &row)| if downs.contains(i) { row | me } else { row })
            .collect();
        r.push(ups.0 | me);
        out.push(r);
    }
    let downs = p.down_sets();
    for &d in &downs {
        for &dc in &downs {
            let u = p.full().minus(dc);
            if d.intersects(u) {
                continue;
            }
            if !d.iter().all(|i| u.is_subset_of(p.up_of(i))) {
                continue;
            }
            let mut r: Vec<u32> = rows
                .iter()
                .enumerate()
                .map(|(i, &row)| if d.contains(i) { row | me } else { row })
                .collect();
            r.push(u.0 | me);
            out.push(r);
        }
    }
    out
}

/// All total preorders (ordered set partitions) on `ground`, in canonical order.
pub fn enumerate_total_preorders(ground: &GroundSet, limits: &Limits) -> Result<Vec<Preorder>> {
    Limits::check(
        limits.max_total_preorder_n,
        "total preorder enumeration",
        ground.len(),
    )?;
    let mut out = Vec::new();
    let mut levels = Vec::new();
    fn go(rest: Subset, levels: &mut Vec<Subset>, ground: &GroundSet, out: &mut Vec<Preorder>) {
        if rest.is_empty() {
            out.push(Preorder::total(ground.clone(), levels).expect("valid levels"));
            return;
        }
        for l in rest.subsets().filter(|s| !s.is_empty()) {
            levels.push(l);
            go(rest.minus(l), levels, ground, out);
            levels.pop();
        }
    }
    go(ground.full(), &mut levels, ground, &mut out);
    out.sort();
    Ok(out)
}

/// Deduplicates and sorts preorders canonically.
pub fn canonical_set<I: IntoIterator<Item = Preorder>>(items: I) -> Vec<Preorder> {
    items
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}
