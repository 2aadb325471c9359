//! Extended submodular functions `z : 2^I → ℚ ∪ {∞}` stored as full tables.

use std::fmt;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Partition, Subset};
use crate::value::ExtValue;

/// A function on all subsets of a ground set, indexed by bit mask.
///
/// Every value satisfies `z(∅) = 0` and `z(I)` finite. [`SubmodFn::new`]
/// additionally checks submodularity; [`SubmodFn::from_table`] does not.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubmodFn {
    ground: GroundSet,
    table: Vec<ExtValue>,
}

impl SubmodFn {
    /// Builds a function and checks that it is submodular.
    pub fn new(ground: GroundSet, table: Vec<ExtValue>) -> Result<Self> {
        let z = SubmodFn::from_table(ground, table)?;
        if !z.is_submodular() {
            return Err(Error::Validation("function is not submodular".into()));
        }
        Ok(z)
    }

    /// Builds a well-formed table without checking submodularity.
    pub fn from_table(ground: GroundSet, table: Vec<ExtValue>) -> Result<Self> {
        if table.len() != ground.power_len() {
            return Err(Error::Validation(format!(
                "table has {} entries, expected {}",
                table.len(),
                ground.power_len()
            )));
        }
        if !table[0].is_zero() {
            return Err(Error::Validation(format!(
                "value on the empty set must be 0, got {}",
                table[0]
            )));
        }
        if table[table.len() - 1].is_infinite() {
            return Err(Error::Validation(
                "value on the full ground set must be finite".into(),
            ));
        }
        Ok(SubmodFn { ground, table })
    }

    /// Tabulates `f` and checks the result like [`SubmodFn::new`].
    pub fn from_fn<F>(ground: GroundSet, f: F) -> Result<Self>
    where
        F: FnMut(Subset) -> ExtValue,
    {
        let table = (0..ground.power_len() as u32).map(Subset).map(f).collect();
        SubmodFn::new(ground, table)
    }

    /// The unit: the only function on the empty ground set.
    pub fn unit() -> Self {
        SubmodFn {
            ground: GroundSet::empty(),
            table: vec![ExtValue::zero()],
        }
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

    pub fn table(&self) -> &[ExtValue] {
        &self.table
    }

    pub fn value(&self, s: Subset) -> &ExtValue {
        &self.table[s.index()]
    }

    pub fn is_finite_at(&self, s: Subset) -> bool {
        self.table[s.index()].is_finite()
    }

    pub fn is_finite(&self) -> bool {
        self.table.iter().all(ExtValue::is_finite)
    }

    /// Masks with a finite value, increasing.
    pub fn finite_sets(&self) -> Vec<Subset> {
        (0..self.table.len() as u32)
            .map(Subset)
            .filter(|s| self.is_finite_at(*s))
            .collect()
    }

    /// `z(S) + z(T) ≥ z(S ∪ T) + z(S ∩ T)` for all pairs, with `∞` dominating.
    pub fn is_submodular(&self) -> bool {
        if self.is_finite() {
            return self.is_submodular_local();
        }
        let finite = self.finite_sets();
        for (k, &s) in finite.iter().enumerate() {
            for &t in &finite[k + 1..] {
                let lhs = self.value(s) + self.value(t);
                let rhs = self.value(s.union(t)) + self.value(s.inter(t));
                if lhs < rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The diminishing-returns test, equivalent to submodularity for finite tables.
    fn is_submodular_local(&self) -> bool {
        let full = self.full();
        (0..self.table.len() as u32).map(Subset).all(|s| {
            let outside: Vec<usize> = full.minus(s).iter().collect();
            outside.iter().enumerate().all(|(k, &i)| {
                outside[k + 1..].iter().all(|&j| {
                    let lhs = self.value(s.with(i)) + self.value(s.with(j));
                    let rhs = self.value(s.with(i).with(j)) + self.value(s);
                    lhs >= rhs
                })
            })
        })
    }

    /// Equality `z(A)+z(B) = z(A∪B)+z(A∩B)` on all finite-valued pairs, whose
    /// unions and intersections must again be finite.
    pub fn is_modular(&self) -> bool {
        let finite = self.finite_sets();
        for (k, &a) in finite.iter().enumerate() {
            for &b in &finite[k + 1..] {
                let (u, i) = (self.value(a.union(b)), self.value(a.inter(b)));
                if u.is_infinite() || i.is_infinite() {
                    return false;
                }
                if self.value(a) + self.value(b) != u + i {
                    return false;
                }
            }
        }
        true
    }

    /// `z|_S`, on the ground set formed by the labels of `s`.
    pub fn restrict(&self, s: Subset) -> SubmodFn {
        let table = (0..1u32 << s.len())
            .map(|u| self.value(Subset(u).expand(s)).clone())
            .collect();
        SubmodFn {
            ground: self.ground.sub(s),
            table,
        }
    }

    /// `z_{/S}(U) = z(S ∪ U) − z(S)` on `I ∖ S`. Needs `z(S)` finite.
    pub fn corestrict(&self, s: Subset) -> Result<SubmodFn> {
        let base = self.value(s).finite().cloned().ok_or_else(|| {
            Error::Precondition(format!(
                "corestriction to {} needs a finite value there",
                self.ground.format_subset(s)
            ))
        })?;
        let rest = self.full().minus(s);
        let table = (0..1u32 << rest.len())
            .map(|u| {
                self.value(Subset(u).expand(rest).union(s))
                    .sub_finite(&base)
            })
            .collect();
        Ok(SubmodFn {
            ground: self.ground.sub(rest),
            table,
        })
    }

    /// `z_{B/A}` for `A ⊆ B` with `z(A)` finite: the function `U ↦ z(A∪U) − z(A)` on `B ∖ A`.
    pub fn minor(&self, a: Subset, b: Subset) -> Result<SubmodFn> {
        if !a.is_subset_of(b) {
            return Err(Error::Precondition("minor needs A ⊆ B".into()));
        }
        self.restrict(b).corestrict(a.compress(b))
    }

    /// `(u·v)(E) = u(E ∩ S) + v(E ∩ T)` on the disjoint union of the grounds.
    pub fn product(&self, other: &SubmodFn) -> Result<SubmodFn> {
        let ground = self.ground.disjoint_union(&other.ground)?;
        let mine = self.ground.mask_in(&ground)?;
        let theirs = other.ground.mask_in(&ground)?;
        let table = (0..ground.power_len() as u32)
            .map(|e| {
                let e = Subset(e);
                self.value(e.compress(mine)) + other.value(e.compress(theirs))
            })
            .collect();
        Ok(SubmodFn { ground, table })
    }

    /// Product of several factors; the unit for an empty list.
    pub fn product_all<'a, I>(factors: I) -> Result<SubmodFn>
    where
        I: IntoIterator<Item = &'a SubmodFn>,
    {
        factors
            .into_iter()
            .try_fold(SubmodFn::unit(), |acc, f| acc.product(f))
    }

    /// Finds `C₁ ⊂ C` containing the lowest element of `C` with
    /// `z(C) = z(C₁) + z(C ∖ C₁)`, all finite.
    fn find_split(&self, c: Subset) -> Option<Subset> {
        let total = self.value(c).finite()?;
        let low = Subset::singleton(c.first()?);
        let rest = c.minus(low);
        rest.subsets()
            .map(|u| u.union(low))
            .filter(|&c1| c1 != c)
            .find(|&c1| {
                let sum = self.value(c1) + self.value(c.minus(c1));
                sum.finite() == Some(total)
            })
    }

    /// The finest partition of `I` along which `z` is a product of its restrictions.
    pub fn decompose(&self) -> Partition {
        let mut done = Vec::new();
        let mut todo = vec![self.full()];
        while let Some(c) = todo.pop() {
            if c.is_empty() {
                continue;
            }
            match self.find_split(c) {
                Some(c1) => {
                    todo.push(c1);
                    todo.push(c.minus(c1));
                }
                None => done.push(c),
            }
        }
        Partition::from_blocks(done)
    }

    /// The indecomposable factors, one per block of [`SubmodFn::decompose`].
    pub fn factors(&self) -> Vec<SubmodFn> {
        self.decompose()
            .blocks()
            .iter()
            .map(|&b| self.restrict(b))
            .collect()
    }

    /// The classes of the totally disconnected topology `ctop(z)`.
    pub fn ctop_components(&self) -> Partition {
        self.decompose()
    }

    /// Checks the definition of a split directly: `z(S₁ ∪ S₂) = z(S₁) + z(S₂)`
    /// for all `S₁ ⊆ C₁`, `S₂ ⊆ I ∖ C₁`.
    pub fn splits_along(&self, c1: Subset) -> bool {
        let c2 = self.full().minus(c1);
        c1.subsets().all(|s1| {
            c2.subsets()
                .all(|s2| self.value(s1.union(s2)) == &(self.value(s1) + self.value(s2)))
        })
    }

    /// Exact table equality; errors when the grounds differ.
    pub fn table_eq(&self, other: &SubmodFn) -> Result<bool> {
        self.ground.ensure_same(&other.ground)?;
        Ok(self.table == other.table)
    }

    /// Relabels the ground set through `rename`; labels are re-sorted.
    pub fn relabel<F>(&self, mut rename: F) -> Result<SubmodFn>
    where
        F: FnMut(&str) -> String,
    {
        let new_labels: Vec<String> = self.ground.labels().iter().map(|l| rename(l)).collect();
        let ground = GroundSet::new(new_labels.clone())?;
        let positions: Vec<usize> = new_labels
            .iter()
            .map(|l| ground.index_of(l))
            .collect::<Result<_>>()?;
        let mut table = vec![ExtValue::Infinity; ground.power_len()];
        for (old, v) in self.table.iter().enumerate() {
            table[Subset(old as u32).map_through(&positions).index()] = v.clone();
        }
        Ok(SubmodFn { ground, table })
    }
}

impl fmt::Debug for SubmodFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubmodFn({self})")
    }
}

/// Lists the finite values, e.g. `{a}:3 {b}:3 {a,b}:5`; other sets are `∞`.
impl fmt::Display for SubmodFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sets = self.finite_sets();
        sets.sort_by_key(|s| (s.len(), *s));
        let parts: Vec<String> = sets
            .iter()
            .filter(|s| !s.is_empty())
            .map(|&s| format!("{}:{}", self.ground.format_subset(s), self.value(s)))
            .collect();
        if parts.is_empty() {
            write!(f, "{}", self.ground.format_subset(Subset::EMPTY))
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}
