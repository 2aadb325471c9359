//! Labeled ground sets, subsets as bit masks, and set partitions.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on ground-set size. Tables have `2^n` entries.
pub const HARD_MAX_N: usize = 20;

/// A finite set of distinct labels kept in lexicographic order.
///
/// The index of a label is its position in that order, and bit `i` of a
/// [`Subset`] refers to it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    labels: Arc<[String]>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > HARD_MAX_N {
            return Err(Error::CapExceeded {
                op: "ground set",
                n: labels.len(),
                cap: HARD_MAX_N,
            });
        }
        labels.sort();
        for w in labels.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Validation(format!("duplicate label `{}`", w[0])));
            }
        }
        if let Some(bad) = labels.iter().find(|l| l.is_empty()) {
            return Err(Error::Validation(format!("empty label {bad:?}")));
        }
        Ok(GroundSet {
            labels: labels.into(),
        })
    }

    /// The ground set `{a, b, c, …}` with `n` letters.
    pub fn letters(n: usize) -> Result<Self> {
        if n > 26 {
            return Err(Error::CapExceeded {
                op: "letters",
                n,
                cap: 26,
            });
        }
        GroundSet::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn empty() -> Self {
        GroundSet {
            labels: Vec::<String>::new().into(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| Error::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Number of subsets, `2^n`.
    pub fn power_len(&self) -> usize {
        1usize << self.len()
    }

    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut mask = Subset::EMPTY;
        for l in labels {
            mask = mask.with(self.index_of(l.as_ref())?);
        }
        Ok(mask)
    }

    pub fn labels_of(&self, s: Subset) -> Vec<&str> {
        s.iter().map(|i| self.label(i)).collect()
    }

    /// The ground set formed by the labels in `s`.
    pub fn sub(&self, s: Subset) -> GroundSet {
        GroundSet {
            labels: s.iter().map(|i| self.labels[i].clone()).collect(),
        }
    }

    /// Disjoint union; errors if a label occurs in both.
    pub fn disjoint_union(&self, other: &GroundSet) -> Result<GroundSet> {
        for l in other.labels.iter() {
            if self.index_of(l).is_ok() {
                return Err(Error::GroundMismatch(format!(
                    "label `{l}` occurs in both factors"
                )));
            }
        }
        GroundSet::new(self.labels.iter().chain(other.labels.iter()).cloned())
    }

    /// Positions of this set's labels inside `sup`.
    pub fn positions_in(&self, sup: &GroundSet) -> Result<Vec<usize>> {
        self.labels.iter().map(|l| sup.index_of(l)).collect()
    }

    /// The mask of `sup` corresponding to this whole set.
    pub fn mask_in(&self, sup: &GroundSet) -> Result<Subset> {
        Ok(self
            .positions_in(sup)?
            .into_iter()
            .fold(Subset::EMPTY, Subset::with))
    }

    pub fn format_subset(&self, s: Subset) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    pub fn ensure_same(&self, other: &GroundSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GroundMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))
    }
}

/// A subset of a ground set, as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    pub fn inter(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    pub fn minus(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn intersects(self, o: Subset) -> bool {
        self.0 & o.0 != 0
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).minus(self)
    }

    /// Lowest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Element indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let m = self.0;
        let mut cur: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == m {
                None
            } else {
                Some((c.wrapping_sub(m)) & m)
            };
            Some(Subset(c))
        })
    }

    /// Packs the bits of `self ∩ within` into consecutive low bits, following
    /// the element order of `within`.
    pub fn compress(self, within: Subset) -> Subset {
        let mut out = 0u32;
        for (k, i) in within.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << k;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, within: Subset) -> Subset {
        let mut out = 0u32;
        for (k, i) in within.iter().enumerate() {
            if self.contains(k) {
                out |= 1 << i;
            }
        }
        Subset(out)
    }

    /// Re-indexes the bits through `positions` (bit `k` becomes bit `positions[k]`).
    pub fn map_through(self, positions: &[usize]) -> Subset {
        self.iter()
            .fold(Subset::EMPTY, |acc, k| acc.with(positions[k]))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A set partition, blocks ordered by their smallest element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    blocks: Vec<Subset>,
}

impl Partition {
    /// Canonicalizes the block order; drops empty blocks.
    pub fn from_blocks(mut blocks: Vec<Subset>) -> Self {
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b.first());
        Partition { blocks }
    }

    pub fn singletons(within: Subset) -> Self {
        Partition::from_blocks(within.iter().map(Subset::singleton).collect())
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn support(&self) -> Subset {
        self.blocks
            .iter()
            .fold(Subset::EMPTY, |acc, b| acc.union(*b))
    }

    pub fn block_of(&self, i: usize) -> Option<Subset> {
        self.blocks.iter().copied().find(|b| b.contains(i))
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|b| coarser.blocks.iter().any(|c| b.is_subset_of(*c)))
    }

    /// Whether `s` is a union of blocks.
    pub fn is_union_of_blocks(&self, s: Subset) -> bool {
        self.blocks
            .iter()
            .all(|b| b.is_subset_of(s) || !b.intersects(s))
    }

    pub fn format(&self, ground: &GroundSet) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| ground.format_subset(*b))
            .collect();
        parts.join(" ")
    }
}

/// Size limits for exponential operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// General soft cap on ground-set size.
    pub max_n: usize,
    /// Cap for enumerating all preorders on the ground set.
    pub max_preorder_n: usize,
    /// Cap for enumerating all total preorders (and hence faces).
    pub max_total_preorder_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 12,
            max_preorder_n: 6,
            max_total_preorder_n: 8,
        }
    }
}

impl Limits {
    /// Raises (or lowers) every soft cap to `n`, bounded by [`HARD_MAX_N`].
    pub fn with_max_n(n: usize) -> Self {
        let n = n.min(HARD_MAX_N);
        Limits {
            max_n: n,
            max_preorder_n: n,
            max_total_preorder_n: n,
        }
    }

    /// Default limits, overridden by the `EGPKIT_MAX_N` environment variable
    /// when it holds a number.
    pub fn from_env() -> Self {
        std::env::var("EGPKIT_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(Limits::with_max_n)
            .unwrap_or_default()
    }

    pub(crate) fn check(cap: usize, op: &'static str, n: usize) -> Result<()> {
        if n > cap {
            Err(Error::CapExceeded { op, n, cap })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_sorted_and_distinct() {
        let g = GroundSet::new(["c", "a", "b"]).unwrap();
        assert_eq!(g.labels(), ["a", "b", "c"]);
        assert_eq!(g.index_of("c").unwrap(), 2);
        assert!(GroundSet::new(["a", "a"]).is_err());
        assert!(matches!(g.index_of("z"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn hard_cap() {
        let labels: Vec<String> = (0..21).map(|i| format!("x{i:02}")).collect();
        assert!(matches!(
            GroundSet::new(labels),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = Subset(0b1011);
        let all: Vec<u32> = s.subsets().map(|x| x.0).collect();
        assert_eq!(all, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn compress_expand_roundtrip() {
        let within = Subset(0b10110);
        for u in within.subsets() {
            assert_eq!(u.compress(within).expand(within), u);
        }
        assert_eq!(Subset(0b10100).compress(within), Subset(0b110));
    }

    #[test]
    fn partition_refinement() {
        let fine = Partition::from_blocks(vec![Subset(0b001), Subset(0b010), Subset(0b100)]);
        let coarse = Partition::from_blocks(vec![Subset(0b100), Subset(0b011)]);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert_eq!(coarse.blocks()[0], Subset(0b011));
        assert!(coarse.is_union_of_blocks(Subset(0b011)));
        assert!(!coarse.is_union_of_blocks(Subset(0b001)));
    }
}
