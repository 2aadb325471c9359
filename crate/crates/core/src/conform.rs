//! Compatible and conforming preorders, the face and cone functions, the
//! closure operator, face lattices, and gluing.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::extfun::SubmodFn;
use crate::ground::{Limits, Partition, Subset};
use crate::preorder::{self, Preorder};
use crate::value::ExtValue;

/// The preorder whose down-sets are the finite-valued sets of `z`.
pub fn pre_of(z: &SubmodFn) -> Preorder {
    Preorder::preo_of(z.ground().clone(), &z.finite_sets())
}

/// `low_P`: zero on down-sets of `P`, infinite elsewhere.
pub fn low_of(p: &Preorder) -> SubmodFn {
    let table = (0..p.ground().power_len() as u32)
        .map(|s| {
            if p.is_down_set(Subset(s)) {
                ExtValue::zero()
            } else {
                ExtValue::Infinity
            }
        })
        .collect();
    SubmodFn::from_table(p.ground().clone(), table).expect("low_P is well formed")
}

/// The finest decomposition of `z_{B/A}`, expressed in the masks of `z`.
fn minor_partition(z: &SubmodFn, a: Subset, b: Subset) -> Result<Partition> {
    let c = b.minus(a);
    let m = z.minor(a, b)?;
    Ok(Partition::from_blocks(
        m.decompose()
            .blocks()
            .iter()
            .map(|blk| blk.expand(c))
            .collect(),
    ))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Strength {
    Compatible,
    Conforming,
}

fn check(p: &Preorder, z: &SubmodFn, strength: Strength) -> Result<bool> {
    z.ground().ensure_same(p.ground())?;
    let downs = p.down_sets();
    if downs.iter().any(|&d| !z.is_finite_at(d)) {
        return Ok(false);
    }
    for &a in &downs {
        for &b in downs.iter().filter(|b| a.is_subset_of(**b) && **b != a) {
            let fine = minor_partition(z, a, b)?;
            let comps = p.components_on(b.minus(a));
            let ok = match strength {
                Strength::Compatible => fine.refines(&comps),
                Strength::Conforming => fine == comps,
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Down-sets have finite values, and on every convex piece `B ∖ A` each
/// disconnection of `P` is a split of `z_{B/A}`.
pub fn is_compatible(p: &Preorder, z: &SubmodFn) -> Result<bool> {
    check(p, z, Strength::Compatible)
}

/// Compatible, and on every convex piece the finest decomposition of
/// `z_{B/A}` is exactly the component partition of `P` there.
pub fn is_conforming(p: &Preorder, z: &SubmodFn) -> Result<bool> {
    check(p, z, Strength::Conforming)
}

fn ensure_compatible(p: &Preorder, z: &SubmodFn) -> Result<()> {
    if is_compatible(p, z)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "preorder `{p}` is not compatible with the function"
        )))
    }
}

/// `z_C = z_{B/A}` for a convex `C = B ∖ A`, using `B = ↓C`.
pub fn z_of_convex(z: &SubmodFn, p: &Preorder, c: Subset) -> Result<SubmodFn> {
    z.ground().ensure_same(p.ground())?;
    if !p.is_convex(c) {
        return Err(Error::Precondition(format!(
            "{} is not convex",
            p.ground().format_subset(c)
        )));
    }
    let b = p.down_closure(c);
    let zc = z.minor(b.minus(c), b)?;
    if cfg!(debug_assertions) {
        // The largest presentation: everything not above C, plus C.
        let a2 = p.full().minus(p.up_closure(c));
        if z.is_finite_at(a2) {
            let other = z.minor(a2, a2.union(c))?;
            debug_assert_eq!(zc, other, "z_C depends on its presentation");
        }
    }
    Ok(zc)
}

fn face_fn_unchecked(z: &SubmodFn, p: &Preorder) -> Result<SubmodFn> {
    let parts = p
        .bubbles()
        .blocks()
        .iter()
        .map(|&c| z_of_convex(z, p, c))
        .collect::<Result<Vec<_>>>()?;
    SubmodFn::product_all(&parts)
}

/// `z_P`, the product of `z_C` over the bubbles `C` of a compatible `P`.
pub fn face_fn(z: &SubmodFn, p: &Preorder) -> Result<SubmodFn> {
    ensure_compatible(p, z)?;
    face_fn_unchecked(z, p)
}

/// `z^P`: `z` on the down-sets of a compatible `P`, infinite elsewhere.
pub fn cone_fn(z: &SubmodFn, p: &Preorder) -> Result<SubmodFn> {
    ensure_compatible(p, z)?;
    Ok(cone_fn_unchecked(z, p))
}

fn cone_fn_unchecked(z: &SubmodFn, p: &Preorder) -> SubmodFn {
    let table = (0..z.table().len() as u32)
        .map(|s| {
            let s = Subset(s);
            if p.is_down_set(s) {
                z.value(s).clone()
            } else {
                ExtValue::Infinity
            }
        })
        .collect();
    SubmodFn::from_table(z.ground().clone(), table).expect("z^P is well formed")
}

/// The conforming preorder of the face selected by a compatible `P`.
///
/// A set `A` is open in the result iff `z(A)` is finite, every `A ∩ C` for a
/// bubble `C` of `P` is a union of blocks of `z_C`, and
/// `z(A) = Σ_C z_C(A ∩ C)`.
pub fn closure(z: &SubmodFn, p: &Preorder) -> Result<Preorder> {
    ensure_compatible(p, z)?;
    let q = closure_unchecked(z, p)?;
    debug_assert!(q.is_below(p));
    debug_assert!(is_conforming(&q, z)?);
    Ok(q)
}

fn closure_unchecked(z: &SubmodFn, p: &Preorder) -> Result<Preorder> {
    struct Piece {
        c: Subset,
        f: SubmodFn,
        blocks: Partition,
    }
    let pieces = p
        .bubbles()
        .blocks()
        .iter()
        .map(|&c| {
            let f = z_of_convex(z, p, c)?;
            let blocks = Partition::from_blocks(
                f.decompose().blocks().iter().map(|b| b.expand(c)).collect(),
            );
            Ok(Piece { c, f, blocks })
        })
        .collect::<Result<Vec<_>>>()?;
    let open: Vec<Subset> = z
        .finite_sets()
        .into_iter()
        .filter(|&a| {
            let mut sum = ExtValue::zero();
            for piece in &pieces {
                let part = a.inter(piece.c);
                if !piece.blocks.is_union_of_blocks(part) {
                    return false;
                }
                sum = &sum + piece.f.value(part.compress(piece.c));
            }
            &sum == z.value(a)
        })
        .collect();
    Ok(Preorder::preo_of(z.ground().clone(), &open))
}

/// A nonempty face of `Π(z)`, given by its conforming preorder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub preorder: Preorder,
    /// `|I| − |b(P)|`.
    pub dim: usize,
    /// `z_P`, whose polyhedron is the face.
    pub face_fn: SubmodFn,
}

impl Face {
    pub(crate) fn new(z: &SubmodFn, p: Preorder) -> Result<Face> {
        let dim = z.n() - p.bubbles().len();
        let face_fn = face_fn_unchecked(z, &p)?;
        Ok(Face {
            preorder: p,
            dim,
            face_fn,
        })
    }
}

/// All nonempty faces of `Π(z)`, ordered by dimension and then canonically.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    /// `(i, j)` with face `i` contained in face `j`, i.e. `P_i ⪯ P_j`; reflexive pairs omitted.
    pub order: Vec<(usize, usize)>,
    /// The cover relations of `order`.
    pub covers: Vec<(usize, usize)>,
}

impl FaceLattice {
    fn build(z: &SubmodFn, preorders: Vec<Preorder>) -> Result<FaceLattice> {
        let mut faces = preorders
            .into_iter()
            .map(|p| Face::new(z, p))
            .collect::<Result<Vec<_>>>()?;
        faces.sort_by(|a, b| (a.dim, &a.preorder).cmp(&(b.dim, &b.preorder)));
        let m = faces.len();
        let mut order = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i != j && faces[i].preorder.is_below(&faces[j].preorder) {
                    order.push((i, j));
                }
            }
        }
        let covers = order
            .iter()
            .copied()
            .filter(|&(i, j)| {
                !(0..m).any(|k| {
                    k != i
                        && k != j
                        && faces[i].preorder.is_below(&faces[k].preorder)
                        && faces[k].preorder.is_below(&faces[j].preorder)
                })
            })
            .collect();
        Ok(FaceLattice {
            faces,
            order,
            covers,
        })
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Number of faces of each dimension, from 0 up to the largest dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.iter().map(|f| f.dim).max().unwrap_or(0);
        let mut v = vec![0; top + 1];
        for f in &self.faces {
            v[f.dim] += 1;
        }
        v
    }

    /// The conforming preorders, sorted canonically.
    pub fn preorders(&self) -> Vec<Preorder> {
        preorder::canonical_set(self.faces.iter().map(|f| f.preorder.clone()))
    }

    /// Faces with no other face below them.
    pub fn minimal(&self) -> Vec<&Face> {
        (0..self.faces.len())
            .filter(|&i| !self.order.iter().any(|&(_, j)| j == i))
            .map(|i| &self.faces[i])
            .collect()
    }

    pub fn contains(&self, p: &Preorder) -> bool {
        self.faces.iter().any(|f| &f.preorder == p)
    }
}

/// Enumerates the faces of `Π(z)` as closures of the compatible total preorders.
pub fn enumerate_faces(z: &SubmodFn, limits: &Limits) -> Result<FaceLattice> {
    enumerate_faces_with(z, limits, Exec::default())
}

pub fn enumerate_faces_with(z: &SubmodFn, limits: &Limits, exec: Exec) -> Result<FaceLattice> {
    FaceLattice::build(z, conforming_preorders_with(z, limits, exec)?)
}

/// `Pre(z)` in canonical order, via closures of total preorders.
pub fn conforming_preorders(z: &SubmodFn, limits: &Limits) -> Result<Vec<Preorder>> {
    conforming_preorders_with(z, limits, Exec::default())
}

pub fn conforming_preorders_with(
    z: &SubmodFn,
    limits: &Limits,
    exec: Exec,
) -> Result<Vec<Preorder>> {
    let totals = preorder::enumerate_total_preorders(z.ground(), limits)?;
    let closed = exec.map(&totals, |l| -> Result<Option<Preorder>> {
        if is_compatible(l, z)? {
            closure_unchecked(z, l).map(Some)
        } else {
            Ok(None)
        }
    });
    let closed = closed.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(preorder::canonical_set(closed.into_iter().flatten()))
}

/// `minPre(z)`: the faces whose preorders are `⪯`-minimal in `Pre(z)`.
pub fn min_faces(z: &SubmodFn, limits: &Limits) -> Result<Vec<Face>> {
    let lattice = enumerate_faces(z, limits)?;
    Ok(lattice.minimal().into_iter().cloned().collect())
}

/// The `⪯`-minimal conforming preorders, canonically sorted.
pub fn min_preorders(z: &SubmodFn, limits: &Limits) -> Result<Vec<Preorder>> {
    let all = conforming_preorders(z, limits)?;
    Ok(all
        .iter()
        .filter(|p| !all.iter().any(|q| q != *p && q.is_below(p)))
        .cloned()
        .collect())
}

/// Brute force: every preorder on the ground set that conforms to `z`.
pub fn conforming_oracle(z: &SubmodFn, limits: &Limits) -> Result<Vec<Preorder>> {
    conforming_oracle_with(z, limits, Exec::default())
}

pub fn conforming_oracle_with(z: &SubmodFn, limits: &Limits, exec: Exec) -> Result<Vec<Preorder>> {
    let all = preorder::enumerate_preorders_with(z.ground(), limits, exec)?;
    let flags = exec.map(&all, |p| is_conforming(p, z));
    let flags = flags.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(all
        .into_iter()
        .zip(flags)
        .filter_map(|(p, ok)| ok.then_some(p))
        .collect())
}

/// The conforming preorder with `S` a down-set, `P|_S = P1` and `P|_{I∖S} = P2`.
///
/// `P1` must conform to `z|_S` and `P2` to `z_{/S}`.
pub fn glue(z: &SubmodFn, s: Subset, p1: &Preorder, p2: &Preorder) -> Result<Preorder> {
    let rest = z.full().minus(s);
    p1.ground().ensure_same(&z.ground().sub(s))?;
    p2.ground().ensure_same(&z.ground().sub(rest))?;
    let quotient = z.corestrict(s)?;
    if !is_conforming(p1, &z.restrict(s))? {
        return Err(Error::Precondition(format!(
            "`{p1}` does not conform to the restriction"
        )));
    }
    if !is_conforming(p2, &quotient)? {
        return Err(Error::Precondition(format!(
            "`{p2}` does not conform to the corestriction"
        )));
    }
    let mut rows = vec![0u32; z.n()];
    for (k, i) in s.iter().enumerate() {
        rows[i] = p1.up_of(k).expand(s).union(rest).0;
    }
    for (k, i) in rest.iter().enumerate() {
        rows[i] = p2.up_of(k).expand(rest).0;
    }
    let stacked = Preorder::from_up_rows(z.ground().clone(), rows)?;
    let glued = closure(z, &stacked)?;
    assert!(
        glued.is_down_set(s) && &glued.restrict(s) == p1 && &glued.restrict(rest) == p2,
        "glued preorder does not restrict to its parts"
    );
    Ok(glued)
}
