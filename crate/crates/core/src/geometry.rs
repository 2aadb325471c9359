//! Exact pointwise geometry of `Π(z)`: membership, points of the affine
//! spaces of total preorders, braid cones, and maximizing faces.

use num_traits::{One, Zero};

use crate::conform::{self, is_compatible, pre_of, Face};
use crate::error::{Error, Result};
use crate::extfun::SubmodFn;
use crate::ground::{GroundSet, Subset};
use crate::preorder::{DownSetFamily, Preorder};
use crate::value::{ExtValue, Rational};

/// A vector in `ℚ^I`, used both for points and for directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    ground: GroundSet,
    coords: Vec<Rational>,
}

pub type Point = Vector;
pub type Direction = Vector;

impl Vector {
    pub fn new(ground: GroundSet, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != ground.len() {
            return Err(Error::Validation(format!(
                "{} coordinates for a ground set of size {}",
                coords.len(),
                ground.len()
            )));
        }
        Ok(Vector { ground, coords })
    }

    /// From `(label, value)` pairs covering every label exactly once.
    pub fn from_labels<S: AsRef<str>>(ground: GroundSet, values: &[(S, Rational)]) -> Result<Self> {
        let mut coords: Vec<Option<Rational>> = vec![None; ground.len()];
        for (l, v) in values {
            let i = ground.index_of(l.as_ref())?;
            if coords[i].replace(v.clone()).is_some() {
                return Err(Error::Validation(format!(
                    "coordinate `{}` given twice",
                    l.as_ref()
                )));
            }
        }
        let coords = coords
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or_else(|| {
                    Error::Validation(format!("missing coordinate `{}`", ground.label(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Vector { ground, coords })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    /// `x_A = Σ_{i∈A} x_i`.
    pub fn sum_on(&self, a: Subset) -> Rational {
        a.iter().map(|i| &self.coords[i]).sum()
    }
}

/// `x_I = z(I)` and `x_A ≤ z(A)` for every finite-valued `A`.
pub fn contains(z: &SubmodFn, x: &Point) -> Result<bool> {
    z.ground().ensure_same(x.ground())?;
    if ExtValue::Finite(x.sum_on(z.full())) != *z.value(z.full()) {
        return Ok(false);
    }
    Ok(z.finite_sets()
        .into_iter()
        .all(|a| ExtValue::Finite(x.sum_on(a)) <= *z.value(a)))
}

/// Point of `Alin(T)` for a linear extension `T` of `pre(z)`, splitting the
/// mass of each bubble of `T` into equal shares. Coordinates follow the masks of `z`.
fn uniform_point(z: &SubmodFn, t: &Preorder) -> Vec<Rational> {
    let mut coords = vec![Rational::zero(); z.n()];
    let mut levels = t.bubbles().blocks().to_vec();
    levels.sort_by_key(|b| t.down_closure(*b).len());
    let mut below = Subset::EMPTY;
    for c in levels {
        let top = below.union(c);
        let mass = z
            .value(top)
            .checked_sub(z.value(below))
            .ok()
            .and_then(|v| v.finite().cloned())
            .expect("down-sets of pre(z) are finite");
        let share = mass / Rational::from_integer((c.len() as i64).into());
        for i in c.iter() {
            coords[i] = share.clone();
        }
        below = top;
    }
    coords
}

/// Average of [`uniform_point`] over all linear extensions of `pre(z)`.
fn symmetric_point(z: &SubmodFn) -> Vec<Rational> {
    let exts = pre_of(z).linear_extensions();
    let mut sum = vec![Rational::zero(); z.n()];
    for t in &exts {
        for (s, v) in sum.iter_mut().zip(uniform_point(z, t)) {
            *s += v;
        }
    }
    let count = Rational::from_integer((exts.len() as i64).into());
    sum.into_iter().map(|s| s / &count).collect()
}

/// A point of `Alin(L)` for a total preorder `L` compatible with `z`.
///
/// Bubbles of `L` are solved bottom to top: the coordinates on a bubble `C`
/// sum to `z(↓C) − z(↓C ∖ C)`. Inside `C` the point is the average, over the
/// linear extensions `T` of `pre(z_C)`, of the solutions of `Alin(T)` for `z_C`
/// that split each bubble of `T` evenly. When `L` is a linear extension of
/// `pre(z)` this is the plain uniform split, and for a coarse `L` and finite
/// `z` it is the barycenter of the vertices.
pub fn alin_point(z: &SubmodFn, l: &Preorder) -> Result<Point> {
    if !l.is_total() {
        return Err(Error::Precondition(format!(
            "`{l}` is not a total preorder"
        )));
    }
    if !is_compatible(l, z)? {
        return Err(Error::Precondition(format!(
            "`{l}` is not compatible with the function"
        )));
    }
    let mut coords = vec![Rational::zero(); z.n()];
    for &c in l.bubbles().blocks() {
        let zc = conform::z_of_convex(z, l, c)?;
        for (k, v) in symmetric_point(&zc).into_iter().enumerate() {
            let i = Subset::singleton(k).expand(c).first().expect("k < |C|");
            coords[i] = v;
        }
    }
    let x = Vector::new(z.ground().clone(), coords)?;
    debug_assert!(contains(z, &x)?);
    Ok(x)
}

/// `y ∈ k(P)`: `y_i ≥ y_j` whenever `i ≤_P j`.
pub fn cone_contains(p: &Preorder, y: &Direction) -> Result<bool> {
    p.ground().ensure_same(y.ground())?;
    Ok(p.pairs().into_iter().all(|(i, j)| y.get(i) >= y.get(j)))
}

/// The total preorder of the level sets of `y`: `i ≤ j` iff `y_i ≥ y_j`.
pub fn level_preorder(y: &Direction) -> Preorder {
    let n = y.ground().len();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| y.get(i) >= y.get(j))
                .fold(0u32, |acc, j| acc | 1 << j)
        })
        .collect();
    Preorder::from_up_rows(y.ground().clone(), rows).expect("rows match the ground set")
}

/// The face of `Π(z)` on which `y` attains its maximum.
pub fn direction_to_face(z: &SubmodFn, y: &Direction) -> Result<Face> {
    z.ground().ensure_same(y.ground())?;
    let t = level_preorder(y);
    if !is_compatible(&t, z)? {
        return Err(Error::Unbounded(format!(
            "the direction is unbounded above on the polyhedron (level order `{t}`)"
        )));
    }
    let p = conform::closure(z, &t)?;
    Face::new(z, p)
}

/// The finite-valued sets `A` with `x_A = z(A)` at every given point.
pub fn equality_set(z: &SubmodFn, points: &[Point]) -> Result<DownSetFamily> {
    for x in points {
        if !contains(z, x)? {
            return Err(Error::Precondition(
                "a point lies outside the polyhedron".into(),
            ));
        }
    }
    let sets = z
        .finite_sets()
        .into_iter()
        .filter(|&a| {
            points
                .iter()
                .all(|x| ExtValue::Finite(x.sum_on(a)) == *z.value(a))
        })
        .collect();
    DownSetFamily::new(z.ground().clone(), sets)
}

/// Rank of a list of rational vectors, by exact elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = Rational::one() / &m[r][c];
        let pivot_row: Vec<Rational> = m[r].iter().map(|v| v * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        m[r] = pivot_row;
        r += 1;
    }
    r
}

/// Dimension of the affine space `x_A = z(A)` over the down-sets `A` of `P`.
pub fn alin_dimension(p: &Preorder) -> usize {
    let rows: Vec<Vec<Rational>> = p
        .down_sets()
        .into_iter()
        .filter(|a| !a.is_empty())
        .map(|a| {
            (0..p.n())
                .map(|i| {
                    if a.contains(i) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    p.n() - rank(&rows)
}

/// Dimension of the affine hull of a nonempty set of points.
pub fn affine_dimension(points: &[Point]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let rows: Vec<Vec<Rational>> = rest
        .iter()
        .map(|x| {
            x.coords
                .iter()
                .zip(&first.coords)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    rank(&rows)
}
