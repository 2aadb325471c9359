//! Ehrhart-type counts of preorders, the polynomial invariant `χ(z)`, its
//! character-sum form, and the generic-function count for matroids.

use num_traits::{One, Zero};

use crate::conform::{self, pre_of};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::extfun::SubmodFn;
use crate::generators::Matroid;
use crate::ground::{Limits, Subset};
use crate::poly::RationalPoly;
use crate::preorder::Preorder;
use crate::value::{int, Rational};

/// Bubbles in an order where each bubble comes after every bubble below it,
/// with `below[k]` the positions (in that order) of bubbles strictly below.
fn sorted_bubbles(p: &Preorder) -> Vec<u32> {
    let (bubbles, above) = p.bubble_order();
    let m = bubbles.len();
    let mut below = vec![0u32; m];
    for (k, &a) in above.iter().enumerate() {
        for j in Subset(a).iter() {
            below[j] |= 1 << k;
        }
    }
    let mut order = Vec::with_capacity(m);
    let mut placed = 0u32;
    while order.len() < m {
        let k = (0..m)
            .find(|&k| placed >> k & 1 == 0 && below[k] & !placed == 0)
            .expect("bubble order is acyclic");
        order.push(k);
        placed |= 1 << k;
    }
    let pos: Vec<usize> = {
        let mut pos = vec![0; m];
        for (i, &k) in order.iter().enumerate() {
            pos[k] = i;
        }
        pos
    };
    order
        .iter()
        .map(|&k| {
            Subset(below[k])
                .iter()
                .fold(0u32, |acc, j| acc | 1 << pos[j])
        })
        .collect()
}

/// Maps `h : b(P) → {1..k}` with `h(B) > h(B′)` whenever `B <_P B′`.
pub fn count_strict(p: &Preorder, k: u64) -> u64 {
    let below = sorted_bubbles(p);
    let mut h = vec![0u64; below.len()];
    fn go(i: usize, below: &[u32], h: &mut [u64], k: u64) -> u64 {
        if i == below.len() {
            return 1;
        }
        let cap = Subset(below[i]).iter().map(|j| h[j] - 1).min().unwrap_or(k);
        (1..=cap)
            .map(|v| {
                h[i] = v;
                go(i + 1, below, h, k)
            })
            .sum()
    }
    go(0, &below, &mut h, k)
}

/// Maps `h : b(P) → {0..k}` with `h(B) ≥ h(B′)` whenever `B ≤_P B′`.
pub fn count_weak(p: &Preorder, k: u64) -> u64 {
    let below = sorted_bubbles(p);
    let mut h = vec![0u64; below.len()];
    fn go(i: usize, below: &[u32], h: &mut [u64], k: u64) -> u64 {
        if i == below.len() {
            return 1;
        }
        let cap = Subset(below[i]).iter().map(|j| h[j]).min().unwrap_or(k);
        (0..=cap)
            .map(|v| {
                h[i] = v;
                go(i + 1, below, h, k)
            })
            .sum()
    }
    go(0, &below, &mut h, k)
}

/// Interpolates `count` at `k = 1..=d+1` and confirms two more values.
fn interpolate_counts<F: Fn(u64) -> u64>(d: usize, count: F) -> RationalPoly {
    let pts: Vec<(Rational, Rational)> = (1..=d as u64 + 1)
        .map(|k| (int(k as i64), int(count(k) as i64)))
        .collect();
    let poly = RationalPoly::interpolate(&pts);
    for k in d as u64 + 2..=d as u64 + 3 {
        assert_eq!(
            poly.eval_int(k as i64),
            int(count(k) as i64),
            "count is not a polynomial of degree {d}"
        );
    }
    poly
}

/// `Ehr*`: interior lattice points of the order polytope of `P`, as a
/// polynomial of degree `|b(P)|`.
pub fn ehr_star(p: &Preorder) -> RationalPoly {
    interpolate_counts(p.bubbles().len(), |k| count_strict(p, k))
}

/// `Ehr`: all lattice points of the order polytope of `P`.
pub fn ehr(p: &Preorder) -> RationalPoly {
    interpolate_counts(p.bubbles().len(), |k| count_weak(p, k))
}

/// `χ(z)`: the sum of `Ehr*` over the minimal conforming preorders.
pub fn chi(z: &SubmodFn, limits: &Limits) -> Result<RationalPoly> {
    chi_with(z, limits, Exec::default())
}

pub fn chi_with(z: &SubmodFn, limits: &Limits, exec: Exec) -> Result<RationalPoly> {
    let mins = conform::min_preorders(z, limits)?;
    Ok(exec.map(&mins, ehr_star).into_iter().sum())
}

/// The basic character: `1` when `Π(w)` is an affine space, i.e. `w` is
/// modular and `pre(w)` is totally disconnected.
pub fn basic_character(w: &SubmodFn) -> bool {
    w.is_modular() && pre_of(w).is_totally_disconnected()
}

/// `Σ_{I = S₁ ⊔ ⋯ ⊔ S_n} Π_j β(z_{(S₁∪⋯∪S_j)/(S₁∪⋯∪S_{j−1})})`, empty blocks allowed.
///
/// Extended (non-finite) functions are rejected unless `extended` is set.
pub fn chi_character(z: &SubmodFn, n: u32, extended: bool) -> Result<Rational> {
    chi_character_with(z, n, extended, Exec::default())
}

pub fn chi_character_with(z: &SubmodFn, n: u32, extended: bool, exec: Exec) -> Result<Rational> {
    if !extended && !z.is_finite() {
        return Err(Error::Validation(
            "character sum needs a finite function (use the extended form)".into(),
        ));
    }
    let size = z.n() as u32;
    let total = (n as u64)
        .checked_pow(size)
        .ok_or_else(|| Error::Validation("too many decompositions".into()))?;
    if n == 0 {
        return Ok(if size == 0 {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    let hits = exec.count_range(total, |code| {
        let mut blocks = vec![Subset::EMPTY; n as usize];
        let mut c = code;
        for i in 0..size as usize {
            blocks[(c % n as u64) as usize] = blocks[(c % n as u64) as usize].with(i);
            c /= n as u64;
        }
        let mut prefix = Subset::EMPTY;
        for b in blocks {
            let next = prefix.union(b);
            if !b.is_empty() {
                if !z.is_finite_at(next) {
                    return false;
                }
                let w = z.minor(prefix, next).expect("finite prefix");
                if !basic_character(&w) {
                    return false;
                }
            }
            prefix = next;
        }
        true
    });
    Ok(int(hits as i64))
}

/// Functions `y : I → {1..n}` whose weight `Σ_{i∈B} y_i` has a unique maximizing basis.
pub fn bjr_count(m: &Matroid, n: u32) -> Rational {
    bjr_count_with(m, n, Exec::default())
}

pub fn bjr_count_with(m: &Matroid, n: u32, exec: Exec) -> Rational {
    let size = m.ground().len() as u32;
    let total = (n as u64).pow(size);
    let hits = exec.count_range(total, |code| {
        let mut y = vec![0u64; size as usize];
        let mut c = code;
        for v in y.iter_mut() {
            *v = c % n as u64 + 1;
            c /= n as u64;
        }
        let weights: Vec<u64> = m
            .bases()
            .iter()
            .map(|b| b.iter().map(|i| y[i]).sum())
            .collect();
        let best = weights.iter().max().copied().unwrap_or(0);
        weights.iter().filter(|&&w| w == best).count() == 1
    });
    int(hits as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::value::frac;

    fn g(n: usize) -> GroundSet {
        GroundSet::letters(n).unwrap()
    }

    #[test]
    fn two_chain() {
        let p = Preorder::chain(g(2), &["a", "b"]).unwrap();
        assert_eq!(ehr_star(&p), RationalPoly::binomial(2));
        let weak = RationalPoly::binomial(2).compose(&RationalPoly::from_ints(&[2, 1]));
        assert_eq!(ehr(&p), weak);
    }

    #[test]
    fn chains_give_binomials() {
        for n in 1..=5 {
            let labels: Vec<String> = g(n).labels().to_vec();
            let p = Preorder::chain(g(n), &labels).unwrap();
            assert_eq!(ehr_star(&p), RationalPoly::binomial(n));
        }
    }

    #[test]
    fn v_poset() {
        let p = Preorder::from_relations(g(3), &[("a", "b"), ("a", "c")]).unwrap();
        let expected = RationalPoly::new(vec![int(0), frac(1, 6), frac(-1, 2), frac(1, 3)]);
        assert_eq!(ehr_star(&p), expected);
    }

    #[test]
    fn single_point() {
        let p = Preorder::discrete(g(1));
        assert_eq!(ehr(&p), RationalPoly::from_ints(&[1, 1]));
        assert_eq!(ehr_star(&p), RationalPoly::var());
    }

    #[test]
    fn empty_preorder_is_one() {
        let p = Preorder::discrete(GroundSet::empty());
        assert_eq!(ehr_star(&p), RationalPoly::one());
        assert_eq!(chi_character(&SubmodFn::unit(), 0, false).unwrap(), int(1));
    }

    #[test]
    fn character_rejects_extended_by_default() {
        let low = conform::low_of(&Preorder::chain(g(2), &["a", "b"]).unwrap());
        assert!(chi_character(&low, 2, false).is_err());
        assert!(chi_character(&low, 2, true).is_ok());
    }
}
