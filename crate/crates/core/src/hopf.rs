//! Formal sums of tensor terms and the bialgebra operations on submodular
//! functions, modular functions and preorders.
//!
//! Terms are tuples of components; each component carries its own labelled
//! ground set, so external coproducts produce factors on the blocks of a
//! split while internal coproducts produce factors on the whole ground set.
//! Splits are given by labels so the same split can be applied to factors
//! living on different grounds.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::conform::{self, pre_of};
use crate::error::{Error, Result};
use crate::extfun::SubmodFn;
use crate::ground::{GroundSet, Limits, Subset};
use crate::preorder::Preorder;
use crate::value::{format_rational, Rational};

/// One tensor factor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Component {
    Fn(SubmodFn),
    Pre(Preorder),
}

impl Component {
    pub fn ground(&self) -> &GroundSet {
        match self {
            Component::Fn(z) => z.ground(),
            Component::Pre(p) => p.ground(),
        }
    }

    pub fn as_fn(&self) -> Result<&SubmodFn> {
        match self {
            Component::Fn(z) => Ok(z),
            Component::Pre(_) => Err(Error::Precondition("expected a function factor".into())),
        }
    }

    pub fn as_pre(&self) -> Result<&Preorder> {
        match self {
            Component::Pre(p) => Ok(p),
            Component::Fn(_) => Err(Error::Precondition("expected a preorder factor".into())),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Fn(z) => write!(f, "[{z}]"),
            Component::Pre(p) => write!(f, "<{p}>"),
        }
    }
}

pub type Term = Vec<Component>;

/// A finite ℚ-linear combination of tensor terms with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct FormalSum {
    terms: BTreeMap<Term, Rational>,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    /// The scalar `1`, i.e. the empty tensor with coefficient one.
    pub fn scalar(c: Rational) -> Self {
        FormalSum::term(Vec::new(), c)
    }

    pub fn term(t: Term, c: Rational) -> Self {
        let mut s = FormalSum::zero();
        s.add_term(t, c);
        s
    }

    pub fn single(t: Term) -> Self {
        FormalSum::term(t, Rational::one())
    }

    pub fn of_fn(z: SubmodFn) -> Self {
        FormalSum::single(vec![Component::Fn(z)])
    }

    pub fn of_pre(p: Preorder) -> Self {
        FormalSum::single(vec![Component::Pre(p)])
    }

    pub fn add_term(&mut self, t: Term, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &FormalSum) {
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> FormalSum {
        let mut out = FormalSum::zero();
        for (t, v) in &self.terms {
            out.add_term(t.clone(), v * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &Term) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    /// `self ⊗ other`, concatenating terms.
    pub fn tensor(&self, other: &FormalSum) -> FormalSum {
        let mut out = FormalSum::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut t = a.clone();
                t.extend(b.iter().cloned());
                out.add_term(t, x * y);
            }
        }
        out
    }

    /// Applies a linear map to the factor at `index` of every term. The
    /// map's output is spliced in place, so it may change the term length.
    pub fn apply_at<F>(&self, index: usize, f: F) -> Result<FormalSum>
    where
        F: Fn(&Component) -> Result<FormalSum>,
    {
        let mut out = FormalSum::zero();
        for (t, c) in &self.terms {
            if index >= t.len() {
                return Err(Error::Precondition(format!(
                    "tensor position {index} out of range for a term of length {}",
                    t.len()
                )));
            }
            for (inner, d) in &f(&t[index])?.terms {
                let mut nt = t[..index].to_vec();
                nt.extend(inner.iter().cloned());
                nt.extend(t[index + 1..].iter().cloned());
                out.add_term(nt, c * d);
            }
        }
        Ok(out)
    }

    /// Applies the same linear map to every factor of every term.
    pub fn apply_each<F>(&self, f: F) -> Result<FormalSum>
    where
        F: Fn(&Component) -> Result<FormalSum>,
    {
        let mut out = FormalSum::zero();
        for (t, c) in &self.terms {
            let mut acc = FormalSum::scalar(c.clone());
            for comp in t {
                acc = acc.tensor(&f(comp)?);
            }
            out.add(&acc);
        }
        Ok(out)
    }

    /// Multiplies the factors at `index` and `index + 1`.
    pub fn mul_at(&self, index: usize) -> Result<FormalSum> {
        let mut out = FormalSum::zero();
        for (t, c) in &self.terms {
            if index + 1 >= t.len() {
                return Err(Error::Precondition(format!(
                    "no factors {index}, {} to multiply",
                    index + 1
                )));
            }
            let m = multiply(&t[index], &t[index + 1])?;
            let mut nt = t[..index].to_vec();
            nt.push(m);
            nt.extend(t[index + 2..].iter().cloned());
            out.add_term(nt, c.clone());
        }
        Ok(out)
    }

    /// Exchanges the factors at `index` and `index + 1`.
    pub fn swap_at(&self, index: usize) -> Result<FormalSum> {
        let mut out = FormalSum::zero();
        for (t, c) in &self.terms {
            if index + 1 >= t.len() {
                return Err(Error::Precondition(format!(
                    "no factors {index}, {} to swap",
                    index + 1
                )));
            }
            let mut nt = t.clone();
            nt.swap(index, index + 1);
            out.add_term(nt, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let lines: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let body = if t.is_empty() {
                    "1".to_string()
                } else {
                    t.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ⊗ ")
                };
                if c.is_one() {
                    body
                } else {
                    format!("{} * {body}", format_rational(c))
                }
            })
            .collect();
        write!(f, "{}", lines.join("\n"))
    }
}

/// The product of two factors of the same kind on disjoint grounds.
pub fn multiply(a: &Component, b: &Component) -> Result<Component> {
    match (a, b) {
        (Component::Fn(u), Component::Fn(v)) => Ok(Component::Fn(u.product(v)?)),
        (Component::Pre(p), Component::Pre(q)) => Ok(Component::Pre(p.disjoint_union(q)?)),
        _ => Err(Error::Precondition(
            "cannot multiply a function with a preorder".into(),
        )),
    }
}

/// The positions of `ground` whose labels occur in `left`.
fn mask_of(ground: &GroundSet, left: &GroundSet) -> Subset {
    ground
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| left.index_of(l).is_ok())
        .fold(Subset::EMPTY, |acc, (i, _)| acc.with(i))
}

/// `Δ_{S,T}(z) = z|_S ⊗ z_{/S}` when `z(S)` is finite, the zero sum otherwise.
pub fn coproduct_delta(z: &SubmodFn, s: Subset) -> FormalSum {
    match z.corestrict(s) {
        Ok(quot) => FormalSum::single(vec![Component::Fn(z.restrict(s)), Component::Fn(quot)]),
        Err(_) => FormalSum::zero(),
    }
}

/// `Σ_S Δ_{S,I∖S}(z)` over all subsets `S`.
pub fn full_coproduct(z: &SubmodFn) -> FormalSum {
    let mut out = FormalSum::zero();
    for s in z.full().subsets() {
        out.add(&coproduct_delta(z, s));
    }
    out
}

/// `Δ_{S₁,…,S_m}(z) = ⊗_j z_{(S₁∪⋯∪S_j)/(S₁∪⋯∪S_{j−1})}`, zero when a
/// prefix has infinite value. Blocks may be empty; they must partition `I`.
pub fn iterated_coproduct(z: &SubmodFn, blocks: &[Subset]) -> Result<FormalSum> {
    let mut seen = Subset::EMPTY;
    for &b in blocks {
        if b.intersects(seen) {
            return Err(Error::Validation("split blocks overlap".into()));
        }
        seen = seen.union(b);
    }
    if seen != z.full() {
        return Err(Error::Validation(
            "split blocks do not cover the ground set".into(),
        ));
    }
    let mut term = Vec::with_capacity(blocks.len());
    let mut prefix = Subset::EMPTY;
    for &b in blocks {
        let next = prefix.union(b);
        if !z.is_finite_at(next) {
            return Ok(FormalSum::zero());
        }
        term.push(Component::Fn(z.minor(prefix, next)?));
        prefix = next;
    }
    Ok(FormalSum::single(term))
}

/// `δ_SM(z) = Σ_{P ∈ Pre(z)} z_P ⊗ z^P`; restricted to modular `z` this is `δ_MOD`.
pub fn internal_delta(z: &SubmodFn, limits: &Limits) -> Result<FormalSum> {
    let mut out = FormalSum::zero();
    for p in conform::conforming_preorders(z, limits)? {
        let face = conform::face_fn(z, &p)?;
        let cone = conform::cone_fn(z, &p)?;
        out.add_term(
            vec![Component::Fn(face), Component::Fn(cone)],
            Rational::one(),
        );
    }
    Ok(out)
}

/// `φ(z) = Σ_{P ∈ minPre(z)} z^P`, one modular term per minimal face.
pub fn phi(z: &SubmodFn, limits: &Limits) -> Result<FormalSum> {
    let mut out = FormalSum::zero();
    for p in conform::min_preorders(z, limits)? {
        out.add_term(
            vec![Component::Fn(conform::cone_fn(z, &p)?)],
            Rational::one(),
        );
    }
    Ok(out)
}

fn ensure_modular(z: &SubmodFn) -> Result<()> {
    if z.is_modular() {
        Ok(())
    } else {
        Err(Error::Precondition("function is not modular".into()))
    }
}

/// `ψ(z) = pre(z)` for modular `z`.
pub fn psi(z: &SubmodFn) -> Result<Preorder> {
    ensure_modular(z)?;
    Ok(pre_of(z))
}

/// `ε_MOD(z)`: `1` if `pre(z)` is totally disconnected, else `0`.
pub fn counit_eps(z: &SubmodFn) -> Result<Rational> {
    ensure_modular(z)?;
    Ok(if pre_of(z).is_totally_disconnected() {
        Rational::one()
    } else {
        Rational::zero()
    })
}

/// The external counit: `1` on the empty ground set, `0` elsewhere.
pub fn counit(c: &Component) -> Rational {
    if c.ground().is_empty() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `δ(P) = Σ_{P ◀ Q} G_P(Q) ⊗ Q`.
pub fn preorder_delta(p: &Preorder, limits: &Limits) -> Result<FormalSum> {
    let mut out = FormalSum::zero();
    for q in p.contractions(limits)? {
        let r = p.galois_g(&q)?;
        out.add_term(vec![Component::Pre(r), Component::Pre(q)], Rational::one());
    }
    Ok(out)
}

/// `Δ_S(P) = P|_S ⊗ P|_{I∖S}` when `S` is a down-set, zero otherwise.
pub fn preorder_coproduct(p: &Preorder, s: Subset) -> FormalSum {
    if !p.is_down_set(s) {
        return FormalSum::zero();
    }
    let rest = p.full().minus(s);
    FormalSum::single(vec![
        Component::Pre(p.restrict(s)),
        Component::Pre(p.restrict(rest)),
    ])
}

/// The external coproduct of either kind, with the left block given by labels.
pub fn split_component(c: &Component, left: &GroundSet) -> FormalSum {
    match c {
        Component::Fn(z) => coproduct_delta(z, mask_of(z.ground(), left)),
        Component::Pre(p) => preorder_coproduct(p, mask_of(p.ground(), left)),
    }
}

/// The internal coproduct of either kind: `δ_SM` on functions, `δ` on preorders.
pub fn internal_component(c: &Component, limits: &Limits) -> Result<FormalSum> {
    match c {
        Component::Fn(z) => internal_delta(z, limits),
        Component::Pre(p) => preorder_delta(p, limits),
    }
}

/// `φ` as a linear map on function factors.
pub fn phi_component(c: &Component, limits: &Limits) -> Result<FormalSum> {
    phi(c.as_fn()?, limits)
}

/// `ψ` as a linear map on modular function factors.
pub fn psi_component(c: &Component) -> Result<FormalSum> {
    Ok(FormalSum::of_pre(psi(c.as_fn()?)?))
}

/// `ε_MOD` as a linear functional on modular function factors.
pub fn eps_component(c: &Component) -> Result<FormalSum> {
    Ok(FormalSum::scalar(counit_eps(c.as_fn()?)?))
}

/// Both sides of a bialgebra identity, evaluated on a concrete input.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub lhs: FormalSum,
    pub rhs: FormalSum,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `(Δ_S ⊗ id)∘Δ_{S∪T} = (id ⊗ Δ_T)∘Δ_S` for disjoint label sets `S`, `T`.
pub fn coassociativity(z: &SubmodFn, s: Subset, t: Subset) -> Result<Identity> {
    if s.intersects(t) {
        return Err(Error::Precondition(
            "blocks of a 3-split must be disjoint".into(),
        ));
    }
    let left = z.ground().sub(s);
    let middle = z.ground().sub(t);
    let lhs = coproduct_delta(z, s.union(t)).apply_at(0, |c| Ok(split_component(c, &left)))?;
    let rhs = coproduct_delta(z, s).apply_at(1, |c| Ok(split_component(c, &middle)))?;
    Ok(Identity {
        name: "coassociativity of the split coproduct",
        lhs,
        rhs,
    })
}

/// `(id ⊗ δ)∘δ_SM = (δ_SM ⊗ id)∘δ_SM`; on modular `z` this is coassociativity of `δ_MOD`.
pub fn comodule_law(z: &SubmodFn, limits: &Limits) -> Result<Identity> {
    let d = internal_delta(z, limits)?;
    let lhs = d.apply_at(1, |c| internal_component(c, limits))?;
    let rhs = d.apply_at(0, |c| internal_component(c, limits))?;
    Ok(Identity {
        name: "comodule law of the internal coproduct",
        lhs,
        rhs,
    })
}

/// `(id ⊗ Δ_S)∘δ_SM = (μ ⊗ id ⊗ id)∘(id ⊗ τ ⊗ id)∘(δ_SM ⊗ δ_SM)∘Δ_S`.
pub fn cointeraction(z: &SubmodFn, s: Subset, limits: &Limits) -> Result<Identity> {
    let left = z.ground().sub(s);
    let lhs = internal_delta(z, limits)?.apply_at(1, |c| Ok(split_component(c, &left)))?;
    let rhs = coproduct_delta(z, s)
        .apply_at(0, |c| internal_component(c, limits))?
        .apply_at(2, |c| internal_component(c, limits))?
        .swap_at(1)?
        .mul_at(0)?;
    Ok(Identity {
        name: "cointeraction",
        lhs,
        rhs,
    })
}

/// `(id ⊗ ε_MOD)∘δ_SM = id`.
pub fn right_counit(z: &SubmodFn, limits: &Limits) -> Result<Identity> {
    let lhs = internal_delta(z, limits)?.apply_at(1, eps_component)?;
    Ok(Identity {
        name: "right counit of the internal coproduct",
        lhs,
        rhs: FormalSum::of_fn(z.clone()),
    })
}

/// `(ε_MOD ⊗ id)∘δ_MOD = id`, for modular `z`.
pub fn left_counit(z: &SubmodFn, limits: &Limits) -> Result<Identity> {
    ensure_modular(z)?;
    let lhs = internal_delta(z, limits)?.apply_at(0, eps_component)?;
    Ok(Identity {
        name: "left counit of the internal coproduct",
        lhs,
        rhs: FormalSum::of_fn(z.clone()),
    })
}

/// `(ε ⊗ id)∘Δ_{∅,I} = id = (id ⊗ ε)∘Δ_{I,∅}`, checked as one sum of both sides.
pub fn external_counit(z: &SubmodFn) -> Result<Identity> {
    let eps = |c: &Component| Ok(FormalSum::scalar(counit(c)));
    let mut lhs = coproduct_delta(z, Subset::EMPTY).apply_at(0, eps)?;
    lhs.add(&coproduct_delta(z, z.full()).apply_at(1, eps)?);
    let rhs = FormalSum::of_fn(z.clone()).scale(&Rational::from_integer(2.into()));
    Ok(Identity {
        name: "counit of the split coproduct",
        lhs,
        rhs,
    })
}

/// `φ(u·v) = φ(u)·φ(v)`.
pub fn phi_product(u: &SubmodFn, v: &SubmodFn, limits: &Limits) -> Result<Identity> {
    let lhs = phi(&u.product(v)?, limits)?;
    let rhs = phi(u, limits)?.tensor(&phi(v, limits)?).mul_at(0)?;
    Ok(Identity {
        name: "phi respects products",
        lhs,
        rhs,
    })
}

/// `Δ_S∘φ = (φ ⊗ φ)∘Δ_S`.
pub fn phi_coproduct(z: &SubmodFn, s: Subset, limits: &Limits) -> Result<Identity> {
    let left = z.ground().sub(s);
    let lhs = phi(z, limits)?.apply_at(0, |c| Ok(split_component(c, &left)))?;
    let rhs = coproduct_delta(z, s).apply_each(|c| phi_component(c, limits))?;
    Ok(Identity {
        name: "phi respects the split coproduct",
        lhs,
        rhs,
    })
}

/// `δ_MOD∘φ = (φ ⊗ φ)∘δ_SM`.
pub fn phi_internal(z: &SubmodFn, limits: &Limits) -> Result<Identity> {
    let lhs = phi(z, limits)?.apply_at(0, |c| internal_component(c, limits))?;
    let rhs = internal_delta(z, limits)?.apply_each(|c| phi_component(c, limits))?;
    Ok(Identity {
        name: "phi respects the internal coproduct",
        lhs,
        rhs,
    })
}

/// `Δ_S∘ψ = (ψ ⊗ ψ)∘Δ_S` for modular `z`.
pub fn psi_coproduct(z: &SubmodFn, s: Subset) -> Result<Identity> {
    let lhs = preorder_coproduct(&psi(z)?, s);
    let rhs = coproduct_delta(z, s).apply_each(psi_component)?;
    Ok(Identity {
        name: "psi respects the split coproduct",
        lhs,
        rhs,
    })
}

/// `δ∘ψ = (ψ ⊗ ψ)∘δ_MOD` for modular `z`.
pub fn psi_internal(z: &SubmodFn, limits: &Limits) -> Result<Identity> {
    let lhs = preorder_delta(&psi(z)?, limits)?;
    let rhs = internal_delta(z, limits)?.apply_each(psi_component)?;
    Ok(Identity {
        name: "psi respects the internal coproduct",
        lhs,
        rhs,
    })
}

/// Every identity above that applies to `z`, over all splits of its ground set.
pub fn all_identities(z: &SubmodFn, limits: &Limits) -> Result<Vec<Identity>> {
    let full = z.full();
    let modular = z.is_modular();
    let mut out = vec![
        comodule_law(z, limits)?,
        right_counit(z, limits)?,
        external_counit(z)?,
    ];
    out.push(phi_internal(z, limits)?);
    if modular {
        out.push(left_counit(z, limits)?);
        out.push(psi_internal(z, limits)?);
    }
    for s in full.subsets() {
        out.push(cointeraction(z, s, limits)?);
        out.push(phi_coproduct(z, s, limits)?);
        if modular {
            out.push(psi_coproduct(z, s)?);
        }
        for t in full.minus(s).subsets() {
            out.push(coassociativity(z, s, t)?);
        }
    }
    Ok(out)
}
