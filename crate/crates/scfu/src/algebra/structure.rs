//! Product, coproduct and their iterates in each basis.

use crate::coeff::RationalQ;
use crate::combinatorics::arcs::nst_arc_with;
use crate::combinatorics::enumerate::extend_arcsets;
use crate::combinatorics::{ArcSet, LabelSet, LinearOrder, SetComposition};
use crate::error::{Result, ScfError};

use super::convert::{convert, convert_tensor};
use super::element::{Basis, FriendlyOrder, HopfElement, Key, Tensor};

/// Concatenate keys in order.
pub(crate) fn concat_keys(keys: &[Key]) -> Key {
    let mut labels = Vec::new();
    let mut arcs = Vec::new();
    for k in keys {
        labels.extend_from_slice(k.order.labels());
        arcs.extend_from_slice(k.arcs.arcs());
    }
    Key::unchecked(LinearOrder::from_vec_unchecked(labels.into_iter().collect()), ArcSet::from_unsorted_unchecked(arcs.into_iter().collect()))
}

/// κ_{k_1}⋯κ_{k_ℓ}: every arc set on the concatenation restricting to each
/// factor, i.e. the union plus any new arcs running from an earlier factor to a later one.
pub(crate) fn kappa_product_keys(keys: &[Key]) -> Vec<Key> {
    let base = concat_keys(keys);
    let mut block = Vec::with_capacity(base.order.len());
    for (b, k) in keys.iter().enumerate() {
        block.extend(std::iter::repeat(b).take(k.order.len()));
    }
    let mut out = Vec::new();
    extend_arcsets(&base.order, &base.arcs, &|p, r| block[p] != block[r], &mut out);
    out.into_iter().map(|a| Key::unchecked(base.order.clone(), a)).collect()
}

fn product_keys(basis: Basis, keys: &[Key]) -> Vec<Key> {
    match basis {
        Basis::Kappa => kappa_product_keys(keys),
        _ => vec![concat_keys(keys)],
    }
}

/// x · y on disjoint ground sets. The χ and P bases multiply by
/// concatenation; κ multiplies by the inflation rule.
pub fn product(x: &HopfElement, y: &HopfElement) -> Result<HopfElement> {
    if x.basis() != y.basis() {
        return Err(ScfError::BasisMismatch(x.basis().name(), y.basis().name()));
    }
    if !x.ground().is_disjoint(&y.ground()) {
        return Err(ScfError::GroundOverlap);
    }
    let basis = x.basis();
    if let Basis::Friendly(_) = basis {
        return friendly_via_kappa(x, |k| product(&k, &convert(y, Basis::Kappa)?));
    }
    let mut out = HopfElement::zero(basis, x.ground().union(&y.ground()));
    for (a, c) in x.terms() {
        for (b, d) in y.terms() {
            let cd = c * d;
            for k in product_keys(basis, &[a.clone(), b.clone()]) {
                out.add_term(k, &cd);
            }
        }
    }
    Ok(out)
}

fn friendly_via_kappa(x: &HopfElement, f: impl FnOnce(HopfElement) -> Result<HopfElement>) -> Result<HopfElement> {
    convert(&f(convert(x, Basis::Kappa)?)?, x.basis())
}

/// Product of every tensor term, factors multiplied left to right.
pub fn iterated_product(t: &Tensor) -> Result<HopfElement> {
    let mut ground: Option<LabelSet> = None;
    let basis = t.basis();
    if let Basis::Friendly(_) = basis {
        return convert(&iterated_product(&convert_tensor(t, Basis::Kappa)?)?, basis);
    }
    let mut out: Option<HopfElement> = None;
    for (keys, c) in t.terms() {
        let g = keys.iter().fold(LabelSet::empty(), |g, k| g.union(&k.order.ground()));
        if ground.is_some_and(|g0| g0 != g) {
            return Err(ScfError::GroundMismatch);
        }
        ground = Some(g);
        let acc = out.get_or_insert_with(|| HopfElement::zero(basis, g));
        for k in product_keys(basis, keys) {
            acc.add_term(k, c);
        }
    }
    Ok(out.unwrap_or_else(|| HopfElement::zero(basis, LabelSet::empty())))
}

fn check_composition(ground: &LabelSet, blocks: &[LabelSet]) -> Result<()> {
    let mut seen = LabelSet::empty();
    for b in blocks {
        if !b.is_disjoint(&seen) {
            return Err(ScfError::InvalidComposition);
        }
        seen = seen.union(b);
    }
    if seen != *ground {
        return Err(ScfError::InvalidComposition);
    }
    Ok(())
}

/// Δ_{I,J}(x). Blocks may be empty.
pub fn coproduct(x: &HopfElement, i: &LabelSet, j: &LabelSet) -> Result<Tensor> {
    restriction(x, &[*i, *j])
}

/// Δ_J(x) for a sequence of blocks (possibly empty) partitioning the ground set,
/// the iterated coproduct in its ℓ-fold form.
pub fn restriction(x: &HopfElement, blocks: &[LabelSet]) -> Result<Tensor> {
    check_composition(&x.ground(), blocks)?;
    match x.basis() {
        Basis::Kappa => {
            let mut out = Tensor::zero(Basis::Kappa);
            for (k, c) in x.terms() {
                if let Some(ks) = split_key(k, blocks) {
                    out.add_term(ks, c);
                }
            }
            Ok(out)
        }
        Basis::Pq => {
            let mut out = Tensor::zero(Basis::Pq);
            for (k, c) in x.terms() {
                for (ks, a) in pq_restrict_key(k, blocks) {
                    out.add_term(ks, &(c * &a));
                }
            }
            Ok(out)
        }
        b => convert_tensor(&restriction(&convert(x, Basis::Kappa)?, blocks)?, b),
    }
}

/// Δ_J by the left-nested definition: Δ_{(J_1,…,J_ℓ)} = (Δ_{(J_1,…,J_{ℓ-1})} ⊗ Id) ∘ Δ_{J_1∪…∪J_{ℓ-1}, J_ℓ}.
pub fn iterated_coproduct(x: &HopfElement, comp: &SetComposition) -> Result<Tensor> {
    let blocks = comp.blocks();
    check_composition(&x.ground(), blocks)?;
    if blocks.len() <= 1 {
        let mut t = Tensor::zero(x.basis());
        for (k, c) in x.terms() {
            t.add_term(vec![k.clone()], c);
        }
        return Ok(t);
    }
    let last = blocks[blocks.len() - 1];
    let head = x.ground().difference(&last);
    let outer = coproduct(x, &head, &last)?;
    let inner_comp = SetComposition::new(blocks[..blocks.len() - 1].to_vec(), &head)?;
    let mut out = Tensor::zero(x.basis());
    for (ks, c) in outer.terms() {
        let left = HopfElement::from_key(x.basis(), ks[0].clone());
        for (ls, d) in iterated_coproduct(&left, &inner_comp)?.terms() {
            let mut v = ls.clone();
            v.push(ks[1].clone());
            out.add_term(v, &(c * d));
        }
    }
    Ok(out)
}

pub(crate) fn split_key(k: &Key, blocks: &[LabelSet]) -> Option<Vec<Key>> {
    if !k.arcs.splits_along(blocks) {
        return None;
    }
    Some(blocks.iter().map(|b| Key::unchecked(k.order.restrict_unchecked(b), k.arcs.restrict(b))).collect())
}

/// Restriction of P^(q)_{(φ,λ)} to the blocks: zero unless λ splits, otherwise a sum
/// over μ ⊇ λ on φ that still splits, with coefficient Π (q^{-nst^λ_a} − q^{-nst^{μ_k}_a})
/// over the new arcs a of each block.
pub(crate) fn pq_restrict_key(k: &Key, blocks: &[LabelSet]) -> Vec<(Vec<Key>, RationalQ)> {
    if !k.arcs.splits_along(blocks) {
        return Vec::new();
    }
    let pos = k.order.positions();
    let block_of: Vec<usize> = k
        .order
        .labels()
        .iter()
        .map(|l| blocks.iter().position(|b| b.contains(*l)).expect("composition covers"))
        .collect();
    let mut sups = Vec::new();
    extend_arcsets(&k.order, &k.arcs, &|p, r| block_of[p] == block_of[r], &mut sups);
    sups.into_iter()
        .map(|mu| {
            let mut a = RationalQ::one();
            let mut keys = Vec::with_capacity(blocks.len());
            for b in blocks {
                let mu_b = mu.restrict(b);
                for arc in mu_b.arcs().iter().filter(|x| !k.arcs.contains(x)) {
                    let lo = RationalQ::monomial(1, -(nst_arc_with(&pos, &k.arcs, arc) as i32));
                    let hi = RationalQ::monomial(1, -(nst_arc_with(&pos, &mu_b, arc) as i32));
                    a = &a * &(&lo - &hi);
                }
                keys.push(Key::unchecked(k.order.restrict_unchecked(b), mu_b));
            }
            (keys, a)
        })
        .filter(|(_, a)| !a.is_zero())
        .collect()
}

/// m_J ∘ Δ_J(x) with the composition given as a block list.
pub fn mj_delta_j(x: &HopfElement, blocks: &[LabelSet]) -> Result<HopfElement> {
    check_composition(&x.ground(), blocks)?;
    let basis = x.basis();
    let mut out = HopfElement::zero(basis, x.ground());
    match basis {
        Basis::Kappa => {
            for (k, c) in x.terms() {
                if let Some(ks) = split_key(k, blocks) {
                    for k2 in kappa_product_keys(&ks) {
                        out.add_term(k2, c);
                    }
                }
            }
        }
        Basis::Pq => {
            for (k, c) in x.terms() {
                for (ks, a) in pq_restrict_key(k, blocks) {
                    out.add_term(concat_keys(&ks), &(c * &a));
                }
            }
        }
        Basis::Friendly(FriendlyOrder::ArcInclusion) => return friendly_split_rule(x, blocks),
        b => return convert(&mj_delta_j(&convert(x, Basis::Kappa)?, blocks)?, b),
    }
    Ok(out)
}

/// The prediction of the power-sum lemma for m_J ∘ Δ_J on a P^≥ element:
/// P_{(φ,λ)} ↦ P_{(φ|_{J_1}⋯φ|_{J_ℓ}, λ)} when λ splits along J, else 0.
/// Exact for arc inclusion; a hypothesis to be tested for the other relations.
pub fn friendly_split_rule(x: &HopfElement, blocks: &[LabelSet]) -> Result<HopfElement> {
    check_composition(&x.ground(), blocks)?;
    let mut out = HopfElement::zero(x.basis(), x.ground());
    for (k, c) in x.terms() {
        if let Some(ks) = split_key(k, blocks) {
            out.add_term(concat_keys(&ks), c);
        }
    }
    Ok(out)
}

/// The diagonal product on one ground set: κ_μ ⊙ κ_ν = δ_{μν} κ_μ.
pub fn pointwise_product(x: &HopfElement, y: &HopfElement) -> Result<HopfElement> {
    if x.basis() != y.basis() {
        return Err(ScfError::BasisMismatch(x.basis().name(), y.basis().name()));
    }
    if x.ground() != y.ground() {
        return Err(ScfError::GroundMismatch);
    }
    let (a, b) = (convert(x, Basis::Kappa)?, convert(y, Basis::Kappa)?);
    let mut out = HopfElement::zero(Basis::Kappa, x.ground());
    for (k, c) in a.terms() {
        if let Some(d) = b.terms().get(k) {
            out.add_term(k.clone(), &(c * d));
        }
    }
    convert(&out, x.basis())
}
