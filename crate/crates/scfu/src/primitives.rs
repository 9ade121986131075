//! The primitive projection Ψ, the primitives Q_{(φ,λ)} built from a P^≥
//! basis, and the checks that they freely generate.

use crate::algebra::structure::concat_keys;
use crate::algebra::{coproduct, mj_delta_j, product, Basis, FriendlyOrder, HopfElement, Key};
use crate::coeff::RationalQ;
use crate::combinatorics::arcs::dim_with;
use crate::combinatorics::enumerate::{enumerate_arcsets, enumerate_orders, enumerate_set_compositions_with_first};
use crate::combinatorics::factor::{atomic_factorization, is_atomic};
use crate::combinatorics::{ArcSet, Label, LabelSet, LinearOrder};
use crate::error::{Result, ScfError};

/// Outcome of [`is_primitive`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveReport {
    pub element: HopfElement,
    pub is_primitive: bool,
    pub failing_split: Option<(LabelSet, LabelSet)>,
}

fn sign(k: usize) -> RationalQ {
    RationalQ::from_int(if k % 2 == 0 { 1 } else { -1 })
}

/// Ψ_{(k,K)}(x) = Σ over set compositions J with k ∈ J_1 of (−1)^{ℓ−1} m_J∘Δ_J(x).
pub fn psi(k: Label, x: &HopfElement) -> Result<HopfElement> {
    if !x.ground().contains(k) {
        return Err(ScfError::LabelNotInGround(k.0));
    }
    let mut out = HopfElement::zero(x.basis(), x.ground());
    for comp in enumerate_set_compositions_with_first(&x.ground(), k) {
        out = out.add(&mj_delta_j(x, comp.blocks())?.scale(&sign(comp.len() - 1)))?;
    }
    Ok(out)
}

/// Maximal arc paths of λ with their supports, ordered by first position in φ.
/// Labels on no arc form singleton components.
pub fn connected_components(phi: &LinearOrder, lambda: &ArcSet) -> Result<Vec<(LinearOrder, ArcSet)>> {
    lambda.validate(phi)?;
    let mut out = Vec::new();
    let mut seen = LabelSet::default();
    for &start in phi.labels() {
        if seen.contains(start) || lambda.arcs().iter().any(|a| a.right == start) {
            continue;
        }
        let mut path = vec![start];
        let mut cur = start;
        while let Some(a) = lambda.arcs().iter().find(|a| a.left == cur) {
            cur = a.right;
            path.push(cur);
        }
        let support: LabelSet = path.iter().copied().collect();
        seen = seen.union(&support);
        out.push((phi.restrict(&support)?, lambda.restrict(&support)));
    }
    Ok(out)
}

/// The regrouped keys of Q_{(φ,λ)}: one signed key per set composition A of the
/// components with the component of 1_φ in A_1, before any cancelation.
pub fn q_terms(phi: &LinearOrder, lambda: &ArcSet) -> Result<Vec<(Key, i64)>> {
    let comps = connected_components(phi, lambda)?;
    let index: LabelSet = (1..=comps.len() as u8).map(Label).collect();
    let mut out = Vec::new();
    for a in enumerate_set_compositions_with_first(&index, Label(1)) {
        let blocks: Vec<Key> = a
            .blocks()
            .iter()
            .map(|b| {
                let support = b.iter().fold(LabelSet::default(), |s, i| s.union(&comps[i.0 as usize - 1].0.ground()));
                Key::unchecked(phi.restrict_unchecked(&support), lambda.restrict(&support))
            })
            .collect();
        out.push((concat_keys(&blocks), if a.len() % 2 == 1 { 1 } else { -1 }));
    }
    Ok(out)
}

/// Q_{(φ,λ)} by regrouping connected components.
pub fn q_primitive(phi: &LinearOrder, lambda: &ArcSet, order: FriendlyOrder) -> Result<HopfElement> {
    let mut out = HopfElement::zero(Basis::Friendly(order), phi.ground());
    for (k, c) in q_terms(phi, lambda)? {
        out.add_term(k, &RationalQ::from_int(c));
    }
    Ok(out)
}

/// Q_{(φ,λ)} = Ψ_{(1_φ,K)}(P_{(φ,λ)}) evaluated directly.
pub fn q_primitive_via_psi(phi: &LinearOrder, lambda: &ArcSet, order: FriendlyOrder) -> Result<HopfElement> {
    let p = HopfElement::basis_element(Basis::Friendly(order), phi.clone(), lambda.clone())?;
    match phi.first() {
        Some(k) => psi(k, &p),
        None => Ok(p),
    }
}

/// Check Δ_{I,J}(x) = 0 for every split into two nonempty blocks.
pub fn is_primitive(x: &HopfElement) -> Result<PrimitiveReport> {
    let labels = x.ground().to_vec();
    let n = labels.len();
    for mask in 1u64..(1u64 << n).saturating_sub(1) {
        let i: LabelSet = labels.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &l)| l).collect();
        let j = x.ground().difference(&i);
        if !coproduct(x, &i, &j)?.is_zero() {
            return Ok(PrimitiveReport { element: x.clone(), is_primitive: false, failing_split: Some((i, j)) });
        }
    }
    Ok(PrimitiveReport { element: x.clone(), is_primitive: true, failing_split: None })
}

/// For atomic (φ,λ): Q = P_{(φ,λ)} plus integer multiples of keys (φ′,λ)
/// of strictly smaller dim.
pub fn triangularity_check(phi: &LinearOrder, lambda: &ArcSet, order: FriendlyOrder) -> Result<bool> {
    if !is_atomic(phi, lambda)? {
        return Err(ScfError::NotAtomic);
    }
    let q = q_primitive(phi, lambda, order)?;
    let lead = Key::unchecked(phi.clone(), lambda.clone());
    if !q.coeff(&lead).is_one() {
        return Ok(false);
    }
    let d = dim_with(&phi.positions(), lambda);
    Ok(q.terms().iter().filter(|(k, _)| **k != lead).all(|(k, c)| {
        k.arcs == *lambda && dim_with(&k.order.positions(), &k.arcs) < d && c.is_polynomial() && c.numer().degree() == Some(0)
    }))
}

/// The product of Q over the atomic factors of (φ,λ).
pub fn q_product(phi: &LinearOrder, lambda: &ArcSet, order: FriendlyOrder) -> Result<HopfElement> {
    let mut acc: Option<HopfElement> = None;
    for (o, a) in atomic_factorization(phi, lambda)? {
        let q = q_primitive(&o, &a, order)?;
        acc = Some(match acc {
            None => q,
            Some(x) => product(&x, &q)?,
        });
    }
    acc.ok_or(ScfError::SizeMismatch { expected: 1, got: 0 })
}

/// Whether the products of Q's over atomic factorizations form a basis of
/// the degree-n component: one product per key, each equal to its key plus
/// keys with the same arcs and strictly smaller dim (a unitriangular change
/// of basis to P).
pub fn free_generation_check(n: usize, order: FriendlyOrder) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let e = LinearOrder::identity(n);
    for phi in enumerate_orders(&e.ground()) {
        let d_phi = phi.positions();
        for lambda in enumerate_arcsets(&phi) {
            let x = q_product(&phi, &lambda, order)?;
            let lead = Key::unchecked(phi.clone(), lambda.clone());
            if !x.coeff(&lead).is_one() {
                return Ok(false);
            }
            let d = dim_with(&d_phi, &lambda);
            let lower = x
                .terms()
                .keys()
                .filter(|k| **k != lead)
                .all(|k| k.arcs == lambda && dim_with(&k.order.positions(), &k.arcs) < d);
            if !lower {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// [x, y] = xy − yx on disjoint ground sets.
pub fn lie_bracket(x: &HopfElement, y: &HopfElement) -> Result<HopfElement> {
    product(x, y)?.sub(&product(y, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const INC: FriendlyOrder = FriendlyOrder::ArcInclusion;

    fn p(o: &[u8], a: &[(u8, u8)]) -> HopfElement {
        HopfElement::basis_element(Basis::Friendly(INC), LinearOrder::from_u8(o), ArcSet::from_pairs(a)).unwrap()
    }

    #[test]
    fn psi_on_two_points() {
        assert!(psi(Label(1), &p(&[1, 2], &[])).unwrap().is_zero());
        assert_eq!(psi(Label(1), &p(&[1, 2], &[(1, 2)])).unwrap(), p(&[1, 2], &[(1, 2)]));
        assert_eq!(psi(Label(1), &p(&[1], &[])).unwrap(), p(&[1], &[]));
        assert!(psi(Label(3), &p(&[1, 2], &[])).is_err());
    }

    #[test]
    fn seven_point_components() {
        let phi = LinearOrder::from_u8(&[2, 4, 5, 6, 1, 3, 7]);
        let lam = ArcSet::from_pairs(&[(2, 5), (4, 6), (5, 7), (6, 1)]);
        let c = connected_components(&phi, &lam).unwrap();
        let supports: Vec<Vec<u8>> = c.iter().map(|(o, _)| o.labels().iter().map(|l| l.0).collect()).collect();
        assert_eq!(supports, vec![vec![2, 5, 7], vec![4, 6, 1], vec![3]]);
        assert_eq!(connected_components(&LinearOrder::identity(3), &ArcSet::empty()).unwrap().len(), 3);
        assert_eq!(connected_components(&LinearOrder::identity(3), &ArcSet::from_pairs(&[(1, 2), (2, 3)])).unwrap().len(), 1);
    }

    #[test]
    fn non_primitive_split() {
        let r = is_primitive(&p(&[1, 2], &[])).unwrap();
        assert!(!r.is_primitive);
        assert_eq!(r.failing_split.map(|(i, _)| i.to_vec()), Some(vec![Label(1)]));
        assert!(is_primitive(&p(&[1], &[])).unwrap().is_primitive);
    }

    #[test]
    fn q_on_small_pairs() {
        let e2 = LinearOrder::identity(2);
        assert_eq!(q_primitive(&e2, &ArcSet::from_pairs(&[(1, 2)]), INC).unwrap(), p(&[1, 2], &[(1, 2)]));
        assert!(q_primitive(&e2, &ArcSet::empty(), INC).unwrap().is_zero());
        assert!(triangularity_check(&e2, &ArcSet::empty(), INC).is_err());
    }
}
