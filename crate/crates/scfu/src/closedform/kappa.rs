//! The κ antipode as a signed sum of products of atomic κ's.

use crate::coeff::RationalQ;
use crate::combinatorics::enumerate::{enumerate_orders, enumerate_supersets};
use crate::combinatorics::factor::{atomic_factorization, is_run_atomic, run_bounds};
use crate::combinatorics::poset::{atomic_le_with, mobius_closed};
use crate::combinatorics::{ArcSet, LinearOrder};
use crate::error::{Result, ScfError};

use crate::algebra::structure::kappa_product_keys;
use crate::algebra::{Basis, HopfElement, Key};

/// A formal signed sum of κ products, each product given by its factors.
pub type ProductSum = Vec<(Vec<Key>, i64)>;

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A_τ(φ,λ): the μ ⊇ λ in S^φ that are τ-atomic while no ν with μ ⊋ ν ⊇ λ is.
pub fn minimal_coarsenings(tau: &LinearOrder, phi: &LinearOrder, lambda: &ArcSet) -> Result<Vec<ArcSet>> {
    lambda.validate(phi)?;
    lambda.validate(tau)?;
    if tau.ground() != phi.ground() {
        return Err(ScfError::GroundMismatch);
    }
    let (tp, pp) = (tau.positions(), phi.positions());
    let atomic = |m: &ArcSet| m.valid_with(&tp) && is_run_atomic(phi, &pp, m, &tp);
    let mut out = Vec::new();
    for mu in enumerate_supersets(phi, lambda) {
        if !atomic(&mu) {
            continue;
        }
        let extra = mu.difference(lambda);
        let extra = extra.arcs();
        let full = (1u32 << extra.len()) - 1;
        let smaller_atomic = (0..full).any(|mask| {
            let mut nu = lambda.clone();
            for (i, a) in extra.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    nu = nu.with_arc(*a);
                }
            }
            atomic(&nu)
        });
        if !smaller_atomic {
            out.push(mu);
        }
    }
    Ok(out)
}

/// S(κ_{(τ,λ)}) before expanding the products: one term per φ with λ ∈ S^φ and
/// μ ∈ A_τ(φ,λ), with factors cut along the rising runs of φ relative to τ.
pub fn kappa_antipode_products(tau: &LinearOrder, lambda: &ArcSet) -> Result<ProductSum> {
    lambda.validate(tau)?;
    let tp = tau.positions();
    let mut out = Vec::new();
    for phi in enumerate_orders(&tau.ground()) {
        if !lambda.valid_with(&phi.positions()) {
            continue;
        }
        let runs = run_bounds(&phi, &tp);
        let k = runs.len();
        for mu in minimal_coarsenings(tau, &phi, lambda)? {
            let factors: Vec<Key> = runs
                .iter()
                .map(|&(s, e)| {
                    let sub = LinearOrder::new(phi.labels()[s..e].iter().copied()).expect("run of a valid order");
                    let arcs = mu.restrict(&sub.ground());
                    Key::unchecked(sub, arcs)
                })
                .collect();
            out.push((factors, sign(mu.len() - lambda.len() + k)));
        }
    }
    Ok(out)
}

/// Expand a formal sum of κ products with the κ product rule.
pub fn expand_products(ground: &LinearOrder, sum: &ProductSum) -> HopfElement {
    let mut out = HopfElement::zero(Basis::Kappa, ground.ground());
    for (factors, c) in sum {
        let c = RationalQ::from_int(*c);
        for k in kappa_product_keys(factors) {
            out.add_term(k, &c);
        }
    }
    out
}

/// S(κ_{(τ,λ)}) in the κ basis.
pub fn antipode_kappa(tau: &LinearOrder, lambda: &ArcSet) -> Result<HopfElement> {
    Ok(expand_products(tau, &kappa_antipode_products(tau, lambda)?))
}

/// κ_{(φ,ν)} = Σ_{μ ⪰ ν} mb(ν,μ) Π κ over the atomic factors of (φ,μ).
pub fn kappa_in_atomic_products(phi: &LinearOrder, nu: &ArcSet) -> Result<ProductSum> {
    nu.validate(phi)?;
    let pos = phi.positions();
    let mut out = Vec::new();
    for mu in enumerate_supersets(phi, nu) {
        if !atomic_le_with(phi, &pos, nu, &mu) {
            continue;
        }
        let m = mobius_closed(phi, nu, &mu)?;
        if m == 0 {
            continue;
        }
        let factors = atomic_factorization(phi, &mu)?.into_iter().map(|(o, a)| Key::unchecked(o, a)).collect();
        out.push((factors, m));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coarsening_counts() {
        let o = LinearOrder::from_u8(&[2, 4, 5, 6]);
        assert_eq!(minimal_coarsenings(&o, &o, &ArcSet::from_pairs(&[(4, 6)])).unwrap().len(), 2);
        let o = LinearOrder::from_u8(&[1, 3, 7, 8]);
        let a = minimal_coarsenings(&o, &o, &ArcSet::empty()).unwrap();
        assert_eq!(a.len(), 5);
        assert!(!a.contains(&ArcSet::from_pairs(&[(1, 8), (3, 7)])));
        let lam = ArcSet::from_pairs(&[(1, 7), (3, 8)]);
        assert_eq!(minimal_coarsenings(&o, &o, &lam).unwrap(), vec![lam]);
    }

    #[test]
    fn two_point_kappa() {
        let e = LinearOrder::identity(2);
        assert_eq!(antipode_kappa(&e, &ArcSet::empty()).unwrap().to_string(), "K[1 2 | 1-2] + K[2 1 | ] + K[2 1 | 2-1]");
        let e1 = LinearOrder::identity(1);
        assert_eq!(antipode_kappa(&e1, &ArcSet::empty()).unwrap().to_string(), "-K[1 | ]");
    }

    #[test]
    fn products_for_arcless_pair() {
        let e = LinearOrder::identity(2);
        let mut p = kappa_in_atomic_products(&e, &ArcSet::empty()).unwrap();
        p.sort();
        let k = |o: &[u8], a: &[(u8, u8)]| Key::unchecked(LinearOrder::from_u8(o), ArcSet::from_pairs(a));
        assert_eq!(p, vec![(vec![k(&[1], &[]), k(&[2], &[])], 1), (vec![k(&[1, 2], &[(1, 2)])], -1)]);
    }
}
