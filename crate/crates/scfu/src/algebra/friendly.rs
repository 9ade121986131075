//! The three power-sum friendly relations and exhaustive checks of the two
//! friendliness conditions.

use crate::combinatorics::enumerate::{enumerate_arcsets, enumerate_orders};
use crate::combinatorics::order::Positions;
use crate::combinatorics::poset::atomic_le_with;
use crate::combinatorics::{ArcSet, LabelSet, LinearOrder};

use super::element::{Basis, FriendlyOrder, HopfElement, Key, Tensor};
use super::structure::{coproduct, product};
use crate::coeff::RationalQ;
use crate::error::Result;

/// Block index of each position for the classical set partition of (φ, μ).
fn block_ids(pos: &Positions, n: usize, mu: &ArcSet) -> Vec<usize> {
    let mut id: Vec<usize> = (0..n).collect();
    let mut pairs = mu.position_pairs(pos);
    pairs.sort_unstable();
    for (i, k) in pairs {
        id[k] = id[i];
    }
    id
}

/// μ ≥ λ in the given relation on S^φ.
pub fn friendly_ge(o: FriendlyOrder, order: &LinearOrder, lambda: &ArcSet, mu: &ArcSet) -> bool {
    ge_with(o, order, &order.positions(), lambda, mu)
}

pub(crate) fn ge_with(o: FriendlyOrder, order: &LinearOrder, pos: &Positions, lambda: &ArcSet, mu: &ArcSet) -> bool {
    match o {
        FriendlyOrder::ArcInclusion => lambda.is_subset(mu),
        FriendlyOrder::AtomicConnect => atomic_le_with(order, pos, lambda, mu),
        FriendlyOrder::Refinement => {
            let id = block_ids(pos, order.len(), mu);
            lambda.position_pairs(pos).iter().all(|&(i, k)| id[i] == id[k])
        }
    }
}

/// Every order ρ on I ⊔ J with ρ|_I = φ and ρ|_J = τ.
fn shuffles(phi: &LinearOrder, tau: &LinearOrder) -> Vec<LinearOrder> {
    let (a, b) = (phi.labels(), tau.labels());
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a.len() + b.len());
    rec(a, b, &mut cur, &mut out);
    return out;

    fn rec(a: &[crate::combinatorics::Label], b: &[crate::combinatorics::Label], cur: &mut Vec<crate::combinatorics::Label>, out: &mut Vec<LinearOrder>) {
        if a.is_empty() && b.is_empty() {
            out.push(LinearOrder::new(cur.iter().copied()).expect("disjoint"));
            return;
        }
        if let Some((&x, rest)) = a.split_first() {
            cur.push(x);
            rec(rest, b, cur, out);
            cur.pop();
        }
        if let Some((&x, rest)) = b.split_first() {
            cur.push(x);
            rec(a, rest, cur, out);
            cur.pop();
        }
    }
}

/// A failure of friendliness condition (1) or (2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriendlinessViolation {
    pub condition: u8,
    pub description: String,
}

/// Condition (1) over all splits of [n] into nonempty I, J with every φ, τ, shuffle ρ, λ, ν, μ.
pub fn check_condition_one(o: FriendlyOrder, n: usize) -> Option<FriendlinessViolation> {
    let ground: LabelSet = (1..=n as u8).map(crate::combinatorics::Label).collect();
    let all = ground.to_vec();
    for mask in 1u32..(1 << n) - 1 {
        let i: LabelSet = all.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &l)| l).collect();
        let j = ground.difference(&i);
        for phi in enumerate_orders(&i) {
            for tau in enumerate_orders(&j) {
                let lams = enumerate_arcsets(&phi);
                let nus = enumerate_arcsets(&tau);
                for rho in shuffles(&phi, &tau) {
                    let rpos = rho.positions();
                    let mus = enumerate_arcsets(&rho);
                    for lam in &lams {
                        for nu in &nus {
                            let lower = lam.union(nu).expect("disjoint supports");
                            for mu in &mus {
                                let left = friendly_ge(o, &phi, lam, &mu.restrict(&i)) && friendly_ge(o, &tau, nu, &mu.restrict(&j));
                                let right = ge_with(o, &rho, &rpos, &lower, mu);
                                if left != right {
                                    return Some(FriendlinessViolation {
                                        condition: 1,
                                        description: format!(
                                            "phi=({phi}) lambda={{{lam}}} tau=({tau}) nu={{{nu}}} rho=({rho}) mu={{{mu}}}: restricted {left}, joint {right}"
                                        ),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Condition (2): λ ∈ S^φ ∖ S^τ and μ ≥_φ λ force μ ∉ S^τ.
pub fn check_condition_two(o: FriendlyOrder, n: usize) -> Option<FriendlinessViolation> {
    let ground: LabelSet = (1..=n as u8).map(crate::combinatorics::Label).collect();
    let orders = enumerate_orders(&ground);
    for phi in &orders {
        let pos = phi.positions();
        let sets = enumerate_arcsets(phi);
        for tau in &orders {
            for lam in sets.iter().filter(|l| !l.is_valid_for(tau)) {
                for mu in &sets {
                    if ge_with(o, phi, &pos, lam, mu) && mu.is_valid_for(tau) {
                        return Some(FriendlinessViolation {
                            condition: 2,
                            description: format!("phi=({phi}) tau=({tau}) lambda={{{lam}}} mu={{{mu}}}"),
                        });
                    }
                }
            }
        }
    }
    None
}

/// Exhaustive check of the product and coproduct rules of the power-sum
/// lemma on ground sets of size n: P_{(φ,λ)}P_{(τ,ν)} = P_{(φτ,λ∪ν)} and
/// Δ_{I,J}P_{(φ,λ)} = P_{(φ|_I,λ_I)} ⊗ P_{(φ|_J,λ_J)} or 0, both computed through κ.
pub fn check_power_sum_lemma(o: FriendlyOrder, n: usize) -> Result<Option<String>> {
    let b = Basis::Friendly(o);
    let ground: LabelSet = (1..=n as u8).map(crate::combinatorics::Label).collect();
    let labels = ground.to_vec();
    for mask in 1u64..(1 << n) - 1 {
        let i: LabelSet = labels.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &l)| l).collect();
        let j = ground.difference(&i);
        for phi in enumerate_orders(&i) {
            for tau in enumerate_orders(&j) {
                for lam in enumerate_arcsets(&phi) {
                    for nu in enumerate_arcsets(&tau) {
                        let x = HopfElement::basis_element(b, phi.clone(), lam.clone())?;
                        let y = HopfElement::basis_element(b, tau.clone(), nu.clone())?;
                        let expect = HopfElement::basis_element(b, phi.concat(&tau)?, lam.union(&nu)?)?;
                        if product(&x, &y)? != expect {
                            return Ok(Some(format!("product phi=({phi}) lambda={{{lam}}} tau=({tau}) nu={{{nu}}}")));
                        }
                    }
                }
            }
        }
        for phi in enumerate_orders(&ground) {
            for lam in enumerate_arcsets(&phi) {
                let x = HopfElement::basis_element(b, phi.clone(), lam.clone())?;
                let mut expect = Tensor::zero(b);
                if lam.splits_along(&[i, j]) {
                    expect.add_term(
                        vec![Key::new(phi.restrict(&i)?, lam.restrict(&i))?, Key::new(phi.restrict(&j)?, lam.restrict(&j))?],
                        &RationalQ::one(),
                    );
                }
                if coproduct(&x, &i, &j)? != expect {
                    return Ok(Some(format!("coproduct phi=({phi}) lambda={{{lam}}} I={:?}", i.to_vec())));
                }
            }
        }
    }
    Ok(None)
}
