//! Cancelation-free antipodes on the power-sum bases.

use crate::coeff::RationalQ;
use crate::combinatorics::arcs::nst_arc_with;
use crate::combinatorics::enumerate::{enumerate_orders, enumerate_supersets};
use crate::combinatorics::factor::{is_run_atomic, run_count};
use crate::combinatorics::{ArcSet, LinearOrder};
use crate::error::Result;

use crate::algebra::{Basis, FriendlyOrder, HopfElement, Key};

fn sign(k: usize) -> RationalQ {
    RationalQ::from_int(if k % 2 == 0 { 1 } else { -1 })
}

/// S(P^≥_{(φ,λ)}) as a signed sum over the orders τ in which λ is φ-atomic.
/// The sign is (−1) to the number of rising runs of τ relative to φ.
pub fn antipode_p_friendly(phi: &LinearOrder, lambda: &ArcSet, order: FriendlyOrder) -> Result<HopfElement> {
    lambda.validate(phi)?;
    let phi_pos = phi.positions();
    let mut out = HopfElement::zero(Basis::Friendly(order), phi.ground());
    for tau in enumerate_orders(&phi.ground()) {
        let tau_pos = tau.positions();
        if !lambda.valid_with(&tau_pos) || !is_run_atomic(&tau, &tau_pos, lambda, &phi_pos) {
            continue;
        }
        let c = sign(run_count(&tau, &phi_pos));
        out.add_term(Key::unchecked(tau, lambda.clone()), &c);
    }
    Ok(out)
}

/// Π over the arcs of μ∖λ of (q^{−nst^λ} − q^{−nst^μ}), with nst^λ read in φ and nst^μ in τ.
fn pq_weight(phi: &LinearOrder, lambda: &ArcSet, tau: &LinearOrder, mu: &ArcSet) -> RationalQ {
    let (pp, tp) = (phi.positions(), tau.positions());
    let mut w = RationalQ::one();
    for a in mu.arcs().iter().filter(|a| !lambda.contains(a)) {
        let x = RationalQ::monomial(1, -(nst_arc_with(&pp, lambda, a) as i32));
        let y = RationalQ::monomial(1, -(nst_arc_with(&tp, mu, a) as i32));
        w = &w * &(&x - &y);
        if w.is_zero() {
            break;
        }
    }
    w
}

/// S(P^(q)_{(φ,λ)}) summed over τ and the φ-atomic μ ⊇ λ in S^τ.
pub fn antipode_p_q(phi: &LinearOrder, lambda: &ArcSet) -> Result<HopfElement> {
    lambda.validate(phi)?;
    let phi_pos = phi.positions();
    let mut out = HopfElement::zero(Basis::Pq, phi.ground());
    for tau in enumerate_orders(&phi.ground()) {
        let tau_pos = tau.positions();
        if !lambda.valid_with(&tau_pos) {
            continue;
        }
        let s = sign(run_count(&tau, &phi_pos));
        for mu in enumerate_supersets(&tau, lambda) {
            if !mu.valid_with(&phi_pos) || !is_run_atomic(&tau, &tau_pos, &mu, &phi_pos) {
                continue;
            }
            let w = pq_weight(phi, lambda, &tau, &mu);
            if !w.is_zero() {
                out.add_term(Key::unchecked(tau.clone(), mu), &(&s * &w));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_examples() {
        let e = LinearOrder::identity(2);
        let o = FriendlyOrder::ArcInclusion;
        assert_eq!(antipode_p_friendly(&e, &ArcSet::empty(), o).unwrap().to_string(), "Pinc[2 1 | ]");
        assert_eq!(antipode_p_friendly(&e, &ArcSet::from_pairs(&[(1, 2)]), o).unwrap().to_string(), "-Pinc[1 2 | 1-2]");
        let one = LinearOrder::identity(1);
        assert_eq!(antipode_p_q(&one, &ArcSet::empty()).unwrap().to_string(), "-Pq[1 | ]");
    }

    #[test]
    fn q_form_at_one_is_inclusion_form() {
        let e = LinearOrder::identity(3);
        let one = num_rational::BigRational::from_integer(1.into());
        for lam in crate::combinatorics::enumerate_arcsets(&e) {
            let q = antipode_p_q(&e, &lam).unwrap();
            let p = antipode_p_friendly(&e, &lam, FriendlyOrder::ArcInclusion).unwrap();
            let at_one: Vec<(Key, i64)> = q
                .terms()
                .iter()
                .map(|(k, c)| (k.clone(), c.eval_at(&one).unwrap().to_integer().try_into().unwrap()))
                .filter(|(_, c)| *c != 0)
                .collect();
            let expect: Vec<(Key, i64)> = p.terms().iter().map(|(k, c)| (k.clone(), if c.is_negative() { -1 } else { 1 })).collect();
            assert_eq!(at_one, expect, "{lam}");
        }
    }
}
