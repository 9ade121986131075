//! Projection to the Hopf algebra obtained by forgetting the order: keys
//! (φ,λ) are standardized to arc sets over ε_n, and the P^≥ antipode there
//! is given by counting orders.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{antipode_via_kappa, product, Basis, FriendlyOrder, HopfElement, Key};
use crate::coeff::RationalQ;
use crate::combinatorics::arcs::{destandardize, standardize_with};
use crate::combinatorics::enumerate::enumerate_orders;
use crate::combinatorics::factor::{atomic_count_with, atomic_factorization, is_run_atomic, run_count};
use crate::combinatorics::{ArcSet, Label, LinearOrder};
use crate::error::{Result, ScfError};

pub use crate::combinatorics::standardize;

/// A linear combination of arc sets over ε_n in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiElement {
    pub basis: Basis,
    pub degree: usize,
    pub terms: BTreeMap<ArcSet, RationalQ>,
}

impl PiElement {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        PiElement { basis, degree, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, lambda: ArcSet, c: &RationalQ) {
        let v = self.terms.entry(lambda.clone()).or_insert_with(RationalQ::zero);
        *v = &*v + c;
        if v.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// The element on ε_n with the same coefficients.
    pub fn lift(&self) -> HopfElement {
        self.lift_onto(&LinearOrder::identity(self.degree))
    }

    /// Place every arc set on φ by position.
    pub fn lift_onto(&self, phi: &LinearOrder) -> HopfElement {
        let mut out = HopfElement::zero(self.basis, phi.ground());
        for (lam, c) in &self.terms {
            out.add_term(Key::unchecked(phi.clone(), destandardize(phi, lam)), c);
        }
        out
    }
}

impl fmt::Display for PiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift())
    }
}

/// Sum the coefficients of keys with the same standardization.
pub fn project(x: &HopfElement) -> PiElement {
    let mut out = PiElement::zero(x.basis(), x.ground().len());
    for (k, c) in x.terms() {
        out.add_term(standardize_with(&k.order.positions(), &k.arcs), c);
    }
    out
}

/// Product in the projection: lift both factors to consecutive blocks of ε and project.
pub fn pi_product(a: &PiElement, b: &PiElement) -> Result<PiElement> {
    if a.basis != b.basis {
        return Err(ScfError::BasisMismatch(a.basis.name(), b.basis.name()));
    }
    let shifted = LinearOrder::new((1..=b.degree as u8).map(|i| Label(i + a.degree as u8)))?;
    Ok(project(&product(&a.lift(), &b.lift_onto(&shifted))?))
}

/// The antipode in the projection, from the projected monoid antipode on ε_n.
pub fn pi_antipode(a: &PiElement) -> Result<PiElement> {
    let mut out = PiElement::zero(a.basis, a.degree);
    let e = LinearOrder::identity(a.degree);
    for (lam, c) in &a.terms {
        let s = antipode_via_kappa(&HopfElement::basis_element(a.basis, e.clone(), lam.clone())?)?;
        for (mu, d) in project(&s).terms {
            out.add_term(mu, &(c * &d));
        }
    }
    Ok(out)
}

fn check_pair(lambda: &ArcSet, mu: &ArcSet, n: usize) -> Result<LinearOrder> {
    let e = LinearOrder::identity(n);
    lambda.validate(&e)?;
    mu.validate(&e)?;
    Ok(e)
}

/// #{τ : λ ∈ S^τ is ε-atomic and standardizes to μ}.
pub fn c_coefficient(lambda: &ArcSet, mu: &ArcSet, n: usize) -> Result<usize> {
    let e = check_pair(lambda, mu, n)?;
    let ep = e.positions();
    Ok(enumerate_orders(&e.ground())
        .into_iter()
        .filter(|tau| {
            let tp = tau.positions();
            lambda.valid_with(&tp) && is_run_atomic(tau, &tp, lambda, &ep) && standardize_with(&tp, lambda) == *mu
        })
        .count())
}

/// #{w : w∘μ = λ, with w(j) > w(j+1) exactly at the gaps j not spanned by an arc of μ}.
pub fn c_coefficient_by_descents(lambda: &ArcSet, mu: &ArcSet, n: usize) -> Result<usize> {
    let e = check_pair(lambda, mu, n)?;
    let spanned: Vec<bool> = (1..n as u8).map(|j| mu.arcs().iter().any(|a| a.left.0 <= j && j < a.right.0)).collect();
    Ok(enumerate_orders(&e.ground())
        .into_iter()
        .filter(|w| {
            let s = w.labels();
            let shape = (0..n.saturating_sub(1)).all(|j| (s[j] > s[j + 1]) == !spanned[j]);
            shape && mu.relabel(|p| s[p.0 as usize - 1]) == *lambda
        })
        .count())
}

/// Number of atomic components of (ε_n, μ).
pub fn component_count(mu: &ArcSet, n: usize) -> Result<usize> {
    let e = LinearOrder::identity(n);
    mu.validate(&e)?;
    Ok(atomic_count_with(&e, &e.positions(), mu))
}

/// (μ, c_{λ,μ}, (−1)^{ℓ(μ)}) for every μ with c_{λ,μ} > 0, found by one scan of the orders.
pub fn c_table(lambda: &ArcSet, n: usize) -> Result<Vec<(ArcSet, usize, i64)>> {
    let e = check_pair(lambda, &ArcSet::empty(), n)?;
    let ep = e.positions();
    let mut counts: BTreeMap<ArcSet, usize> = BTreeMap::new();
    for tau in enumerate_orders(&e.ground()) {
        let tp = tau.positions();
        if lambda.valid_with(&tp) && is_run_atomic(&tau, &tp, lambda, &ep) {
            *counts.entry(standardize_with(&tp, lambda)).or_default() += 1;
        }
    }
    counts
        .into_iter()
        .map(|(mu, c)| {
            let l = component_count(&mu, n)?;
            Ok((mu, c, if l % 2 == 0 { 1 } else { -1 }))
        })
        .collect()
}

/// S(P^≥_λ) in the projection as Σ_μ (−1)^{ℓ(μ)} c_{λ,μ} P^≥_μ.
pub fn pi_p_antipode(lambda: &ArcSet, n: usize, order: FriendlyOrder) -> Result<PiElement> {
    let mut out = PiElement::zero(Basis::Friendly(order), n);
    for (mu, c, s) in c_table(lambda, n)? {
        out.add_term(mu, &RationalQ::from_int(s * c as i64));
    }
    Ok(out)
}

/// Whether every order counted in c_{λ,μ} carries the sign (−1)^{ℓ(μ)}, so the
/// projected sum has no cancelation.
pub fn pi_p_antipode_is_cancelation_free(lambda: &ArcSet, n: usize) -> Result<bool> {
    let e = check_pair(lambda, &ArcSet::empty(), n)?;
    let ep = e.positions();
    for tau in enumerate_orders(&e.ground()) {
        let tp = tau.positions();
        if lambda.valid_with(&tp) && is_run_atomic(&tau, &tp, lambda, &ep) {
            let mu = standardize_with(&tp, lambda);
            if run_count(&tau, &ep) % 2 != component_count(&mu, n)? % 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The projected χ antipode of (ε_n, λ) has coefficient (−1)^k on the
/// standardization of (φ_k⋯φ_1, λ) and only lower-dim arc sets otherwise.
pub fn pi_chi_leading_check(lambda: &ArcSet, n: usize) -> Result<bool> {
    let e = LinearOrder::identity(n);
    let factors = atomic_factorization(&e, lambda)?;
    let k = factors.len();
    let rev = LinearOrder::new(factors.iter().rev().flat_map(|(o, _)| o.labels().to_vec()))?;
    let lead = standardize_with(&rev.positions(), lambda);
    let s = project(&antipode_via_kappa(&HopfElement::basis_element(Basis::Chi, e.clone(), lambda.clone())?)?);
    let dim = |a: &ArcSet| a.arcs().iter().map(|x| (x.right.0 - x.left.0) as usize).sum::<usize>();
    let sign = RationalQ::from_int(if k % 2 == 0 { 1 } else { -1 });
    Ok(s.terms.get(&lead) == Some(&sign) && s.terms.keys().filter(|m| **m != lead).all(|m| dim(m) < dim(lambda)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standardize_examples() {
        let phi = LinearOrder::from_u8(&[2, 1]);
        assert_eq!(standardize(&phi, &ArcSet::from_pairs(&[(2, 1)])).unwrap(), ArcSet::from_pairs(&[(1, 2)]));
        assert_eq!(standardize(&phi, &ArcSet::empty()).unwrap(), ArcSet::empty());
    }

    #[test]
    fn projection_merges_orders() {
        let x = HopfElement::from_terms(
            Basis::Kappa,
            LinearOrder::identity(2).ground(),
            [
                (Key::new(LinearOrder::from_u8(&[1, 2]), ArcSet::empty()).unwrap(), RationalQ::one()),
                (Key::new(LinearOrder::from_u8(&[2, 1]), ArcSet::empty()).unwrap(), RationalQ::one()),
            ],
        )
        .unwrap();
        let p = project(&x);
        assert_eq!(p.terms.len(), 1);
        assert_eq!(p.terms[&ArcSet::empty()], RationalQ::from_int(2));
    }

    #[test]
    fn five_point_count() {
        let lam = ArcSet::from_pairs(&[(1, 2), (2, 5)]);
        let mu = ArcSet::from_pairs(&[(1, 2), (2, 4)]);
        assert_eq!(c_coefficient(&lam, &mu, 5).unwrap(), 2);
        assert_eq!(c_coefficient_by_descents(&lam, &mu, 5).unwrap(), 2);
        let a = ArcSet::from_pairs(&[(1, 2)]);
        assert_eq!(c_coefficient(&a, &a, 2).unwrap(), 1);
    }
}
