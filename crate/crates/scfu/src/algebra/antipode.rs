//! Takeuchi's alternating sum, both natively in each basis and as a cached
//! κ table on ε_n, and the defining relation of the antipode.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::coeff::RationalQ;
use crate::combinatorics::arcs::standardize_with;
use crate::combinatorics::enumerate::{enumerate_arcsets, enumerate_set_compositions};
use crate::combinatorics::{Label, LabelSet, LinearOrder};
use crate::error::Result;

use super::convert::{convert, convert_key, patterns};
use super::element::{Basis, HopfElement, Key};
use super::structure::{kappa_product_keys, mj_delta_j, product, restriction, split_key};

/// S(x) = Σ_J (−1)^ℓ m_J ∘ Δ_J(x), evaluated in the basis of x.
/// The χ basis is routed through κ.
pub fn takeuchi_antipode(x: &HopfElement) -> Result<HopfElement> {
    if x.basis() == Basis::Chi {
        return convert(&takeuchi_antipode(&convert(x, Basis::Kappa)?)?, Basis::Chi);
    }
    let mut out = HopfElement::zero(x.basis(), x.ground());
    for comp in enumerate_set_compositions(&x.ground()) {
        let sign = RationalQ::from_int(if comp.len() % 2 == 0 { 1 } else { -1 });
        for (k, c) in mj_delta_j(x, comp.blocks())?.terms() {
            out.add_term(k.clone(), &(c * &sign));
        }
    }
    Ok(out)
}

pub(crate) type Row = Vec<(Key, RationalQ)>;

/// S(κ_λ) on ε_n for every λ, integer coefficients, indexed like `patterns(n)`.
fn kappa_table(n: usize) -> Arc<Vec<Vec<(Key, i64)>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Vec<(Key, i64)>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let e = LinearOrder::identity(n);
    let comps = enumerate_set_compositions(&e.ground());
    let rows: Vec<Vec<(Key, i64)>> = patterns(n)
        .arcsets
        .par_iter()
        .map(|lam| {
            let key = Key::unchecked(e.clone(), lam.clone());
            let mut acc: HashMap<Key, i64> = HashMap::new();
            for comp in &comps {
                let sign = if comp.len() % 2 == 0 { 1 } else { -1 };
                if let Some(ks) = split_key(&key, comp.blocks()) {
                    for k in kappa_product_keys(&ks) {
                        *acc.entry(k).or_insert(0) += sign;
                    }
                }
            }
            let mut row: Vec<(Key, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
            row.sort();
            row
        })
        .collect();
    let t = Arc::new(rows);
    cache.lock().unwrap().insert(n, t.clone());
    t
}

/// S(b_λ) on ε_n for every λ, obtained as b → κ → S → b.
fn basis_table(basis: Basis, n: usize) -> Result<Arc<Vec<Row>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Basis, usize), Arc<Vec<Row>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(basis, n)) {
        return Ok(t.clone());
    }
    let e = LinearOrder::identity(n);
    let ks = kappa_table(n);
    let rows: Result<Vec<Row>> = patterns(n)
        .arcsets
        .par_iter()
        .map(|lam| {
            let key = Key::unchecked(e.clone(), lam.clone());
            let p = patterns(n);
            let mut in_kappa: HashMap<Key, RationalQ> = HashMap::new();
            for (mu, c) in convert_key(&key, basis, Basis::Kappa)? {
                for (k, d) in &ks[p.index[&mu.arcs]] {
                    let term = relabel_key(k, &mu.order);
                    let v = in_kappa.entry(term).or_insert_with(RationalQ::zero);
                    *v = &*v + &c.scale(*d);
                }
            }
            let mut acc: HashMap<Key, RationalQ> = HashMap::new();
            for (k, c) in in_kappa.into_iter().filter(|(_, c)| !c.is_zero()) {
                for (k2, d) in convert_key(&k, Basis::Kappa, basis)? {
                    let v = acc.entry(k2).or_insert_with(RationalQ::zero);
                    *v = &*v + &(&c * &d);
                }
            }
            let mut row: Row = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            row.sort_by(|a, b| a.0.cmp(&b.0));
            Ok(row)
        })
        .collect();
    let t = Arc::new(rows?);
    cache.lock().unwrap().insert((basis, n), t.clone());
    Ok(t)
}

/// A key over positions 1..n, relabelled through φ (position p becomes φ_p).
pub(crate) fn relabel_key(k: &Key, phi: &LinearOrder) -> Key {
    let s = phi.labels();
    let f = |p: Label| s[p.0 as usize - 1];
    Key::unchecked(k.order.relabel(f), k.arcs.relabel(f))
}

/// The antipode computed from the κ Takeuchi table on ε_n, transported to
/// the basis and labels of x. This is the reference against which all
/// closed forms are tested.
pub fn antipode_via_kappa(x: &HopfElement) -> Result<HopfElement> {
    let n = x.ground().len();
    let table = basis_table(x.basis(), n)?;
    let p = patterns(n);
    let mut out = HopfElement::zero(x.basis(), x.ground());
    for (k, c) in x.terms() {
        let idx = p.index[&standardize_with(&k.order.positions(), &k.arcs)];
        for (k2, d) in &table[idx] {
            out.add_term(relabel_key(k2, &k.order), &(c * d));
        }
    }
    Ok(out)
}

/// Check Σ_{I⊔J=K} m(S ⊗ Id)Δ_{I,J}(x) = 0 for every basis element on [n],
/// over all splits including empty blocks. Returns the first failing key.
pub fn antipode_axiom_check(basis: Basis, n: usize) -> Result<Option<Key>> {
    if n == 0 {
        return Ok(None);
    }
    let ground = LinearOrder::identity(n).ground();
    let labels = ground.to_vec();
    let splits: Vec<(LabelSet, LabelSet)> = (0u64..1 << n)
        .map(|m| {
            let i: LabelSet = labels.iter().enumerate().filter(|(b, _)| m & (1 << b) != 0).map(|(_, &l)| l).collect();
            (i, ground.difference(&i))
        })
        .collect();
    for phi in crate::combinatorics::enumerate_orders(&ground) {
        for lam in enumerate_arcsets(&phi) {
            let x = HopfElement::basis_element(basis, phi.clone(), lam)?;
            let mut total = HopfElement::zero(basis, ground);
            for (i, j) in &splits {
                for (ks, c) in restriction(&x, &[*i, *j])?.terms() {
                    let left = antipode_via_kappa(&HopfElement::from_key(basis, ks[0].clone()))?;
                    let right = HopfElement::from_key(basis, ks[1].clone());
                    total = total.add(&product(&left, &right)?.scale(c))?;
                }
            }
            if !total.is_zero() {
                return Ok(Some(x.terms().keys().next().unwrap().clone()));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::element::FriendlyOrder;
    use crate::combinatorics::ArcSet;

    fn el(basis: Basis, order: &[u8], arcs: &[(u8, u8)]) -> HopfElement {
        HopfElement::basis_element(basis, LinearOrder::from_u8(order), ArcSet::from_pairs(arcs)).unwrap()
    }

    #[test]
    fn singleton_is_minus_identity() {
        for b in [Basis::Kappa, Basis::Chi, Basis::Pq] {
            let x = el(b, &[3], &[]);
            assert_eq!(takeuchi_antipode(&x).unwrap(), x.neg());
            assert_eq!(antipode_via_kappa(&x).unwrap(), x.neg());
        }
    }

    #[test]
    fn kappa_at_two() {
        let s = takeuchi_antipode(&el(Basis::Kappa, &[1, 2], &[])).unwrap();
        assert_eq!(s.to_string(), "K[1 2 | 1-2] + K[2 1 | ] + K[2 1 | 2-1]");
    }

    #[test]
    fn inclusion_p_at_two() {
        let b = Basis::Friendly(FriendlyOrder::ArcInclusion);
        assert_eq!(takeuchi_antipode(&el(b, &[1, 2], &[])).unwrap(), el(b, &[2, 1], &[]));
        let s = takeuchi_antipode(&el(b, &[1, 2], &[(1, 2)])).unwrap();
        assert_eq!(s.to_string(), "-Pinc[1 2 | 1-2]");
    }

    #[test]
    fn chi_single_arc_at_two() {
        let s = takeuchi_antipode(&el(Basis::Chi, &[1, 2], &[(1, 2)])).unwrap();
        assert_eq!(s.to_string(), "(q - 1)*X[1 2 | ] - X[1 2 | 1-2] + (q - 1)*X[2 1 | ]");
    }

    #[test]
    fn native_and_table_agree_on_shuffled_orders() {
        let bases = [
            Basis::Kappa,
            Basis::Pq,
            Basis::Chi,
            Basis::Friendly(FriendlyOrder::Refinement),
            Basis::Friendly(FriendlyOrder::ArcInclusion),
            Basis::Friendly(FriendlyOrder::AtomicConnect),
        ];
        let phi = LinearOrder::from_u8(&[3, 1, 4, 2]);
        for lam in enumerate_arcsets(&phi) {
            for b in bases {
                let x = HopfElement::basis_element(b, phi.clone(), lam.clone()).unwrap();
                assert_eq!(takeuchi_antipode(&x).unwrap(), antipode_via_kappa(&x).unwrap(), "{b} {lam}");
            }
        }
    }

    #[test]
    fn defining_relation_small() {
        for b in [Basis::Kappa, Basis::Pq, Basis::Chi] {
            for n in 1..=3 {
                assert_eq!(antipode_axiom_check(b, n).unwrap(), None);
            }
        }
    }
}
