//! Change of basis. Every basis is expanded in κ and back; the transition
//! matrices depend only on positions, so they are built once per size on
//! ε_n and relabelled through φ on use.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::coeff::RationalQ;
use crate::combinatorics::arcs::{destandardize, nst_with, standardize_with};
use crate::combinatorics::enumerate::{enumerate_arcsets, enumerate_supersets};
use crate::combinatorics::{ArcSet, LinearOrder};
use crate::error::{Result, ScfError};

use super::character::value_with;
use super::element::{Basis, FriendlyOrder, HopfElement, Key, Tensor};
use super::friendly::ge_with;

/// Sparse rows: row i lists (column, coefficient).
pub(crate) type Matrix = Vec<Vec<(usize, RationalQ)>>;

/// All of S^{ε_n} in canonical order with a reverse index.
pub(crate) struct Patterns {
    pub arcsets: Vec<ArcSet>,
    pub index: HashMap<ArcSet, usize>,
}

pub(crate) fn patterns(n: usize) -> Arc<Patterns> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Patterns>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let arcsets = enumerate_arcsets(&LinearOrder::identity(n));
    let index = arcsets.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    let p = Arc::new(Patterns { arcsets, index });
    cache.lock().unwrap().insert(n, p.clone());
    p
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Direction {
    ToKappa,
    FromKappa,
}

fn table(basis: Basis, dir: Direction, n: usize) -> Result<Arc<Matrix>> {
    static CACHE: OnceLock<Mutex<HashMap<(Basis, Direction, usize), Arc<Matrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&(basis, dir, n)) {
        return Ok(m.clone());
    }
    let m = Arc::new(match (basis, dir) {
        (Basis::Kappa, _) => identity(n),
        (Basis::Pq, Direction::ToKappa) => pq_to_kappa(n),
        (Basis::Pq, Direction::FromKappa) => kappa_to_pq(n),
        (Basis::Friendly(o), Direction::ToKappa) => friendly_to_kappa(o, n),
        (Basis::Friendly(o), Direction::FromKappa) => kappa_to_friendly(o, n),
        (Basis::Chi, Direction::ToKappa) => chi_to_kappa(n),
        (Basis::Chi, Direction::FromKappa) => kappa_to_chi(n)?,
    });
    cache.lock().unwrap().insert((basis, dir, n), m.clone());
    Ok(m)
}

fn identity(n: usize) -> Matrix {
    (0..patterns(n).arcsets.len()).map(|i| vec![(i, RationalQ::one())]).collect()
}

fn q_inv(e: usize) -> RationalQ {
    RationalQ::monomial(1, -(e as i32))
}

fn pq_to_kappa(n: usize) -> Matrix {
    let p = patterns(n);
    let e = LinearOrder::identity(n);
    let pos = e.positions();
    p.arcsets
        .iter()
        .map(|lam| {
            enumerate_supersets(&e, lam)
                .into_iter()
                .map(|mu| {
                    let c = q_inv(nst_with(&pos, lam, &mu.difference(lam)));
                    (p.index[&mu], c)
                })
                .collect()
        })
        .collect()
}

fn kappa_to_pq(n: usize) -> Matrix {
    let p = patterns(n);
    let e = LinearOrder::identity(n);
    let pos = e.positions();
    p.arcsets
        .iter()
        .map(|nu| {
            enumerate_supersets(&e, nu)
                .into_iter()
                .map(|mu| {
                    let extra = mu.difference(nu);
                    let sign = if extra.len() % 2 == 0 { 1 } else { -1 };
                    let c = RationalQ::monomial(sign, -(nst_with(&pos, &mu, &extra) as i32));
                    (p.index[&mu], c)
                })
                .collect()
        })
        .collect()
}

fn friendly_to_kappa(o: FriendlyOrder, n: usize) -> Matrix {
    let p = patterns(n);
    let e = LinearOrder::identity(n);
    let pos = e.positions();
    p.arcsets
        .iter()
        .map(|lam| {
            p.arcsets
                .iter()
                .enumerate()
                .filter(|(_, mu)| ge_with(o, &e, &pos, lam, mu))
                .map(|(j, _)| (j, RationalQ::one()))
                .collect()
        })
        .collect()
}

/// Möbius inversion of the relation, processing larger arc sets first.
fn kappa_to_friendly(o: FriendlyOrder, n: usize) -> Matrix {
    let p = patterns(n);
    let e = LinearOrder::identity(n);
    let pos = e.positions();
    let mut order: Vec<usize> = (0..p.arcsets.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(p.arcsets[i].len()));
    let mut rows: Vec<Option<BTreeMap<usize, i64>>> = vec![None; p.arcsets.len()];
    for &i in &order {
        let lam = &p.arcsets[i];
        let mut row = BTreeMap::new();
        row.insert(i, 1i64);
        for (j, mu) in p.arcsets.iter().enumerate() {
            if j != i && ge_with(o, &e, &pos, lam, mu) {
                let sub = rows[j].as_ref().expect("strictly larger elements have more arcs");
                for (&k, &c) in sub {
                    *row.entry(k).or_insert(0) -= c;
                }
            }
        }
        row.retain(|_, c| *c != 0);
        rows[i] = Some(row);
    }
    rows.into_iter().map(|r| r.unwrap().into_iter().map(|(k, c)| (k, RationalQ::from_int(c))).collect()).collect()
}

fn chi_to_kappa(n: usize) -> Matrix {
    let p = patterns(n);
    let pos = LinearOrder::identity(n).positions();
    p.arcsets
        .iter()
        .map(|lam| {
            p.arcsets
                .iter()
                .enumerate()
                .filter_map(|(j, mu)| {
                    let v = value_with(&pos, lam, mu);
                    (!v.is_zero()).then_some((j, v))
                })
                .collect()
        })
        .collect()
}

fn accumulate(acc: &mut BTreeMap<usize, RationalQ>, j: usize, c: &RationalQ) {
    let e = acc.entry(j).or_insert_with(RationalQ::zero);
    *e = &*e + c;
}

/// κ → χ through P^(q): χ written in P^(q) has acyclic support with monomial
/// diagonal, so it inverts by substitution in topological order.
fn kappa_to_chi(n: usize) -> Result<Matrix> {
    let p = patterns(n);
    let m = p.arcsets.len();
    let to_kappa = chi_to_kappa(n);
    let k_to_p = kappa_to_pq(n);
    let chi_in_p: Vec<BTreeMap<usize, RationalQ>> = to_kappa
        .iter()
        .map(|row| {
            let mut acc = BTreeMap::new();
            for (mu, v) in row {
                for (nu, c) in &k_to_p[*mu] {
                    accumulate(&mut acc, *nu, &(v * c));
                }
            }
            acc.retain(|_, c| !c.is_zero());
            acc
        })
        .collect();

    // Reverse topological order of the support graph λ → ν (ν ≠ λ).
    let mut state = vec![0u8; m];
    let mut finished = Vec::with_capacity(m);
    for start in 0..m {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some((v, next)) = stack.pop() {
            let succ: Vec<usize> = chi_in_p[v].keys().copied().filter(|&w| w != v).collect();
            if next < succ.len() {
                stack.push((v, next + 1));
                let w = succ[next];
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => return Err(ScfError::Singular(format!("supercharacter support has a cycle at n={n}"))),
                    _ => {}
                }
            } else {
                state[v] = 2;
                finished.push(v);
            }
        }
    }

    let mut p_in_chi: Vec<Option<BTreeMap<usize, RationalQ>>> = vec![None; m];
    for &lam in &finished {
        let row = &chi_in_p[lam];
        let diag = row.get(&lam).ok_or_else(|| ScfError::Singular(format!("zero diagonal at n={n}")))?;
        let mut acc: BTreeMap<usize, RationalQ> = BTreeMap::new();
        acc.insert(lam, RationalQ::one());
        for (nu, c) in row.iter().filter(|(nu, _)| **nu != lam) {
            for (k, d) in p_in_chi[*nu].as_ref().expect("successors are finished first") {
                accumulate(&mut acc, *k, &-(c * d));
            }
        }
        let inv = RationalQ::one().checked_div(diag)?;
        let done = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, &c * &inv)).collect();
        p_in_chi[lam] = Some(done);
    }

    Ok(k_to_p
        .iter()
        .map(|row| {
            let mut acc = BTreeMap::new();
            for (mu, c) in row {
                for (k, d) in p_in_chi[*mu].as_ref().unwrap() {
                    accumulate(&mut acc, *k, &(c * d));
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect())
}

/// Expansion of one basis element of `from` in the basis `to`.
pub fn convert_key(key: &Key, from: Basis, to: Basis) -> Result<Vec<(Key, RationalQ)>> {
    if from == to {
        return Ok(vec![(key.clone(), RationalQ::one())]);
    }
    let n = key.order.len();
    let p = patterns(n);
    let pos = key.order.positions();
    let idx = p.index[&standardize_with(&pos, &key.arcs)];
    let to_k = table(from, Direction::ToKappa, n)?;
    let from_k = table(to, Direction::FromKappa, n)?;
    let mut acc: BTreeMap<usize, RationalQ> = BTreeMap::new();
    for (mu, c) in &to_k[idx] {
        for (nu, d) in &from_k[*mu] {
            accumulate(&mut acc, *nu, &(c * d));
        }
    }
    Ok(acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (Key::unchecked(key.order.clone(), destandardize(&key.order, &p.arcsets[j])), c))
        .collect())
}

/// Rewrite x in the target basis.
pub fn convert(x: &HopfElement, target: Basis) -> Result<HopfElement> {
    if x.basis() == target {
        return Ok(x.clone());
    }
    let mut out = HopfElement::zero(target, x.ground());
    if x.basis() == Basis::Kappa || target == Basis::Kappa {
        for (k, c) in x.terms() {
            for (k2, d) in convert_key(k, x.basis(), target)? {
                out.add_term(k2, &(c * &d));
            }
        }
        return Ok(out);
    }
    convert(&convert(x, Basis::Kappa)?, target)
}

/// Convert each tensor factor independently.
pub fn convert_tensor(t: &Tensor, target: Basis) -> Result<Tensor> {
    if t.basis() == target {
        return Ok(t.clone());
    }
    let mut out = Tensor::zero(target);
    for (keys, c) in t.terms() {
        let mut partial: Vec<(Vec<Key>, RationalQ)> = vec![(Vec::new(), c.clone())];
        for k in keys {
            let exp = convert_key(k, t.basis(), target)?;
            let mut next = Vec::with_capacity(partial.len() * exp.len());
            for (ks, c) in &partial {
                for (k2, d) in &exp {
                    let mut ks2 = ks.clone();
                    ks2.push(k2.clone());
                    next.push((ks2, c * d));
                }
            }
            partial = next;
        }
        for (ks, c) in partial {
            out.add_term(ks, &c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate::enumerate_orders;
    use crate::combinatorics::LabelSet;

    fn el(basis: Basis, order: &[u8], arcs: &[(u8, u8)]) -> HopfElement {
        HopfElement::basis_element(basis, LinearOrder::from_u8(order), ArcSet::from_pairs(arcs)).unwrap()
    }

    #[test]
    fn chi_in_kappa_at_two() {
        let x = convert(&el(Basis::Chi, &[1, 2], &[(1, 2)]), Basis::Kappa).unwrap();
        assert_eq!(x.to_string(), "(q - 1)*K[1 2 | ] - K[1 2 | 1-2]");
    }

    #[test]
    fn inclusion_p_at_two() {
        let x = convert(&el(Basis::Friendly(FriendlyOrder::ArcInclusion), &[1, 2], &[]), Basis::Kappa).unwrap();
        assert_eq!(x.to_string(), "K[1 2 | ] + K[1 2 | 1-2]");
    }

    #[test]
    fn round_trips_up_to_four() {
        let bases = [
            Basis::Pq,
            Basis::Chi,
            Basis::Friendly(FriendlyOrder::Refinement),
            Basis::Friendly(FriendlyOrder::ArcInclusion),
            Basis::Friendly(FriendlyOrder::AtomicConnect),
        ];
        for n in 1..=4u8 {
            let ground: LabelSet = (1..=n).map(crate::combinatorics::Label).collect();
            let orders = enumerate_orders(&ground);
            for phi in orders.iter().step_by(5) {
                for lam in enumerate_arcsets(phi) {
                    for b in bases {
                        let x = HopfElement::basis_element(b, phi.clone(), lam.clone()).unwrap();
                        let k = convert(&x, Basis::Kappa).unwrap();
                        assert_eq!(convert(&k, b).unwrap(), x, "{b} {phi} {lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn chi_inverse_has_rational_entries_only_where_needed() {
        // κ in χ at n=2: κ_∅ = (χ^∅ + χ^{1-2})/q, κ_{1-2} = ((q-1)χ^∅ - χ^{1-2})/q
        let k = convert(&el(Basis::Kappa, &[1, 2], &[]), Basis::Chi).unwrap();
        assert_eq!(k.to_string(), "1/q*X[1 2 | ] + 1/q*X[1 2 | 1-2]");
    }
}
