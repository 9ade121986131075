//! The atomic-connection order on S^φ and its Möbius function.
//!
//! λ ⪯ ν when λ ⊆ ν and every arc of ν∖λ joins two different atomic factors
//! of (φ,λ). Adding one such arc is a cover step; ⪯ also contains steps that
//! add several arcs at once, e.g. {5⌢1, 6⌢7} over the concatenation
//! (2456,{2⌢5,4⌢6})·(1378,{1⌢3,3⌢8}), where neither arc alone leaves room for
//! the other. This is the order under which a product of atomic κ's expands
//! as a sum over an up-set.

use std::collections::HashMap;

use super::arcs::{Arc, ArcSet};
use super::enumerate::enumerate_supersets;
use super::factor::atomic_bounds;
use super::order::{LinearOrder, Positions};
use crate::error::{Result, ScfError};

/// Atomic-factor index of every position of (φ,λ).
fn block_index(order: &LinearOrder, pos: &Positions, lambda: &ArcSet) -> Vec<usize> {
    let mut idx = vec![0; order.len()];
    for (b, (s, e)) in atomic_bounds(order.len(), &lambda.position_pairs(pos)).into_iter().enumerate() {
        for x in idx.iter_mut().take(e).skip(s) {
            *x = b;
        }
    }
    idx
}

pub(crate) fn atomic_le_with(order: &LinearOrder, pos: &Positions, lambda: &ArcSet, nu: &ArcSet) -> bool {
    if !lambda.is_subset(nu) {
        return false;
    }
    let idx = block_index(order, pos, lambda);
    nu.arcs().iter().filter(|a| !lambda.contains(a)).all(|a| idx[pos.at(a.left)] != idx[pos.at(a.right)])
}

/// Whether λ ⪯ ν in the atomic-connection order on S^φ.
pub fn atomic_le(order: &LinearOrder, lambda: &ArcSet, nu: &ArcSet) -> Result<bool> {
    lambda.validate(order)?;
    nu.validate(order)?;
    Ok(atomic_le_with(order, &order.positions(), lambda, nu))
}

/// All μ = λ ∪ {a} where the new arc a joins two atomic factors of λ.
pub fn covers(order: &LinearOrder, lambda: &ArcSet) -> Result<Vec<ArcSet>> {
    lambda.validate(order)?;
    let pos = order.positions();
    let idx = block_index(order, &pos, lambda);
    let labels = order.labels();
    let mut out = Vec::new();
    for i in 0..labels.len() {
        for k in i + 1..labels.len() {
            if idx[i] == idx[k] {
                continue;
            }
            let a = Arc { left: labels[i], right: labels[k] };
            if lambda.arcs().iter().any(|b| b.left == a.left || b.right == a.right) {
                continue;
            }
            out.push(lambda.with_arc(a));
        }
    }
    Ok(out)
}

/// All ν ∈ S^φ with λ ⪯ ν.
pub fn upper_set(order: &LinearOrder, lambda: &ArcSet) -> Result<Vec<ArcSet>> {
    lambda.validate(order)?;
    let pos = order.positions();
    Ok(enumerate_supersets(order, lambda).into_iter().filter(|nu| atomic_le_with(order, &pos, lambda, nu)).collect())
}

fn require_le(order: &LinearOrder, lambda: &ArcSet, nu: &ArcSet) -> Result<Positions> {
    lambda.validate(order)?;
    nu.validate(order)?;
    let pos = order.positions();
    if !atomic_le_with(order, &pos, lambda, nu) {
        return Err(ScfError::NotComparable);
    }
    Ok(pos)
}

fn with_subset(lambda: &ArcSet, extra: &[Arc], mask: u32) -> ArcSet {
    let mut s = lambda.clone();
    for (i, a) in extra.iter().enumerate() {
        if mask & (1 << i) != 0 {
            s = s.with_arc(*a);
        }
    }
    s
}

/// Whether λ ∪ B ⪯ ν for every B ⊆ ν∖λ.
pub fn is_minimal_over(order: &LinearOrder, lambda: &ArcSet, nu: &ArcSet) -> Result<bool> {
    let pos = require_le(order, lambda, nu)?;
    let extra = nu.difference(lambda);
    let extra = extra.arcs();
    Ok((0..1u32 << extra.len()).all(|m| atomic_le_with(order, &pos, &with_subset(lambda, extra, m), nu)))
}

/// Möbius function of ⪯ from the closed form: ±1 on minimal intervals, 0 otherwise.
pub fn mobius_closed(order: &LinearOrder, lambda: &ArcSet, nu: &ArcSet) -> Result<i64> {
    if is_minimal_over(order, lambda, nu)? {
        let d = nu.len() - lambda.len();
        Ok(if d % 2 == 0 { 1 } else { -1 })
    } else {
        Ok(0)
    }
}

/// Möbius function of ⪯ by the defining recursion over the interval [λ, ν].
pub fn mobius_recursive(order: &LinearOrder, lambda: &ArcSet, nu: &ArcSet) -> Result<i64> {
    let pos = require_le(order, lambda, nu)?;
    let extra = nu.difference(lambda);
    let extra = extra.arcs();
    let full = (1u32 << extra.len()) - 1;
    let members: Vec<(u32, ArcSet)> = (0..=full)
        .map(|m| (m, with_subset(lambda, extra, m)))
        .filter(|(_, g)| atomic_le_with(order, &pos, lambda, g) && atomic_le_with(order, &pos, g, nu))
        .collect();
    let mut mu: HashMap<u32, i64> = HashMap::new();
    let mut by_size = members.clone();
    by_size.sort_by_key(|(m, _)| m.count_ones());
    for (m, g) in &by_size {
        let value = if *m == 0 {
            1
        } else {
            -members
                .iter()
                .filter(|(r, rho)| *r != *m && r & m == *r && atomic_le_with(order, &pos, rho, g))
                .map(|(r, _)| mu[r])
                .sum::<i64>()
        };
        mu.insert(*m, value);
    }
    Ok(mu[&full])
}
