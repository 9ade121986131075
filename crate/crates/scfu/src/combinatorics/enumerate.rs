//! Deterministic enumeration of arc sets, orders and set compositions.
//!
//! Arc sets are produced by scanning positions left to right; at each position
//! the choice "no outgoing arc" comes first, followed by arcs to later
//! positions in increasing order. Orders are listed lexicographically by label
//! sequence. A set composition is listed by choosing its first block among
//! the nonempty subsets of the remaining labels in increasing bitmask order
//! (bit i standing for the i-th smallest remaining label), then recursing.

use itertools::Itertools;

use super::arcs::{Arc, ArcSet, ArcVec};
use super::label::{Label, LabelSet};
use super::order::LinearOrder;
use crate::error::{Result, ScfError};

/// An ordered sequence of disjoint nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetComposition {
    blocks: Vec<LabelSet>,
}

impl SetComposition {
    pub fn new(blocks: Vec<LabelSet>, ground: &LabelSet) -> Result<Self> {
        let mut seen = LabelSet::empty();
        for b in &blocks {
            if b.is_empty() || !b.is_disjoint(&seen) {
                return Err(ScfError::InvalidComposition);
            }
            seen = seen.union(b);
        }
        if seen != *ground {
            return Err(ScfError::InvalidComposition);
        }
        Ok(SetComposition { blocks })
    }

    pub fn blocks(&self) -> &[LabelSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// All of S^φ in canonical order. The count is the Bell number of |φ|.
pub fn enumerate_arcsets(order: &LinearOrder) -> Vec<ArcSet> {
    let mut out = Vec::new();
    extend_arcsets(order, &ArcSet::empty(), &|_, _| true, &mut out);
    out
}

/// All μ ∈ S^φ with μ ⊇ λ, in canonical order.
pub fn enumerate_supersets(order: &LinearOrder, lambda: &ArcSet) -> Vec<ArcSet> {
    let mut out = Vec::new();
    extend_arcsets(order, lambda, &|_, _| true, &mut out);
    out
}

/// Arc sets on `order` containing `lower`, whose extra arcs (as position pairs)
/// satisfy `allowed`. `lower` must be valid for `order`.
pub(crate) fn extend_arcsets(
    order: &LinearOrder,
    lower: &ArcSet,
    allowed: &dyn Fn(usize, usize) -> bool,
    out: &mut Vec<ArcSet>,
) {
    let n = order.len();
    assert!(n <= 64, "arc set enumeration supports at most 64 labels");
    let pos = order.positions();
    let mut fixed = [usize::MAX; 64];
    let mut taken: u64 = 0;
    for a in lower.arcs() {
        let (i, k) = (pos.at(a.left), pos.at(a.right));
        fixed[i] = k;
        taken |= 1 << k;
    }
    let labels = order.labels();
    let mut cur: ArcVec = ArcVec::new();
    rec(0, n, labels, &fixed, taken, allowed, &mut cur, out);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        p: usize,
        n: usize,
        labels: &[Label],
        fixed: &[usize; 64],
        taken: u64,
        allowed: &dyn Fn(usize, usize) -> bool,
        cur: &mut ArcVec,
        out: &mut Vec<ArcSet>,
    ) {
        if p == n {
            out.push(ArcSet::from_unsorted_unchecked(cur.clone()));
            return;
        }
        if fixed[p] != usize::MAX {
            cur.push(Arc { left: labels[p], right: labels[fixed[p]] });
            rec(p + 1, n, labels, fixed, taken, allowed, cur, out);
            cur.pop();
            return;
        }
        rec(p + 1, n, labels, fixed, taken, allowed, cur, out);
        for r in p + 1..n {
            if taken & (1 << r) == 0 && allowed(p, r) {
                cur.push(Arc { left: labels[p], right: labels[r] });
                rec(p + 1, n, labels, fixed, taken | (1 << r), allowed, cur, out);
                cur.pop();
            }
        }
    }
}

/// All |K|! linear orders of K, lexicographic in the label sequence.
pub fn enumerate_orders(ground: &LabelSet) -> Vec<LinearOrder> {
    let labels = ground.to_vec();
    let n = labels.len();
    labels
        .into_iter()
        .permutations(n)
        .map(|p| LinearOrder::from_vec_unchecked(p.into_iter().collect()))
        .collect()
}

/// All set compositions of K into nonempty blocks, in canonical order.
pub fn enumerate_set_compositions(ground: &LabelSet) -> Vec<SetComposition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(*ground, &mut cur, &mut out);
    return out;

    fn rec(rest: LabelSet, cur: &mut Vec<LabelSet>, out: &mut Vec<SetComposition>) {
        if rest.is_empty() {
            out.push(SetComposition { blocks: cur.clone() });
            return;
        }
        let items = rest.to_vec();
        for mask in 1u64..(1u64 << items.len()) {
            let block: LabelSet = items.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &l)| l).collect();
            cur.push(block);
            rec(rest.difference(&block), cur, out);
            cur.pop();
        }
    }
}

/// Set compositions whose first block contains `k`.
pub fn enumerate_set_compositions_with_first(ground: &LabelSet, k: Label) -> Vec<SetComposition> {
    enumerate_set_compositions(ground).into_iter().filter(|c| c.blocks[0].contains(k)).collect()
}
