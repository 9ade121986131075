use std::fmt;

use smallvec::SmallVec;

use super::label::{Label, LabelSet};
use super::order::{LinearOrder, Positions};
use crate::error::{Result, ScfError};

/// An arc i⌢j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub left: Label,
    pub right: Label,
}

impl Arc {
    pub fn new(left: u8, right: u8) -> Self {
        Arc { left: Label(left), right: Label(right) }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.left, self.right)
    }
}

pub(crate) type ArcVec = SmallVec<[Arc; 6]>;

/// A set of arcs, stored sorted and independent of any order.
///
/// Each label is the left endpoint of at most one arc and the right
/// endpoint of at most one arc. Whether `i ≺ j` holds for every arc is a
/// property relative to an order; see [`ArcSet::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcSet {
    arcs: ArcVec,
}

impl ArcSet {
    pub fn empty() -> Self {
        ArcSet::default()
    }

    pub fn new(arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut v: ArcVec = arcs.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        let (mut lefts, mut rights) = (LabelSet::empty(), LabelSet::empty());
        for a in &v {
            if a.left == a.right {
                return Err(ScfError::IncompatibleArcSet(format!("loop {a}")));
            }
            if !lefts.insert(a.left) {
                return Err(ScfError::IncompatibleArcSet(format!("{} starts two arcs", a.left)));
            }
            if !rights.insert(a.right) {
                return Err(ScfError::IncompatibleArcSet(format!("{} ends two arcs", a.right)));
            }
        }
        Ok(ArcSet { arcs: v })
    }

    /// Build from integer pairs; panics on malformed input. Intended for literals.
    pub fn from_pairs(pairs: &[(u8, u8)]) -> Self {
        Self::new(pairs.iter().map(|&(i, j)| Arc::new(i, j))).expect("malformed arc set literal")
    }

    pub(crate) fn from_sorted_unchecked(arcs: ArcVec) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        ArcSet { arcs }
    }

    pub(crate) fn from_unsorted_unchecked(mut arcs: ArcVec) -> Self {
        arcs.sort_unstable();
        ArcSet { arcs }
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, a: &Arc) -> bool {
        self.arcs.binary_search(a).is_ok()
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.arcs.iter().all(|a| other.contains(a))
    }

    /// Labels touched by some arc.
    pub fn support(&self) -> LabelSet {
        self.arcs.iter().flat_map(|a| [a.left, a.right]).collect()
    }

    /// Check λ ∈ S^φ.
    pub fn validate(&self, order: &LinearOrder) -> Result<()> {
        let pos = order.positions();
        for a in &self.arcs {
            match (pos.get(a.left), pos.get(a.right)) {
                (Some(i), Some(j)) if i < j => {}
                (Some(_), Some(_)) => {
                    return Err(ScfError::IncompatibleArcSet(format!("arc {a} points backwards in {order}")))
                }
                _ => return Err(ScfError::IncompatibleArcSet(format!("arc {a} leaves the ground set of {order}"))),
            }
        }
        Ok(())
    }

    pub fn is_valid_for(&self, order: &LinearOrder) -> bool {
        self.validate(order).is_ok()
    }

    pub(crate) fn valid_with(&self, pos: &Positions) -> bool {
        self.arcs.iter().all(|a| match (pos.get(a.left), pos.get(a.right)) {
            (Some(i), Some(j)) => i < j,
            _ => false,
        })
    }

    /// μ_J, the arcs with both endpoints in J.
    pub fn restrict(&self, j: &LabelSet) -> ArcSet {
        ArcSet { arcs: self.arcs.iter().copied().filter(|a| j.contains(a.left) && j.contains(a.right)).collect() }
    }

    /// Whether no arc crosses between the blocks of the given partition of the support.
    pub fn splits_along(&self, blocks: &[LabelSet]) -> bool {
        self.arcs.iter().all(|a| blocks.iter().any(|b| b.contains(a.left) && b.contains(a.right)))
    }

    /// Union of arc sets; fails if the result breaks the endpoint condition.
    pub fn union(&self, other: &ArcSet) -> Result<ArcSet> {
        ArcSet::new(self.arcs.iter().chain(other.arcs.iter()).copied())
    }

    pub fn difference(&self, other: &ArcSet) -> ArcSet {
        ArcSet { arcs: self.arcs.iter().copied().filter(|a| !other.contains(a)).collect() }
    }

    pub fn intersection(&self, other: &ArcSet) -> ArcSet {
        ArcSet { arcs: self.arcs.iter().copied().filter(|a| other.contains(a)).collect() }
    }

    pub(crate) fn with_arc(&self, a: Arc) -> ArcSet {
        let mut v = self.arcs.clone();
        let at = v.binary_search(&a).unwrap_or_else(|e| e);
        v.insert(at, a);
        ArcSet { arcs: v }
    }

    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> ArcSet {
        ArcSet::from_unsorted_unchecked(self.arcs.iter().map(|a| Arc { left: f(a.left), right: f(a.right) }).collect())
    }

    /// Arcs as position pairs in the given order.
    pub(crate) fn position_pairs(&self, pos: &Positions) -> SmallVec<[(usize, usize); 6]> {
        self.arcs.iter().map(|a| (pos.at(a.left), pos.at(a.right))).collect()
    }
}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// dim(λ): for each arc i⌢k, the number of j with i ≺ j ⪯ k.
pub fn dim(order: &LinearOrder, lambda: &ArcSet) -> Result<usize> {
    lambda.validate(order)?;
    Ok(dim_with(&order.positions(), lambda))
}

pub(crate) fn dim_with(pos: &Positions, lambda: &ArcSet) -> usize {
    lambda.arcs().iter().map(|a| pos.at(a.right) - pos.at(a.left)).sum()
}

/// nst^λ_μ: quadruples i ≺ j ≺ k ≺ l with i⌢l ∈ λ and j⌢k ∈ μ.
pub fn nst(lambda: &ArcSet, mu: &ArcSet, order: &LinearOrder) -> Result<usize> {
    lambda.validate(order)?;
    mu.validate(order)?;
    Ok(nst_with(&order.positions(), lambda, mu))
}

pub(crate) fn nst_with(pos: &Positions, lambda: &ArcSet, mu: &ArcSet) -> usize {
    mu.arcs().iter().map(|a| nst_arc_with(pos, lambda, a)).sum()
}

/// Number of arcs of λ strictly nesting the given arc.
pub(crate) fn nst_arc_with(pos: &Positions, lambda: &ArcSet, arc: &Arc) -> usize {
    let (j, k) = (pos.at(arc.left), pos.at(arc.right));
    lambda
        .arcs()
        .iter()
        .filter(|b| {
            let (i, l) = (pos.at(b.left), pos.at(b.right));
            i < j && k < l
        })
        .count()
}

/// Replace each label by its 1-based position in φ, giving an arc set over ε_n.
pub fn standardize(order: &LinearOrder, lambda: &ArcSet) -> Result<ArcSet> {
    lambda.validate(order)?;
    Ok(standardize_with(&order.positions(), lambda))
}

pub(crate) fn standardize_with(pos: &Positions, lambda: &ArcSet) -> ArcSet {
    lambda.relabel(|l| Label(pos.at(l) as u8 + 1))
}

/// Inverse of [`standardize`]: position p becomes the p-th label of φ.
pub(crate) fn destandardize(order: &LinearOrder, lambda: &ArcSet) -> ArcSet {
    let s = order.labels();
    lambda.relabel(|p| s[p.0 as usize - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::label::labels;

    fn brute_nst(order: &LinearOrder, lambda: &ArcSet, mu: &ArcSet) -> usize {
        let s = order.labels();
        let n = s.len();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        if lambda.contains(&Arc { left: s[i], right: s[l] }) && mu.contains(&Arc { left: s[j], right: s[k] }) {
                            c += 1;
                        }
                    }
                }
            }
        }
        c
    }

    #[test]
    fn restrict_examples() {
        let mu = ArcSet::from_pairs(&[(1, 9), (9, 2), (3, 8), (6, 4)]);
        assert_eq!(mu.restrict(&labels(&[1, 2, 9])), ArcSet::from_pairs(&[(1, 9), (9, 2)]));
        assert!(ArcSet::empty().restrict(&labels(&[1])).is_empty());
        assert!(ArcSet::from_pairs(&[(1, 9), (3, 8)]).restrict(&labels(&[1, 8])).is_empty());
    }

    #[test]
    fn dim_examples() {
        assert_eq!(dim(&LinearOrder::identity(4), &ArcSet::empty()).unwrap(), 0);
        assert_eq!(dim(&LinearOrder::identity(2), &ArcSet::from_pairs(&[(1, 2)])).unwrap(), 1);
        let phi = LinearOrder::from_u8(&[6, 1, 4, 9, 2, 5, 3, 7, 8]);
        let lam = ArcSet::from_pairs(&[(1, 9), (9, 2), (3, 8), (6, 4)]);
        // positional gaps 2 + 1 + 2 + 2
        assert_eq!(dim(&phi, &lam).unwrap(), 7);
    }

    #[test]
    fn nst_examples() {
        let e4 = LinearOrder::identity(4);
        let outer = ArcSet::from_pairs(&[(1, 4)]);
        let inner = ArcSet::from_pairs(&[(2, 3)]);
        let both = ArcSet::from_pairs(&[(1, 4), (2, 3)]);
        assert_eq!(nst(&outer, &ArcSet::empty(), &e4).unwrap(), 0);
        assert_eq!(nst(&outer, &inner, &e4).unwrap(), brute_nst(&e4, &outer, &inner));
        assert_eq!(nst(&outer, &inner, &e4).unwrap(), 1);
        assert_eq!(nst(&both, &both, &e4).unwrap(), 1);
    }

    #[test]
    fn validation() {
        let bad = ArcSet::new([Arc::new(1, 2), Arc::new(1, 3)]);
        assert!(bad.is_err());
        let lam = ArcSet::from_pairs(&[(2, 1)]);
        assert!(lam.validate(&LinearOrder::identity(2)).is_err());
        assert!(lam.validate(&LinearOrder::from_u8(&[2, 1])).is_ok());
        assert!(dim(&LinearOrder::identity(2), &lam).is_err());
    }
}
