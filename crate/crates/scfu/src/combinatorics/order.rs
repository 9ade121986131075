use std::fmt;

use smallvec::SmallVec;

use super::label::{Label, LabelSet};
use crate::error::{Result, ScfError};

pub(crate) type LabelVec = SmallVec<[Label; 8]>;

/// A linear order on a finite label set, smallest first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearOrder {
    seq: LabelVec,
}

/// Position lookup table for one order. Absent labels map to `None`.
#[derive(Clone)]
pub struct Positions([u8; 256]);

const ABSENT: u8 = u8::MAX;

impl Positions {
    #[inline]
    pub fn get(&self, l: Label) -> Option<usize> {
        match self.0[l.0 as usize] {
            ABSENT => None,
            p => Some(p as usize),
        }
    }

    /// Position of a label known to be present.
    #[inline]
    pub fn at(&self, l: Label) -> usize {
        self.0[l.0 as usize] as usize
    }
}

impl LinearOrder {
    pub fn new(seq: impl IntoIterator<Item = Label>) -> Result<Self> {
        let seq: LabelVec = seq.into_iter().collect();
        let mut seen = LabelSet::empty();
        for &l in &seq {
            if !seen.insert(l) {
                return Err(ScfError::DuplicateLabel(l.0));
            }
        }
        Ok(LinearOrder { seq })
    }

    /// Build from integers; panics on repeats. Intended for literals.
    pub fn from_u8(v: &[u8]) -> Self {
        Self::new(v.iter().map(|&x| Label(x))).expect("repeated label in order literal")
    }

    pub(crate) fn from_vec_unchecked(seq: LabelVec) -> Self {
        LinearOrder { seq }
    }

    /// The standard order ε_n = 1 2 … n.
    pub fn identity(n: usize) -> Self {
        LinearOrder { seq: (1..=n as u8).map(Label).collect() }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.seq
    }

    pub fn ground(&self) -> LabelSet {
        self.seq.iter().copied().collect()
    }

    pub fn positions(&self) -> Positions {
        let mut t = [ABSENT; 256];
        for (i, l) in self.seq.iter().enumerate() {
            t[l.0 as usize] = i as u8;
        }
        Positions(t)
    }

    pub fn position(&self, l: Label) -> Option<usize> {
        self.seq.iter().position(|&x| x == l)
    }

    /// 1_φ, the first label.
    pub fn first(&self) -> Option<Label> {
        self.seq.first().copied()
    }

    /// m_φ, the last label.
    pub fn last(&self) -> Option<Label> {
        self.seq.last().copied()
    }

    /// Whether a precedes b. Both must be present.
    pub fn less(&self, a: Label, b: Label) -> bool {
        self.position(a) < self.position(b)
    }

    /// φ|_J, the subsequence supported on J.
    pub fn restrict(&self, j: &LabelSet) -> Result<LinearOrder> {
        let ground = self.ground();
        if let Some(bad) = j.difference(&ground).iter().next() {
            return Err(ScfError::InvalidSubset(bad.0));
        }
        Ok(self.restrict_unchecked(j))
    }

    pub(crate) fn restrict_unchecked(&self, j: &LabelSet) -> LinearOrder {
        LinearOrder { seq: self.seq.iter().copied().filter(|&l| j.contains(l)).collect() }
    }

    /// Concatenation φτ of orders on disjoint sets.
    pub fn concat(&self, other: &LinearOrder) -> Result<LinearOrder> {
        if !self.ground().is_disjoint(&other.ground()) {
            return Err(ScfError::GroundOverlap);
        }
        let mut seq = self.seq.clone();
        seq.extend_from_slice(&other.seq);
        Ok(LinearOrder { seq })
    }

    pub fn reversed(&self) -> LinearOrder {
        LinearOrder { seq: self.seq.iter().rev().copied().collect() }
    }

    /// Apply a label map to every entry.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> LinearOrder {
        LinearOrder { seq: self.seq.iter().map(|&l| f(l)).collect() }
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::label::labels;

    #[test]
    fn restrict_examples() {
        let phi = LinearOrder::from_u8(&[6, 1, 4, 9, 2, 5, 3, 7, 8]);
        assert_eq!(phi.restrict(&labels(&[1, 4, 9, 2])).unwrap(), LinearOrder::from_u8(&[1, 4, 9, 2]));
        assert!(LinearOrder::from_u8(&[1, 2]).restrict(&LabelSet::empty()).unwrap().is_empty());
        let p = LinearOrder::from_u8(&[2, 4, 5, 6]);
        assert_eq!(p.restrict(&labels(&[4, 6])).unwrap(), LinearOrder::from_u8(&[4, 6]));
        assert_eq!(p.restrict(&labels(&[3])), Err(ScfError::InvalidSubset(3)));
    }

    #[test]
    fn rejects_repeats() {
        assert_eq!(LinearOrder::new([Label(1), Label(1)]), Err(ScfError::DuplicateLabel(1)));
    }

    #[test]
    fn concat_and_extremes() {
        let a = LinearOrder::from_u8(&[3, 1]);
        let b = LinearOrder::from_u8(&[2]);
        let ab = a.concat(&b).unwrap();
        assert_eq!(ab.to_string(), "3 1 2");
        assert_eq!(ab.first(), Some(Label(3)));
        assert_eq!(ab.last(), Some(Label(2)));
        assert!(ab.less(Label(1), Label(2)));
        assert_eq!(a.concat(&a), Err(ScfError::GroundOverlap));
    }
}
