use std::fmt;

/// A ground-set element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub u8);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u8> for Label {
    fn from(v: u8) -> Self {
        Label(v)
    }
}

/// A finite set of labels stored as a 256-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelSet {
    bits: [u64; 4],
}

impl LabelSet {
    pub const fn empty() -> Self {
        LabelSet { bits: [0; 4] }
    }

    pub fn insert(&mut self, l: Label) -> bool {
        let (w, b) = (l.0 as usize / 64, l.0 as usize % 64);
        let fresh = self.bits[w] & (1 << b) == 0;
        self.bits[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, l: Label) {
        self.bits[l.0 as usize / 64] &= !(1 << (l.0 as usize % 64));
    }

    pub fn contains(&self, l: Label) -> bool {
        self.bits[l.0 as usize / 64] & (1 << (l.0 as usize % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &LabelSet) -> LabelSet {
        let mut bits = self.bits;
        for (b, o) in bits.iter_mut().zip(other.bits) {
            *b |= o;
        }
        LabelSet { bits }
    }

    pub fn intersection(&self, other: &LabelSet) -> LabelSet {
        let mut bits = self.bits;
        for (b, o) in bits.iter_mut().zip(other.bits) {
            *b &= o;
        }
        LabelSet { bits }
    }

    pub fn difference(&self, other: &LabelSet) -> LabelSet {
        let mut bits = self.bits;
        for (b, o) in bits.iter_mut().zip(other.bits) {
            *b &= !o;
        }
        LabelSet { bits }
    }

    pub fn is_subset(&self, other: &LabelSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &LabelSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// Labels in increasing numeric order.
    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        (0..4usize).flat_map(move |w| {
            let word = self.bits[w];
            (0..64usize)
                .filter(move |b| word & (1 << b) != 0)
                .map(move |b| Label((w * 64 + b) as u8))
        })
    }

    pub fn to_vec(&self) -> Vec<Label> {
        self.iter().collect()
    }
}

impl FromIterator<Label> for LabelSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        let mut s = LabelSet::empty();
        for l in iter {
            s.insert(l);
        }
        s
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// Shorthand for building a label set from integers.
pub fn labels(v: &[u8]) -> LabelSet {
    v.iter().map(|&x| Label(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = labels(&[1, 2, 200]);
        let b = labels(&[2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![Label(1), Label(2), Label(3), Label(200)]);
        assert_eq!(a.intersection(&b), labels(&[2]));
        assert_eq!(a.difference(&b), labels(&[1, 200]));
        assert!(labels(&[2]).is_subset(&a));
        assert!(!a.is_disjoint(&b));
        assert_eq!(a.len(), 3);
        assert_eq!(a.to_string(), "{1,2,200}");
    }
}
