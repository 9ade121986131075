use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::RationalQ;
use crate::combinatorics::{ArcSet, LabelSet, LinearOrder};
use crate::error::{Result, ScfError};

/// Partial orders on arc sets that induce a P^≥ basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FriendlyOrder {
    /// Coarsening of the underlying classical set partitions.
    Refinement,
    /// μ ⊇ λ as arc sets.
    ArcInclusion,
    /// The atomic-connection order ⪯.
    AtomicConnect,
}

impl FriendlyOrder {
    pub const ALL: [FriendlyOrder; 3] = [FriendlyOrder::Refinement, FriendlyOrder::ArcInclusion, FriendlyOrder::AtomicConnect];

    pub fn name(self) -> &'static str {
        match self {
            FriendlyOrder::Refinement => "refinement",
            FriendlyOrder::ArcInclusion => "inclusion",
            FriendlyOrder::AtomicConnect => "atomic",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "refinement" => Ok(FriendlyOrder::Refinement),
            "inclusion" | "arc-inclusion" => Ok(FriendlyOrder::ArcInclusion),
            "atomic" | "atomic-connect" => Ok(FriendlyOrder::AtomicConnect),
            _ => Err(ScfError::Parse(format!("unknown friendly order '{s}'"))),
        }
    }
}

/// The bases of scf(U)[K].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Superclass characteristic functions κ.
    Kappa,
    /// The q-deformed power sums P^(q).
    Pq,
    /// P^≥ for a power-sum friendly order.
    Friendly(FriendlyOrder),
    /// Supercharacters χ.
    Chi,
}

impl Basis {
    pub fn name(self) -> String {
        match self {
            Basis::Kappa => "kappa".into(),
            Basis::Pq => "pq".into(),
            Basis::Friendly(o) => format!("pfriendly:{}", o.name()),
            Basis::Chi => "chi".into(),
        }
    }

    /// Accepts "kappa", "pq", "chi", "pfriendly" (arc inclusion) and "pfriendly:<order>".
    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "kappa" => Ok(Basis::Kappa),
            "pq" => Ok(Basis::Pq),
            "chi" => Ok(Basis::Chi),
            "pfriendly" => Ok(Basis::Friendly(FriendlyOrder::ArcInclusion)),
            _ => match s.strip_prefix("pfriendly:") {
                Some(o) => Ok(Basis::Friendly(FriendlyOrder::from_name(o)?)),
                None => Err(ScfError::Parse(format!("unknown basis '{s}'"))),
            },
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Basis::Kappa => "K",
            Basis::Pq => "Pq",
            Basis::Friendly(FriendlyOrder::Refinement) => "Pref",
            Basis::Friendly(FriendlyOrder::ArcInclusion) => "Pinc",
            Basis::Friendly(FriendlyOrder::AtomicConnect) => "Patc",
            Basis::Chi => "X",
        }
    }

    fn latex_symbol(self) -> &'static str {
        match self {
            Basis::Kappa => "\\kappa",
            Basis::Pq => "P^{(q)}",
            Basis::Friendly(FriendlyOrder::Refinement) => "P^{\\mathrm{ref}}",
            Basis::Friendly(FriendlyOrder::ArcInclusion) => "P^{\\subseteq}",
            Basis::Friendly(FriendlyOrder::AtomicConnect) => "P^{\\preceq}",
            Basis::Chi => "\\chi",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A pair (φ, λ) indexing a basis element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key {
    pub order: LinearOrder,
    pub arcs: ArcSet,
}

impl Key {
    pub fn new(order: LinearOrder, arcs: ArcSet) -> Result<Self> {
        arcs.validate(&order)?;
        Ok(Key { order, arcs })
    }

    pub(crate) fn unchecked(order: LinearOrder, arcs: ArcSet) -> Self {
        Key { order, arcs }
    }

    pub fn latex(&self) -> String {
        let order: Vec<String> = self.order.labels().iter().map(|l| l.0.to_string()).collect();
        let arcs: Vec<String> = self.arcs.arcs().iter().map(|a| format!("{}\\frown {}", a.left.0, a.right.0)).collect();
        format!("({},\\{{{}\\}})", order.join(","), arcs.join(","))
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", self.order, self.arcs)
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a RationalQ)>,
) -> fmt::Result {
    let mut first = true;
    for (sym, c) in terms {
        let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        if abs.is_one() {
            write!(f, "{sym}")?;
        } else if abs.is_monomial() || (abs.is_polynomial() && abs.numer().terms().count() == 1) {
            write!(f, "{abs}*{sym}")?;
        } else if abs.is_polynomial() {
            write!(f, "({abs})*{sym}")?;
        } else {
            write!(f, "{abs}*{sym}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// A finite linear combination of basis elements of one basis over one ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfElement {
    basis: Basis,
    ground: LabelSet,
    terms: BTreeMap<Key, RationalQ>,
}

impl HopfElement {
    pub fn zero(basis: Basis, ground: LabelSet) -> Self {
        HopfElement { basis, ground, terms: BTreeMap::new() }
    }

    /// The single basis element indexed by (φ, λ).
    pub fn basis_element(basis: Basis, order: LinearOrder, arcs: ArcSet) -> Result<Self> {
        let key = Key::new(order, arcs)?;
        Ok(Self::from_key(basis, key))
    }

    pub(crate) fn from_key(basis: Basis, key: Key) -> Self {
        let ground = key.order.ground();
        let mut terms = BTreeMap::new();
        terms.insert(key, RationalQ::one());
        HopfElement { basis, ground, terms }
    }

    /// Build from terms, validating every key against the ground set.
    pub fn from_terms(basis: Basis, ground: LabelSet, terms: impl IntoIterator<Item = (Key, RationalQ)>) -> Result<Self> {
        let mut x = Self::zero(basis, ground);
        for (k, c) in terms {
            k.arcs.validate(&k.order)?;
            if k.order.ground() != ground || k.order.len() != ground.len() {
                return Err(ScfError::GroundMismatch);
            }
            x.add_term(k, &c);
        }
        Ok(x)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn ground(&self) -> LabelSet {
        self.ground
    }

    pub fn terms(&self) -> &BTreeMap<Key, RationalQ> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Key, RationalQ> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &Key) -> RationalQ {
        self.terms.get(key).cloned().unwrap_or_else(RationalQ::zero)
    }

    pub(crate) fn add_term(&mut self, key: Key, c: &RationalQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &HopfElement) -> Result<()> {
        if self.basis != other.basis {
            return Err(ScfError::BasisMismatch(self.basis.name(), other.basis.name()));
        }
        if self.ground != other.ground {
            return Err(ScfError::GroundMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &HopfElement) -> Result<HopfElement> {
        self.check_compatible(other)?;
        let mut r = self.clone();
        for (k, c) in &other.terms {
            r.add_term(k.clone(), c);
        }
        Ok(r)
    }

    pub fn sub(&self, other: &HopfElement) -> Result<HopfElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HopfElement {
        self.scale(&RationalQ::from_int(-1))
    }

    pub fn scale(&self, c: &RationalQ) -> HopfElement {
        if c.is_zero() {
            return Self::zero(self.basis, self.ground);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        HopfElement { basis: self.basis, ground: self.ground, terms }
    }

    /// Largest dim over the keys with nonzero coefficient.
    pub fn max_dim(&self) -> Option<usize> {
        self.terms.keys().map(|k| crate::combinatorics::arcs::dim_with(&k.order.positions(), &k.arcs)).max()
    }

    pub fn latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            if !abs.is_one() {
                let s = abs.render_latex();
                if abs.is_polynomial() && abs.numer().terms().count() > 1 {
                    out.push_str(&format!("\\left({s}\\right)"));
                } else {
                    out.push_str(&s);
                }
                out.push(' ');
            }
            out.push_str(&format!("{}_{{{}}}", self.basis.latex_symbol(), k.latex()));
        }
        out
    }
}

impl fmt::Display for HopfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        write_terms(f, self.terms.iter().map(|(k, c)| (format!("{sym}{k}"), c)))
    }
}

/// A linear combination of tensors of basis elements, one key per tensor factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    basis: Basis,
    terms: BTreeMap<Vec<Key>, RationalQ>,
}

impl Tensor {
    pub fn zero(basis: Basis) -> Self {
        Tensor { basis, terms: BTreeMap::new() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Key>, RationalQ> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn add_term(&mut self, key: Vec<Key>, c: &RationalQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Exchange the two factors of a two-fold tensor.
    pub fn swap(&self) -> Tensor {
        let mut t = Tensor::zero(self.basis);
        for (k, c) in &self.terms {
            let mut k = k.clone();
            k.reverse();
            t.add_term(k, c);
        }
        t
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        write_terms(
            f,
            self.terms.iter().map(|(ks, c)| (ks.iter().map(|k| format!("{sym}{k}")).collect::<Vec<_>>().join(" (x) "), c)),
        )
    }
}
