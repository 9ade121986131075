//! Skew ribbon shapes, fillings by a linear order, and the factorization
//! identity relating the run statistics of φ to a signed sum over fillings.

use std::fmt;

use crate::closedform::global_stats;
use crate::coeff::IntPoly;
use crate::combinatorics::factor::run_bounds;
use crate::combinatorics::{Label, LinearOrder};
use crate::error::{Result, ScfError};

/// Position of a cell relative to its predecessor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    East,
    South,
    SouthEast,
}

impl Step {
    pub fn code(self) -> char {
        match self {
            Step::East => 'E',
            Step::South => 'S',
            Step::SouthEast => 'D',
        }
    }

    pub fn from_code(c: char) -> Result<Self> {
        match c {
            'E' => Ok(Step::East),
            'S' => Ok(Step::South),
            'D' => Ok(Step::SouthEast),
            _ => Err(ScfError::Parse(format!("unknown ribbon step '{c}'"))),
        }
    }
}

/// A skew ribbon shape of size n, given by its n−1 steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RibbonShape {
    pub steps: Vec<Step>,
}

impl RibbonShape {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(RibbonShape { steps: s.chars().map(Step::from_code).collect::<Result<_>>()? })
    }

    pub fn size(&self) -> usize {
        self.steps.len() + 1
    }

    /// Row sizes from top to bottom.
    pub fn rows(&self) -> Vec<usize> {
        let mut rows = vec![1];
        for s in &self.steps {
            match s {
                Step::East => *rows.last_mut().unwrap() += 1,
                _ => rows.push(1),
            }
        }
        rows
    }

    /// (column, row) of every cell, rows counted downward.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for s in &self.steps {
            match s {
                Step::East => x += 1,
                Step::South => y += 1,
                Step::SouthEast => {
                    x += 1;
                    y += 1;
                }
            }
            out.push((x, y));
        }
        out
    }
}

impl fmt::Display for RibbonShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.code())?;
        }
        Ok(())
    }
}

/// A shape with the labels of its cells in reading order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RibbonFilling {
    pub shape: RibbonShape,
    pub values: Vec<Label>,
}

impl RibbonFilling {
    /// Labels of each row, top to bottom.
    pub fn row_values(&self) -> Vec<Vec<Label>> {
        let mut out = Vec::new();
        let mut start = 0;
        for len in self.shape.rows() {
            out.push(self.values[start..start + len].to_vec());
            start += len;
        }
        out
    }

    /// ASCII picture with one text line per row.
    pub fn render(&self) -> String {
        let width = self.values.iter().map(|l| l.to_string().len()).max().unwrap_or(1) + 1;
        let cells = self.shape.cells();
        let mut lines: Vec<String> = Vec::new();
        for ((x, y), v) in cells.iter().zip(&self.values) {
            if lines.len() <= *y {
                lines.resize(y + 1, String::new());
            }
            let line = &mut lines[*y];
            let col = x * width;
            while line.len() < col {
                line.push(' ');
            }
            line.push_str(&format!("{:>w$}", v.to_string(), w = width));
        }
        lines.iter().map(|l| l.trim_end()).collect::<Vec<_>>().join("\n")
    }
}

fn check_ground(phi: &LinearOrder, tau: &LinearOrder) -> Result<()> {
    if phi.ground() != tau.ground() {
        return Err(ScfError::GroundMismatch);
    }
    Ok(())
}

/// The filling of `shape` by φ in reading order, if it is standard with
/// respect to τ and every SouthEast step is a τ-ascent.
pub fn fits(phi: &LinearOrder, shape: &RibbonShape, tau: &LinearOrder) -> Result<Option<RibbonFilling>> {
    check_ground(phi, tau)?;
    if shape.size() != phi.len() {
        return Err(ScfError::SizeMismatch { expected: phi.len(), got: shape.size() });
    }
    let tp = tau.positions();
    let s = phi.labels();
    let ok = shape.steps.iter().enumerate().all(|(j, st)| {
        let up = tp.at(s[j]) < tp.at(s[j + 1]);
        match st {
            Step::East | Step::SouthEast => up,
            Step::South => !up,
        }
    });
    Ok(ok.then(|| RibbonFilling { shape: shape.clone(), values: s.to_vec() }))
}

/// Φ_τ(φ): fillings by φ of all shapes it fits, with 1_τ and m_τ in different rows.
/// Descents force South steps, so only ascents branch.
pub fn enumerate_phi_set(phi: &LinearOrder, tau: &LinearOrder) -> Result<Vec<RibbonFilling>> {
    check_ground(phi, tau)?;
    let n = phi.len();
    if n < 2 {
        return Err(ScfError::SizeMismatch { expected: 2, got: n });
    }
    let tp = tau.positions();
    let s = phi.labels();
    let (lo, hi) = (tau.labels()[0], tau.labels()[n - 1]);
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n - 1);
    // row_has: whether the current row already holds 1_τ or m_τ
    fn rec(
        j: usize,
        s: &[Label],
        up: &dyn Fn(usize) -> bool,
        special: &dyn Fn(Label) -> bool,
        row_has: bool,
        steps: &mut Vec<Step>,
        out: &mut Vec<RibbonFilling>,
    ) {
        if j + 1 == s.len() {
            out.push(RibbonFilling { shape: RibbonShape { steps: steps.clone() }, values: s.to_vec() });
            return;
        }
        let next = special(s[j + 1]);
        let choices: &[Step] = if up(j) { &[Step::East, Step::SouthEast] } else { &[Step::South] };
        for &c in choices {
            let has = if c == Step::East {
                if row_has && next {
                    continue;
                }
                row_has || next
            } else {
                next
            };
            steps.push(c);
            rec(j + 1, s, up, special, has, steps, out);
            steps.pop();
        }
    }
    let up = |j: usize| tp.at(s[j]) < tp.at(s[j + 1]);
    let special = |l: Label| l == lo || l == hi;
    rec(0, s, &up, &special, special(s[0]), &mut steps, &mut out);
    Ok(out)
}

/// Σ_{γ ∈ Φ_τ(φ)} (−1)^{n−ℓ(γ)} Π over rows avoiding 1_τ and m_τ of (γ_i t + 1).
pub fn ribbon_rhs(phi: &LinearOrder, tau: &LinearOrder) -> Result<IntPoly> {
    let n = phi.len();
    let (lo, hi) = (tau.first(), tau.last());
    let mut acc = IntPoly::zero();
    for g in enumerate_phi_set(phi, tau)? {
        let rows = g.row_values();
        let mut term = IntPoly::constant(if (n - rows.len()) % 2 == 0 { 1 } else { -1 });
        for r in rows.iter().filter(|r| !r.iter().any(|l| Some(*l) == lo || Some(*l) == hi)) {
            term = &term * &IntPoly::from_i64(&[1, r.len() as i64]);
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// (t−1)^mt t^rst (t+1)^io from the rising runs of φ relative to τ.
pub fn ribbon_lhs(phi: &LinearOrder, tau: &LinearOrder) -> Result<IntPoly> {
    Ok(global_stats(phi, tau)?.product())
}

/// The pairs (φ̂_i, τ̂_i) obtained from the rising runs of φ by attaching
/// m_τ in front and 1_τ behind when the run lacks them.
pub fn hatted_pairs(phi: &LinearOrder, tau: &LinearOrder) -> Result<Vec<(LinearOrder, LinearOrder)>> {
    check_ground(phi, tau)?;
    let n = phi.len();
    if n < 2 {
        return Err(ScfError::SizeMismatch { expected: 2, got: n });
    }
    let (lo, hi) = (tau.labels()[0], tau.labels()[n - 1]);
    let mut out = Vec::new();
    for (s, e) in run_bounds(phi, &tau.positions()) {
        let run = &phi.labels()[s..e];
        let (has_lo, has_hi) = (run.contains(&lo), run.contains(&hi));
        let mut p = Vec::new();
        let mut t = Vec::new();
        if !has_hi {
            p.push(hi);
        }
        if !has_lo {
            t.push(lo);
        }
        p.extend_from_slice(run);
        t.extend_from_slice(run);
        if !has_lo {
            p.push(lo);
        }
        if !has_hi {
            t.push(hi);
        }
        out.push((LinearOrder::new(p)?, LinearOrder::new(t)?));
    }
    Ok(out)
}

/// Whether z′_{φ,τ} equals the product of z′ over the hatted pairs, both
/// sides computed by enumerating fillings.
pub fn zprime_factorization_check(phi: &LinearOrder, tau: &LinearOrder) -> Result<bool> {
    let whole = ribbon_rhs(phi, tau)?;
    let mut prod = IntPoly::one();
    for (p, t) in hatted_pairs(phi, tau)? {
        prod = &prod * &ribbon_rhs(&p, &t)?;
    }
    Ok(whole == prod)
}

/// Σ over compositions γ of n with at least two parts of
/// (−1)^{n−ℓ} (γ_2 t+1)⋯(γ_{ℓ−1} t+1), by direct enumeration.
pub fn composition_sum(n: usize) -> IntPoly {
    let mut acc = IntPoly::zero();
    if n < 2 {
        return acc;
    }
    for mask in 0u64..(1 << (n - 1)) {
        if mask == 0 {
            continue;
        }
        let mut parts = Vec::new();
        let mut len = 1;
        for g in 0..n - 1 {
            if mask & (1 << g) != 0 {
                parts.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        parts.push(len);
        let l = parts.len();
        let mut term = IntPoly::constant(if (n - l) % 2 == 0 { 1 } else { -1 });
        for &p in &parts[1..l - 1] {
            term = &term * &IntPoly::from_i64(&[1, p as i64]);
        }
        acc = &acc + &term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_minus_one(k: u32) -> IntPoly {
        IntPoly::from_i64(&[-1, 1]).pow(k)
    }

    #[test]
    fn displayed_filling() {
        let phi = LinearOrder::from_u8(&[1, 3, 5, 6, 2, 9, 4, 7, 8]);
        let shape = RibbonShape::parse("EDESDSEE").unwrap();
        let g = fits(&phi, &shape, &LinearOrder::identity(9)).unwrap().unwrap();
        assert_eq!(shape.rows(), vec![2, 2, 1, 1, 3]);
        assert_eq!(g.row_values()[4], vec![Label(4), Label(7), Label(8)]);
        assert_eq!(g.render(), " 1 3\n     5 6\n       2\n         9\n         4 7 8");
    }

    #[test]
    fn single_row_and_column() {
        let e = LinearOrder::identity(4);
        assert!(fits(&e, &RibbonShape::parse("EEE").unwrap(), &e).unwrap().is_some());
        assert!(fits(&e.reversed(), &RibbonShape::parse("EEE").unwrap(), &e).unwrap().is_none());
        assert!(fits(&e.reversed(), &RibbonShape::parse("SSS").unwrap(), &e).unwrap().is_some());
        assert!(fits(&e, &RibbonShape::parse("SSS").unwrap(), &e).unwrap().is_none());
        assert!(fits(&e, &RibbonShape::parse("EE").unwrap(), &e).is_err());
    }

    #[test]
    fn fourteen_term_example() {
        let phi = LinearOrder::from_u8(&[1, 3, 5, 6, 2, 4]);
        let e = LinearOrder::identity(6);
        assert_eq!(enumerate_phi_set(&phi, &e).unwrap().len(), 14);
        let expect = &t_minus_one(2) * &IntPoly::monomial(1, 2);
        assert_eq!(ribbon_rhs(&phi, &e).unwrap(), expect);
        assert_eq!(ribbon_lhs(&phi, &e).unwrap(), expect);
    }

    #[test]
    fn identity_order_counts() {
        for n in 2..8 {
            let e = LinearOrder::identity(n);
            assert_eq!(enumerate_phi_set(&e, &e).unwrap().len(), (1 << (n - 1)) - 1);
            assert_eq!(ribbon_rhs(&e, &e).unwrap(), t_minus_one(n as u32 - 2));
        }
        let e2 = LinearOrder::identity(2);
        assert_eq!(enumerate_phi_set(&e2, &e2).unwrap().len(), 1);
    }

    #[test]
    fn composition_lemma() {
        for n in 2..=12 {
            assert_eq!(composition_sum(n), t_minus_one(n as u32 - 2), "n={n}");
        }
    }

    #[test]
    fn hatted_pairs_of_a_two_run_order() {
        let phi = LinearOrder::from_u8(&[1, 3, 5, 6, 2, 4]);
        let h = hatted_pairs(&phi, &LinearOrder::identity(6)).unwrap();
        assert_eq!(h[0], (LinearOrder::from_u8(&[1, 3, 5, 6]), LinearOrder::from_u8(&[1, 3, 5, 6])));
        assert_eq!(h[1], (LinearOrder::from_u8(&[6, 2, 4, 1]), LinearOrder::from_u8(&[1, 2, 4, 6])));
        assert!(zprime_factorization_check(&phi, &LinearOrder::identity(6)).unwrap());
    }
}
