//! Supercharacter antipodes: the leading term for any (φ,λ) and the full
//! expansion for a single arc from the τ-minimum to the τ-maximum.

use crate::coeff::{IntPoly, RationalQ};
use crate::combinatorics::arcs::dim_with;
use crate::combinatorics::enumerate::{enumerate_arcsets, enumerate_orders};
use crate::combinatorics::factor::{atomic_factorization, run_bounds};
use crate::combinatorics::{ArcSet, Label, LinearOrder};
use crate::error::{Result, ScfError};

use crate::algebra::{antipode_via_kappa, Basis, HopfElement, Key};

/// ((−1)^k, (φ_k⋯φ_1, λ)) for the atomic factorization (φ_1,λ_1)⋯(φ_k,λ_k).
pub fn chi_antipode_leading(phi: &LinearOrder, lambda: &ArcSet) -> Result<(i64, Key)> {
    let factors = atomic_factorization(phi, lambda)?;
    let k = factors.len();
    let labels: Vec<Label> = factors.iter().rev().flat_map(|(o, _)| o.labels().to_vec()).collect();
    let order = LinearOrder::new(labels)?;
    Ok((if k % 2 == 0 { 1 } else { -1 }, Key::unchecked(order, lambda.clone())))
}

/// Check the leading term of S(χ_{(φ,λ)}) against the reference antipode:
/// its coefficient is (−1)^k and every other key has strictly smaller dim.
pub fn check_chi_triangularity(phi: &LinearOrder, lambda: &ArcSet) -> Result<bool> {
    let (sign, lead) = chi_antipode_leading(phi, lambda)?;
    let s = antipode_via_kappa(&HopfElement::basis_element(Basis::Chi, phi.clone(), lambda.clone())?)?;
    if s.coeff(&lead) != RationalQ::from_int(sign) {
        return Ok(false);
    }
    let d = dim_with(&phi.positions(), lambda);
    Ok(s.terms().keys().filter(|k| **k != lead).all(|k| dim_with(&k.order.positions(), &k.arcs) < d))
}

/// One factor aψb of an arc factorization. Degenerate segments have a = b
/// and no interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: Label,
    pub inner: Vec<Label>,
    pub b: Label,
}

/// φ = φ_0 (a_1ψ_1b_1) φ_1 ⋯ (a_sψ_sb_s) φ_s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcFactorization {
    pub segments: Vec<Segment>,
    pub fillers: Vec<Vec<Label>>,
}

impl ArcFactorization {
    pub fn s(&self) -> usize {
        self.segments.len()
    }

    /// Concatenate fillers and segments back into a sequence.
    pub fn reassemble(&self) -> Vec<Label> {
        let mut out = self.fillers[0].clone();
        for (seg, fill) in self.segments.iter().zip(&self.fillers[1..]) {
            out.push(seg.a);
            out.extend_from_slice(&seg.inner);
            if seg.b != seg.a {
                out.push(seg.b);
            }
            out.extend_from_slice(fill);
        }
        out
    }
}

/// The factorization of φ cut out by the arcs of μ, with 1_τ and m_τ as
/// degenerate segments when they are not arc endpoints. `None` when some
/// segment is not τ-increasing or two segments overlap.
pub fn arc_factorization(phi: &LinearOrder, mu: &ArcSet, tau: &LinearOrder) -> Result<Option<ArcFactorization>> {
    mu.validate(phi)?;
    mu.validate(tau)?;
    if phi.ground() != tau.ground() {
        return Err(ScfError::GroundMismatch);
    }
    let (Some(lo), Some(hi)) = (tau.first(), tau.last()) else {
        return Ok(None);
    };
    let (pp, tp) = (phi.positions(), tau.positions());
    let s = phi.labels();
    let mut spans: Vec<(usize, usize)> = mu.arcs().iter().map(|a| (pp.at(a.left), pp.at(a.right))).collect();
    let touches = |l: Label| mu.arcs().iter().any(|a| a.left == l || a.right == l);
    for l in [lo, hi] {
        if !touches(l) && !spans.contains(&(pp.at(l), pp.at(l))) {
            spans.push((pp.at(l), pp.at(l)));
        }
    }
    spans.sort_unstable();
    for &(i, k) in &spans {
        if (i..k).any(|p| tp.at(s[p + 1]) < tp.at(s[p])) {
            return Ok(None);
        }
    }
    if spans.windows(2).any(|w| w[1].0 <= w[0].1) {
        return Ok(None);
    }
    let mut segments = Vec::with_capacity(spans.len());
    let mut fillers = Vec::with_capacity(spans.len() + 1);
    let mut cursor = 0;
    for &(i, k) in &spans {
        fillers.push(s[cursor..i].to_vec());
        let inner = if k > i { s[i + 1..k].to_vec() } else { Vec::new() };
        segments.push(Segment { a: s[i], inner, b: s[k] });
        cursor = k + 1;
    }
    fillers.push(s[cursor..].to_vec());
    Ok(Some(ArcFactorization { segments, fillers }))
}

/// The statistics mt, io, rst of a pair, with the segment count s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZStats {
    pub mt: usize,
    pub io: usize,
    pub rst: usize,
    pub s: usize,
}

impl ZStats {
    /// (t−1)^mt · t^rst · (t+1)^io.
    pub fn product(&self) -> IntPoly {
        let p = &IntPoly::from_i64(&[-1, 1]).pow(self.mt as u32) * &IntPoly::monomial(1, self.rst);
        &p * &IntPoly::from_i64(&[1, 1]).pow(self.io as u32)
    }

    /// The product carrying the sign (−1)^{mt+io+rst}, i.e. (−1) to the total
    /// filler length. For μ = ∅ this is (−1)^n times the product.
    pub fn z(&self) -> IntPoly {
        let p = self.product();
        if (self.mt + self.io + self.rst) % 2 == 0 {
            p
        } else {
            -&p
        }
    }
}

/// Lengths of the maximal strictly increasing runs of a sequence.
fn run_lengths(seq: &[i64]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut len = 0;
    for (i, &x) in seq.iter().enumerate() {
        if i > 0 && x < seq[i - 1] {
            out.push(len);
            len = 0;
        }
        len += 1;
    }
    if len > 0 {
        out.push(len);
    }
    out
}

fn moved(runs: &[usize]) -> usize {
    runs.iter().filter(|&&l| l > 1).map(|l| l - 2).sum()
}

/// Statistics of the augmented filler blocks b_iφ_ia_{i+1}, where b_0 is a
/// fresh maximum and a_{s+1} a fresh minimum.
pub fn z_stats(phi: &LinearOrder, tau: &LinearOrder, mu: &ArcSet) -> Result<ZStats> {
    let f = arc_factorization(phi, mu, tau)?.ok_or(ScfError::NoFactorization)?;
    let tp = tau.positions();
    let rank = |l: Label| tp.at(l) as i64;
    let s = f.s();
    let (mut mt, mut io, mut len) = (0, 0, 0);
    for (i, fill) in f.fillers.iter().enumerate() {
        let head = if i == 0 { tau.len() as i64 } else { rank(f.segments[i - 1].b) };
        let tail = if i == s { -1 } else { rank(f.segments[i].a) };
        let mut seq = vec![head];
        seq.extend(fill.iter().map(|&l| rank(l)));
        seq.push(tail);
        let runs = run_lengths(&seq);
        mt += moved(&runs);
        io += runs.iter().skip(1).take(runs.len().saturating_sub(2)).filter(|&&l| l == 1).count();
        len += fill.len();
    }
    Ok(ZStats { mt, io, rst: len - mt - io, s })
}

/// z^μ_{φ,τ}(t).
pub fn z_value(phi: &LinearOrder, tau: &LinearOrder, mu: &ArcSet) -> Result<IntPoly> {
    Ok(z_stats(phi, tau, mu)?.z())
}

/// Statistics of φ from its own rising runs relative to τ: mt as above,
/// io counts singleton runs avoiding 1_τ and m_τ, rst = n − 2 − mt − io.
/// The segment count is that of μ = ∅.
pub fn global_stats(phi: &LinearOrder, tau: &LinearOrder) -> Result<ZStats> {
    if phi.ground() != tau.ground() {
        return Err(ScfError::GroundMismatch);
    }
    let n = phi.len();
    if n < 2 {
        return Err(ScfError::SizeMismatch { expected: 2, got: n });
    }
    let tp = tau.positions();
    let (lo, hi) = (tau.labels()[0], tau.labels()[n - 1]);
    let runs = run_bounds(phi, &tp);
    let lens: Vec<usize> = runs.iter().map(|&(s, e)| e - s).collect();
    let mt = moved(&lens);
    let io = runs
        .iter()
        .filter(|&&(s, e)| e - s == 1 && phi.labels()[s] != lo && phi.labels()[s] != hi)
        .count();
    Ok(ZStats { mt, io, rst: n - 2 - mt - io, s: 2 })
}

/// Coefficient (−1)^s t^{s−1} z^μ_{φ,τ}(t) of χ_{(φ,μ)} in S(χ_{(τ,1_τ⌢m_τ)}).
pub fn single_arc_coefficient(phi: &LinearOrder, tau: &LinearOrder, mu: &ArcSet) -> Result<IntPoly> {
    let st = z_stats(phi, tau, mu)?;
    let p = &IntPoly::monomial(if st.s % 2 == 0 { 1 } else { -1 }, st.s - 1) * &st.z();
    Ok(p)
}

/// S(χ_{(τ,1_τ⌢m_τ)}) from arc factorizations and z-statistics.
pub fn antipode_chi_single_arc(tau: &LinearOrder) -> Result<HopfElement> {
    let n = tau.len();
    if n < 2 {
        return Err(ScfError::SizeMismatch { expected: 2, got: n });
    }
    let tp = tau.positions();
    let mut out = HopfElement::zero(Basis::Chi, tau.ground());
    for phi in enumerate_orders(&tau.ground()) {
        for mu in enumerate_arcsets(&phi) {
            if !mu.valid_with(&tp) || arc_factorization(&phi, &mu, tau)?.is_none() {
                continue;
            }
            let c = RationalQ::subst_t(&single_arc_coefficient(&phi, tau, &mu)?);
            out.add_term(Key::unchecked(phi.clone(), mu), &c);
        }
    }
    Ok(out)
}

/// Σ_φ t·z^∅_{φ,ε_n}(t): the total coefficient of the arcless keys in
/// S(χ_{(ε_n,1⌢n)}), as a polynomial in t = q − 1.
pub fn trivial_coefficient_sum(n: usize) -> Result<IntPoly> {
    let e = LinearOrder::identity(n);
    let mut acc = IntPoly::zero();
    for phi in enumerate_orders(&e.ground()) {
        acc = &acc + &(&IntPoly::monomial(1, 1) * &z_value(&phi, &e, &ArcSet::empty())?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sixteen() -> (LinearOrder, LinearOrder) {
        (LinearOrder::from_u8(&[11, 12, 10, 7, 8, 9, 1, 6, 13, 14, 16, 2, 3, 4, 5, 15]), LinearOrder::identity(16))
    }

    #[test]
    fn sixteen_point_factorization() {
        let (phi, tau) = sixteen();
        let mu = ArcSet::from_pairs(&[(2, 5), (7, 8), (13, 16)]);
        let f = arc_factorization(&phi, &mu, &tau).unwrap().unwrap();
        assert_eq!(f.s(), 4);
        assert_eq!(f.segments[1], Segment { a: Label(1), inner: vec![], b: Label(1) });
        assert_eq!(f.reassemble(), phi.labels().to_vec());
    }

    #[test]
    fn sixteen_point_coefficient() {
        let (phi, tau) = sixteen();
        let mu = ArcSet::from_pairs(&[(2, 5), (7, 8)]);
        let st = z_stats(&phi, &tau, &mu).unwrap();
        assert_eq!((st.mt, st.io, st.rst, st.s), (3, 1, 4, 4));
        let expect = &(&IntPoly::from_i64(&[-1, 1]).pow(3) * &IntPoly::monomial(1, 7)) * &IntPoly::from_i64(&[1, 1]);
        assert_eq!(single_arc_coefficient(&phi, &tau, &mu).unwrap(), expect);
    }

    #[test]
    fn global_statistics() {
        let phi = LinearOrder::from_u8(&[1, 3, 5, 6, 2, 9, 4, 8, 7]);
        let e = LinearOrder::identity(9);
        let g = global_stats(&phi, &e).unwrap();
        assert_eq!((g.mt, g.io, g.rst), (2, 1, 4));
        let z = z_stats(&phi, &e, &ArcSet::empty()).unwrap();
        assert_eq!((z.mt, z.io, z.rst), (2, 1, 4));
        for n in 2..7 {
            let e = LinearOrder::identity(n);
            let st = z_stats(&e, &e, &ArcSet::empty()).unwrap();
            assert_eq!((st.mt, st.io, st.rst, st.s), (n - 2, 0, 0, 2));
        }
    }

    #[test]
    fn degenerate_and_missing_factorizations() {
        let e = LinearOrder::identity(4);
        let f = arc_factorization(&e, &ArcSet::empty(), &e).unwrap().unwrap();
        assert_eq!(f.segments.iter().map(|s| (s.a.0, s.b.0)).collect::<Vec<_>>(), vec![(1, 1), (4, 4)]);
        // crossing arcs overlap in φ
        assert!(arc_factorization(&e, &ArcSet::from_pairs(&[(1, 3), (2, 4)]), &e).unwrap().is_none());
        // segment 3 2 1 4 of the arc 1⌢4 is not increasing
        let phi = LinearOrder::from_u8(&[1, 3, 2, 4]);
        assert!(arc_factorization(&phi, &ArcSet::from_pairs(&[(1, 4)]), &e).unwrap().is_none());
        assert!(z_stats(&phi, &e, &ArcSet::from_pairs(&[(1, 4)])).is_err());
    }

    #[test]
    fn leading_terms() {
        let e2 = LinearOrder::identity(2);
        let (s, k) = chi_antipode_leading(&e2, &ArcSet::empty()).unwrap();
        assert_eq!((s, k.order), (1, LinearOrder::from_u8(&[2, 1])));
        let (s, k) = chi_antipode_leading(&e2, &ArcSet::from_pairs(&[(1, 2)])).unwrap();
        assert_eq!((s, k.order), (-1, e2.clone()));
        assert!(check_chi_triangularity(&LinearOrder::from_u8(&[3, 1, 2]), &ArcSet::from_pairs(&[(1, 2)])).unwrap());
    }

    #[test]
    fn two_point_single_arc() {
        let e2 = LinearOrder::identity(2);
        let s = antipode_chi_single_arc(&e2).unwrap();
        assert_eq!(s.to_string(), "(q - 1)*X[1 2 | ] - X[1 2 | 1-2] + (q - 1)*X[2 1 | ]");
    }
}
