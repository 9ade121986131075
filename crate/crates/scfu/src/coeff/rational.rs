use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::poly::IntPoly;
use crate::error::{Result, ScfError};

type Small = SmallVec<[i64; 4]>;

/// Exact rational function in q with integer coefficients.
///
/// Values are kept in lowest terms with a denominator of positive leading
/// coefficient. Laurent polynomials whose coefficients fit in an `i64` use a
/// compact representation; everything else falls back to a numerator and
/// denominator over arbitrary-precision integers. The representation is
/// canonical, so structural equality is equality of rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalQ(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    /// Σ coeffs[i] q^(shift+i), with nonzero first and last coefficient;
    /// zero is the empty vector with shift 0.
    Laurent { shift: i32, coeffs: Small },
    General { num: IntPoly, den: IntPoly },
}

fn trim(mut shift: i32, mut c: Small) -> Repr {
    while c.last() == Some(&0) {
        c.pop();
    }
    let lead = c.iter().take_while(|&&x| x == 0).count();
    if lead == c.len() {
        return Repr::Laurent { shift: 0, coeffs: Small::new() };
    }
    if lead > 0 {
        c.drain(..lead);
        shift += lead as i32;
    }
    Repr::Laurent { shift, coeffs: c }
}

impl RationalQ {
    pub fn zero() -> Self {
        RationalQ(Repr::Laurent { shift: 0, coeffs: Small::new() })
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        RationalQ(trim(0, SmallVec::from_slice(&[v])))
    }

    /// c q^e for any integer e.
    pub fn monomial(c: i64, e: i32) -> Self {
        RationalQ(trim(e, SmallVec::from_slice(&[c])))
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// t = q − 1.
    pub fn t() -> Self {
        RationalQ(trim(0, SmallVec::from_slice(&[-1, 1])))
    }

    /// Σ coeffs[i] q^(shift+i).
    pub fn laurent(shift: i32, coeffs: &[i64]) -> Self {
        RationalQ(trim(shift, SmallVec::from_slice(coeffs)))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::normalize(p, IntPoly::one()).expect("unit denominator")
    }

    /// num / den in lowest terms.
    pub fn from_polys(num: IntPoly, den: IntPoly) -> Result<Self> {
        Self::normalize(num, den)
    }

    fn normalize(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(ScfError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (mut num, mut den) = if den.is_monomial() {
            let k = den.degree().unwrap();
            let c = den.leading();
            let g = num.content().gcd(&c);
            let p = k.min(num.low_degree().unwrap());
            (num.div_scalar_exact(&g).shift_down(p), den.div_scalar_exact(&g).shift_down(p))
        } else {
            let g = num.gcd(&den);
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        if den.is_monomial() && den.leading().is_one() {
            let k = den.degree().unwrap() as i32;
            let low = num.low_degree().unwrap();
            if let Some(c) = num.shift_down(low).to_i64_vec() {
                return Ok(RationalQ(trim(low as i32 - k, c.into_iter().collect())));
            }
        }
        Ok(RationalQ(Repr::General { num, den }))
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Laurent { coeffs, .. } if coeffs.is_empty())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Laurent { shift: 0, coeffs } if coeffs.as_slice() == [1])
    }

    /// Whether the leading coefficient of the numerator is negative.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Laurent { coeffs, .. } => coeffs.last().is_some_and(|&c| c < 0),
            Repr::General { num, .. } => num.leading().is_negative(),
        }
    }

    /// Whether the value is c·q^e for some integer c and e.
    pub fn is_monomial(&self) -> bool {
        match &self.0 {
            Repr::Laurent { coeffs, .. } => coeffs.len() == 1,
            Repr::General { num, den } => num.is_monomial() && den.is_monomial() && den.leading().is_one(),
        }
    }

    /// Whether the denominator is a power of q.
    pub fn is_laurent(&self) -> bool {
        match &self.0 {
            Repr::Laurent { .. } => true,
            Repr::General { den, .. } => den.is_monomial() && den.leading().is_one(),
        }
    }

    /// Whether the value is a polynomial in q.
    pub fn is_polynomial(&self) -> bool {
        match &self.0 {
            Repr::Laurent { shift, .. } => *shift >= 0,
            Repr::General { den, .. } => den.is_one(),
        }
    }

    pub fn numer(&self) -> IntPoly {
        self.parts().0
    }

    pub fn denom(&self) -> IntPoly {
        self.parts().1
    }

    /// Numerator and denominator polynomials.
    pub fn parts(&self) -> (IntPoly, IntPoly) {
        match &self.0 {
            Repr::Laurent { shift, coeffs } => {
                let p = IntPoly::from_i64(coeffs);
                if *shift >= 0 {
                    (p.shift_up(*shift as usize), IntPoly::one())
                } else {
                    (p, IntPoly::monomial(1, (-shift) as usize))
                }
            }
            Repr::General { num, den } => (num.clone(), den.clone()),
        }
    }

    fn general_op(&self, o: &Self, f: impl Fn(&IntPoly, &IntPoly, &IntPoly, &IntPoly) -> (IntPoly, IntPoly)) -> Self {
        let (a, b) = self.parts();
        let (c, d) = o.parts();
        let (n, m) = f(&a, &b, &c, &d);
        Self::normalize(n, m).expect("nonzero denominators")
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { RationalQ::one().checked_div(self)? } else { self.clone() };
        let mut r = RationalQ::one();
        for _ in 0..e.unsigned_abs() {
            r = &r * &base;
        }
        Ok(r)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(ScfError::DivisionByZero);
        }
        if let Repr::Laurent { shift: s2, coeffs: c2 } = &o.0 {
            if c2.len() == 1 && c2[0].abs() == 1 {
                let sign = c2[0];
                if let Repr::Laurent { shift, coeffs } = &self.0 {
                    return Ok(RationalQ(trim(shift - s2, coeffs.iter().map(|x| x * sign).collect())));
                }
            }
        }
        let (a, b) = self.parts();
        let (c, d) = o.parts();
        Self::normalize(&a * &d, &b * &c)
    }

    pub fn scale(&self, k: i64) -> Self {
        self * &RationalQ::from_int(k)
    }

    /// Value at q = x.
    pub fn eval_at(&self, x: &BigRational) -> Result<BigRational> {
        let (n, d) = self.parts();
        let dv = d.eval(x);
        if dv.is_zero() {
            return Err(ScfError::Pole);
        }
        Ok(n.eval(x) / dv)
    }

    /// Substitute t = q − 1 into a polynomial in t.
    pub fn subst_t(p: &IntPoly) -> Self {
        Self::from_poly(p.translate(-1))
    }

    /// Rewrite a polynomial in q as a polynomial in t = q − 1.
    pub fn to_t_poly(&self) -> Option<IntPoly> {
        if !self.is_polynomial() {
            return None;
        }
        Some(self.numer().translate(1))
    }

    /// Rendering with a separate spacing style for numerators in a fraction.
    pub fn render(&self) -> String {
        let (n, d) = self.parts();
        if d.is_one() {
            return n.render("q", true);
        }
        let wrap = |p: &IntPoly, bare: bool| {
            if bare {
                p.render("q", false)
            } else {
                format!("({})", p.render("q", false))
            }
        };
        let d_bare = d.is_monomial() && (d.degree() == Some(0) || d.leading() == BigInt::from(1));
        format!("{}/{}", wrap(&n, n.is_monomial()), wrap(&d, d_bare))
    }

    pub fn render_latex(&self) -> String {
        let (n, d) = self.parts();
        if d.is_one() {
            n.render_latex("q")
        } else {
            format!("\\frac{{{}}}{{{}}}", n.render_latex("q"), d.render_latex("q"))
        }
    }

    /// Render after rewriting as a polynomial in t, when possible.
    pub fn render_in_t(&self) -> Option<String> {
        self.to_t_poly().map(|p| p.render("t", true))
    }

    /// Parse an expression in q and t such as "q^3 - 2*q + 1" or "(q-1)/q^2".
    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse_rational(s)
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn laurent_add(s1: i32, a: &[i64], s2: i32, b: &[i64]) -> Option<Repr> {
    if a.is_empty() {
        return Some(trim(s2, b.iter().copied().collect()));
    }
    if b.is_empty() {
        return Some(trim(s1, a.iter().copied().collect()));
    }
    let lo = s1.min(s2);
    let hi = (s1 + a.len() as i32).max(s2 + b.len() as i32);
    let mut c: Small = SmallVec::from_elem(0, (hi - lo) as usize);
    for (i, x) in a.iter().enumerate() {
        c[(s1 - lo) as usize + i] = *x;
    }
    for (i, x) in b.iter().enumerate() {
        let slot = &mut c[(s2 - lo) as usize + i];
        *slot = slot.checked_add(*x)?;
    }
    Some(trim(lo, c))
}

fn laurent_mul(s1: i32, a: &[i64], s2: i32, b: &[i64]) -> Option<Repr> {
    if a.is_empty() || b.is_empty() {
        return Some(trim(0, Small::new()));
    }
    let mut c: Small = SmallVec::from_elem(0, a.len() + b.len() - 1);
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] = c[i + j].checked_add(x.checked_mul(*y)?)?;
        }
    }
    Some(trim(s1 + s2, c))
}

impl Add for &RationalQ {
    type Output = RationalQ;
    fn add(self, o: &RationalQ) -> RationalQ {
        if let (Repr::Laurent { shift: s1, coeffs: a }, Repr::Laurent { shift: s2, coeffs: b }) = (&self.0, &o.0) {
            if let Some(r) = laurent_add(*s1, a, *s2, b) {
                return RationalQ(r);
            }
        }
        self.general_op(o, |a, b, c, d| (&(a * d) + &(c * b), b * d))
    }
}

impl Sub for &RationalQ {
    type Output = RationalQ;
    fn sub(self, o: &RationalQ) -> RationalQ {
        self + &(-o)
    }
}

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, o: &RationalQ) -> RationalQ {
        if let (Repr::Laurent { shift: s1, coeffs: a }, Repr::Laurent { shift: s2, coeffs: b }) = (&self.0, &o.0) {
            if let Some(r) = laurent_mul(*s1, a, *s2, b) {
                return RationalQ(r);
            }
        }
        self.general_op(o, |a, b, c, d| (a * c, b * d))
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        match &self.0 {
            Repr::Laurent { shift, coeffs } => match coeffs.iter().map(|x| x.checked_neg()).collect::<Option<Small>>() {
                Some(c) => RationalQ(Repr::Laurent { shift: *shift, coeffs: c }),
                None => {
                    let (n, d) = self.parts();
                    RationalQ::normalize(-&n, d).expect("nonzero denominator")
                }
            },
            Repr::General { num, den } => RationalQ(Repr::General { num: -num, den: den.clone() }),
        }
    }
}

impl Neg for RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalQ {
            type Output = RationalQ;
            fn $m(self, o: RationalQ) -> RationalQ {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&RationalQ> for RationalQ {
    fn add_assign(&mut self, o: &RationalQ) {
        *self = &*self + o;
    }
}

impl From<i64> for RationalQ {
    fn from(v: i64) -> Self {
        RationalQ::from_int(v)
    }
}

impl From<BigInt> for RationalQ {
    fn from(v: BigInt) -> Self {
        RationalQ::from_poly(IntPoly::constant(v))
    }
}

impl Zero for RationalQ {
    fn zero() -> Self {
        RationalQ::zero()
    }
    fn is_zero(&self) -> bool {
        RationalQ::is_zero(self)
    }
}

impl One for RationalQ {
    fn one() -> Self {
        RationalQ::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RationalQ {
        RationalQ::q()
    }

    #[test]
    fn spec_examples() {
        let a = &q() - &RationalQ::one();
        let b = &q() + &RationalQ::one();
        assert_eq!((&a * &b).to_string(), "q^2 - 1");
        let inv2 = RationalQ::monomial(1, -2);
        assert_eq!((&inv2 + &inv2).to_string(), "2/q^2");
        let d = &RationalQ::monomial(1, -1) - &inv2;
        assert_eq!(d.to_string(), "(q-1)/q^2");
        assert_eq!(RationalQ::laurent(0, &[1, -2, 0, 1]).to_string(), "q^3 - 2*q + 1");
    }

    #[test]
    fn general_fractions() {
        let t = RationalQ::t();
        let x = RationalQ::one().checked_div(&t).unwrap();
        assert!(!x.is_laurent());
        assert_eq!(x.to_string(), "1/(q-1)");
        assert_eq!(&x * &t, RationalQ::one());
        let y = RationalQ::from_polys(IntPoly::from_i64(&[-1, 0, 1]), IntPoly::from_i64(&[-2, 2])).unwrap();
        assert_eq!(y.to_string(), "(q+1)/2");
        assert!(RationalQ::one().checked_div(&RationalQ::zero()).is_err());
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = RationalQ::from_int(i64::MAX);
        let s = &big + &big;
        assert_eq!(s.numer(), IntPoly::constant(BigInt::from(i64::MAX) * 2));
        assert_eq!(&s - &big, big);
        let m = &big * &big;
        assert_eq!(m.checked_div(&big).unwrap(), big);
    }

    #[test]
    fn substitution_and_evaluation() {
        let t2 = IntPoly::monomial(1, 2);
        assert_eq!(RationalQ::subst_t(&t2), RationalQ::laurent(0, &[1, -2, 1]));
        // (t-1)^2 t^2 at t = 2
        let p = &IntPoly::from_i64(&[-1, 1]).pow(2) * &IntPoly::monomial(1, 2);
        let v = RationalQ::subst_t(&p).eval_at(&BigRational::from_integer(3.into())).unwrap();
        assert_eq!(v, BigRational::from_integer(4.into()));
        let z = &(&IntPoly::from_i64(&[-1, 1]).pow(3) * &IntPoly::monomial(1, 7)) * &IntPoly::from_i64(&[1, 1]);
        let v = RationalQ::subst_t(&z).eval_at(&BigRational::from_integer(2.into())).unwrap();
        assert!(v.is_zero());
        let pole = RationalQ::monomial(1, -1);
        assert_eq!(pole.eval_at(&BigRational::zero()), Err(ScfError::Pole));
        assert_eq!(RationalQ::laurent(0, &[-1, 1]).to_t_poly(), Some(IntPoly::x()));
    }
}
