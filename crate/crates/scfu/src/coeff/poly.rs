use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// `c[d]` is the coefficient of degree `d`; there are no trailing zeros, so
/// the zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(v: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![v.into()])
    }

    /// The polynomial x.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(coef: impl Into<BigInt>, deg: usize) -> Self {
        let mut c = vec![BigInt::zero(); deg];
        c.push(coef.into());
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    /// Coefficient of the given degree.
    pub fn coeff(&self, d: usize) -> BigInt {
        self.c.get(d).cloned().unwrap_or_default()
    }

    /// Nonzero (degree, coefficient) pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.c.iter().enumerate().filter(|(_, v)| !v.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Smallest degree with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn leading(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    /// Whether the polynomial has a single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.c.iter().filter(|x| !x.is_zero()).count() == 1
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.c.iter().map(|x| x * k).collect())
    }

    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.c.iter().map(|x| x / k).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.c.iter().cloned());
        IntPoly { c }
    }

    /// Divide by x^k; the low coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.c.iter().take(k).all(|x| x.is_zero()));
        Self::from_coeffs(self.c.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = IntPoly::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        self.div_scalar_exact(&g)
    }

    /// Pseudo-remainder of self by d.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-remainder by zero");
        let lc = d.leading();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.leading();
            let t = IntPoly::monomial(lr, rd - dd);
            r = &r.scale(&lc) - &(&t * d);
        }
        r
    }

    /// Exact division; `None` when d does not divide self over the integers.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lc = d.leading();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.c.len().saturating_sub(dd)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                return None;
            }
            let (qc, rem) = r.leading().div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            let t = IntPoly::monomial(qc.clone(), rd - dd);
            q[rd - dd] = qc;
            r = &r - &(&t * d);
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Greatest common divisor over the integers, positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&cont)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.c.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.c.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// p(x + a).
    pub fn translate(&self, a: i64) -> IntPoly {
        let lin = IntPoly::from_i64(&[a, 1]);
        self.c.iter().rev().fold(IntPoly::zero(), |acc, c| &(&acc * &lin) + &IntPoly::constant(c.clone()))
    }

    /// Coefficients as i64 if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.c.iter().map(|x| x.to_i64()).collect()
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.c.iter().all(|x| !x.is_negative())
    }

    /// Render with the given variable name, highest degree first.
    pub fn render(&self, var: &str, spaced: bool) -> String {
        self.render_impl(var, spaced, false)
    }

    pub fn render_latex(&self, var: &str) -> String {
        self.render_impl(var, true, true)
    }

    fn render_impl(&self, var: &str, spaced: bool, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (d, c)) in self.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else if spaced {
                s.push_str(if neg { " - " } else { " + " });
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let mono = match (d, latex) {
                (0, _) => String::new(),
                (1, _) => var.to_string(),
                (_, false) => format!("{var}^{d}"),
                (_, true) => format!("{var}^{{{d}}}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else if latex {
                s.push_str(&format!("{a}{mono}"));
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("q", true))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.c.len().max(o.c.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.c.len().max(o.c.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(c)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { c: self.c.iter().map(|x| -x).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, o: IntPoly) -> IntPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = IntPoly::from_i64(&[-1, 1]);
        let b = IntPoly::from_i64(&[1, 1]);
        assert_eq!(&a * &b, IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!((&a * &b).div_exact(&a), Some(b.clone()));
        assert_eq!(IntPoly::from_i64(&[1, 0, 1]).div_exact(&a), None);
        assert_eq!(IntPoly::from_i64(&[1, -2, 0, 1]).to_string(), "q^3 - 2*q + 1");
        assert_eq!(a.render("q", false), "q-1");
    }

    #[test]
    fn gcd_basics() {
        let a = IntPoly::from_i64(&[-1, 1]);
        let p = &a * &IntPoly::from_i64(&[2, 0, 3]);
        let r = &a * &IntPoly::from_i64(&[5, 7]);
        assert_eq!(p.gcd(&r), a);
        assert_eq!(IntPoly::from_i64(&[4, 6]).gcd(&IntPoly::from_i64(&[2])), IntPoly::from_i64(&[2]));
    }

    #[test]
    fn translate_and_eval() {
        // t^2 with t = q - 1
        let t2 = IntPoly::monomial(1, 2);
        assert_eq!(t2.translate(-1), IntPoly::from_i64(&[1, -2, 1]));
        let x = BigRational::from_integer(3.into());
        assert_eq!(IntPoly::from_i64(&[1, -2, 1]).eval(&x), BigRational::from_integer(4.into()));
    }
}
