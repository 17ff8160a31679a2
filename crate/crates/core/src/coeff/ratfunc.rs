//! Elements of ℚ(q₁,…,qₘ) as reduced fractions of integer polynomials.
//!
//! Canonical form: `gcd(num, den) = 1` in ℤ[q] (integer content included)
//! and the lex-leading coefficient of `den` is positive. Zero is `0/1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::intpoly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn zero(nvars: usize) -> Self {
        RationalFunction {
            num: IntPoly::zero(nvars),
            den: IntPoly::one(nvars),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(IntPoly::one(nvars))
    }

    pub fn from_poly(num: IntPoly) -> Self {
        let nvars = num.nvars();
        RationalFunction {
            num,
            den: IntPoly::one(nvars),
        }
    }

    pub fn from_rational(nvars: usize, r: &BigRational) -> Self {
        RationalFunction {
            num: IntPoly::constant(nvars, r.numer().clone()),
            den: IntPoly::constant(nvars, r.denom().clone()),
        }
    }

    /// The `i`-th parameter.
    pub fn param(nvars: usize, i: usize) -> Self {
        Self::from_poly(IntPoly::var(nvars, i))
    }

    /// Builds `num / den` in canonical form. Panics if `den` is zero.
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "RationalFunction with zero denominator");
        if num.is_zero() {
            return Self::zero(num.nvars());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        if den.leading_coefficient().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational number when both parts are constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        // Henrici: only factors of gcd(b, d) can cancel.
        let g = self.den.gcd(&other.den);
        let b_g = self.den.exact_div(&g).unwrap();
        let d_g = other.den.exact_div(&g).unwrap();
        let t = self.num.mul(&d_g).add(&other.num.mul(&b_g));
        if t.is_zero() {
            return Self::zero(self.nvars());
        }
        let g2 = t.gcd(&g);
        let num = t.exact_div(&g2).unwrap();
        let den = b_g.mul(&other.den.exact_div(&g2).unwrap());
        Self::signed(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars());
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let num = self
            .num
            .exact_div(&g1)
            .unwrap()
            .mul(&other.num.exact_div(&g2).unwrap());
        let den = self
            .den
            .exact_div(&g2)
            .unwrap()
            .mul(&other.den.exact_div(&g1).unwrap());
        Self::signed(num, den)
    }

    /// Multiplicative inverse; `None` at zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::signed(self.den.clone(), self.num.clone()))
    }

    fn signed(num: IntPoly, den: IntPoly) -> Self {
        if den.leading_coefficient().is_negative() {
            RationalFunction {
                num: num.neg(),
                den: den.neg(),
            }
        } else {
            RationalFunction { num, den }
        }
    }

    /// True when the value is `c * q^e` for a rational `c` and a parameter
    /// monomial `q^e` (negative exponents allowed). Returns `(c, e)`.
    pub fn as_scaled_monomial(&self) -> Option<(BigRational, Vec<i64>)> {
        if self.num.len() != 1 || self.den.len() != 1 {
            return None;
        }
        let (ne, nc) = self.num.terms().next().unwrap();
        let (de, dc) = self.den.terms().next().unwrap();
        let e = ne
            .iter()
            .zip(de)
            .map(|(a, b)| i64::from(*a) - i64::from(*b))
            .collect();
        Some((BigRational::new(nc.clone(), dc.clone()), e))
    }

    /// Evaluates at integer parameter values; `None` if the denominator
    /// vanishes there.
    pub fn eval(&self, point: &[BigInt]) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval(point), d))
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RationalFunction {
        RationalFunction::param(1, 0)
    }

    fn int(c: i64) -> RationalFunction {
        RationalFunction::from_rational(1, &BigRational::from_integer(c.into()))
    }

    #[test]
    fn cancellation() {
        // q/(1-q) * (1-q)/1 = q
        let one_minus_q = int(1).sub(&q());
        let a = q().mul(&one_minus_q.inv().unwrap());
        assert_eq!(a.mul(&one_minus_q), q());
    }

    #[test]
    fn q_integer_reduces_to_polynomial() {
        // (1 - q^3) / (1 - q) = 1 + q + q^2
        let q3 = q().mul(&q()).mul(&q());
        let r = int(1).sub(&q3).mul(&int(1).sub(&q()).inv().unwrap());
        assert!(r.is_polynomial());
        assert_eq!(r, int(1).add(&q()).add(&q().mul(&q())));
    }

    #[test]
    fn canonical_sign() {
        let a = int(1).mul(&int(1).sub(&q()).inv().unwrap());
        let b = int(-1).mul(&q().sub(&int(1)).inv().unwrap());
        assert_eq!(a, b);
        assert!(a.denominator().leading_coefficient().is_positive());
    }

    #[test]
    fn rational_content_is_reduced() {
        let two_q = int(2).mul(&q());
        let r = two_q.mul(&int(4).inv().unwrap());
        assert_eq!(r.numerator(), q().numerator());
        assert_eq!(r.denominator().as_constant(), Some(BigInt::from(2)));
    }

    #[test]
    fn zero_is_canonical() {
        let z = q().sub(&q());
        assert_eq!(z, RationalFunction::zero(1));
        assert!(z.inv().is_none());
        assert!(RationalFunction::one(1).is_one());
    }
}
