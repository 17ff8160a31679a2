//! Exact ground fields: ℚ, rational-function fields ℚ(q₁,…,qₘ), and
//! cyclotomic fields ℚ(ζₙ).
//!
//! A [`Coefficient`] is always in canonical form, so derived `PartialEq` is
//! mathematical equality. Arithmetic operators panic on operands from
//! different fields; use [`field_arithmetic`] or the `try_*` methods for a
//! checked variant.

mod cyclotomic;
mod intpoly;
mod ratfunc;

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use cyclotomic::{cyclotomic_polynomial, divisors, CyclotomicElement};
pub use intpoly::IntPoly;
pub use ratfunc::RationalFunction;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    /// ℚ(names…); at least one parameter.
    RationalFunctions(Vec<String>),
    /// ℚ[ζ]/Φₙ(ζ).
    Cyclotomic(u64),
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FieldDescriptor {
    pub fn rational_functions<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidDescriptor(
                "rational function field needs at least one parameter".into(),
            ));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) || n == "zeta" {
                return Err(Error::InvalidDescriptor(format!(
                    "invalid parameter name `{n}`"
                )));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidDescriptor(format!(
                    "duplicate parameter name `{n}`"
                )));
            }
        }
        Ok(FieldDescriptor::RationalFunctions(names))
    }

    pub fn cyclotomic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDescriptor(
                "cyclotomic order must be ≥ 1".into(),
            ));
        }
        Ok(FieldDescriptor::Cyclotomic(n))
    }

    pub fn parameter_names(&self) -> &[String] {
        match self {
            FieldDescriptor::RationalFunctions(names) => names,
            _ => &[],
        }
    }

    pub fn parameter_index(&self, name: &str) -> Option<usize> {
        self.parameter_names().iter().position(|n| n == name)
    }

    pub fn zero(&self) -> Coefficient {
        match self {
            FieldDescriptor::Rationals => Coefficient::Rational(BigRational::zero()),
            FieldDescriptor::RationalFunctions(names) => {
                Coefficient::Function(RationalFunction::zero(names.len()))
            }
            FieldDescriptor::Cyclotomic(n) => Coefficient::Cyclotomic(CyclotomicElement::zero(*n)),
        }
    }

    pub fn one(&self) -> Coefficient {
        self.from_int(1)
    }

    pub fn from_int(&self, c: i64) -> Coefficient {
        self.from_rational(&BigRational::from_integer(c.into()))
    }

    pub fn from_rational(&self, r: &BigRational) -> Coefficient {
        match self {
            FieldDescriptor::Rationals => Coefficient::Rational(r.clone()),
            FieldDescriptor::RationalFunctions(names) => {
                Coefficient::Function(RationalFunction::from_rational(names.len(), r))
            }
            FieldDescriptor::Cyclotomic(n) => {
                Coefficient::Cyclotomic(CyclotomicElement::from_rational(*n, r.clone()))
            }
        }
    }

    /// The `i`-th parameter of a rational-function field.
    pub fn param(&self, i: usize) -> Option<Coefficient> {
        match self {
            FieldDescriptor::RationalFunctions(names) if i < names.len() => Some(
                Coefficient::Function(RationalFunction::param(names.len(), i)),
            ),
            _ => None,
        }
    }

    /// `ζ_m^j` expressed in this field; requires a cyclotomic field whose
    /// order is a multiple of `m`.
    pub fn zeta(&self, m: u64, j: i64) -> Option<Coefficient> {
        match self {
            FieldDescriptor::Cyclotomic(n) if m >= 1 && n % m == 0 => {
                let step = (n / m) as i64;
                Some(Coefficient::Cyclotomic(CyclotomicElement::zeta_power(
                    *n,
                    j.checked_mul(step)?,
                )))
            }
            _ => None,
        }
    }

    /// True if `c` lives in this field.
    pub fn contains(&self, c: &Coefficient) -> bool {
        match (self, c) {
            (FieldDescriptor::Rationals, Coefficient::Rational(_)) => true,
            (FieldDescriptor::RationalFunctions(names), Coefficient::Function(f)) => {
                f.nvars() == names.len()
            }
            (FieldDescriptor::Cyclotomic(n), Coefficient::Cyclotomic(z)) => z.order() == *n,
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Function(RationalFunction),
    Cyclotomic(CyclotomicElement),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic.
pub fn field_arithmetic(a: &Coefficient, b: &Coefficient, op: FieldOp) -> Result<Coefficient> {
    match op {
        FieldOp::Add => a.try_add(b),
        FieldOp::Sub => a.try_sub(b),
        FieldOp::Mul => a.try_mul(b),
        FieldOp::Div => a.try_div(b),
    }
}

impl Coefficient {
    fn same_field(&self, other: &Self) -> bool {
        match (self, other) {
            (Coefficient::Rational(_), Coefficient::Rational(_)) => true,
            (Coefficient::Function(a), Coefficient::Function(b)) => a.nvars() == b.nvars(),
            (Coefficient::Cyclotomic(a), Coefficient::Cyclotomic(b)) => a.order() == b.order(),
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Function(f) => f.is_zero(),
            Coefficient::Cyclotomic(z) => z.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Function(f) => f.is_one(),
            Coefficient::Cyclotomic(z) => z.is_one(),
        }
    }

    pub fn zero_like(&self) -> Self {
        match self {
            Coefficient::Rational(_) => Coefficient::Rational(BigRational::zero()),
            Coefficient::Function(f) => Coefficient::Function(RationalFunction::zero(f.nvars())),
            Coefficient::Cyclotomic(z) => {
                Coefficient::Cyclotomic(CyclotomicElement::zero(z.order()))
            }
        }
    }

    pub fn one_like(&self) -> Self {
        self.rational_like(&BigRational::one())
    }

    pub fn rational_like(&self, r: &BigRational) -> Self {
        match self {
            Coefficient::Rational(_) => Coefficient::Rational(r.clone()),
            Coefficient::Function(f) => {
                Coefficient::Function(RationalFunction::from_rational(f.nvars(), r))
            }
            Coefficient::Cyclotomic(z) => {
                Coefficient::Cyclotomic(CyclotomicElement::from_rational(z.order(), r.clone()))
            }
        }
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Coefficient::Rational(r) => Some(r.clone()),
            Coefficient::Function(f) => f.as_rational(),
            Coefficient::Cyclotomic(z) => z.as_rational(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::MixedFields);
        }
        Ok(match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Function(a), Coefficient::Function(b)) => Coefficient::Function(a.add(b)),
            (Coefficient::Cyclotomic(a), Coefficient::Cyclotomic(b)) => {
                Coefficient::Cyclotomic(a.add(b))
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::MixedFields);
        }
        Ok(match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Function(a), Coefficient::Function(b)) => Coefficient::Function(a.mul(b)),
            (Coefficient::Cyclotomic(a), Coefficient::Cyclotomic(b)) => {
                Coefficient::Cyclotomic(a.mul(b))
            }
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::MixedFields);
        }
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            Coefficient::Rational(r) if !r.is_zero() => Ok(Coefficient::Rational(r.recip())),
            Coefficient::Function(f) => f
                .inv()
                .map(Coefficient::Function)
                .ok_or(Error::DivisionByZero),
            Coefficient::Cyclotomic(z) => z
                .inv()
                .map(Coefficient::Cyclotomic)
                .ok_or(Error::DivisionByZero),
            _ => Err(Error::DivisionByZero),
        }
    }

    fn neg_ref(&self) -> Self {
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(-r),
            Coefficient::Function(f) => Coefficient::Function(f.neg()),
            Coefficient::Cyclotomic(z) => Coefficient::Cyclotomic(z.neg()),
        }
    }

    /// `self^k` for any integer `k` (negative powers need `self ≠ 0`).
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        if let Coefficient::Function(f) = &base {
            if f.is_polynomial() {
                let p = f.numerator().pow(e as u32);
                return Ok(Coefficient::Function(RationalFunction::from_poly(p)));
            }
        }
        let mut acc = self.one_like();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// True for `±1`.
    pub fn is_plus_minus_one(&self) -> bool {
        self.as_rational()
            .is_some_and(|r| r.is_integer() && r.numer().abs().is_one())
    }
}

/// Multiplicative order of `c`, if finite.
///
/// In ℚ and ℚ(q…) only `±1` have finite order. In ℚ(ζₙ) every root of unity
/// has order dividing `lcm(2, n)`, so those divisors are tested in
/// ascending order.
pub fn root_of_unity_order(c: &Coefficient) -> Result<Option<u64>> {
    if c.is_zero() {
        return Err(Error::ZeroInput);
    }
    match c {
        Coefficient::Rational(_) | Coefficient::Function(_) => Ok(match c.as_rational() {
            Some(r) if r.is_one() => Some(1),
            Some(r) if (-&r).is_one() => Some(2),
            _ => None,
        }),
        Coefficient::Cyclotomic(z) => {
            let bound = z.order().lcm(&2);
            for m in divisors(bound) {
                if c.pow(m as i64)?.is_one() {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Coefficient> for &Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: &Coefficient) -> Coefficient {
                self.$checked(rhs)
                    .expect(concat!("Coefficient::", stringify!($method)))
            }
        }
        impl $trait<Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        self.neg_ref()
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        self.neg_ref()
    }
}

/// `n/d` as a rational number.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
