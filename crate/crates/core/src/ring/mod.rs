//! Sparse multivariate (Laurent) polynomials over an exact field.
//!
//! Each variable carries a Laurent flag: flagged variables range over ℤ and
//! are units, the others range over ℤ≥0. Elements keep their terms in a
//! graded-lex ordered map with no stored zeros, so structural equality is
//! mathematical equality.

mod exponent;
mod format;
mod univariate;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub use exponent::{box_exponents, ExponentVector};
pub use format::{format_coefficient, format_element};

use crate::coeff::{is_identifier, Coefficient, FieldDescriptor};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    field: FieldDescriptor,
    variables: Vec<String>,
    laurent: Vec<bool>,
}

/// Shared handle to a ring descriptor.
pub type Ring = Arc<RingDescriptor>;

impl RingDescriptor {
    pub fn new<S: Into<String>>(
        field: FieldDescriptor,
        variables: impl IntoIterator<Item = (S, bool)>,
    ) -> Result<Ring> {
        let (variables, laurent): (Vec<String>, Vec<bool>) =
            variables.into_iter().map(|(n, l)| (n.into(), l)).unzip();
        if variables.is_empty() {
            return Err(Error::InvalidDescriptor(
                "ring needs at least one variable".into(),
            ));
        }
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(v) || v == "zeta" {
                return Err(Error::InvalidDescriptor(format!(
                    "invalid variable name `{v}`"
                )));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidDescriptor(format!(
                    "duplicate variable `{v}`"
                )));
            }
            if field.parameter_index(v).is_some() {
                return Err(Error::InvalidDescriptor(format!(
                    "variable `{v}` clashes with a field parameter"
                )));
            }
        }
        Ok(Arc::new(RingDescriptor {
            field,
            variables,
            laurent,
        }))
    }

    /// `F[t]` or `F[t^{±1}]`.
    pub fn univariate(field: FieldDescriptor, name: &str, laurent: bool) -> Result<Ring> {
        Self::new(field, [(name, laurent)])
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn is_laurent(&self, i: usize) -> bool {
        self.laurent[i]
    }

    pub fn laurent_flags(&self) -> &[bool] {
        &self.laurent
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// True if every exponent respects the Laurent flags.
    pub fn allows(&self, e: &ExponentVector) -> bool {
        e.len() == self.nvars() && (0..self.nvars()).all(|i| self.laurent[i] || e[i] >= 0)
    }

    /// Monomials with every exponent in `[-w, w]` (Laurent) or `[0, w]`.
    pub fn exponent_window(&self, w: i64) -> Vec<ExponentVector> {
        let lo: Vec<i64> = self
            .laurent
            .iter()
            .map(|&l| if l { -w } else { 0 })
            .collect();
        let hi = vec![w; self.nvars()];
        box_exponents(&lo, &hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: Ring,
    terms: BTreeMap<ExponentVector, Coefficient>,
}

/// Constructors, taking the shared ring handle.
#[allow(clippy::wrong_self_convention)]
pub trait RingExt {
    fn zero(&self) -> RingElement;
    fn one(&self) -> RingElement;
    fn constant(&self, c: Coefficient) -> RingElement;
    fn from_int(&self, c: i64) -> RingElement;
    fn var(&self, i: usize) -> RingElement;
    fn monomial(&self, c: Coefficient, e: ExponentVector) -> Result<RingElement>;
    fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (ExponentVector, Coefficient)>,
    ) -> Result<RingElement>;
}

impl RingExt for Ring {
    fn zero(&self) -> RingElement {
        RingElement {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn one(&self) -> RingElement {
        self.constant(self.field.one())
    }

    fn constant(&self, c: Coefficient) -> RingElement {
        let mut z = self.zero();
        if !c.is_zero() {
            z.terms.insert(ExponentVector::zero(self.nvars()), c);
        }
        z
    }

    fn from_int(&self, c: i64) -> RingElement {
        self.constant(self.field.from_int(c))
    }

    fn var(&self, i: usize) -> RingElement {
        let mut z = self.zero();
        z.terms
            .insert(ExponentVector::unit(self.nvars(), i), self.field.one());
        z
    }

    fn monomial(&self, c: Coefficient, e: ExponentVector) -> Result<RingElement> {
        self.from_terms([(e, c)])
    }

    fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (ExponentVector, Coefficient)>,
    ) -> Result<RingElement> {
        let mut z = self.zero();
        for (e, c) in terms {
            if !self.allows(&e) {
                let i = (0..self.nvars().min(e.len()))
                    .find(|&i| e[i] < 0)
                    .unwrap_or(0);
                return Err(Error::ExponentDomain {
                    variable: self.variables.get(i).cloned().unwrap_or_default(),
                    exponent: if e.len() > i { e[i] } else { 0 },
                    position: 0,
                });
            }
            if !self.field.contains(&c) {
                return Err(Error::MixedFields);
            }
            accumulate(&mut z.terms, e, c);
        }
        Ok(z)
    }
}

fn accumulate(
    terms: &mut BTreeMap<ExponentVector, Coefficient>,
    e: ExponentVector,
    c: Coefficient,
) {
    if c.is_zero() {
        return;
    }
    match terms.entry(e) {
        Entry::Vacant(slot) => {
            slot.insert(c);
        }
        Entry::Occupied(mut slot) => {
            let sum = slot.get() + &c;
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring arithmetic.
pub fn poly_arithmetic(a: &RingElement, b: &RingElement, op: RingOp) -> Result<RingElement> {
    a.check_ring(b)?;
    Ok(match op {
        RingOp::Add => a + b,
        RingOp::Sub => a - b,
        RingOp::Mul => a * b,
    })
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn same_ring(&self, other: &RingElement) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    pub fn check_ring(&self, other: &RingElement) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Coefficient)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as `is_zero`.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Option<&Coefficient> {
        self.terms.get(e)
    }

    /// The value if this element is a constant (zero included).
    pub fn constant_value(&self) -> Option<Coefficient> {
        match self.terms.len() {
            0 => Some(self.ring.field.zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// Greatest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &Coefficient)> {
        self.terms.iter().next_back()
    }

    /// Least term in graded-lex order.
    pub fn trailing_term(&self) -> Option<(&ExponentVector, &Coefficient)> {
        self.terms.iter().next()
    }

    /// Total degree of the leading term.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// The single term `(exponent, coefficient)` if this is a nonzero
    /// scalar multiple of a monomial.
    pub fn as_term(&self) -> Option<(&ExponentVector, &Coefficient)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn scale(&self, c: &Coefficient) -> RingElement {
        if c.is_zero() {
            return self.ring.zero();
        }
        RingElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^e`, failing if an exponent leaves the
    /// allowed domain.
    pub fn shift(&self, e: &ExponentVector) -> Result<RingElement> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let s = k.add(e);
            if !self.ring.allows(&s) {
                return Err(Error::NotDivisible(format!(
                    "monomial shift by {e} leaves the ring"
                )));
            }
            terms.insert(s, c.clone());
        }
        Ok(RingElement {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, mut k: u32) -> RingElement {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        poly_arithmetic(self, other, RingOp::Add)
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement> {
        poly_arithmetic(self, other, RingOp::Sub)
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        poly_arithmetic(self, other, RingOp::Mul)
    }

    /// True iff the element is invertible: a nonzero constant, or a single
    /// term whose monomial involves only Laurent variables.
    pub fn is_unit(&self) -> bool {
        match self.as_term() {
            Some((e, _)) => (0..self.ring.nvars()).all(|i| e[i] == 0 || self.ring.laurent[i]),
            None => false,
        }
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Option<RingElement> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.as_term()?;
        Some(RingElement {
            ring: self.ring.clone(),
            terms: BTreeMap::from([(e.neg(), c.inv().ok()?)]),
        })
    }

    /// Componentwise minimum exponent over the Laurent variables (zero in
    /// polynomial slots). The unit `x^{-shift}` moves every Laurent exponent
    /// to be nonnegative with minimum zero.
    pub fn laurent_floor(&self) -> ExponentVector {
        let n = self.ring.nvars();
        let mut lo: Option<ExponentVector> = None;
        for e in self.terms.keys() {
            lo = Some(match lo {
                None => e.clone(),
                Some(l) => ExponentVector::min(&l, e),
            });
        }
        let lo = lo.unwrap_or_else(|| ExponentVector::zero(n));
        ExponentVector::new(
            (0..n)
                .map(|i| if self.ring.laurent[i] { lo[i] } else { 0 })
                .collect(),
        )
    }

    fn shift_unchecked(&self, e: &ExponentVector) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.add(e), c.clone()))
                .collect(),
        }
    }

    /// Associate with Laurent exponents floored at zero and leading
    /// coefficient one.
    pub fn monic_associate(&self) -> RingElement {
        if self.is_zero() {
            return self.clone();
        }
        let shifted = self.shift_unchecked(&self.laurent_floor().neg());
        let lead = shifted.leading_term().unwrap().1.clone();
        shifted.scale(&lead.inv().unwrap())
    }

    /// Associate with Laurent exponents floored at zero and trailing
    /// coefficient one.
    pub fn trailing_associate(&self) -> RingElement {
        if self.is_zero() {
            return self.clone();
        }
        let shifted = self.shift_unchecked(&self.laurent_floor().neg());
        let trail = shifted.trailing_term().unwrap().1.clone();
        shifted.scale(&trail.inv().unwrap())
    }

    fn to_dense(&self) -> univariate::Dense {
        debug_assert_eq!(self.ring.nvars(), 1);
        let zero = self.ring.field.zero();
        let top = self.terms.keys().map(|e| e[0]).max().unwrap_or(-1);
        let mut out = vec![zero; (top + 1).max(0) as usize];
        for (e, c) in &self.terms {
            out[e[0] as usize] = c.clone();
        }
        out
    }

    fn from_dense(ring: &Ring, dense: univariate::Dense) -> RingElement {
        let mut z = ring.zero();
        for (i, c) in dense.into_iter().enumerate() {
            accumulate(&mut z.terms, ExponentVector::new(vec![i as i64]), c);
        }
        z
    }
}

/// Exact quotient `a / b` in the ring.
///
/// For Laurent variables both operands are first moved by monomial units so
/// every exponent is nonnegative and `b` has minimum exponent zero in each
/// Laurent variable; then `b` is coprime to those variables and divisibility
/// reduces to ordinary polynomial division under the graded-lex order.
pub fn exact_divide(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.check_ring(b)?;
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ring = a.ring.clone();
    if a.is_zero() {
        return Ok(ring.zero());
    }
    if let Some((be, bc)) = b.as_term() {
        let inv = bc.inv()?;
        let mut terms = BTreeMap::new();
        for (e, c) in &a.terms {
            let q = e.sub(be);
            if !ring.allows(&q) {
                return Err(Error::NotDivisible(format!(
                    "monomial quotient {q} has a negative exponent on a polynomial variable"
                )));
            }
            terms.insert(q, c * &inv);
        }
        return Ok(RingElement { ring, terms });
    }
    let sa = a.laurent_floor();
    let sb = b.laurent_floor();
    let divisor = b.shift_unchecked(&sb.neg());
    let (lead_e, lead_c) = divisor.leading_term().unwrap();
    let lead_inv = lead_c.inv()?;
    let mut rem = a.shift_unchecked(&sa.neg()).terms;
    let mut quot = BTreeMap::new();
    while let Some((e, c)) = rem.iter().next_back() {
        let qe = e.sub(lead_e);
        if qe.as_slice().iter().any(|&x| x < 0) {
            return Err(Error::NotDivisible(
                "leading monomial of the remainder is not divisible by the divisor's".into(),
            ));
        }
        let qc = c * &lead_inv;
        for (de, dc) in &divisor.terms {
            accumulate(&mut rem, de.add(&qe), -(dc * &qc));
        }
        quot.insert(qe, qc);
    }
    let q = RingElement {
        ring: ring.clone(),
        terms: quot,
    };
    Ok(q.shift_unchecked(&sa.sub(&sb)))
}

/// Normalized gcd of a nonempty family.
///
/// Univariate inputs use the Euclidean algorithm after flooring Laurent
/// exponents; the result is monic. Multivariate inputs are supported only
/// when some input is a unit (gcd 1) or every input is a single term.
pub fn gcd_normalized(elems: &[RingElement]) -> Result<RingElement> {
    let first = elems.first().ok_or(Error::AllZero)?;
    for e in elems {
        first.check_ring(e)?;
    }
    let ring = first.ring.clone();
    let nonzero: Vec<&RingElement> = elems.iter().filter(|e| !e.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::AllZero);
    }
    if nonzero.iter().any(|e| e.is_unit()) {
        return Ok(ring.one());
    }
    if ring.nvars() == 1 {
        let mut acc: Option<univariate::Dense> = None;
        for e in nonzero {
            let dense = e.shift_unchecked(&e.laurent_floor().neg()).to_dense();
            acc = Some(match acc {
                None => univariate::monic(dense),
                Some(g) => univariate::gcd(g, dense),
            });
            if acc.as_ref().is_some_and(|g| g.len() == 1) {
                break;
            }
        }
        return Ok(RingElement::from_dense(&ring, acc.unwrap()));
    }
    if nonzero.iter().all(|e| e.as_term().is_some()) {
        let mut lo = nonzero[0].as_term().unwrap().0.clone();
        for e in &nonzero[1..] {
            lo = ExponentVector::min(&lo, e.as_term().unwrap().0);
        }
        let e = ExponentVector::new(
            (0..ring.nvars())
                .map(|i| if ring.is_laurent(i) { 0 } else { lo[i] })
                .collect(),
        );
        return ring.monomial(ring.field.one(), e);
    }
    Err(Error::UnsupportedMultivariateGcd)
}

impl Add<&RingElement> for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        assert!(self.same_ring(rhs), "RingElement::add across rings");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut terms, e.clone(), c.clone());
        }
        RingElement {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Sub<&RingElement> for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        assert!(self.same_ring(rhs), "RingElement::sub across rings");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut terms, e.clone(), -c);
        }
        RingElement {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Mul<&RingElement> for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        assert!(self.same_ring(rhs), "RingElement::mul across rings");
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                accumulate(&mut terms, ea.add(eb), ca * cb);
            }
        }
        RingElement {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qring(laurent: bool) -> Ring {
        let f = FieldDescriptor::rational_functions(["q"]).unwrap();
        RingDescriptor::univariate(f, "t", laurent).unwrap()
    }

    fn t_pow(r: &Ring, k: i64) -> RingElement {
        r.monomial(r.field().one(), ExponentVector::new(vec![k]))
            .unwrap()
    }

    fn q(r: &Ring) -> RingElement {
        r.constant(r.field().param(0).unwrap())
    }

    #[test]
    fn difference_of_squares() {
        let r = qring(false);
        let t = r.var(0);
        let one = r.one();
        assert_eq!(&(&one + &t) * &(&one - &t), &one - &(&t * &t));
    }

    #[test]
    fn laurent_inverse() {
        let r = qring(true);
        assert_eq!(&t_pow(&r, -1) * &r.var(0), r.one());
    }

    #[test]
    fn bivariate_laurent_product() {
        let f = FieldDescriptor::Rationals;
        let r = RingDescriptor::new(f, [("x1", true), ("x2", true)]).unwrap();
        let x1 = r.var(0);
        let x2 = r.var(1);
        let x1_inv = x1.unit_inverse().unwrap();
        let expected = &r.one() + &(&x2 * &x1_inv);
        assert_eq!(&(&x1 + &x2) * &x1_inv, expected);
    }

    #[test]
    fn exact_division_examples() {
        let r = qring(false);
        let qq = q(&r);
        let one = r.one();
        // ((1 - q^2) t^2) / ((1 - q) t) = (1 + q) t
        let a = &(&one - &(&qq * &qq)) * &t_pow(&r, 2);
        let b = &(&one - &qq) * &r.var(0);
        assert_eq!(exact_divide(&a, &b).unwrap(), &(&one + &qq) * &r.var(0));
        let one_plus_t = &one + &r.var(0);
        assert!(matches!(
            exact_divide(&one_plus_t, &r.var(0)),
            Err(Error::NotDivisible(_))
        ));
        let rl = qring(true);
        let one_plus_t = &rl.one() + &rl.var(0);
        assert_eq!(
            exact_divide(&one_plus_t, &rl.var(0)).unwrap(),
            &t_pow(&rl, -1) + &rl.one()
        );
        assert_eq!(exact_divide(&one, &r.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn laurent_division_by_binomial() {
        let r = qring(true);
        let one = r.one();
        let t = r.var(0);
        let b = &t_pow(&r, -2) - &t;
        let c = &(&t_pow(&r, -1) + &one) + &t_pow(&r, 4);
        let a = &b * &c;
        assert_eq!(exact_divide(&a, &b).unwrap(), c);
        assert!(exact_divide(&(&a + &one), &b).is_err());
    }

    #[test]
    fn gcd_examples() {
        let r = qring(false);
        let qq = q(&r);
        let one = r.one();
        let a = &(&one - &qq) * &r.var(0);
        let b = &(&one - &(&qq * &qq)) * &t_pow(&r, 2);
        assert_eq!(gcd_normalized(&[a.clone(), b]).unwrap(), r.var(0));

        let rl = qring(true);
        let g = &rl.var(0) - &(&q(&rl) * &rl.var(0));
        assert_eq!(gcd_normalized(&[g]).unwrap(), rl.one());

        let f = FieldDescriptor::rational_functions(["q1", "q2"]).unwrap();
        let r2 = RingDescriptor::new(f.clone(), [("x1", true), ("x2", true)]).unwrap();
        let q1 = r2.constant(f.param(0).unwrap());
        let q2 = r2.constant(f.param(1).unwrap());
        let a = &(&r2.one() - &q1) * &r2.var(0);
        let b = &(&r2.one() - &q2) * &r2.var(1);
        assert_eq!(gcd_normalized(&[a, b]).unwrap(), r2.one());
        assert_eq!(gcd_normalized(&[r.zero()]), Err(Error::AllZero));
    }

    #[test]
    fn multivariate_gcd_scope() {
        let f = FieldDescriptor::Rationals;
        let r = RingDescriptor::new(f, [("x", false), ("y", false)]).unwrap();
        let x = r.var(0);
        let y = r.var(1);
        let g = gcd_normalized(&[&x * &y, &(&x * &x) * &y]).unwrap();
        assert_eq!(g, &x * &y);
        assert_eq!(
            gcd_normalized(&[&x + &y, &x - &y]),
            Err(Error::UnsupportedMultivariateGcd)
        );
    }

    #[test]
    fn units() {
        let r = qring(false);
        let rl = qring(true);
        assert!(r
            .constant(r.field().from_rational(&crate::coeff::rational(2, 3)))
            .is_unit());
        assert!(!r.var(0).is_unit());
        assert!(rl.var(0).is_unit());
        assert!(!(&rl.one() + &rl.var(0)).is_unit());
        assert!(!r.zero().is_unit());
    }

    #[test]
    fn domain_checks() {
        let r = qring(false);
        assert!(matches!(
            r.monomial(r.field().one(), ExponentVector::new(vec![-1])),
            Err(Error::ExponentDomain { .. })
        ));
        let other = qring(true);
        assert_eq!(r.var(0).try_add(&other.var(0)), Err(Error::MixedRings));
    }
}
