//! Sparse multivariate polynomials over ℤ.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration is in
//! ascending lexicographic order and the last entry is the lex-leading term.
//! The gcd is the classical recursive primitive PRS: view the inputs as
//! univariate in their first occurring variable, split off contents, and
//! run pseudo-remainders on the primitive parts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> Self {
        IntPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    /// The monomial `c * x^exps`.
    pub fn monomial(c: BigInt, exps: Monomial) -> Self {
        let nvars = exps.len();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The `i`-th variable.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(BigInt::one(), e)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Constant term value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Lex-leading coefficient; zero for the zero polynomial.
    pub fn leading_coefficient(&self) -> BigInt {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e.clone(), c.clone());
        }
        IntPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e.clone(), -c);
        }
        IntPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                accumulate(&mut terms, e, ca * cb);
            }
        }
        IntPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        IntPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / other`, or `None` if `other` does not divide
    /// `self` in ℤ[x].
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "IntPoly::exact_div by zero");
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if other.is_one() {
            return Some(self.clone());
        }
        let (lead_e, lead_c) = other.terms.iter().next_back().unwrap();
        if other.terms.len() == 1 {
            let mut terms = BTreeMap::new();
            for (e, c) in &self.terms {
                let (q, r) = c.div_rem(lead_c);
                if !r.is_zero() {
                    return None;
                }
                terms.insert(monomial_quotient(e, lead_e)?, q);
            }
            return Some(IntPoly {
                nvars: self.nvars,
                terms,
            });
        }
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((e, c)) = rem.iter().next_back() {
            let qe = monomial_quotient(e, lead_e)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            for (oe, oc) in &other.terms {
                let te: Monomial = oe.iter().zip(&qe).map(|(x, y)| x + y).collect();
                accumulate(&mut rem, te, -(oc * &qc));
            }
            quot.insert(qe, qc);
        }
        Some(IntPoly {
            nvars: self.nvars,
            terms: quot,
        })
    }

    /// Integer gcd of all coefficients (nonnegative).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Multiplies by -1 if needed so the lex-leading coefficient is positive.
    pub fn normalize_sign(self) -> Self {
        if self.leading_coefficient().is_negative() {
            self.neg()
        } else {
            self
        }
    }

    fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    fn first_variable(&self) -> Option<usize> {
        (0..self.nvars).find(|&v| self.terms.keys().any(|e| e[v] > 0))
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v`,
    /// indexed by degree. Entries do not involve `v`.
    fn coefficients_in(&self, v: usize) -> BTreeMap<u32, IntPoly> {
        let mut out: BTreeMap<u32, IntPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e[v];
            let mut stripped = e.clone();
            stripped[v] = 0;
            out.entry(d)
                .or_insert_with(|| IntPoly::zero(self.nvars))
                .terms
                .insert(stripped, c.clone());
        }
        out
    }

    fn content_in(&self, v: usize) -> IntPoly {
        let mut g = IntPoly::zero(self.nvars);
        for c in self.coefficients_in(v).into_values() {
            g = g.gcd(&c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn shift_in(&self, v: usize, by: u32) -> Self {
        IntPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[v] += by;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Pseudo-remainder of `self` by `divisor` with respect to `v`.
    fn pseudo_rem(&self, divisor: &Self, v: usize) -> Self {
        let db = divisor.degree_in(v);
        let lcb = divisor.coefficients_in(v).remove(&db).unwrap();
        let mut r = self.clone();
        while !r.is_zero() {
            let dr = r.degree_in(v);
            if dr < db {
                break;
            }
            let lcr = r.coefficients_in(v).remove(&dr).unwrap();
            r = lcb.mul(&r).sub(&lcr.mul(&divisor.shift_in(v, dr - db)));
        }
        r
    }

    /// Greatest common divisor, normalized to a positive lex-leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone().normalize_sign();
        }
        if other.is_zero() || self == other {
            return self.clone().normalize_sign();
        }
        if self.is_constant() || other.is_constant() {
            let g = self.integer_content().gcd(&other.integer_content());
            return IntPoly::constant(self.nvars, g);
        }
        if self.len() == 1 || other.len() == 1 {
            let (m, p) = if self.len() == 1 {
                (self, other)
            } else {
                (other, self)
            };
            let (me, mc) = m.terms().next().unwrap();
            let mut exps = me.clone();
            for (e, _) in p.terms() {
                for (x, y) in exps.iter_mut().zip(e) {
                    *x = (*x).min(*y);
                }
            }
            let c = mc.gcd(&p.integer_content());
            return IntPoly::monomial(c, exps);
        }
        if (0..self.nvars).all(|v| {
            self.degree_in(v) == 0 || other.degree_in(v) == 0 || modular::coprime_in(self, other, v)
        }) {
            let g = self.integer_content().gcd(&other.integer_content());
            return IntPoly::constant(self.nvars, g);
        }
        let v = match (self.first_variable(), other.first_variable()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!("both constant handled above"),
        };
        if self.degree_in(v) == 0 {
            return self.gcd(&other.content_in(v));
        }
        if other.degree_in(v) == 0 {
            return other.gcd(&self.content_in(v));
        }
        let ca = self.content_in(v);
        let cb = other.content_in(v);
        let content = ca.gcd(&cb);
        let mut a = self.exact_div(&ca).expect("content divides");
        let mut b = other.exact_div(&cb).expect("content divides");
        if a.degree_in(v) < b.degree_in(v) {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b, v);
            if r.is_zero() {
                break;
            }
            if r.degree_in(v) == 0 {
                b = IntPoly::one(self.nvars);
                break;
            }
            let rc = r.content_in(v);
            a = b;
            b = r.exact_div(&rc).expect("content divides");
        }
        let bc = b.content_in(v);
        let primitive = b.exact_div(&bc).expect("content divides");
        content.mul(&primitive).normalize_sign()
    }

    /// Evaluates with every variable substituted by the given integers.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, e: Monomial, c: BigInt) {
    use std::collections::btree_map::Entry;
    match terms.entry(e) {
        Entry::Vacant(slot) => {
            if !c.is_zero() {
                slot.insert(c);
            }
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

fn monomial_quotient(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y))
        .collect::<Option<Monomial>>()
}

/// Coprimality pre-check by evaluation modulo a prime.
///
/// Substituting values for every variable but `v` and reducing mod `P`
/// cannot lower the degree in `v` of the gcd as long as both leading
/// coefficients in `v` survive. A constant image gcd therefore proves that
/// the true gcd is free of `v`.
mod modular {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::ToPrimitive;

    use super::IntPoly;

    const P: u64 = (1 << 61) - 1;

    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn reduce(c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(P)).to_u64().unwrap()
    }

    fn pow(mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    }

    fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    /// Fixed evaluation point for variable `u`.
    fn point(u: usize) -> u64 {
        let mut z = (u as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        (z ^ (z >> 31)) % P
    }

    /// Dense image in `v`, or `None` if the leading coefficient vanishes.
    fn image(p: &IntPoly, v: usize) -> Option<Vec<u64>> {
        let deg = p.degree_in(v) as usize;
        let mut out = vec![0u64; deg + 1];
        for (e, c) in p.terms() {
            let mut t = reduce(c);
            for (u, &k) in e.iter().enumerate() {
                if u != v && k > 0 {
                    t = mul(t, pow(point(u), u64::from(k)));
                }
            }
            let slot = &mut out[e[v] as usize];
            *slot = (*slot + t) % P;
        }
        (out[deg] != 0).then_some(out)
    }

    fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn rem(mut a: Vec<u64>, b: &[u64]) -> Vec<u64> {
        let lead_inv = inv(*b.last().unwrap());
        while a.len() >= b.len() {
            let f = mul(*a.last().unwrap(), lead_inv);
            let shift = a.len() - b.len();
            for (i, &bi) in b.iter().enumerate() {
                let s = &mut a[shift + i];
                *s = (*s + P - mul(f, bi)) % P;
            }
            trim(&mut a);
        }
        a
    }

    pub(super) fn coprime_in(a: &IntPoly, b: &IntPoly, v: usize) -> bool {
        let (Some(mut x), Some(mut y)) = (image(a, v), image(b, v)) else {
            return false;
        };
        while !y.is_empty() {
            let r = rem(x, &y);
            x = y;
            y = r;
        }
        x.len() == 1
    }
}
