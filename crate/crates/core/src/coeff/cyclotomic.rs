//! Cyclotomic fields ℚ(ζₙ) = ℚ[x]/Φₙ(x), with elements stored as dense
//! rational polynomials of degree below φ(n), always reduced.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `n`-th cyclotomic polynomial, ascending integer coefficients.
///
/// Computed as `(x^n - 1) / ∏_{d | n, d < n} Φ_d(x)`; results are cached.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic_polynomial: n must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut acc = vec![BigInt::zero(); n as usize + 1];
    acc[0] = BigInt::from(-1);
    acc[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        acc = divide_monic(&acc, &cyclotomic_polynomial(d));
    }
    let result = Arc::new(acc);
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Exact quotient of integer polynomials by a monic divisor.
fn divide_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

#[derive(Clone, Debug)]
pub struct CyclotomicElement {
    order: u64,
    modulus: Arc<Vec<BigInt>>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicElement {}

impl std::hash::Hash for CyclotomicElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl CyclotomicElement {
    pub fn zero(order: u64) -> Self {
        CyclotomicElement {
            order,
            modulus: cyclotomic_polynomial(order),
            coeffs: Vec::new(),
        }
    }

    pub fn from_rational(order: u64, r: BigRational) -> Self {
        Self::from_coeffs(order, vec![r])
    }

    /// `ζₙ^k` for any integer `k`.
    pub fn zeta_power(order: u64, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        Self::from_coeffs(order, coeffs)
    }

    pub fn from_coeffs(order: u64, coeffs: Vec<BigRational>) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let coeffs = reduce(coeffs, &modulus);
        CyclotomicElement {
            order,
            modulus,
            coeffs,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Ascending coefficients in ζ, trimmed.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn with(&self, coeffs: Vec<BigRational>) -> Self {
        CyclotomicElement {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: reduce(coeffs, &self.modulus),
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.with(poly_add(&self.coeffs, &other.coeffs))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.with(poly_mul(&self.coeffs, &other.coeffs))
    }

    /// Inverse via the extended Euclidean algorithm against Φₙ.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<BigRational> = self
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // Invariant: s * self ≡ r (mod Φ).
        let (mut r0, mut r1) = (modulus, self.coeffs.clone());
        let (mut s0, mut s1) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since Φₙ is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let scale = r0[0].recip();
        Some(self.with(s0.into_iter().map(|c| c * &scale).collect()))
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn reduce(coeffs: Vec<BigRational>, modulus: &[BigInt]) -> Vec<BigRational> {
    let mut c = trim(coeffs);
    let dm = modulus.len() - 1;
    while c.len() > dm {
        let top = c.pop().unwrap();
        let shift = c.len() - dm;
        for (j, mj) in modulus[..dm].iter().enumerate() {
            c[shift + j] -= &top * BigRational::from_integer(mj.clone());
        }
        c = trim(c);
    }
    c
}

fn poly_add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let nb: Vec<BigRational> = b.iter().map(|c| -c).collect();
    poly_add(a, &nb)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    (trim(quot), trim(rem))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let z = CyclotomicElement::zeta_power(4, 1);
        let m1 = CyclotomicElement::from_rational(4, BigRational::from_integer((-1).into()));
        assert_eq!(z.mul(&z), m1);
    }

    #[test]
    fn inverse_round_trip() {
        let a = CyclotomicElement::from_coeffs(
            7,
            vec![
                BigRational::from_integer(2.into()),
                BigRational::one(),
                BigRational::one(),
            ],
        );
        let b = a.inv().unwrap();
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn zeta_powers_wrap() {
        let a = CyclotomicElement::zeta_power(5, 7);
        assert_eq!(a, CyclotomicElement::zeta_power(5, 2));
        assert_eq!(
            CyclotomicElement::zeta_power(5, -1),
            CyclotomicElement::zeta_power(5, 4)
        );
        // ζ₅⁴ = -(1 + ζ + ζ² + ζ³)
        assert_eq!(CyclotomicElement::zeta_power(5, 4).coeffs().len(), 4);
    }
}
