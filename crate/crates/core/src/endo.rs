//! Algebra endomorphisms given by monomial-scalar generator images
//! `σ(xᵢ) = cᵢ · x^{eᵢ}`.
//!
//! Such a σ maps every monomial to a scalar multiple of a monomial, so it is
//! described by the scalars `cᵢ` and the integer exponent matrix whose rows
//! are the `eᵢ`. Injectivity and surjectivity reduce to lattice questions
//! about that matrix.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::One;

use crate::coeff::{Coefficient, FieldDescriptor};
use crate::error::{Error, Result};
use crate::linalg;
use crate::ring::{box_exponents, ExponentVector, Ring, RingElement, RingExt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    ring: Ring,
    scalars: Vec<Coefficient>,
    exponents: Vec<ExponentVector>,
}

/// Outcome of the surjectivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpiDecision {
    Yes,
    /// A generator that is not in the image.
    No(RingElement),
    Unknown,
}

/// Outcome of the injectivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoDecision {
    Yes,
    /// A nonzero kernel element.
    No(RingElement),
}

impl Endomorphism {
    /// Builds σ from generator images, one per ring variable.
    pub fn from_images(ring: &Ring, images: &[RingElement]) -> Result<Self> {
        if images.len() != ring.nvars() {
            return Err(Error::InvalidDescriptor(format!(
                "expected {} generator images, got {}",
                ring.nvars(),
                images.len()
            )));
        }
        let mut scalars = Vec::new();
        let mut exponents = Vec::new();
        for (i, img) in images.iter().enumerate() {
            if img.ring() != ring {
                return Err(Error::MixedRings);
            }
            let (e, c) = img.as_term().ok_or_else(|| {
                Error::InvalidDescriptor(format!(
                    "image of `{}` must be a nonzero scalar times a monomial",
                    ring.variables()[i]
                ))
            })?;
            if ring.is_laurent(i) && !img.is_unit() {
                return Err(Error::NegativeExponentOnNonUnit(
                    ring.variables()[i].clone(),
                ));
            }
            scalars.push(c.clone());
            exponents.push(e.clone());
        }
        Ok(Endomorphism {
            ring: ring.clone(),
            scalars,
            exponents,
        })
    }

    /// `σ(xᵢ) = cᵢ xᵢ`.
    pub fn diagonal(ring: &Ring, scalars: Vec<Coefficient>) -> Result<Self> {
        let images: Vec<RingElement> = scalars
            .into_iter()
            .enumerate()
            .map(|(i, c)| ring.constant(c) * ring.var(i))
            .collect();
        Self::from_images(ring, &images)
    }

    pub fn identity(ring: &Ring) -> Self {
        let one = ring.field().one();
        Endomorphism {
            ring: ring.clone(),
            scalars: vec![one; ring.nvars()],
            exponents: (0..ring.nvars())
                .map(|i| ExponentVector::unit(ring.nvars(), i))
                .collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn scalars(&self) -> &[Coefficient] {
        &self.scalars
    }

    /// Rows of the exponent matrix.
    pub fn exponent_rows(&self) -> &[ExponentVector] {
        &self.exponents
    }

    pub fn image_of_generator(&self, i: usize) -> RingElement {
        self.ring
            .monomial(self.scalars[i].clone(), self.exponents[i].clone())
            .expect("validated image")
    }

    /// True when every generator maps to a scalar multiple of itself.
    pub fn is_diagonal(&self) -> bool {
        self.exponents
            .iter()
            .enumerate()
            .all(|(i, e)| *e == ExponentVector::unit(self.ring.nvars(), i))
    }

    pub fn is_identity(&self) -> bool {
        self.is_diagonal() && self.scalars.iter().all(Coefficient::is_one)
    }

    /// Image of the monomial `x^k`: `(∏ cᵢ^{kᵢ}, Σ kᵢ eᵢ)`.
    pub fn monomial_image(&self, k: &ExponentVector) -> (Coefficient, ExponentVector) {
        let n = self.ring.nvars();
        let mut coeff = self.ring.field().one();
        let mut exps = ExponentVector::zero(n);
        for i in 0..n {
            if k[i] != 0 {
                coeff = &coeff * &self.scalars[i].pow(k[i]).expect("nonzero image scalar");
                exps = exps.add(&self.exponents[i].scale(k[i]));
            }
        }
        (coeff, exps)
    }

    /// Eigenvalue of a monomial under a diagonal σ.
    pub fn eigenvalue(&self, k: &ExponentVector) -> Coefficient {
        self.monomial_image(k).0
    }

    /// Applies σ term by term. Panics if `a` lives in another ring.
    pub fn apply(&self, a: &RingElement) -> RingElement {
        self.try_apply(a).expect("Endomorphism::apply")
    }

    pub fn try_apply(&self, a: &RingElement) -> Result<RingElement> {
        if a.ring() != &self.ring {
            return Err(Error::MixedRings);
        }
        let n = self.ring.nvars();
        let mut powers: Vec<HashMap<i64, Coefficient>> = vec![HashMap::new(); n];
        let mut terms = Vec::with_capacity(a.len());
        for (k, c) in a.terms() {
            let mut coeff = c.clone();
            let mut exps = ExponentVector::zero(n);
            for i in 0..n {
                let ki = k[i];
                if ki == 0 {
                    continue;
                }
                let p = powers[i]
                    .entry(ki)
                    .or_insert_with(|| self.scalars[i].pow(ki).expect("nonzero image scalar"));
                coeff = &coeff * &*p;
                exps = exps.add(&self.exponents[i].scale(ki));
            }
            if !self.ring.allows(&exps) {
                let bad = (0..n).find(|&i| exps[i] < 0).unwrap_or(0);
                return Err(Error::NegativeExponentOnNonUnit(
                    self.ring.variables()[bad].clone(),
                ));
            }
            terms.push((exps, coeff));
        }
        self.ring.from_terms(terms)
    }

    /// `σ(a) = a`.
    pub fn fixed_by_sigma(&self, a: &RingElement) -> bool {
        &self.apply(a) == a
    }

    fn exponent_matrix(&self) -> linalg::Matrix {
        let q = FieldDescriptor::Rationals;
        self.exponents
            .iter()
            .map(|e| e.as_slice().iter().map(|&x| q.from_int(x)).collect())
            .collect()
    }

    /// Integer exponent vector `y` with `y · E = e_j`, if one exists.
    fn integer_preimage_exponent(&self, j: usize) -> Option<ExponentVector> {
        let q = FieldDescriptor::Rationals;
        let n = self.ring.nvars();
        let target: Vec<Coefficient> = (0..n).map(|i| q.from_int(i64::from(i == j))).collect();
        let y = linalg::solve_left(&self.exponent_matrix(), &target)?;
        let mut out = Vec::with_capacity(n);
        for c in y {
            let r = c.as_rational()?;
            if !r.is_integer() {
                return None;
            }
            out.push(i64::try_from(r.to_integer()).ok()?);
        }
        Some(ExponentVector::new(out))
    }

    /// Explicit preimage of the `j`-th generator on an all-Laurent ring.
    pub fn generator_preimage(&self, j: usize) -> Option<RingElement> {
        if !self.ring.laurent_flags().iter().all(|&l| l) {
            return None;
        }
        let y = self.integer_preimage_exponent(j)?;
        let (c, _) = self.monomial_image(&y);
        self.ring.monomial(c.inv().ok()?, y).ok()
    }

    /// Surjectivity of σ.
    ///
    /// All-Laurent rings: the image is `F[L]` for the row lattice `L` of the
    /// exponent matrix, so σ is onto iff every unit vector lies in `L`
    /// (equivalently `det E = ±1`). Polynomial rings: the image is spanned by
    /// the monoid of rows, which contains `e_j` iff some row equals `e_j`.
    pub fn is_epimorphism(&self) -> EpiDecision {
        let n = self.ring.nvars();
        let flags = self.ring.laurent_flags();
        if flags.iter().all(|&l| l) {
            let m = self.exponent_matrix();
            if linalg::rank(&m) < n {
                // Some unit vector is outside even the rational row space.
                let q = FieldDescriptor::Rationals;
                let j = (0..n)
                    .find(|&j| {
                        let target: Vec<Coefficient> =
                            (0..n).map(|i| q.from_int(i64::from(i == j))).collect();
                        linalg::solve_left(&m, &target).is_none()
                    })
                    .expect("rank-deficient matrix misses a unit vector");
                return EpiDecision::No(self.ring.var(j));
            }
            // Nonsingular: the rational solution is unique, so integrality
            // of it decides lattice membership.
            for j in 0..n {
                if self.integer_preimage_exponent(j).is_none() {
                    return EpiDecision::No(self.ring.var(j));
                }
            }
            return EpiDecision::Yes;
        }
        if flags.iter().all(|&l| !l) {
            for j in 0..n {
                let unit = ExponentVector::unit(n, j);
                if !self.exponents.contains(&unit) {
                    return EpiDecision::No(self.ring.var(j));
                }
            }
            return EpiDecision::Yes;
        }
        if self.is_diagonal() {
            EpiDecision::Yes
        } else {
            EpiDecision::Unknown
        }
    }

    /// Injectivity of σ: distinct monomials must map to distinct monomials,
    /// which holds iff the exponent matrix is nonsingular.
    pub fn is_monomorphism(&self) -> MonoDecision {
        let m = self.exponent_matrix();
        let Some(v) = linalg::left_kernel_vector(&m) else {
            return MonoDecision::Yes;
        };
        // Clear denominators to get an integer kernel vector.
        let rats: Vec<_> = v.iter().map(|c| c.as_rational().unwrap()).collect();
        let lcm = rats
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let ints: Vec<i64> = rats
            .iter()
            .map(|r| i64::try_from((r * &lcm).to_integer()).expect("small kernel entry"))
            .collect();
        let plus = ExponentVector::new(ints.iter().map(|&x| x.max(0)).collect());
        let minus = ExponentVector::new(ints.iter().map(|&x| (-x).max(0)).collect());
        let (alpha, _) = self.monomial_image(&plus);
        let (beta, _) = self.monomial_image(&minus);
        let witness =
            self.ring.monomial(beta, plus).unwrap() - self.ring.monomial(alpha, minus).unwrap();
        debug_assert!(self.apply(&witness).is_zero());
        MonoDecision::No(witness)
    }

    /// Multiplicative relations `∏ cᵢ^{kᵢ} = 1` among the scalars of a
    /// diagonal σ (equivalently, monomials `x^k ≠ 1` fixed by σ).
    ///
    /// Independence is proved when every scalar factors as a rational times
    /// a parameter monomial and the valuation vectors (prime exponents
    /// together with parameter exponents) have full rank, or, in one
    /// variable, when the scalar has infinite order. Otherwise relations with
    /// `‖k‖∞ ≤ bound` are searched shell by shell, and finally an exact
    /// relation is read off a kernel vector or a finite scalar order.
    pub fn eigenvalue_relations(&self, bound: i64) -> Independence {
        let n = self.ring.nvars();
        if !self.is_diagonal() || n == 0 {
            return Independence::Unknown;
        }
        let valuations = valuation_matrix(&self.scalars);
        if let Some(m) = &valuations {
            if linalg::rank(m) == n {
                return Independence::Independent;
            }
        }
        let orders: Vec<Option<u64>> = self
            .scalars
            .iter()
            .map(|c| crate::coeff::root_of_unity_order(c).ok().flatten())
            .collect();
        if n == 1 && orders[0].is_none() {
            return Independence::Independent;
        }
        let budget: i64 = 250_000;
        let mut b = bound;
        while b > 0 && (2 * b + 1).checked_pow(n as u32).is_none_or(|s| s > budget) {
            b -= 1;
        }
        if b > 0 {
            let lo = vec![-b; n];
            let hi = vec![b; n];
            for k in box_exponents(&lo, &hi) {
                if !k.is_zero() && canonical_sign(&k) && self.eigenvalue(&k).is_one() {
                    return Independence::Relation(k);
                }
            }
        }
        if let Some((i, m)) = orders
            .iter()
            .enumerate()
            .find_map(|(i, o)| o.map(|m| (i, m)))
        {
            return Independence::Relation(ExponentVector::unit(n, i).scale(m as i64));
        }
        if let Some(m) = &valuations {
            if let Some(k) = integer_left_kernel(m) {
                for k in [k.clone(), k.scale(2)] {
                    if self.eigenvalue(&k).is_one() {
                        return Independence::Relation(k);
                    }
                }
            }
        }
        Independence::Unknown
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        let images: Vec<RingElement> = (0..self.ring.nvars())
            .map(|i| self.apply(&other.image_of_generator(i)))
            .collect();
        Endomorphism::from_images(&self.ring, &images)
    }
}

/// Outcome of the search for multiplicative relations among eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Independence {
    /// `∏ cᵢ^{kᵢ} = 1` forces `k = 0`.
    Independent,
    /// A nonzero `k` with `∏ cᵢ^{kᵢ} = 1`.
    Relation(ExponentVector),
    Unknown,
}

/// First nonzero entry positive.
fn canonical_sign(k: &ExponentVector) -> bool {
    k.as_slice()
        .iter()
        .find(|&&x| x != 0)
        .is_some_and(|&x| x > 0)
}

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000_000_000;

/// Prime factorization by trial division; `None` above the limit.
fn factor(n: &num_bigint::BigInt) -> Option<Vec<(u64, i64)>> {
    let mut n = u64::try_from(n.magnitude().clone()).ok()?;
    if n > TRIAL_DIVISION_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Some(out)
}

/// Rows `v(cᵢ)` over ℚ such that `∏ cᵢ^{kᵢ}` is `±1` iff `Σ kᵢ v(cᵢ) = 0`.
/// Defined when each scalar is a rational times a parameter monomial.
fn valuation_matrix(scalars: &[Coefficient]) -> Option<linalg::Matrix> {
    use std::collections::BTreeMap;
    let mut rows: Vec<(BTreeMap<u64, i64>, Vec<i64>)> = Vec::new();
    for c in scalars {
        let (r, params) = match c {
            Coefficient::Rational(r) => (r.clone(), Vec::new()),
            Coefficient::Function(f) => f.as_scaled_monomial()?,
            Coefficient::Cyclotomic(_) => (c.as_rational()?, Vec::new()),
        };
        let mut primes = BTreeMap::new();
        for (p, e) in factor(r.numer())? {
            *primes.entry(p).or_insert(0) += e;
        }
        for (p, e) in factor(r.denom())? {
            *primes.entry(p).or_insert(0) -= e;
        }
        rows.push((primes, params));
    }
    let all_primes: std::collections::BTreeSet<u64> =
        rows.iter().flat_map(|(p, _)| p.keys().copied()).collect();
    let nparams = rows.iter().map(|(_, q)| q.len()).max().unwrap_or(0);
    let q = FieldDescriptor::Rationals;
    Some(
        rows.iter()
            .map(|(primes, params)| {
                let mut row: Vec<Coefficient> = all_primes
                    .iter()
                    .map(|p| q.from_int(primes.get(p).copied().unwrap_or(0)))
                    .collect();
                row.extend((0..nparams).map(|i| q.from_int(params.get(i).copied().unwrap_or(0))));
                // Keeps the matrix non-empty when every scalar is ±1.
                row.push(q.zero());
                row
            })
            .collect(),
    )
}

/// A nonzero integer vector `k` with `k · m = 0`, if one exists.
fn integer_left_kernel(m: &linalg::Matrix) -> Option<ExponentVector> {
    let v = linalg::left_kernel_vector(m)?;
    let rats: Vec<_> = v.iter().map(|c| c.as_rational().unwrap()).collect();
    let lcm = rats
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Option<Vec<i64>> = rats
        .iter()
        .map(|r| i64::try_from((r * &lcm).to_integer()).ok())
        .collect();
    Some(ExponentVector::new(ints?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    fn qfield() -> FieldDescriptor {
        FieldDescriptor::rational_functions(["q"]).unwrap()
    }

    fn q_times_t_pow(ring: &Ring, s: i64) -> RingElement {
        ring.monomial(ring.field().param(0).unwrap(), ExponentVector::new(vec![s]))
            .unwrap()
    }

    #[test]
    fn apply_scaling() {
        let r = RingDescriptor::univariate(qfield(), "t", false).unwrap();
        let sigma = Endomorphism::from_images(&r, &[q_times_t_pow(&r, 1)]).unwrap();
        let a = r.var(0).pow(3) + r.one();
        let q = r.constant(r.field().param(0).unwrap());
        assert_eq!(sigma.apply(&a), q.pow(3) * r.var(0).pow(3) + r.one());
    }

    #[test]
    fn power_twist_inverse() {
        let r = RingDescriptor::univariate(qfield(), "t", true).unwrap();
        let sigma = Endomorphism::from_images(&r, &[q_times_t_pow(&r, 3)]).unwrap();
        let t_inv = r.var(0).unit_inverse().unwrap();
        let expected = q_times_t_pow(&r, 3).unit_inverse().unwrap();
        assert_eq!(sigma.apply(&t_inv), expected);
        assert_eq!(sigma.is_epimorphism(), EpiDecision::No(r.var(0)));
        assert_eq!(sigma.is_monomorphism(), MonoDecision::Yes);
    }

    #[test]
    fn equal_parameters_fix_ratio() {
        let f = qfield();
        let r = RingDescriptor::new(f.clone(), [("x1", true), ("x2", true)]).unwrap();
        let q = f.param(0).unwrap();
        let sigma = Endomorphism::diagonal(&r, vec![q.clone(), q]).unwrap();
        let ratio = r.var(0) * r.var(1).unit_inverse().unwrap();
        assert_eq!(sigma.apply(&ratio), ratio);
        assert!(sigma.fixed_by_sigma(&ratio));
        assert!(!sigma.fixed_by_sigma(&r.var(0)));
        assert!(sigma.fixed_by_sigma(&r.from_int(7)));
    }

    #[test]
    fn epimorphism_checks() {
        let r = RingDescriptor::univariate(qfield(), "t", false).unwrap();
        let sigma = Endomorphism::from_images(&r, &[q_times_t_pow(&r, 1)]).unwrap();
        assert_eq!(sigma.is_epimorphism(), EpiDecision::Yes);
        assert_eq!(
            Endomorphism::identity(&r).is_epimorphism(),
            EpiDecision::Yes
        );

        let f = FieldDescriptor::Rationals;
        let r2 = RingDescriptor::new(f, [("x1", true), ("x2", true)]).unwrap();
        // (x1, x2) -> (x1 x2, x2): unimodular
        let sigma = Endomorphism::from_images(&r2, &[r2.var(0) * r2.var(1), r2.var(1)]).unwrap();
        assert_eq!(sigma.is_epimorphism(), EpiDecision::Yes);
        for j in 0..2 {
            let pre = sigma.generator_preimage(j).unwrap();
            assert_eq!(sigma.apply(&pre), r2.var(j));
        }
    }

    #[test]
    fn non_injective() {
        let f = FieldDescriptor::Rationals;
        let r = RingDescriptor::new(f, [("x1", false), ("x2", false)]).unwrap();
        let sigma = Endomorphism::from_images(&r, &[r.var(0), r.var(0)]).unwrap();
        match sigma.is_monomorphism() {
            MonoDecision::No(w) => {
                assert!(!w.is_zero());
                assert!(sigma.apply(&w).is_zero());
                assert!(w == &r.var(1) - &r.var(0) || w == &r.var(0) - &r.var(1));
            }
            MonoDecision::Yes => panic!("expected a kernel witness"),
        }
        assert_eq!(sigma.is_epimorphism(), EpiDecision::No(r.var(1)));
    }

    #[test]
    fn rejects_bad_images() {
        let r = RingDescriptor::univariate(qfield(), "t", false).unwrap();
        assert!(Endomorphism::from_images(&r, &[r.var(0) + r.one()]).is_err());
        assert!(Endomorphism::from_images(&r, &[r.zero()]).is_err());
        let f = FieldDescriptor::Rationals;
        let mixed = RingDescriptor::new(f, [("x", true), ("y", false)]).unwrap();
        assert!(matches!(
            Endomorphism::from_images(&mixed, &[mixed.var(1), mixed.var(1)]),
            Err(Error::NegativeExponentOnNonUnit(_))
        ));
    }

    #[test]
    fn composition() {
        let r = RingDescriptor::univariate(qfield(), "t", true).unwrap();
        let sigma = Endomorphism::from_images(&r, &[q_times_t_pow(&r, 3)]).unwrap();
        let twice = sigma.compose(&sigma).unwrap();
        let a = r.var(0) + r.var(0).unit_inverse().unwrap();
        assert_eq!(twice.apply(&a), sigma.apply(&sigma.apply(&a)));
    }
}
