//! σ-deformed Witt algebras.
//!
//! Given σ on a ring `A`, `g` is a gcd of the image `(Id − σ)(A)` and
//! `∂ = (Id − σ)/g` is a σ-derivation. The bracket
//! `[a, b] = σ(a)∂(b) − σ(b)∂(a)` is skew-symmetric and satisfies a Jacobi
//! identity twisted by `δ = σ(g)/g`. Every identity is checked by computing
//! its residual exactly; a correct algebra yields the zero element.

mod presets;

use std::fmt;

use serde::Serialize;

pub use presets::{FamilyDescriptor, QSpec};

use crate::endo::{Endomorphism, Independence};
use crate::error::{Error, Result};
use crate::ring::{
    exact_divide, format_element, gcd_normalized, ExponentVector, Ring, RingElement, RingExt,
};

/// Default bound on monomial exponents used to sample `(Id − σ)(A)`.
pub const DEFAULT_GCD_WINDOW: i64 = 12;

/// Bound on `‖k‖∞` when searching for eigenvalue relations `∏ qᵢ^{kᵢ} = 1`.
pub const RELATION_BOUND: i64 = 8;

/// How the running gcd over the sampled image evolved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub window: i64,
    /// Number of nonzero images folded into the gcd.
    pub samples: usize,
    /// Smallest max-norm shell after which the gcd never changed.
    pub stabilized_at: i64,
    /// Whether the gcd was stable for at least half the window.
    pub stable_margin: bool,
    /// Set when a unit image ended the sampling early.
    pub unit_short_circuit: bool,
}

/// Computes `g` as the normalized gcd of `(Id − σ)(m)` over all monomials
/// `m` with exponents bounded by `window`, visited shell by shell.
pub fn compute_g(sigma: &Endomorphism, window: i64) -> Result<(RingElement, StabilizationReport)> {
    if window < 1 {
        return Err(Error::Config("gcd window must be positive".into()));
    }
    let ring = sigma.ring().clone();
    let mut g: Option<RingElement> = None;
    let mut samples = 0;
    let mut stabilized_at = 0;
    for m in ring.exponent_window(window) {
        let mono = ring.monomial(ring.field().one(), m.clone())?;
        let image = &mono - &sigma.apply(&mono);
        if image.is_zero() {
            continue;
        }
        samples += 1;
        if image.is_unit() {
            let shell = m.max_norm();
            return Ok((
                ring.one(),
                StabilizationReport {
                    window,
                    samples,
                    stabilized_at: shell,
                    stable_margin: true,
                    unit_short_circuit: true,
                },
            ));
        }
        let next = match &g {
            None => gcd_normalized(std::slice::from_ref(&image))?,
            Some(cur) if exact_divide(&image, cur).is_ok() => continue,
            Some(cur) => gcd_normalized(&[cur.clone(), image])?,
        };
        if g.as_ref() != Some(&next) {
            stabilized_at = m.max_norm();
            g = Some(next);
        }
    }
    let g = g.ok_or(Error::SigmaIsIdentityOnSample)?;
    Ok((
        g,
        StabilizationReport {
            window,
            samples,
            stabilized_at,
            stable_margin: window - stabilized_at >= window / 2,
            unit_short_circuit: false,
        },
    ))
}

/// Where the stored `g` came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GProvenance {
    ComputedGcd,
    /// An explicit associate; `unit_factor` is `g / computed_gcd`.
    PresetOverride {
        unit_factor: RingElement,
    },
}

#[derive(Clone, Debug)]
pub struct DeformedWittAlgebra {
    ring: Ring,
    sigma: Endomorphism,
    g: RingElement,
    delta: RingElement,
    provenance: GProvenance,
    stabilization: StabilizationReport,
}

impl DeformedWittAlgebra {
    /// Validates `(A, σ, g)` and precomputes `δ = σ(g)/g`.
    ///
    /// An override must be an associate of the computed gcd (checked by two
    /// exact divisions). `g` is then verified to divide every sampled image.
    pub fn new(sigma: Endomorphism, g_override: Option<RingElement>, window: i64) -> Result<Self> {
        let ring = sigma.ring().clone();
        let (computed, stabilization) =
            compute_g(&sigma, window).map_err(|e| e.context("compute_g"))?;
        let (g, provenance) = match g_override {
            None => (computed, GProvenance::ComputedGcd),
            Some(o) => {
                o.check_ring(&computed)?;
                let invalid = || Error::InvalidOverride(format_element(&o));
                if o.is_zero() {
                    return Err(invalid());
                }
                let unit_factor = exact_divide(&o, &computed).map_err(|_| invalid())?;
                exact_divide(&computed, &o).map_err(|_| invalid())?;
                (o, GProvenance::PresetOverride { unit_factor })
            }
        };
        for m in ring.exponent_window(window) {
            let mono = ring.monomial(ring.field().one(), m.clone())?;
            let image = &mono - &sigma.apply(&mono);
            exact_divide(&image, &g).map_err(|_| {
                Error::NotDivisible(format!("g does not divide (Id - sigma)(x^{m})"))
                    .context("make_algebra")
            })?;
        }
        let delta = exact_divide(&sigma.apply(&g), &g).map_err(|_| Error::DeltaNotInRing)?;
        Ok(DeformedWittAlgebra {
            ring,
            sigma,
            g,
            delta,
            provenance,
            stabilization,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn sigma(&self) -> &Endomorphism {
        &self.sigma
    }

    pub fn g(&self) -> &RingElement {
        &self.g
    }

    pub fn delta(&self) -> &RingElement {
        &self.delta
    }

    pub fn provenance(&self) -> &GProvenance {
        &self.provenance
    }

    pub fn stabilization(&self) -> &StabilizationReport {
        &self.stabilization
    }

    /// `δ ∈ F`: a single term with zero exponent vector.
    pub fn delta_is_constant(&self) -> bool {
        self.delta.as_term().is_some_and(|(e, _)| e.is_zero())
    }

    fn check(&self, a: &RingElement) -> Result<()> {
        if a.ring() != &self.ring {
            return Err(Error::MixedRings);
        }
        Ok(())
    }

    /// `σ(a)`.
    pub fn sigma_apply(&self, a: &RingElement) -> RingElement {
        self.sigma.apply(a)
    }

    /// `∂(a) = (a − σ(a)) / g`.
    pub fn partial(&self, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        let diff = a - &self.sigma.apply(a);
        exact_divide(&diff, &self.g).map_err(|e| match e {
            Error::NotDivisible(msg) => Error::NotDivisible(format!(
                "g does not divide (Id - sigma)(a); the validation window was too small ({msg})"
            ))
            .context("partial"),
            other => other.context("partial"),
        })
    }

    /// `[a, b] = σ(a)∂(b) − σ(b)∂(a)`.
    pub fn bracket(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        let left = self.sigma.apply(a) * self.partial(b)?;
        let right = self.sigma.apply(b) * self.partial(a)?;
        Ok(left - right)
    }

    /// `σ₁(a) = σ(a) + δa`.
    pub fn sigma1_apply(&self, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        Ok(self.sigma.apply(a) + &self.delta * a)
    }

    /// `∂(ab) − ∂(a)b − σ(a)∂(b)`.
    pub fn leibniz_residual(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        let lhs = self.partial(&(a * b))?;
        let rhs = self.partial(a)? * b + self.sigma.apply(a) * self.partial(b)?;
        Ok(lhs - rhs)
    }

    /// `∂(σ(a)) − δσ(∂(a))`.
    pub fn twist_residual(&self, a: &RingElement) -> Result<RingElement> {
        let lhs = self.partial(&self.sigma.apply(a))?;
        let rhs = &self.delta * &self.sigma.apply(&self.partial(a)?);
        Ok(lhs - rhs)
    }

    /// `[a, a]`, which must vanish.
    pub fn skew_residual(&self, a: &RingElement) -> Result<RingElement> {
        self.bracket(a, a)
    }

    /// The δ-twisted Jacobi sum
    /// `Σ_cyclic [σ(a), [b, c]] + δ[a, [b, c]]`.
    pub fn generalized_jacobi_residual(
        &self,
        a: &RingElement,
        b: &RingElement,
        c: &RingElement,
    ) -> Result<RingElement> {
        let mut acc = self.ring.zero();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            let inner = self.bracket(y, z)?;
            acc = acc
                + self.bracket(&self.sigma.apply(x), &inner)?
                + &self.delta * &self.bracket(x, &inner)?;
        }
        Ok(acc)
    }

    /// The Hom-Jacobi sum `Σ_cyclic [σ₁(a), [b, c]]`.
    pub fn hom_jacobi_residual(
        &self,
        a: &RingElement,
        b: &RingElement,
        c: &RingElement,
    ) -> Result<RingElement> {
        let mut acc = self.ring.zero();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            let inner = self.bracket(y, z)?;
            acc = acc + self.bracket(&self.sigma1_apply(x)?, &inner)?;
        }
        Ok(acc)
    }

    /// Searches monomial triples with exponents in `[-bound, bound]` for a
    /// nonzero Hom-Jacobi residual. Triples with a repeated entry vanish by
    /// skew-symmetry and are skipped.
    pub fn find_hom_jacobi_witness(&self, bound: i64) -> Result<Option<HomJacobiWitness>> {
        let monomials: Vec<RingElement> = self
            .ring
            .exponent_window(bound)
            .into_iter()
            .map(|e| self.ring.monomial(self.ring.field().one(), e))
            .collect::<Result<_>>()?;
        for i in 0..monomials.len() {
            for j in i + 1..monomials.len() {
                for k in j + 1..monomials.len() {
                    let (a, b, c) = (&monomials[i], &monomials[j], &monomials[k]);
                    let residual = self.hom_jacobi_residual(a, b, c)?;
                    if !residual.is_zero() {
                        return Ok(Some(HomJacobiWitness {
                            a: a.clone(),
                            b: b.clone(),
                            c: c.clone(),
                            residual,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Whether `∂(A) = A`.
    ///
    /// Supported when σ is diagonal and `g = γ·x^e` is a single term: then
    /// `∂(x^k) = (1 − μ_k)/γ · x^{k−e}` with `μ_k` the eigenvalue of `x^k`,
    /// so `x^j` has a preimage iff `j + e` is an allowed exponent with
    /// `μ_{j+e} ≠ 1`. Targets are scanned within the gcd window; a clean scan
    /// is promoted to `Yes` only when the eigenvalues provably satisfy no
    /// multiplicative relation.
    pub fn is_partial_surjective(&self) -> SurjectivityDecision {
        let Some((e, _)) = self.g.as_term() else {
            return SurjectivityDecision::Unknown;
        };
        if !self.sigma.is_diagonal() {
            return SurjectivityDecision::Unknown;
        }
        let e = e.clone();
        let witness = |j: &ExponentVector| {
            self.ring
                .monomial(self.ring.field().one(), j.clone())
                .ok()
                .map(SurjectivityDecision::No)
        };
        let window = self.stabilization.window;
        for j in self.ring.exponent_window(window) {
            let k = j.add(&e);
            if !self.ring.allows(&k) || self.sigma.eigenvalue(&k).is_one() {
                return witness(&j).unwrap_or(SurjectivityDecision::Unknown);
            }
        }
        let zero_target = e.neg();
        if self.ring.allows(&zero_target) {
            return witness(&zero_target).unwrap_or(SurjectivityDecision::Unknown);
        }
        match self.sigma.eigenvalue_relations(RELATION_BOUND) {
            Independence::Independent => SurjectivityDecision::Yes,
            Independence::Relation(k) => {
                // Both `x^k` and `x^{-k}` are fixed; either gives a target.
                for k in [k.clone(), k.neg()] {
                    let j = k.sub(&e);
                    if self.ring.allows(&k) && self.ring.allows(&j) {
                        return witness(&j).unwrap_or(SurjectivityDecision::Unknown);
                    }
                }
                SurjectivityDecision::Unknown
            }
            Independence::Unknown => SurjectivityDecision::Unknown,
        }
    }
}

/// A monomial triple whose Hom-Jacobi residual is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomJacobiWitness {
    pub a: RingElement,
    pub b: RingElement,
    pub c: RingElement,
    pub residual: RingElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurjectivityDecision {
    Yes,
    /// A monomial with no preimage under ∂.
    No(RingElement),
    Unknown,
}

impl fmt::Display for GProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GProvenance::ComputedGcd => write!(f, "computed-gcd"),
            GProvenance::PresetOverride { .. } => write!(f, "preset-override"),
        }
    }
}

#[cfg(test)]
mod tests;
