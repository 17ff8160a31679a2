//! ∂-stable principal ideals, monomial extraction and simplicity verdicts.
//!
//! From `∂(pa) = p∂(a) + ∂(p)σ(a)`, the ideal `(p)` is ∂-stable iff
//! `p | ∂(p)`: the case `a = 1` forces it and it suffices for every `a`.

mod simplicity;

use std::collections::{BTreeMap, HashSet};

pub use simplicity::{
    decide_simplicity, hypotheses, BruteForceSummary, Check, DeltaCheck, Evidence, HomJacobiCheck,
    HypothesisReport, SimplicityOptions, SimplicityVerdict, Verdict, Witness,
};

use crate::coeff::Coefficient;
use crate::deform::DeformedWittAlgebra;
use crate::error::{Error, Result};
use crate::ring::{
    exact_divide, format_coefficient, format_element, ExponentVector, RingElement, RingExt,
};

/// Recorded in every stability certificate.
pub const STABILITY_CRITERION: &str =
    "d(p*a) = p*d(a) + d(p)*sigma(a), so (p) is d-stable iff p divides d(p)";

/// An ideal `(p)` with `p` stored as its trailing associate: Laurent
/// exponents floored at zero and lowest term with coefficient one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalIdeal {
    generator: RingElement,
}

impl PrincipalIdeal {
    pub fn new(p: &RingElement) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        Ok(PrincipalIdeal {
            generator: p.trailing_associate(),
        })
    }

    pub fn generator(&self) -> &RingElement {
        &self.generator
    }

    pub fn is_proper(&self) -> bool {
        !self.generator.is_unit()
    }

    pub fn contains(&self, a: &RingElement) -> bool {
        exact_divide(a, &self.generator).is_ok()
    }
}

/// A multiplier `m` with `p ∤ ∂(pm)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub multiplier: RingElement,
    pub element: RingElement,
}

/// Exactly one of `quotient` and `counterexample` is set, matching `stable`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCertificate {
    pub stable: bool,
    /// `∂(p)/p`.
    pub quotient: Option<RingElement>,
    pub counterexample: Option<Counterexample>,
    pub justification: &'static str,
}

pub fn is_partial_stable(
    w: &DeformedWittAlgebra,
    ideal: &PrincipalIdeal,
) -> Result<StabilityCertificate> {
    let p = ideal.generator();
    let dp = w.partial(p)?;
    Ok(match exact_divide(&dp, p) {
        Ok(q) => StabilityCertificate {
            stable: true,
            quotient: Some(q),
            counterexample: None,
            justification: STABILITY_CRITERION,
        },
        Err(Error::NotDivisible(_)) => StabilityCertificate {
            stable: false,
            quotient: None,
            counterexample: Some(Counterexample {
                multiplier: w.ring().one(),
                element: dp,
            }),
            justification: STABILITY_CRITERION,
        },
        Err(e) => return Err(e),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceCheck {
    pub multiplier: ExponentVector,
    pub divisible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceReport {
    pub window: i64,
    pub stable: bool,
    pub checks: Vec<BruteForceCheck>,
}

/// Tests `p | ∂(p·m)` for every monomial `m` in the window, logging each.
pub fn brute_force_stability(
    w: &DeformedWittAlgebra,
    ideal: &PrincipalIdeal,
    multiplier_window: i64,
) -> Result<BruteForceReport> {
    let ring = w.ring();
    let p = ideal.generator();
    let mut checks = Vec::new();
    for e in ring.exponent_window(multiplier_window) {
        let m = ring.monomial(ring.field().one(), e.clone())?;
        let image = w.partial(&(p * &m))?;
        let divisible = match exact_divide(&image, p) {
            Ok(_) => true,
            Err(Error::NotDivisible(_)) => false,
            Err(err) => return Err(err),
        };
        checks.push(BruteForceCheck {
            multiplier: e,
            divisible,
        });
    }
    Ok(BruteForceReport {
        window: multiplier_window,
        stable: checks.iter().all(|c| c.divisible),
        checks,
    })
}

/// One term `aᵢmᵢ` of `p` with the row `c` such that
/// `aᵢmᵢ = Σⱼ cⱼ σʲ(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractedTerm {
    pub term: RingElement,
    pub eigenvalue: Coefficient,
    pub combination: Vec<Coefficient>,
}

/// Writes each term of `p` as a combination of `σ⁰(p), …, σ^{r−1}(p)`.
///
/// With `μᵢ` the eigenvalue of the i-th monomial, `σʲ(p) = Σᵢ μᵢʲ aᵢmᵢ`,
/// so the rows are those of `V⁻¹` for `V_{j,i} = μᵢʲ`.
pub fn extract_monomials(w: &DeformedWittAlgebra, p: &RingElement) -> Result<Vec<ExtractedTerm>> {
    let sigma = w.sigma();
    if !sigma.is_diagonal() {
        return Err(Error::UnsupportedSigma);
    }
    if p.ring() != w.ring() {
        return Err(Error::MixedRings);
    }
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ring = w.ring();
    let terms: Vec<RingElement> = p
        .terms()
        .map(|(e, c)| ring.monomial(c.clone(), e.clone()))
        .collect::<Result<_>>()?;
    let mus: Vec<Coefficient> = p.terms().map(|(e, _)| sigma.eigenvalue(e)).collect();
    for i in 0..mus.len() {
        for j in i + 1..mus.len() {
            if mus[i] == mus[j] {
                return Err(Error::SingularSystem {
                    first: format_element(&terms[i]),
                    second: format_element(&terms[j]),
                    eigenvalue: format_coefficient(&mus[i], ring.field()),
                });
            }
        }
    }
    let rows = inverse_vandermonde_rows(&mus)?;
    Ok(terms
        .into_iter()
        .zip(mus)
        .zip(rows)
        .map(|((term, eigenvalue), combination)| ExtractedTerm {
            term,
            eigenvalue,
            combination,
        })
        .collect())
}

/// Row `i` of `V⁻¹` for `V_{j,i} = μᵢʲ`: the coefficients of the Lagrange
/// basis polynomial `∏_{k≠i} (x − μ_k)/(μᵢ − μ_k)`, obtained by synthetic
/// division of `∏_k (x − μ_k)` by `x − μᵢ`.
fn inverse_vandermonde_rows(mus: &[Coefficient]) -> Result<Vec<Vec<Coefficient>>> {
    let r = mus.len();
    let one = mus[0].one_like();
    // full[j] is the coefficient of x^j.
    let mut full = vec![one.clone()];
    for mu in mus {
        let mut next = vec![mu.zero_like(); full.len() + 1];
        for (j, c) in full.iter().enumerate() {
            next[j + 1] = next[j + 1].try_add(c)?;
            next[j] = next[j].try_sub(&c.try_mul(mu)?)?;
        }
        full = next;
    }
    let mut rows = Vec::with_capacity(r);
    for (i, mu) in mus.iter().enumerate() {
        let mut quotient = vec![mu.zero_like(); r];
        quotient[r - 1] = one.clone();
        for j in (1..r).rev() {
            quotient[j - 1] = full[j].try_add(&mu.try_mul(&quotient[j])?)?;
        }
        let mut denom = one.clone();
        for (k, other) in mus.iter().enumerate() {
            if k != i {
                denom = denom.try_mul(&mu.try_sub(other)?)?;
            }
        }
        let inv = denom.inv()?;
        rows.push(
            quotient
                .iter()
                .map(|c| c.try_mul(&inv))
                .collect::<Result<_>>()?,
        );
    }
    Ok(rows)
}

/// Evaluates each row against the σ-iterates of `p`.
pub fn reconstruct_terms(
    w: &DeformedWittAlgebra,
    p: &RingElement,
    extracted: &[ExtractedTerm],
) -> Vec<RingElement> {
    let r = extracted.len();
    let mut iterates = Vec::with_capacity(r);
    let mut cur = p.clone();
    for _ in 0..r {
        let next = w.sigma_apply(&cur);
        iterates.push(cur);
        cur = next;
    }
    extracted
        .iter()
        .map(|t| {
            t.combination
                .iter()
                .zip(&iterates)
                .fold(w.ring().zero(), |acc, (c, s)| acc + s.scale(c))
        })
        .collect()
}

/// Result of closing a span under brackets with window monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationReport {
    pub saturates: bool,
    /// Number of window monomials.
    pub target_dimension: usize,
    /// Span dimension after each round.
    pub dimensions: Vec<usize>,
}

/// Echelon basis keyed by leading exponent, each row with leading
/// coefficient one.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<ExponentVector, RingElement>,
}

impl Echelon {
    /// Adds `v` if independent; returns the reduced row that was added.
    fn insert(&mut self, mut v: RingElement) -> Option<RingElement> {
        while let Some((e, c)) = v.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            match self.rows.get(&e) {
                Some(row) => v = v - row.scale(&c),
                None => {
                    let row = v.scale(&c.inv().expect("nonzero leading coefficient"));
                    self.rows.insert(e, row.clone());
                    return Some(row);
                }
            }
        }
        None
    }
}

/// Closes the span of `generators` under `[·, m]` for every monomial `m`
/// in the window, keeping only results supported in the window.
pub fn bracket_ideal_saturates(
    w: &DeformedWittAlgebra,
    generators: &[RingElement],
    window: i64,
) -> Result<SaturationReport> {
    let ring = w.ring();
    let exps = ring.exponent_window(window);
    let inside: HashSet<&ExponentVector> = exps.iter().collect();
    let in_window = |a: &RingElement| a.terms().all(|(e, _)| inside.contains(e));
    let monomials: Vec<RingElement> = exps
        .iter()
        .map(|e| ring.monomial(ring.field().one(), e.clone()))
        .collect::<Result<_>>()?;
    let mut basis = Echelon::default();
    let mut frontier = Vec::new();
    for g in generators {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if in_window(g) {
            frontier.extend(basis.insert(g.clone()));
        }
    }
    let mut dimensions = vec![basis.rows.len()];
    while !frontier.is_empty() && basis.rows.len() < exps.len() {
        let mut next = Vec::new();
        for v in &frontier {
            for m in &monomials {
                let b = w.bracket(v, m)?;
                if !b.is_zero() && in_window(&b) {
                    next.extend(basis.insert(b));
                }
            }
        }
        dimensions.push(basis.rows.len());
        frontier = next;
    }
    Ok(SaturationReport {
        saturates: basis.rows.len() == exps.len(),
        target_dimension: exps.len(),
        dimensions,
    })
}
