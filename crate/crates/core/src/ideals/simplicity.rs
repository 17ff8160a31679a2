//! Certified simplicity verdicts for the preset families.
//!
//! A `NotSimple` verdict always carries a proper ideal whose stability is
//! certified twice: by `p | ∂(p)` and by brute force over multipliers. A
//! witness that fails either check demotes the verdict to `Inconclusive`.

use serde::Serialize;

use super::{
    brute_force_stability, extract_monomials, is_partial_stable, reconstruct_terms, PrincipalIdeal,
};
use crate::coeff::root_of_unity_order;
use crate::deform::{
    DeformedWittAlgebra, FamilyDescriptor, SurjectivityDecision, DEFAULT_GCD_WINDOW,
};
use crate::endo::{EpiDecision, Independence};
use crate::error::{Error, Result};
use crate::random::ElementSampler;
use crate::ring::{format_element, ExponentVector, RingElement, RingExt};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityOptions {
    pub seed: u64,
    pub gcd_window: i64,
    pub multiplier_window: i64,
    pub dependence_bound: i64,
    /// Largest `k` for which the degree drop of `∂(tᵏ)` is checked.
    pub degree_bound: i64,
    pub vandermonde_samples: usize,
    pub hom_jacobi_window: i64,
}

impl Default for SimplicityOptions {
    fn default() -> Self {
        SimplicityOptions {
            seed: 0,
            gcd_window: DEFAULT_GCD_WINDOW,
            multiplier_window: 10,
            dependence_bound: crate::deform::RELATION_BOUND,
            degree_bound: 30,
            vandermonde_samples: 10,
            hom_jacobi_window: 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Simple,
    NotSimple,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteForceSummary {
    pub window: i64,
    pub checks: usize,
    pub all_divisible: bool,
}

/// A proper ∂-stable ideal with both certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub generator: String,
    pub proper: bool,
    pub stable: bool,
    /// `∂(p)/p`.
    pub quotient: Option<String>,
    pub criterion: &'static str,
    pub brute_force: BruteForceSummary,
    #[serde(skip)]
    pub ideal: PrincipalIdeal,
}

impl Witness {
    pub fn certify(
        w: &DeformedWittAlgebra,
        p: &RingElement,
        multiplier_window: i64,
    ) -> Result<Witness> {
        let ideal = PrincipalIdeal::new(p)?;
        let cert = is_partial_stable(w, &ideal)?;
        let brute = brute_force_stability(w, &ideal, multiplier_window)?;
        Ok(Witness {
            generator: format_element(ideal.generator()),
            proper: ideal.is_proper(),
            stable: cert.stable,
            quotient: cert.quotient.as_ref().map(format_element),
            criterion: cert.justification,
            brute_force: BruteForceSummary {
                window: brute.window,
                checks: brute.checks.len(),
                all_divisible: brute.stable,
            },
            ideal,
        })
    }

    pub fn verified(&self) -> bool {
        self.proper && self.stable && self.brute_force.all_divisible
    }
}

/// `"yes"`, `"no"` or `"unknown"`, with a witness for `"no"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub result: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    fn from_epi(d: EpiDecision) -> Check {
        match d {
            EpiDecision::Yes => Check {
                result: "yes",
                witness: None,
            },
            EpiDecision::No(x) => Check {
                result: "no",
                witness: Some(format_element(&x)),
            },
            EpiDecision::Unknown => Check {
                result: "unknown",
                witness: None,
            },
        }
    }

    fn from_surjectivity(d: SurjectivityDecision) -> Check {
        match d {
            SurjectivityDecision::Yes => Check {
                result: "yes",
                witness: None,
            },
            SurjectivityDecision::No(x) => Check {
                result: "no",
                witness: Some(format_element(&x)),
            },
            SurjectivityDecision::Unknown => Check {
                result: "unknown",
                witness: None,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaCheck {
    pub result: bool,
    pub delta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomJacobiCheck {
    pub window: i64,
    /// A monomial triple with nonzero residual, if the search found one.
    pub witness: Option<[String; 3]>,
    pub residual: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub epimorphism: Check,
    pub partial_surjective: Check,
    #[serde(rename = "delta_in_F")]
    pub delta_in_f: DeltaCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hom_jacobi: Option<HomJacobiCheck>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// `∂(tᵏ)` is nonzero of degree `k − 1` for `1 ≤ k ≤ max_degree`.
    DegreeDrop {
        max_degree: i64,
        verified: bool,
    },
    RootOfUnity {
        order: u64,
    },
    /// Every term of each sampled `p` was recovered from its σ-iterates.
    Vandermonde {
        samples: usize,
        terms_extracted: usize,
        reconstructed: bool,
        all_terms_units: bool,
    },
    DependenceSearch {
        bound: i64,
        relation: Option<Vec<i64>>,
        independence_proved: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Seeds {
    pub vandermonde: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Windows {
    pub gcd: i64,
    pub multiplier: i64,
    pub dependence_bound: i64,
    pub degree_bound: i64,
    pub hom_jacobi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityVerdict {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub hypothesis_report: HypothesisReport,
    pub evidence: Vec<Evidence>,
    pub seeds: Seeds,
    pub windows: Windows,
}

/// Epimorphism, ∂-surjectivity and `δ ∈ F` checks for any algebra.
pub fn hypotheses(w: &DeformedWittAlgebra) -> HypothesisReport {
    HypothesisReport {
        epimorphism: Check::from_epi(w.sigma().is_epimorphism()),
        partial_surjective: Check::from_surjectivity(w.is_partial_surjective()),
        delta_in_f: DeltaCheck {
            result: w.delta_is_constant(),
            delta: format_element(w.delta()),
        },
        hom_jacobi: None,
        notes: Vec::new(),
    }
}

fn monomial(w: &DeformedWittAlgebra, e: Vec<i64>) -> Result<RingElement> {
    w.ring()
        .monomial(w.ring().field().one(), ExponentVector::new(e))
}

/// `∂(tᵏ) ≠ 0` with degree `k − 1` for every `k ≤ bound`.
fn degree_drop(w: &DeformedWittAlgebra, bound: i64) -> Result<bool> {
    for k in 1..=bound {
        let d = w.partial(&monomial(w, vec![k])?)?;
        if d.is_zero() || d.degree() != Some(k - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Samples random `p` and extracts every term from the σ-iterates. A
/// singular system means the sample exposed equal eigenvalues.
fn vandermonde(w: &DeformedWittAlgebra, opts: &SimplicityOptions) -> Result<Evidence> {
    let mut sampler = ElementSampler::new(opts.seed, 5, 3);
    let mut terms_extracted = 0;
    let mut reconstructed = true;
    let mut all_terms_units = true;
    for _ in 0..opts.vandermonde_samples {
        let p = sampler.nonzero_element(w.ring());
        let extracted = match extract_monomials(w, &p) {
            Ok(x) => x,
            Err(Error::SingularSystem { .. }) => {
                reconstructed = false;
                continue;
            }
            Err(e) => return Err(e),
        };
        let rebuilt = reconstruct_terms(w, &p, &extracted);
        for (t, r) in extracted.iter().zip(&rebuilt) {
            reconstructed &= &t.term == r;
            all_terms_units &= t.term.is_unit();
        }
        terms_extracted += extracted.len();
    }
    Ok(Evidence::Vandermonde {
        samples: opts.vandermonde_samples,
        terms_extracted,
        reconstructed,
        all_terms_units,
    })
}

fn vandermonde_ok(e: &Evidence) -> bool {
    matches!(
        e,
        Evidence::Vandermonde {
            reconstructed: true,
            all_terms_units: true,
            ..
        }
    )
}

/// `NotSimple` with `p` if both certificates hold, else `Inconclusive`.
fn not_simple(
    w: &DeformedWittAlgebra,
    p: &RingElement,
    opts: &SimplicityOptions,
    report: &mut HypothesisReport,
) -> Result<(Verdict, Option<Witness>)> {
    let witness = Witness::certify(w, p, opts.multiplier_window)?;
    if witness.verified() {
        Ok((Verdict::NotSimple, Some(witness)))
    } else {
        report.notes.push(format!(
            "candidate ideal ({}) failed certification",
            witness.generator
        ));
        Ok((Verdict::Inconclusive, None))
    }
}

fn surjectivity_note(report: &mut HypothesisReport) {
    if let Some(x) = &report.partial_surjective.witness {
        report.notes.push(format!(
            "d(A) != A since {x} has no preimage; the verdict rests on the Vandermonde certificate"
        ));
    }
}

/// Decides simplicity of a preset family, with certificates.
pub fn decide_simplicity(
    family: &FamilyDescriptor,
    opts: &SimplicityOptions,
) -> Result<SimplicityVerdict> {
    let w = family.build(opts.gcd_window)?;
    let mut report = hypotheses(&w);
    let mut evidence = Vec::new();
    let q = || w.sigma().scalars()[0].clone();
    let (verdict, witness) = match family {
        FamilyDescriptor::QwittPoly { .. } => match root_of_unity_order(&q())? {
            None => {
                let verified = degree_drop(&w, opts.degree_bound)?;
                evidence.push(Evidence::DegreeDrop {
                    max_degree: opts.degree_bound,
                    verified,
                });
                let v = if verified {
                    Verdict::Simple
                } else {
                    Verdict::Inconclusive
                };
                (v, None)
            }
            Some(n) => {
                evidence.push(Evidence::RootOfUnity { order: n });
                not_simple(&w, &monomial(&w, vec![n as i64])?, opts, &mut report)?
            }
        },
        FamilyDescriptor::QwittLaurent { .. } => match root_of_unity_order(&q())? {
            None => {
                let e = vandermonde(&w, opts)?;
                let v = if vandermonde_ok(&e) {
                    Verdict::Simple
                } else {
                    Verdict::Inconclusive
                };
                evidence.push(e);
                surjectivity_note(&mut report);
                (v, None)
            }
            Some(n) => {
                evidence.push(Evidence::RootOfUnity { order: n });
                let p = w.ring().one() + monomial(&w, vec![n as i64])?;
                not_simple(&w, &p, opts, &mut report)?
            }
        },
        FamilyDescriptor::PowerTwist { s, .. } => {
            let (big_t, top) = if *s > 2 {
                (w.ring().constant(q()) * monomial(&w, vec![s - 1])?, s - 2)
            } else {
                (
                    w.ring().constant(q().inv()?) * monomial(&w, vec![1 - s])?,
                    -s,
                )
            };
            let p = (0..=top as u32).fold(w.ring().zero(), |acc, i| acc + big_t.pow(i));
            let found = w.find_hom_jacobi_witness(opts.hom_jacobi_window)?;
            if found.is_none() && !w.delta_is_constant() {
                report.notes.push(format!(
                    "delta is not constant, yet every monomial triple in [-{0}, {0}] has zero Hom-Jacobi residual",
                    opts.hom_jacobi_window
                ));
            }
            report.hom_jacobi = Some(HomJacobiCheck {
                window: opts.hom_jacobi_window,
                witness: found.as_ref().map(|f| {
                    [
                        format_element(&f.a),
                        format_element(&f.b),
                        format_element(&f.c),
                    ]
                }),
                residual: found.as_ref().map(|f| format_element(&f.residual)),
            });
            not_simple(&w, &p, opts, &mut report)?
        }
        FamilyDescriptor::MultiLaurent { .. } => {
            let relations = w.sigma().eigenvalue_relations(opts.dependence_bound);
            evidence.push(Evidence::DependenceSearch {
                bound: opts.dependence_bound,
                relation: match &relations {
                    Independence::Relation(k) => Some(k.as_slice().to_vec()),
                    _ => None,
                },
                independence_proved: relations == Independence::Independent,
            });
            match relations {
                Independence::Independent => {
                    let e = vandermonde(&w, opts)?;
                    let v = if vandermonde_ok(&e) {
                        Verdict::Simple
                    } else {
                        Verdict::Inconclusive
                    };
                    evidence.push(e);
                    surjectivity_note(&mut report);
                    (v, None)
                }
                Independence::Relation(k) => {
                    let p = w.ring().one() + w.ring().monomial(w.ring().field().one(), k)?;
                    not_simple(&w, &p, opts, &mut report)?
                }
                Independence::Unknown => (Verdict::Inconclusive, None),
            }
        }
    };
    Ok(SimplicityVerdict {
        verdict,
        witness,
        hypothesis_report: report,
        evidence,
        seeds: Seeds {
            vandermonde: opts.seed,
        },
        windows: Windows {
            gcd: opts.gcd_window,
            multiplier: opts.multiplier_window,
            dependence_bound: opts.dependence_bound,
            degree_bound: opts.degree_bound,
            hom_jacobi: opts.hom_jacobi_window,
        },
    })
}
