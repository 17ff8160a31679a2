//! σ(xᵢ) = qᵢxᵢ on ℚ(q₁, …)[x^{±1}] with g = 1. The eigenvalue of x^k is
//! ∏ qᵢ^{kᵢ}; simplicity hinges on whether these are pairwise distinct,
//! i.e. on multiplicative independence of the qᵢ.

use deformed_witt::cli::{format_element, parse_element};
use deformed_witt::deform::FamilyDescriptor;
use deformed_witt::endo::Independence;
use deformed_witt::ideals::{decide_simplicity, SimplicityOptions};

fn main() -> deformed_witt::Result<()> {
    let cases: [&[(&str, &str)]; 4] = [
        &[],
        &[("q1", "q"), ("q2", "q")],
        &[("q1", "2"), ("q2", "3")],
        &[("q1", "2"), ("q2", "1/4")],
    ];
    for params in cases {
        let family = FamilyDescriptor::from_params("multi_laurent", params)?;
        let w = family.build(12)?;
        let x = parse_element("x1^2*x2^-1", w.ring())?;
        println!(
            "{family}: d(x1^2*x2^-1) = {}",
            format_element(&w.partial(&x)?)
        );
        match w.sigma().eigenvalue_relations(8) {
            Independence::Independent => println!("  eigenvalues multiplicatively independent"),
            Independence::Relation(k) => println!("  relation with exponents {k}"),
            Independence::Unknown => println!("  no relation found, independence unproved"),
        }
        let v = decide_simplicity(&family, &SimplicityOptions::default())?;
        match &v.witness {
            Some(wi) => println!(
                "  {:?}: ({}) is a proper stable ideal",
                v.verdict, wi.generator
            ),
            None => println!("  {:?}", v.verdict),
        }
    }
    Ok(())
}
