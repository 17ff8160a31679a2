//! σ(t) = qtˢ on ℚ(q)[t^{±1}]. Here g = 1 − qt^{s−1} is not a monomial,
//! δ = σ(g)/g is not a constant, and the geometric sum
//! 1 + T + ⋯ + T^{s−2} with T = qt^{s−1} generates a proper ∂-stable ideal.

use deformed_witt::cli::format_element;
use deformed_witt::deform::FamilyDescriptor;
use deformed_witt::ideals::{decide_simplicity, SimplicityOptions};

fn main() -> deformed_witt::Result<()> {
    for s in ["3", "4", "-1", "-2"] {
        let family = FamilyDescriptor::from_params("power_twist", &[("s", s)])?;
        let w = family.build(12)?;
        println!("{family}");
        println!("  g     = {}", format_element(w.g()));
        println!("  delta = {}", format_element(w.delta()));
        let v = decide_simplicity(&family, &SimplicityOptions::default())?;
        let witness = v.witness.as_ref().expect("power twists are not simple");
        println!(
            "  verdict {:?}, witness ({}), d(p)/p = {}",
            v.verdict,
            witness.generator,
            witness.quotient.as_deref().unwrap_or("-")
        );
        match w.find_hom_jacobi_witness(3)? {
            Some(x) => println!("  Hom-Jacobi fails at ({}, {}, {})", x.a, x.b, x.c),
            None => println!("  no monomial triple in [-3, 3] breaks the Hom-Jacobi identity"),
        }
    }
    Ok(())
}
