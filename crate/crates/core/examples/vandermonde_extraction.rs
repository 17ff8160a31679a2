//! A ∂-stable ideal containing p contains each of its terms: with σ
//! diagonal, σʲ(p) = Σ μᵢʲ aᵢmᵢ, and inverting the Vandermonde matrix of
//! distinct eigenvalues μᵢ recovers aᵢmᵢ from p, σ(p), σ²(p), ….

use deformed_witt::cli::{format_element, parse_element};
use deformed_witt::deform::FamilyDescriptor;
use deformed_witt::ideals::{extract_monomials, reconstruct_terms};
use deformed_witt::ring::format_coefficient;

fn main() -> deformed_witt::Result<()> {
    let w = FamilyDescriptor::from_params("qwitt_laurent", &[("k", "1")])?.build(12)?;
    let p = parse_element("2 - t^-1 + (1/q)*t^3", w.ring())?;
    println!("p = {}", format_element(&p));
    let extracted = extract_monomials(&w, &p)?;
    let rebuilt = reconstruct_terms(&w, &p, &extracted);
    let field = w.ring().field();
    for (t, r) in extracted.iter().zip(&rebuilt) {
        let row: Vec<String> = t
            .combination
            .iter()
            .map(|c| format_coefficient(c, field))
            .collect();
        println!(
            "term {} (eigenvalue {})",
            format_element(&t.term),
            format_coefficient(&t.eigenvalue, field)
        );
        println!("  = [{}] . (p, sigma(p), sigma^2(p))", row.join(", "));
        println!("  reconstructed exactly: {}", &t.term == r);
    }

    let degenerate =
        FamilyDescriptor::from_params("multi_laurent", &[("q1", "q"), ("q2", "q")])?.build(12)?;
    let p = parse_element("1 + x1*x2^-1", degenerate.ring())?;
    match extract_monomials(&degenerate, &p) {
        Err(e) => println!("q1 = q2: {e}"),
        Ok(_) => unreachable!("equal eigenvalues cannot be separated"),
    }
    Ok(())
}
