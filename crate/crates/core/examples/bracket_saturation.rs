//! Closing a span under brackets with window monomials. For generic q the
//! bracket ideal generated by t reaches every monomial in the window; for
//! q = ζ₃ the span of t³ stays inside the proper ideal (t³).

use deformed_witt::cli::parse_element;
use deformed_witt::deform::FamilyDescriptor;
use deformed_witt::ideals::bracket_ideal_saturates;

fn main() -> deformed_witt::Result<()> {
    for (q, gen) in [
        ("symbolic", "t"),
        ("symbolic", "1 + t^2"),
        ("zeta(3)", "t^3"),
        ("zeta(3)", "t"),
    ] {
        let w = FamilyDescriptor::from_params("qwitt_poly", &[("q", q)])?.build(12)?;
        let g = parse_element(gen, w.ring())?;
        let r = bracket_ideal_saturates(&w, &[g], 6)?;
        println!(
            "q = {q:<8} generator {gen:<8} saturates = {:<5} dimensions {:?} of {}",
            r.saturates, r.dimensions, r.target_dimension
        );
    }
    Ok(())
}
