//! For q a primitive n-th root of unity the ideal (tⁿ) of ℚ(ζₙ)[t] is
//! ∂-stable, so the algebra is not simple. The certificate is checked
//! twice: by the criterion p | ∂(p) and by brute force over multipliers.

use deformed_witt::cli::{format_element, parse_element};
use deformed_witt::deform::FamilyDescriptor;
use deformed_witt::ideals::{brute_force_stability, is_partial_stable, PrincipalIdeal};

fn main() -> deformed_witt::Result<()> {
    for n in [2, 3, 5, 6] {
        let q = format!("zeta({n})");
        let w = FamilyDescriptor::from_params("qwitt_poly", &[("q", q.as_str())])?.build(12)?;
        let ideal = PrincipalIdeal::new(&parse_element(&format!("t^{n}"), w.ring())?)?;
        let cert = is_partial_stable(&w, &ideal)?;
        let brute = brute_force_stability(&w, &ideal, 10)?;
        println!(
            "q = {q}: ({}) stable = {}, d(p)/p = {}, brute force over {} multipliers agrees = {}",
            format_element(ideal.generator()),
            cert.stable,
            cert.quotient.as_ref().map_or("-".into(), format_element),
            brute.checks.len(),
            brute.stable == cert.stable,
        );
        let below = PrincipalIdeal::new(&parse_element(&format!("t^{}", n - 1), w.ring())?)?;
        let c = is_partial_stable(&w, &below)?;
        if let Some(ce) = c.counterexample {
            println!(
                "         ({}) is not stable: d(p) = {}",
                format_element(below.generator()),
                format_element(&ce.element)
            );
        }
    }
    Ok(())
}
