//! The q-deformed Witt algebra on ℚ(q)[t]: σ(t) = qt, g = (1 − q)t and
//! ∂ is the Jackson derivative, ∂(tᵏ) = (1 + q + ⋯ + q^{k−1}) t^{k−1}.
//!
//! Run with `cargo run --example jackson_derivative`.

use deformed_witt::cli::{format_element, parse_element};
use deformed_witt::deform::FamilyDescriptor;

fn main() -> deformed_witt::Result<()> {
    let w = FamilyDescriptor::from_params("qwitt_poly", &[("q", "symbolic")])?.build(12)?;
    println!("g     = {}", format_element(w.g()));
    println!("delta = {}", format_element(w.delta()));
    for k in 1..=5 {
        let tk = parse_element(&format!("t^{k}"), w.ring())?;
        println!("d(t^{k}) = {}", format_element(&w.partial(&tk)?));
    }
    let a = parse_element("1 + t^2", w.ring())?;
    let b = parse_element("q*t^3", w.ring())?;
    println!("[1 + t^2, q*t^3] = {}", format_element(&w.bracket(&a, &b)?));
    Ok(())
}
