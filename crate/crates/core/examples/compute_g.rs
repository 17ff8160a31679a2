//! g is the gcd of (Id − σ)(m) over sampled monomials m. The report says
//! when the running gcd stopped changing.

use deformed_witt::cli::{format_element, parse_sigma};
use deformed_witt::coeff::FieldDescriptor;
use deformed_witt::deform::compute_g;
use deformed_witt::ring::RingDescriptor;

fn main() -> deformed_witt::Result<()> {
    let f = FieldDescriptor::rational_functions(["q"])?;
    type Case<'a> = (&'a [(&'a str, bool)], &'a [&'a str]);
    let cases: [Case; 4] = [
        (&[("t", false)], &["t -> q*t"]),
        (&[("t", true)], &["t -> q*t^3"]),
        (&[("t", false)], &["t -> t^2"]),
        (&[("x", true), ("y", true)], &["x -> q*x", "y -> y"]),
    ];
    for (vars, sigma) in cases {
        let ring = RingDescriptor::new(f.clone(), vars.iter().copied())?;
        let entries: Vec<String> = sigma.iter().map(|s| s.to_string()).collect();
        let endo = parse_sigma(&entries, &ring)?;
        let (g, report) = compute_g(&endo, 12)?;
        println!(
            "{:<24} g = {:<12} stabilized at {} (margin ok: {}, {} samples)",
            sigma.join(", "),
            format_element(&g),
            report.stabilized_at,
            report.stable_margin,
            report.samples
        );
    }
    Ok(())
}
