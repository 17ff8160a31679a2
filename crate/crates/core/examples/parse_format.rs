//! The expression grammar and the canonical printer. Printing is in
//! ascending graded-lex order and parses back to the same element.

use deformed_witt::cli::{format_element, parse_element};
use deformed_witt::coeff::FieldDescriptor;
use deformed_witt::ring::RingDescriptor;

fn main() -> deformed_witt::Result<()> {
    let laurent =
        RingDescriptor::univariate(FieldDescriptor::rational_functions(["q"])?, "t", true)?;
    for text in [
        "1 + q*t^2",
        "t^-3 * (1 - q)",
        "(t^2 - 1)/(t - 1)",
        "q^-1*t - t/q",
        "3/6 + (q + 1)^2",
    ] {
        let a = parse_element(text, &laurent)?;
        let printed = format_element(&a);
        assert_eq!(parse_element(&printed, &laurent)?, a);
        println!("{text:<22} -> {printed}");
    }

    let poly = RingDescriptor::univariate(FieldDescriptor::Rationals, "t", false)?;
    let cyc = RingDescriptor::new(FieldDescriptor::cyclotomic(6)?, [("x", true), ("y", false)])?;
    for (text, ring) in [
        ("t^-1", &poly),
        ("1 + * t", &laurent),
        ("1 + s", &laurent),
        ("zeta(4)", &cyc),
        ("y^-2", &cyc),
    ] {
        match parse_element(text, ring) {
            Err(e) => println!("{text:<10} error: {e}"),
            Ok(a) => println!("{text:<10} -> {}", format_element(&a)),
        }
    }
    println!(
        "{}",
        format_element(&parse_element("zeta(3)*x^-1*y + zeta(6)^3", &cyc)?)
    );
    Ok(())
}
