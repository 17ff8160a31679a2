//! Canonical text for coefficients and ring elements.
//!
//! Terms appear in ascending graded-lex order. A coefficient that is not a
//! plain product (it has several terms or a denominator) is parenthesized
//! before `*monomial`. The output is accepted by the element parser.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::RingElement;
use crate::coeff::{Coefficient, FieldDescriptor, IntPoly};

fn power(name: &str, e: i64) -> String {
    match e {
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

/// `x^a*y^b` for the nonzero exponents; empty for the unit monomial.
fn monomial<'a>(
    names: impl IntoIterator<Item = &'a str>,
    exps: impl IntoIterator<Item = i64>,
) -> String {
    names
        .into_iter()
        .zip(exps)
        .filter(|(_, e)| *e != 0)
        .map(|(n, e)| power(n, e))
        .collect::<Vec<_>>()
        .join("*")
}

/// Joins signed pieces as `a + b - c`. Each piece is `(negative, body)`.
fn join_signed(pieces: Vec<(bool, String)>) -> String {
    if pieces.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in pieces.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

/// `|c| * m` with the unit factors elided.
fn scaled(abs: String, mono: String) -> String {
    match (abs == "1", mono.is_empty()) {
        (_, true) => abs,
        (true, false) => mono,
        (false, false) => format!("{abs}*{mono}"),
    }
}

fn rational_abs(r: &BigRational) -> String {
    r.abs().to_string()
}

fn int_poly(p: &IntPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by_key(|(e, _)| (e.iter().map(|&x| u64::from(x)).sum::<u64>(), (*e).clone()));
    let pieces = terms
        .into_iter()
        .map(|(e, c)| {
            let mono = monomial(
                names.iter().map(String::as_str),
                e.iter().map(|&x| i64::from(x)),
            );
            (c.is_negative(), scaled(c.abs().to_string(), mono))
        })
        .collect();
    join_signed(pieces)
}

fn is_atom(s: &str) -> bool {
    !s.trim_start_matches('-').contains([' ', '/'])
}

/// A coefficient as a signed piece: `(negative, body)` where `body` can be
/// placed before `*monomial` without changing meaning.
fn coefficient_piece(c: &Coefficient, field: &FieldDescriptor) -> (bool, String) {
    match c {
        Coefficient::Rational(r) => (r.is_negative(), rational_abs(r)),
        Coefficient::Function(f) => {
            let names = field.parameter_names();
            let num = f.numerator();
            let den = f.denominator();
            let (neg, num_str) = if num.len() == 1 && num.leading_coefficient().is_negative() {
                (true, int_poly(&num.neg(), names))
            } else {
                (false, int_poly(num, names))
            };
            if den.is_one() {
                return (neg, num_str);
            }
            let num_str = if num.len() > 1 {
                format!("({num_str})")
            } else {
                num_str
            };
            let den_str = int_poly(den, names);
            let den_str = if den.len() == 1 && is_atom(&den_str) && !den_str.contains(['^', '*']) {
                den_str
            } else {
                format!("({den_str})")
            };
            (neg, format!("{num_str}/{den_str}"))
        }
        Coefficient::Cyclotomic(z) => {
            let pieces: Vec<(bool, String)> = z
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, r)| !r.is_zero())
                .map(|(i, r)| {
                    let mono = match i {
                        0 => String::new(),
                        _ => power(&format!("zeta({})", z.order()), i as i64),
                    };
                    (r.is_negative(), scaled(rational_abs(r), mono))
                })
                .collect();
            if pieces.len() == 1 {
                pieces.into_iter().next().unwrap()
            } else {
                (false, join_signed(pieces))
            }
        }
    }
}

/// Canonical text of a coefficient of `field`.
pub fn format_coefficient(c: &Coefficient, field: &FieldDescriptor) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let (neg, body) = coefficient_piece(c, field);
    join_signed(vec![(neg, body)])
}

/// Canonical text of a ring element, e.g. `(1 + q + q^2)*t^2`.
pub fn format_element(a: &RingElement) -> String {
    let ring = a.ring();
    let names: Vec<&str> = ring.variables().iter().map(String::as_str).collect();
    let pieces = a
        .terms()
        .map(|(e, c)| {
            let mono = monomial(names.iter().copied(), e.as_slice().iter().copied());
            let (neg, body) = coefficient_piece(c, ring.field());
            let body = if mono.is_empty() || body == "1" || is_atom(&body) {
                body
            } else {
                format!("({body})")
            };
            (neg, scaled(body, mono))
        })
        .collect();
    join_signed(pieces)
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self))
    }
}
