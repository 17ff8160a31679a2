//! Closed forms for g, δ and ∂ in each preset family.

mod common;

use deformed_witt::cli::{format_element, parse_element};
use deformed_witt::deform::{compute_g, DeformedWittAlgebra, GProvenance};
use deformed_witt::ring::{exact_divide, RingElement, RingExt};

fn el(w: &DeformedWittAlgebra, text: &str) -> RingElement {
    parse_element(text, w.ring()).unwrap()
}

/// `1 + T + ⋯ + T^m`.
fn geometric(t: &RingElement, m: u32) -> RingElement {
    (0..=m).fold(t.ring().zero(), |acc, i| acc + t.pow(i))
}

#[test]
fn jackson_family() {
    let w = common::algebra("qwitt_poly", &[]);
    assert_eq!(w.g(), &el(&w, "t - q*t"));
    assert_eq!(format_element(w.delta()), "q");
    assert!(w.delta_is_constant());
    let (computed, _) = compute_g(w.sigma(), 12).unwrap();
    assert!(exact_divide(w.g(), &computed).unwrap().is_unit());
}

#[test]
fn laurent_family_delta_is_q_to_the_k() {
    for k in -2..=2 {
        let k_text = k.to_string();
        let w = common::algebra("qwitt_laurent", &[("k", k_text.as_str())]);
        assert_eq!(w.g(), &el(&w, &format!("t^{k}")));
        assert_eq!(w.delta(), &el(&w, &format!("q^{k}")));
        assert!(matches!(w.provenance(), GProvenance::PresetOverride { .. }));
    }
    let w = common::algebra("qwitt_laurent", &[("k", "2")]);
    assert_eq!(format_element(w.delta()), "q^2");
}

#[test]
fn power_twist_positive_s() {
    for s in [3i64, 4, 5] {
        let s_text = s.to_string();
        let w = common::algebra("power_twist", &[("s", s_text.as_str())]);
        let t = el(&w, &format!("q*t^{}", s - 1));
        assert_eq!(w.g(), &(w.ring().one() - &t));
        let expected = &t * &geometric(&t, (s - 2) as u32);
        assert_eq!(w.partial(&t).unwrap(), expected, "s = {s}");
        assert!(!w.delta_is_constant());
    }
}

#[test]
fn power_twist_negative_s() {
    for s in [-1i64, -2] {
        let s_text = s.to_string();
        let w = common::algebra("power_twist", &[("s", s_text.as_str())]);
        let t = el(&w, &format!("q^-1*t^{}", 1 - s));
        assert_eq!(w.g(), &(w.ring().one() - &t));
        // ∂(T) = −T^s (1 + T + ⋯ + T^{−s}); T^s is a unit power.
        let t_s = t.unit_inverse().unwrap().pow(s.unsigned_abs() as u32);
        let expected = -(&t_s * &geometric(&t, (-s) as u32));
        assert_eq!(w.partial(&t).unwrap(), expected, "s = {s}");
        assert!(!w.delta_is_constant());
    }
}

#[test]
fn power_twist_generator_images() {
    let w = common::algebra("power_twist", &[("s", "3")]);
    assert_eq!(w.sigma_apply(&el(&w, "t^-1")), el(&w, "q^-1*t^-3"));
    let image = el(&w, "t") - w.sigma_apply(&el(&w, "t"));
    assert_eq!(image, el(&w, "t*(1 - q*t^2)"));
    let image = el(&w, "t^-1") - w.sigma_apply(&el(&w, "t^-1"));
    assert_eq!(image, el(&w, "-q^-1*t^-3*(1 - q*t^2)"));
}

#[test]
fn multi_laurent_family() {
    let w = common::algebra("multi_laurent", &[("n", "3")]);
    assert!(w.g().is_one());
    assert!(w.delta().is_one());
    for k in w.ring().exponent_window(2) {
        let m = w
            .ring()
            .monomial(w.ring().field().one(), k.clone())
            .unwrap();
        let eigenvalue =
            k.as_slice()
                .iter()
                .enumerate()
                .fold(w.ring().field().one(), |acc, (i, &e)| {
                    acc.try_mul(&w.ring().field().param(i).unwrap().pow(e).unwrap())
                        .unwrap()
                });
        let expected = m.scale(&w.ring().field().one().try_sub(&eigenvalue).unwrap());
        assert_eq!(w.partial(&m).unwrap(), expected);
    }
}
