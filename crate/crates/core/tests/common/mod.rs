#![allow(dead_code)]

use deformed_witt::coeff::FieldDescriptor;
use deformed_witt::deform::{DeformedWittAlgebra, FamilyDescriptor};
use deformed_witt::ring::{Ring, RingDescriptor};

/// One representative of each preset family.
pub const PRESETS: [(&str, &[(&str, &str)]); 4] = [
    ("qwitt_poly", &[]),
    ("qwitt_laurent", &[("k", "2")]),
    ("power_twist", &[("s", "3")]),
    ("multi_laurent", &[]),
];

pub fn algebra(name: &str, params: &[(&str, &str)]) -> DeformedWittAlgebra {
    FamilyDescriptor::from_params(name, params)
        .unwrap()
        .build(12)
        .unwrap()
}

pub fn presets() -> Vec<DeformedWittAlgebra> {
    PRESETS.iter().map(|(n, p)| algebra(n, p)).collect()
}

/// Polynomial, Laurent, multivariate and cyclotomic mixed shapes.
pub fn ring_shapes() -> Vec<Ring> {
    let q = FieldDescriptor::rational_functions(["q"]).unwrap();
    let q12 = FieldDescriptor::rational_functions(["q1", "q2"]).unwrap();
    vec![
        RingDescriptor::univariate(FieldDescriptor::Rationals, "t", false).unwrap(),
        RingDescriptor::univariate(q, "t", true).unwrap(),
        RingDescriptor::new(q12, [("x1", true), ("x2", true)]).unwrap(),
        RingDescriptor::new(
            FieldDescriptor::cyclotomic(6).unwrap(),
            [("x", true), ("y", false)],
        )
        .unwrap(),
        RingDescriptor::univariate(FieldDescriptor::cyclotomic(5).unwrap(), "t", false).unwrap(),
    ]
}
