//! Library results compared with independently computed values.

mod common;

use deformed_witt::cli::{format_element, parse_element};
use deformed_witt::coeff::{cyclotomic_polynomial, divisors, Coefficient, FieldDescriptor};
use deformed_witt::deform::{DeformedWittAlgebra, SurjectivityDecision};
use deformed_witt::endo::{EpiDecision, Independence, MonoDecision};
use deformed_witt::ideals::{is_partial_stable, PrincipalIdeal};
use deformed_witt::random::ElementSampler;
use deformed_witt::ring::{
    exact_divide, gcd_normalized, ExponentVector, RingDescriptor, RingElement, RingExt,
};
use num_bigint::BigInt;

fn el(w: &DeformedWittAlgebra, text: &str) -> RingElement {
    parse_element(text, w.ring()).unwrap()
}

/// Dense product of integer polynomials, lowest degree first.
fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn cyclotomic_polynomials_multiply_to_x_n_minus_one() {
    for n in 1..=30u64 {
        let product = divisors(n)
            .into_iter()
            .fold(vec![BigInt::from(1)], |acc, d| {
                convolve(&acc, &cyclotomic_polynomial(d))
            });
        let mut expected = vec![BigInt::from(0); n as usize + 1];
        expected[0] = BigInt::from(-1);
        expected[n as usize] = BigInt::from(1);
        assert_eq!(product, expected, "n = {n}");
    }
    let ints = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
    assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
    assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
}

#[test]
fn fourth_root_of_unity_squares_to_minus_one() {
    let f = FieldDescriptor::cyclotomic(4).unwrap();
    let z = f.zeta(4, 1).unwrap();
    assert_eq!(z.try_mul(&z).unwrap(), -f.one());
}

/// Euclid's algorithm on dense univariate polynomials over ℚ(q).
fn euclid(mut a: Vec<Coefficient>, mut b: Vec<Coefficient>) -> Vec<Coefficient> {
    fn trim(v: &mut Vec<Coefficient>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lead = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let factor = a.last().unwrap().try_div(&lead).unwrap();
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[shift + i] = a[shift + i].try_sub(&factor.try_mul(c).unwrap()).unwrap();
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let lead = a.last().unwrap().clone();
    a.iter().map(|c| c.try_div(&lead).unwrap()).collect()
}

#[test]
fn gcd_matches_euclid() {
    let f = FieldDescriptor::rational_functions(["q"]).unwrap();
    let ring = RingDescriptor::univariate(f.clone(), "t", false).unwrap();
    let dense = |a: &RingElement| {
        let deg = a.degree().unwrap() as usize;
        let mut v = vec![f.zero(); deg + 1];
        for (e, c) in a.terms() {
            v[e.as_slice()[0] as usize] = c.clone();
        }
        v
    };
    let a = parse_element("(1 - q)*t", &ring).unwrap();
    let b = parse_element("(1 - q^2)*t^2", &ring).unwrap();
    let g = gcd_normalized(&[a.clone(), b.clone()]).unwrap();
    assert_eq!(format_element(&g), "t");
    assert_eq!(dense(&g), euclid(dense(&a), dense(&b)));

    let mut s = ElementSampler::new(5, 4, 4);
    for _ in 0..20 {
        let common_factor = s.nonzero_element(&ring);
        let x = &s.nonzero_element(&ring) * &common_factor;
        let y = &s.nonzero_element(&ring) * &common_factor;
        let g = gcd_normalized(&[x.clone(), y.clone()]).unwrap();
        assert_eq!(dense(&g.monic_associate()), euclid(dense(&x), dense(&y)));
    }
}

#[test]
fn exact_division_multiplies_back() {
    let w = common::algebra("qwitt_poly", &[]);
    let a = el(&w, "(1 - q^2)*t^2");
    let b = el(&w, "(1 - q)*t");
    let quotient = exact_divide(&a, &b).unwrap();
    assert_eq!(format_element(&quotient), "(1 + q)*t");
    assert_eq!(&quotient * &b, a);
}

/// `[k]_q = (1 − qᵏ)/(1 − q)`.
fn q_integer(q: &Coefficient, k: i64) -> Coefficient {
    let one = q.one_like();
    one.try_sub(&q.pow(k).unwrap())
        .unwrap()
        .try_div(&one.try_sub(q).unwrap())
        .unwrap()
}

#[test]
fn jackson_derivative_matches_q_integers() {
    let w = common::algebra("qwitt_poly", &[]);
    let q = w.ring().field().param(0).unwrap();
    for k in 1..=50 {
        let tk = w
            .ring()
            .monomial(q.one_like(), ExponentVector::new(vec![k]))
            .unwrap();
        let expected = w
            .ring()
            .monomial(q_integer(&q, k), ExponentVector::new(vec![k - 1]))
            .unwrap();
        assert_eq!(w.partial(&tk).unwrap(), expected, "k = {k}");
    }
    assert_eq!(
        format_element(&w.partial(&el(&w, "t^3")).unwrap()),
        "(1 + q + q^2)*t^2"
    );
}

/// `[tⁱ, tʲ] = (qⁱ[j]_q − qʲ[i]_q) t^{i+j−1}`, extended bilinearly.
fn bracket_by_terms(w: &DeformedWittAlgebra, a: &RingElement, b: &RingElement) -> RingElement {
    let q = w.ring().field().param(0).unwrap();
    let mut acc = w.ring().zero();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let (i, j) = (ea.as_slice()[0], eb.as_slice()[0]);
            let structure = q
                .pow(i)
                .unwrap()
                .try_mul(&q_integer(&q, j))
                .unwrap()
                .try_sub(&q.pow(j).unwrap().try_mul(&q_integer(&q, i)).unwrap())
                .unwrap();
            if i + j >= 1 {
                let c = ca.try_mul(cb).unwrap().try_mul(&structure).unwrap();
                acc = acc
                    + w.ring()
                        .monomial(c, ExponentVector::new(vec![i + j - 1]))
                        .unwrap();
            }
        }
    }
    acc
}

#[test]
fn bracket_matches_term_by_term_expansion() {
    let w = common::algebra("qwitt_poly", &[]);
    assert_eq!(
        format_element(&w.bracket(&el(&w, "t"), &el(&w, "t^2")).unwrap()),
        "q*t^2"
    );
    let mut s = ElementSampler::new(17, 4, 6);
    for _ in 0..30 {
        let (a, b) = (s.element(w.ring()), s.element(w.ring()));
        assert_eq!(w.bracket(&a, &b).unwrap(), bracket_by_terms(&w, &a, &b));
    }
}

#[test]
fn hom_twist_and_small_residuals() {
    let w = common::algebra("qwitt_poly", &[]);
    assert_eq!(
        format_element(&w.sigma1_apply(&el(&w, "t")).unwrap()),
        "2*q*t"
    );
    assert_eq!(
        w.sigma1_apply(&w.ring().one()).unwrap(),
        w.ring().one() + w.delta()
    );
    assert!(w.twist_residual(&el(&w, "t")).unwrap().is_zero());
    let pt = common::algebra("power_twist", &[("s", "3")]);
    assert!(pt
        .leibniz_residual(&el(&pt, "t^-1"), &el(&pt, "t"))
        .unwrap()
        .is_zero());
    assert_eq!(
        format_element(&pt.sigma_apply(&el(&pt, "t^-1"))),
        "(1/q)*t^-3"
    );
    let ml = common::algebra("multi_laurent", &[]);
    assert_eq!(
        format_element(&ml.sigma1_apply(&el(&ml, "x1")).unwrap()),
        "(1 + q1)*x1"
    );
}

/// `[δa, X] − δ[a, X] = ((σ(δ) − δ)/g)·σ(a)·X`, which makes the Hom-Jacobi
/// sum equal the generalized Jacobi sum for any δ.
#[test]
fn delta_twisted_bracket_defect_has_closed_form() {
    for w in common::presets() {
        let d = w.delta().clone();
        let coefficient = exact_divide(&(w.sigma_apply(&d) - &d), w.g()).unwrap();
        let mut s = ElementSampler::new(23, 3, 3);
        for _ in 0..10 {
            let (a, x) = (s.element(w.ring()), s.element(w.ring()));
            let lhs = w.bracket(&(&d * &a), &x).unwrap() - &d * &w.bracket(&a, &x).unwrap();
            assert_eq!(lhs, &coefficient * &(w.sigma_apply(&a) * &x));
        }
    }
}

#[test]
fn endomorphism_decisions() {
    let pt = common::algebra("power_twist", &[("s", "3")]);
    assert_eq!(pt.sigma().is_epimorphism(), EpiDecision::No(el(&pt, "t")));
    assert_eq!(pt.sigma().is_monomorphism(), MonoDecision::Yes);
    let ml = common::algebra("multi_laurent", &[("q1", "q"), ("q2", "q")]);
    let u = el(&ml, "x1*x2^-1");
    assert_eq!(ml.sigma_apply(&u), u);
    assert!(ml.sigma().fixed_by_sigma(&u));
}

/// Exponent vectors in the box whose eigenvalue is one, by enumeration.
fn relations_by_enumeration(w: &DeformedWittAlgebra, bound: i64) -> Vec<ExponentVector> {
    w.ring()
        .exponent_window(bound)
        .into_iter()
        .filter(|k| !k.is_zero() && w.sigma().eigenvalue(k).is_one())
        .collect()
}

#[test]
fn eigenvalue_relations_match_enumeration() {
    let cases: [(&[(&str, &str)], bool); 6] = [
        (&[], false),
        (&[("q1", "q"), ("q2", "q")], true),
        (&[("q1", "2"), ("q2", "3")], false),
        (&[("q1", "2"), ("q2", "1/4")], true),
        (&[("q1", "zeta(6)"), ("q2", "zeta(6)^2")], true),
        (&[("q1", "3"), ("q2", "-3")], true),
    ];
    for (params, dependent) in cases {
        let w = common::algebra("multi_laurent", params);
        let found = relations_by_enumeration(&w, 3);
        assert_eq!(!found.is_empty(), dependent, "{params:?}");
        match w.sigma().eigenvalue_relations(8) {
            Independence::Relation(k) => {
                assert!(dependent);
                assert!(w.sigma().eigenvalue(&k).is_one());
            }
            Independence::Independent => assert!(!dependent),
            Independence::Unknown => panic!("undecided for {params:?}"),
        }
    }
}

#[test]
fn surjectivity_witnesses() {
    let w = common::algebra("qwitt_poly", &[]);
    assert_eq!(w.is_partial_surjective(), SurjectivityDecision::Yes);
    for n in [2, 3, 5, 6] {
        let q = format!("zeta({n})");
        let w = common::algebra("qwitt_poly", &[("q", q.as_str())]);
        assert!(w.partial(&el(&w, &format!("t^{n}"))).unwrap().is_zero());
        assert_eq!(
            w.is_partial_surjective(),
            SurjectivityDecision::No(el(&w, &format!("t^{}", n - 1)))
        );
    }
    for k in [-2, -1, 1, 2] {
        let k_text = k.to_string();
        let w = common::algebra("qwitt_laurent", &[("k", k_text.as_str())]);
        assert!(w.partial(&w.ring().one()).unwrap().is_zero());
        assert_eq!(
            w.is_partial_surjective(),
            SurjectivityDecision::No(el(&w, &format!("t^{}", -k)))
        );
    }
}

#[test]
fn generic_square_ideal_is_not_stable() {
    let w = common::algebra("qwitt_poly", &[]);
    let ideal = PrincipalIdeal::new(&el(&w, "t^2")).unwrap();
    let d = w.partial(ideal.generator()).unwrap();
    assert_eq!(format_element(&d), "(1 + q)*t");
    assert!(d.degree() < ideal.generator().degree());
    assert!(!is_partial_stable(&w, &ideal).unwrap().stable);
}
