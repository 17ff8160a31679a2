use super::*;
use crate::coeff::FieldDescriptor;
use crate::ring::RingDescriptor;

fn family(name: &str, params: &[(&str, &str)]) -> DeformedWittAlgebra {
    let params: Vec<(String, String)> = params
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    FamilyDescriptor::from_params(name, &params)
        .unwrap()
        .build(DEFAULT_GCD_WINDOW)
        .unwrap()
}

fn t_pow(w: &DeformedWittAlgebra, k: i64) -> RingElement {
    w.ring()
        .monomial(w.ring().field().one(), ExponentVector::new(vec![k]))
        .unwrap()
}

fn q_of(w: &DeformedWittAlgebra) -> crate::coeff::Coefficient {
    w.ring().field().param(0).unwrap()
}

#[test]
fn jackson_derivative_on_monomials() {
    let w = family("qwitt_poly", &[("q", "symbolic")]);
    let q = q_of(&w);
    let one = w.ring().field().one();
    // ∂(t^k) = (1 + q + … + q^{k−1}) t^{k−1}
    let mut qint = w.ring().field().zero();
    let mut qpow = one.clone();
    for k in 1..=12 {
        qint = &qint + &qpow;
        qpow = &qpow * &q;
        let expected = w.ring().constant(qint.clone()) * t_pow(&w, k - 1);
        assert_eq!(w.partial(&t_pow(&w, k)).unwrap(), expected);
    }
    assert!(w.partial(&w.ring().one()).unwrap().is_zero());
}

#[test]
fn preset_constants() {
    let w = family("qwitt_poly", &[]);
    let q = q_of(&w);
    assert_eq!(w.delta(), &w.ring().constant(q.clone()));
    assert!(w.delta_is_constant());

    let w = family("qwitt_laurent", &[("k", "3")]);
    let q = q_of(&w);
    assert_eq!(w.g(), &t_pow(&w, 3));
    assert_eq!(w.delta(), &w.ring().constant(q.pow(3).unwrap()));

    let w = family("multi_laurent", &[("n", "3")]);
    assert!(w.g().is_one());
    assert!(w.delta().is_one());
}

#[test]
fn power_twist_partial_of_t() {
    for s in [3, 4, 5] {
        let w = family("power_twist", &[("s", &s.to_string())]);
        let q = q_of(&w);
        let big_t = w.ring().constant(q.clone()) * t_pow(&w, s - 1);
        // ∂(T) = T(1 + T + … + T^{s−2})
        let mut geometric = w.ring().zero();
        for i in 0..=(s - 2) as u32 {
            geometric = geometric + big_t.pow(i);
        }
        assert_eq!(w.partial(&big_t).unwrap(), &big_t * &geometric, "s = {s}");
        assert!(!w.delta_is_constant());
    }
}

#[test]
fn negative_power_twist_g() {
    for s in [-1, -2, -3] {
        let w = family("power_twist", &[("s", &s.to_string())]);
        let q = q_of(&w);
        let big_t = w.ring().constant(q.inv().unwrap()) * t_pow(&w, 1 - s);
        assert_eq!(w.g(), &(w.ring().one() - big_t));
        assert!(w.twist_residual(&t_pow(&w, 2)).unwrap().is_zero());
    }
}

#[test]
fn computed_gcd_is_monic_associate() {
    let field = FieldDescriptor::rational_functions(["q"]).unwrap();
    let ring = RingDescriptor::univariate(field.clone(), "t", false).unwrap();
    let sigma = Endomorphism::diagonal(&ring, vec![field.param(0).unwrap()]).unwrap();
    let (g, report) = compute_g(&sigma, DEFAULT_GCD_WINDOW).unwrap();
    assert_eq!(g, ring.var(0));
    assert_eq!(report.stabilized_at, 1);
    assert!(report.stable_margin);
    assert!(!report.unit_short_circuit);
}

#[test]
fn unit_image_short_circuits() {
    let w = family("multi_laurent", &[("q1", "2"), ("q2", "3")]);
    assert!(w.stabilization().unit_short_circuit);
}

#[test]
fn rejects_non_associate_override() {
    let field = FieldDescriptor::rational_functions(["q"]).unwrap();
    let ring = RingDescriptor::univariate(field.clone(), "t", false).unwrap();
    let sigma = Endomorphism::diagonal(&ring, vec![field.param(0).unwrap()]).unwrap();
    let bad = ring.var(0).pow(2);
    let err = DeformedWittAlgebra::new(sigma, Some(bad), DEFAULT_GCD_WINDOW).unwrap_err();
    assert!(matches!(err.root(), Error::InvalidOverride(_)));
}

#[test]
fn identity_sigma_is_rejected() {
    let ring = RingDescriptor::univariate(FieldDescriptor::Rationals, "t", true).unwrap();
    let err = DeformedWittAlgebra::new(Endomorphism::identity(&ring), None, 4).unwrap_err();
    assert!(matches!(err.root(), Error::SigmaIsIdentityOnSample));
}

#[test]
fn hom_jacobi_matches_generalized_jacobi_for_nonconstant_delta() {
    // [δa, X] − δ[a, X] = (σδ − δ)/g · σ(a)X, and Σ_cyclic σ(a)[b, c] = 0,
    // so the two residuals agree for every δ.
    let w = family("power_twist", &[("s", "3")]);
    assert!(!w.delta_is_constant());
    let t = |k| t_pow(&w, k);
    let a = t(2) + t(-1);
    let b = t(3) - t(0);
    let c = t(1) * t(1) + t(-3);
    assert!(w.hom_jacobi_residual(&a, &b, &c).unwrap().is_zero());
    assert!(w.generalized_jacobi_residual(&a, &b, &c).unwrap().is_zero());
    assert!(w.find_hom_jacobi_witness(3).unwrap().is_none());
}

#[test]
fn surjectivity_decisions() {
    let w = family("qwitt_poly", &[]);
    assert_eq!(w.is_partial_surjective(), SurjectivityDecision::Yes);

    let w = family("qwitt_laurent", &[("k", "2")]);
    assert_eq!(
        w.is_partial_surjective(),
        SurjectivityDecision::No(t_pow(&w, -2))
    );

    let w = family("qwitt_poly", &[("q", "zeta(3)")]);
    assert_eq!(
        w.is_partial_surjective(),
        SurjectivityDecision::No(t_pow(&w, 2))
    );

    let w = family("multi_laurent", &[]);
    assert_eq!(
        w.is_partial_surjective(),
        SurjectivityDecision::No(w.ring().one())
    );

    let w = family("power_twist", &[("s", "3")]);
    assert_eq!(w.is_partial_surjective(), SurjectivityDecision::Unknown);
}

#[test]
fn shared_symbol_is_one_parameter() {
    let w = family("multi_laurent", &[("q1", "q"), ("q2", "q")]);
    assert_eq!(w.ring().field().parameter_names(), ["q".to_string()]);
    assert_eq!(w.sigma().scalars()[0], w.sigma().scalars()[1]);
}

#[test]
fn mixed_rings_are_rejected() {
    let a = family("qwitt_poly", &[]);
    let b = family("qwitt_laurent", &[]);
    let err = a.partial(&b.ring().var(0)).unwrap_err();
    assert!(matches!(err, Error::MixedRings));
}
