//! Seeded random ring elements for residual sampling and oracle checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{rational, Coefficient, FieldDescriptor};
use crate::ring::{ExponentVector, Ring, RingElement, RingExt};

/// Draws elements with at most `max_terms` terms and every exponent in
/// `[-max_degree, max_degree]` (or `[0, max_degree]` on polynomial variables).
#[derive(Clone, Debug)]
pub struct ElementSampler {
    rng: ChaCha8Rng,
    pub max_terms: usize,
    pub max_degree: i64,
}

impl ElementSampler {
    pub fn new(seed: u64, max_terms: usize, max_degree: i64) -> Self {
        ElementSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_terms: max_terms.max(1),
            max_degree: max_degree.max(0),
        }
    }

    /// A nonzero coefficient: a small rational, sometimes times a parameter
    /// power or a root of unity.
    pub fn coefficient(&mut self, field: &FieldDescriptor) -> Coefficient {
        let mut n = self.rng.gen_range(1..=5i64);
        if self.rng.gen_bool(0.3) {
            n = -n;
        }
        let d = if self.rng.gen_bool(0.2) { 2 } else { 1 };
        let mut c = field.from_rational(&rational(n, d));
        match field {
            FieldDescriptor::RationalFunctions(names) if self.rng.gen_bool(0.5) => {
                let i = self.rng.gen_range(0..names.len());
                let e = self.rng.gen_range(-1..=2);
                c = &c * &field.param(i).unwrap().pow(e).unwrap();
            }
            FieldDescriptor::Cyclotomic(order) if self.rng.gen_bool(0.5) => {
                let j = self.rng.gen_range(0..*order as i64);
                c = &c * &field.zeta(*order, j).unwrap();
            }
            _ => {}
        }
        c
    }

    pub fn exponent(&mut self, ring: &Ring) -> ExponentVector {
        let d = self.max_degree;
        ExponentVector::new(
            ring.laurent_flags()
                .iter()
                .map(|&l| self.rng.gen_range(if l { -d } else { 0 }..=d))
                .collect(),
        )
    }

    /// An element with up to `max_terms` terms; repeated exponents are
    /// summed, so it may be zero.
    pub fn element(&mut self, ring: &Ring) -> RingElement {
        let count = self.rng.gen_range(1..=self.max_terms);
        let terms: Vec<(ExponentVector, Coefficient)> = (0..count)
            .map(|_| (self.exponent(ring), self.coefficient(ring.field())))
            .collect();
        ring.from_terms(terms)
            .expect("exponents respect Laurent flags")
    }

    /// A nonzero element, redrawing on the (rare) zero.
    pub fn nonzero_element(&mut self, ring: &Ring) -> RingElement {
        loop {
            let a = self.element(ring);
            if !a.is_zero() {
                return a;
            }
        }
    }

    /// A nonzero element with exactly `terms` distinct exponents, when the
    /// exponent box is large enough.
    pub fn element_with_terms(&mut self, ring: &Ring, terms: usize) -> RingElement {
        let mut exps = ring.exponent_window(self.max_degree);
        exps.shuffle(&mut self.rng);
        exps.truncate(terms.max(1));
        let pairs: Vec<_> = exps
            .into_iter()
            .map(|e| {
                let c = self.coefficient(ring.field());
                (e, c)
            })
            .collect();
        ring.from_terms(pairs)
            .expect("window exponents are allowed")
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}
