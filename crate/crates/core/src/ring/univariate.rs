//! Dense univariate helpers over a coefficient field, used by the
//! Euclidean gcd.

use crate::coeff::Coefficient;

pub(crate) type Dense = Vec<Coefficient>;

fn trim(mut v: Dense) -> Dense {
    while v.last().is_some_and(Coefficient::is_zero) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo nonzero `b`.
pub(crate) fn rem(a: &[Coefficient], b: &[Coefficient]) -> Dense {
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("trimmed divisor has nonzero lead");
    let mut r = a.to_vec();
    while r.len() > db {
        let top = r.len() - 1;
        let c = &r[top] * &lead_inv;
        let shift = top - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&c * bj);
        }
        debug_assert!(r[top].is_zero());
        r.pop();
        r = trim(r);
    }
    r
}

pub(crate) fn monic(a: Dense) -> Dense {
    let lead_inv = a.last().expect("nonzero").inv().expect("nonzero lead");
    a.iter().map(|c| c * &lead_inv).collect()
}

/// Monic gcd of two polynomials, at least one nonzero.
pub(crate) fn gcd(a: Dense, b: Dense) -> Dense {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}
