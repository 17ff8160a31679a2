//! Arithmetic in ℚ(ζₙ) and exact multiplicative orders. A parameter
//! `zeta(n)^j` has order n / gcd(n, j), which is what decides the
//! root-of-unity cases.

use deformed_witt::coeff::{root_of_unity_order, FieldDescriptor};
use deformed_witt::ring::format_coefficient;

fn main() -> deformed_witt::Result<()> {
    let f = FieldDescriptor::cyclotomic(12)?;
    let z = f.zeta(12, 1).expect("12 divides 12");
    let show = |c: &deformed_witt::coeff::Coefficient| format_coefficient(c, &f);
    println!("zeta(12)^6     = {}", show(&z.pow(6)?));
    println!(
        "zeta(12)^4 + zeta(12)^8 = {}",
        show(&z.pow(4)?.try_add(&z.pow(8)?)?)
    );
    println!("1/(1 - zeta(12)) = {}", show(&f.one().try_sub(&z)?.inv()?));
    for j in [1, 2, 3, 4, 6, 9] {
        let c = z.pow(j)?;
        println!("order of zeta(12)^{j} = {:?}", root_of_unity_order(&c)?);
    }
    println!(
        "order of 1 + zeta(12) = {:?}",
        root_of_unity_order(&f.one().try_add(&z)?)?
    );
    let q = FieldDescriptor::Rationals.from_int(-1);
    println!("order of -1 in Q = {:?}", root_of_unity_order(&q)?);
    Ok(())
}
