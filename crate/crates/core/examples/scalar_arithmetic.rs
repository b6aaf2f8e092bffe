//! Exact arithmetic in the three scalar domains.

use bverify::{Result, ScalarDomain};

fn main() -> Result<()> {
    let q = ScalarDomain::rational_function("q");
    let a = q.parse("(q^2 - 1)/(q - 1)")?;
    let b = q.parse("q^-2")?;
    println!("Q(q):     (q^2-1)/(q-1) = {a}");
    println!("          q^-2 * (1+q)  = {}", &b * &a);
    println!("          inverse       = {}", a.inv()?);

    let z12 = ScalarDomain::cyclotomic(12)?;
    let zeta = z12.generator()?;
    println!("Q(zeta12): zeta^6 = {}, zeta^4 = {}", zeta.pow(6)?, zeta.pow(4)?);
    println!("           1/(1 + zeta) = {}", z12.parse("1/(1 + zeta)")?);

    let r = ScalarDomain::Rational;
    println!("Q:        2/3 + 5/6 = {}", r.parse("2/3 + 5/6")?);
    Ok(())
}
