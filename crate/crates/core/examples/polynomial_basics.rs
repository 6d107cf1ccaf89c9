//! Parsing, arithmetic, substitution and evaluation of exact polynomials.

use num_rational::BigRational;
use spk::polynomial::subs_map;
use spk::{poly, var, Polynomial, RationalPoint};

fn main() -> spk::Result<()> {
    let p: Polynomial = "(x + y)^3 - 3*x*y*(x + y)".parse()?;
    println!("p = {p}");

    let q = p.substitute(&subs_map([("y", poly("1 + x"))]))?;
    println!("p(x, 1 + x) = {q}");
    println!("dq/dx = {}", q.diff(var("x"))?);

    let half = BigRational::new(1.into(), 2.into());
    let pt = RationalPoint::new().with(var("x"), half.clone()).with(var("y"), half);
    println!("p(1/2, 1/2) = {}", p.eval_at(&pt)?);

    // Laurent terms are allowed
    let l = poly("x^-1 + 2 + x");
    println!("({l})^2 = {}", l.pow(2));
    Ok(())
}
