//! Exact root isolation and the zero theorem for f_n.

use spk::analysis::{interlace_rat, isolate_rat, theorem_zeros_report, RatPoly};
use spk::catalog::f_recursion;

fn main() -> spk::Result<()> {
    let f = |n| f_recursion(n).map(|c| RatPoly::from_ints(&c));
    for n in [3, 6, 9] {
        print!("{}", isolate_rat(&format!("f_{n}"), &f(n)?)?);
    }
    println!("f_6 vs f_7: {}", interlace_rat(&f(6)?, &f(7)?)?);

    let report = theorem_zeros_report(12)?;
    println!("{} claims checked, all hold: {}", report.items.len(), report.passed());
    Ok(())
}
