//! Nonnegativity of the gamma tables and of the corollary polynomials.

use spk::catalog::{family_poly, gamma_table, FamilyName};

fn main() -> spk::Result<()> {
    for n in 1..=12 {
        let t = gamma_table(n)?;
        t.validate()?;
        println!("n={n:<2} {} nonzero entries, all positive", t.entries.len());
    }
    for name in [FamilyName::NP, FamilyName::Palpha, FamilyName::E6, FamilyName::Mbeta] {
        let p = family_poly(name, 3)?;
        assert!(p.all_coefficients_nonnegative());
        println!("{name}_3 = {p}");
    }
    Ok(())
}
