//! The bivariate descent polynomial of signed permutations three ways.

use spk::catalog::{bn_expansion_rhs, family_poly, family_poly_enumerated, lemma21_route, FamilyName};
use spk::enumerate::DEFAULT_CAP;

fn main() -> spk::Result<()> {
    for n in 2..=5 {
        let rhs = bn_expansion_rhs(n)?;
        let grammar = lemma21_route(n)?;
        let enumerated = family_poly_enumerated(FamilyName::LowerB, n, DEFAULT_CAP)?.unwrap();
        assert_eq!(rhs, grammar);
        assert_eq!(rhs, enumerated);
        println!("b_{n} = {rhs}");
    }
    println!("xi_5 = {}", family_poly(FamilyName::Xi, 5)?);
    println!("zeta_5 = {}", family_poly(FamilyName::Zeta, 5)?);
    Ok(())
}
