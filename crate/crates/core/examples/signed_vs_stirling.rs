//! Signed permutations of [n] against Stirling permutations of order n + 1
//! with a single 1.

use spk::catalog::{g1_route, qzero_poly, signed_poly};
use spk::enumerate::DEFAULT_CAP;

fn main() -> spk::Result<()> {
    for n in 1..=5 {
        let signed = signed_poly(n, &["x", "y", "q"], DEFAULT_CAP, |s| {
            vec![s.des_a as i32 + 1, s.des_b as i32, s.neg as i32]
        })?;
        let stirling = qzero_poly(n + 1, &["x", "y", "q"], DEFAULT_CAP, |s| {
            vec![s.lap as i32, s.ap as i32, s.even as i32]
        })?;
        assert_eq!(signed, stirling);
        assert_eq!(signed, g1_route(n)?);
        println!("n={n}: {signed}");
    }
    Ok(())
}
