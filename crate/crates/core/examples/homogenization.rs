//! The eight-variable polynomial from the gamma table against direct
//! enumeration, and its value at one of the fixed rational points.

use spk::catalog::{evaluation_points, family_poly, family_poly_enumerated, FamilyName};
use spk::enumerate::DEFAULT_CAP;
use spk::{var, RationalPoint};

fn main() -> spk::Result<()> {
    let n = 4;
    let fast = family_poly(FamilyName::Q8, n)?;
    let slow = family_poly_enumerated(FamilyName::Q8, n, DEFAULT_CAP)?.unwrap();
    assert_eq!(fast, slow);
    println!("Q8 at n={n}: {} terms, routes agree", fast.num_terms());

    let names = ["x", "y", "z", "p", "q", "r", "s", "t"];
    let point = &evaluation_points()[0];
    let mut pt = RationalPoint::new();
    for (name, value) in names.iter().zip(point) {
        pt = pt.with(var(name), value.clone());
    }
    println!("value at {:?}: {}", point.iter().map(|v| v.to_string()).collect::<Vec<_>>(), fast.eval_at(&pt)?);
    Ok(())
}
