//! The e-positive coefficients of the trivariate second-order Eulerian
//! polynomials and a few of their substitutions.

use spk::catalog::{gamma_substitute, gamma_table, GammaSpec, SpecName};

fn main() -> spk::Result<()> {
    for n in 1..=5 {
        let t = gamma_table(n)?;
        let rows: Vec<String> = t
            .rows()
            .into_iter()
            .map(|((i, j, k), g)| format!("({i},{j},{k}):{g}"))
            .collect();
        println!("n={n}  {}", rows.join(" "));
    }
    let t = gamma_table(3)?;
    for spec in [SpecName::C3, SpecName::N, SpecName::Palpha] {
        println!("{} -> {}", spec.as_str(), gamma_substitute(&t, &GammaSpec::builtin(spec))?);
    }
    Ok(())
}
