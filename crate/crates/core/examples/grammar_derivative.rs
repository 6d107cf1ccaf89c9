//! Iterated formal derivatives of the builtin grammars.

use spk::grammar::{builtin, GrammarName};

fn main() -> spk::Result<()> {
    // x, y, z -> xyz: D^n(x) is the trivariate second-order Eulerian polynomial
    let g = builtin(GrammarName::Gxyz);
    for (n, p) in g.derive_sequence(&GrammarName::Gxyz.seed(), 3)?.iter().enumerate() {
        println!("D^{n}(x) = {p}");
    }

    // the same numbers through the elementary-symmetric grammar
    let h = builtin(GrammarName::H);
    println!("D_H^3(w) = {}", h.derive_iter(&GrammarName::H.seed(), 3)?);

    for name in GrammarName::ALL {
        let rules: Vec<String> = builtin(name)
            .rules()
            .iter()
            .map(|(v, body)| format!("{v} -> {body}"))
            .collect();
        println!("{name}: {}", rules.join(", "));
    }
    Ok(())
}
