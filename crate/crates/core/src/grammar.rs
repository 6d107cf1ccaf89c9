//! Context-free grammars and their formal derivatives.
//!
//! A grammar maps some variables to polynomials. Its formal derivative `D_G`
//! is the derivation of the polynomial ring that sends each such variable to
//! its rule and every other variable to zero, extended by linearity and the
//! Leibniz rule.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Result, SpkError};
use crate::polynomial::{poly, var, Polynomial, Var};

#[derive(Clone, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<Var, Polynomial>,
}

impl Grammar {
    pub fn new() -> Grammar {
        Grammar {
            rules: BTreeMap::new(),
        }
    }

    pub fn from_rules<'a, I>(rules: I) -> Grammar
    where
        I: IntoIterator<Item = (&'a str, Polynomial)>,
    {
        Grammar {
            rules: rules.into_iter().map(|(v, p)| (var(v), p)).collect(),
        }
    }

    pub fn with_rule(mut self, v: Var, body: Polynomial) -> Grammar {
        self.rules.insert(v, body);
        self
    }

    pub fn rules(&self) -> &BTreeMap<Var, Polynomial> {
        &self.rules
    }

    pub fn rule(&self, v: Var) -> Option<&Polynomial> {
        self.rules.get(&v)
    }

    /// One application of `D_G`.
    pub fn derive(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            for &(v, e) in m.exponents() {
                let Some(body) = self.rules.get(&v) else {
                    continue;
                };
                if e < 0 {
                    return Err(SpkError::NegativeExponent {
                        var: v.name().to_string(),
                    });
                }
                let rest = m.shifted(v, -1);
                let coeff = c * BigInt::from(e);
                for (bm, bc) in body.terms() {
                    out.add_term(bm.mul(&rest), bc * &coeff);
                }
            }
        }
        Ok(out)
    }

    /// `D_G^k(p)`.
    pub fn derive_iter(&self, p: &Polynomial, k: usize) -> Result<Polynomial> {
        let mut cur = p.clone();
        for _ in 0..k {
            cur = self.derive(&cur)?;
        }
        Ok(cur)
    }

    /// All of `p, D_G(p), ..., D_G^k(p)`.
    pub fn derive_sequence(&self, p: &Polynomial, k: usize) -> Result<Vec<Polynomial>> {
        let mut out = Vec::with_capacity(k + 1);
        out.push(p.clone());
        for i in 0..k {
            let next = self.derive(&out[i])?;
            out.push(next);
        }
        Ok(out)
    }
}

impl Default for Grammar {
    fn default() -> Self {
        Grammar::new()
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (v, body)) in self.rules.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} -> {body}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grammar{self}")
    }
}

/// The named grammars of the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GrammarName {
    /// Signed permutations, labels P, N, E, A, D.
    Lemma21,
    /// Change of grammar of `Lemma21` to a = P+N, b = PD+NA, c = AD, d = A+D.
    GPrime,
    /// `Lemma21` with a weight q on negative entries.
    G1,
    /// Restricted Stirling permutations, labels prefixed `g2_`.
    G2,
    /// Auxiliary grammar for the f/g recurrence system shared by G1 and G2.
    G3,
    /// `x, y, z -> xyz`; generates the trivariate second-order Eulerian polynomials.
    Gxyz,
    /// Elementary-symmetric change of `Gxyz`.
    H,
    /// Simplified ternary increasing trees.
    I,
    /// Weighted version of `I` for the seventeen-variable polynomial.
    J,
}

impl GrammarName {
    pub const ALL: [GrammarName; 9] = [
        GrammarName::Lemma21,
        GrammarName::GPrime,
        GrammarName::G1,
        GrammarName::G2,
        GrammarName::G3,
        GrammarName::Gxyz,
        GrammarName::H,
        GrammarName::I,
        GrammarName::J,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            GrammarName::Lemma21 => "lemma21",
            GrammarName::GPrime => "gprime",
            GrammarName::G1 => "g1",
            GrammarName::G2 => "g2",
            GrammarName::G3 => "g3",
            GrammarName::Gxyz => "gxyz",
            GrammarName::H => "H",
            GrammarName::I => "I",
            GrammarName::J => "J",
        }
    }

    /// The conventional starting word for this grammar.
    pub fn seed(&self) -> Polynomial {
        match self {
            GrammarName::Lemma21 => poly("P*E + N*E"),
            GrammarName::GPrime => poly("a*E"),
            GrammarName::G1 => poly("P*E + q*N*E"),
            GrammarName::G2 => poly("g2_alpha*g2_W + q*g2_beta*g2_gamma"),
            GrammarName::G3 => poly("1"),
            GrammarName::Gxyz => poly("x"),
            GrammarName::H => poly("w"),
            GrammarName::I => poly("P"),
            GrammarName::J => poly("delta"),
        }
    }
}

impl fmt::Display for GrammarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GrammarName {
    type Err = SpkError;

    fn from_str(s: &str) -> Result<GrammarName> {
        GrammarName::ALL
            .into_iter()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| SpkError::UnknownGrammar(s.to_string()))
    }
}

/// The exact rule set of a named grammar.
pub fn builtin(name: GrammarName) -> Grammar {
    let rules: Vec<(&str, &str)> = match name {
        GrammarName::Lemma21 => vec![
            ("P", "P*D + N*A"),
            ("N", "P*D + N*A"),
            ("E", "(A + D)*E"),
            ("A", "2*A*D"),
            ("D", "2*A*D"),
        ],
        GrammarName::GPrime => vec![
            ("a", "2*b"),
            ("b", "2*a*c + b*d"),
            ("c", "2*c*d"),
            ("d", "4*c"),
            ("E", "d*E"),
        ],
        GrammarName::G1 => vec![
            ("P", "P*D + q*N*A"),
            ("N", "P*D + q*N*A"),
            ("E", "(A + q*D)*E"),
            ("A", "(1 + q)*A*D"),
            ("D", "(1 + q)*A*D"),
        ],
        GrammarName::G2 => vec![
            ("g2_alpha", "g2_alpha*g2_W + q*g2_beta*g2_gamma"),
            ("g2_gamma", "g2_alpha*g2_W + q*g2_beta*g2_gamma"),
            ("g2_beta", "(1 + q)*g2_beta*g2_W"),
            ("g2_W", "(1 + q)*g2_beta*g2_W"),
        ],
        GrammarName::G3 => vec![("x", "(1 + q)*x*y"), ("y", "(1 + q)*x*y")],
        GrammarName::Gxyz => vec![("x", "x*y*z"), ("y", "x*y*z"), ("z", "x*y*z")],
        GrammarName::H => vec![("w", "v*w"), ("u", "3*w"), ("v", "2*u*w")],
        GrammarName::I => vec![("P", "P*P1"), ("P1", "2*P*P2"), ("P2", "3*t*P")],
        GrammarName::J => vec![
            ("delta", "delta*delta1"),
            ("delta1", "2*delta*delta2"),
            ("delta2", "3*t*delta"),
        ],
    };
    Grammar::from_rules(rules.into_iter().map(|(v, body)| (v, poly(body))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_examples() {
        let h = builtin(GrammarName::H);
        assert_eq!(h.derive(&poly("w")).unwrap(), poly("v*w"));
        let g = builtin(GrammarName::Gxyz);
        assert_eq!(g.derive(&poly("x")).unwrap(), poly("x*y*z"));
        let gp = builtin(GrammarName::GPrime);
        assert_eq!(gp.derive(&poly("a*E")).unwrap(), poly("a*d*E + 2*b*E"));
    }

    #[test]
    fn derive_iter_examples() {
        let gp = builtin(GrammarName::GPrime);
        assert_eq!(
            gp.derive_iter(&poly("a*E"), 2).unwrap(),
            poly("a*E*(d^2 + 8*c) + 6*b*E*d")
        );
        let h = builtin(GrammarName::H);
        assert_eq!(h.derive_iter(&poly("w"), 1).unwrap(), poly("v*w"));
        assert_eq!(h.derive_iter(&poly("w"), 0).unwrap(), poly("w"));
        let i = builtin(GrammarName::I);
        assert_eq!(
            i.derive_iter(&poly("P"), 2).unwrap(),
            poly("P*(P1^2 + 2*P*P2)")
        );
    }

    #[test]
    fn constants_survive() {
        let g1 = builtin(GrammarName::G1);
        assert!(g1.rule(var("q")).is_none());
        assert_eq!(g1.derive(&poly("q")).unwrap(), Polynomial::zero());
    }

    #[test]
    fn negative_exponent_on_rewritten_variable() {
        let h = builtin(GrammarName::H);
        assert!(h.derive(&poly("w^-1")).is_err());
        // constants may carry negative exponents
        assert_eq!(h.derive(&poly("t^-1*w")).unwrap(), poly("t^-1*v*w"));
    }

    #[test]
    fn builtin_rule_sets() {
        let gp = builtin(GrammarName::GPrime);
        assert_eq!(gp.rule(var("b")), Some(&poly("2*a*c + b*d")));
        assert_eq!(gp.rules().len(), 5);
        let g1 = builtin(GrammarName::G1);
        assert_eq!(g1.rule(var("E")), Some(&poly("A*E + q*D*E")));
        assert_eq!(g1.rule(var("A")), Some(&poly("A*D + q*A*D")));
        let j = builtin(GrammarName::J);
        assert_eq!(j.rule(var("delta2")), Some(&poly("3*t*delta")));
        assert!("lemma22".parse::<GrammarName>().is_err());
        assert_eq!("h".parse::<GrammarName>().unwrap(), GrammarName::H);
    }

    #[test]
    fn g1_g2_first_step() {
        let g1 = builtin(GrammarName::G1);
        assert_eq!(
            g1.derive(&GrammarName::G1.seed()).unwrap(),
            poly("P*E*(A + D + 2*q*D) + q*N*E*(2*A + q*A + q*D)")
        );
        let g2 = builtin(GrammarName::G2);
        assert_eq!(
            g2.derive(&GrammarName::G2.seed()).unwrap(),
            poly("g2_alpha*g2_W*(g2_W + g2_beta + 2*q*g2_beta) + q*g2_beta*g2_gamma*(2*g2_W + q*g2_W + q*g2_beta)")
        );
    }
}
