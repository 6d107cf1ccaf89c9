use std::collections::HashMap;

use num_bigint::BigInt;

use super::{Monomial, Polynomial, Var};

/// Counts objects by exponent vector over a fixed variable list, then turns
/// the tally into a [`Polynomial`].
///
/// Enumeration folds produce millions of small weights; tallying integer
/// exponent vectors first keeps the bignum work proportional to the number of
/// distinct weights. Merging is associative and commutative.
#[derive(Clone, Debug)]
pub struct WeightAccumulator {
    vars: Vec<Var>,
    counts: HashMap<Vec<i32>, i64>,
}

impl WeightAccumulator {
    pub fn new(vars: Vec<Var>) -> Self {
        WeightAccumulator {
            vars,
            counts: HashMap::new(),
        }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn add(&mut self, exponents: &[i32], weight: i64) {
        debug_assert_eq!(exponents.len(), self.vars.len());
        if let Some(c) = self.counts.get_mut(exponents) {
            *c += weight;
        } else {
            self.counts.insert(exponents.to_vec(), weight);
        }
    }

    pub fn merge(mut self, other: WeightAccumulator) -> Self {
        for (k, w) in other.counts {
            *self.counts.entry(k).or_insert(0) += w;
        }
        self
    }

    pub fn into_polynomial(self) -> Polynomial {
        let mut p = Polynomial::zero();
        for (exps, w) in self.counts {
            let m = Monomial::from_pairs(self.vars.iter().copied().zip(exps));
            p.add_term(m, BigInt::from(w));
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::{poly, var};

    #[test]
    fn tally_and_merge() {
        let mut a = WeightAccumulator::new(vec![var("x"), var("y")]);
        a.add(&[1, 0], 2);
        a.add(&[0, 2], 1);
        let mut b = WeightAccumulator::new(vec![var("x"), var("y")]);
        b.add(&[1, 0], -2);
        b.add(&[0, 0], 5);
        assert_eq!(a.merge(b).into_polynomial(), poly("5 + y^2"));
    }
}
