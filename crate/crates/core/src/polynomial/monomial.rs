use std::cmp::Ordering;
use std::fmt;

use super::var::Var;

/// A power product of variables with signed exponents.
///
/// Stored as `(var, exponent)` pairs sorted by variable, with no zero exponent.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn pow_of(v: Var, e: i32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Monomial {
        let mut v: Vec<(Var, i32)> = pairs.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Var, i32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> i32 {
        match self.0.binary_search_by(|p| p.0.cmp(&v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|p| p.1 < 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Returns this monomial with the exponent of `v` changed by `delta`.
    pub fn shifted(&self, v: Var, delta: i32) -> Monomial {
        self.mul(&Monomial::pow_of(v, delta))
    }

    /// Splits into the part over `pred`-selected variables and the rest.
    pub fn split<F: Fn(Var) -> bool>(&self, pred: F) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|p| pred(p.0));
        (Monomial(a), Monomial(b))
    }

    /// Graded order used for canonical text: ascending total degree, and within a
    /// degree the monomial with the larger exponent on the earliest variable first.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| lex_desc(self, other))
    }
}

fn lex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    let (a, b) = (&a.0, &b.0);
    let (mut i, mut j) = (0, 0);
    loop {
        let (va, vb) = (a.get(i), b.get(j));
        let (var, ea, eb) = match (va, vb) {
            (None, None) => return Ordering::Equal,
            (Some(&(v, e)), None) => (v, e, 0),
            (None, Some(&(v, e))) => (v, 0, e),
            (Some(&(x, ex)), Some(&(y, ey))) => match x.cmp(&y) {
                Ordering::Less => (x, ex, 0),
                Ordering::Greater => (y, 0, ey),
                Ordering::Equal => (x, ex, ey),
            },
        };
        if ea != eb {
            return eb.cmp(&ea);
        }
        if va.map(|p| p.0) == Some(var) {
            i += 1;
        }
        if vb.map(|p| p.0) == Some(var) {
            j += 1;
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::var;

    #[test]
    fn mul_cancels_to_one() {
        let m = Monomial::from_pairs([(var("x"), 2), (var("y"), -1)]);
        assert!(m.mul(&m.inverse()).is_one());
    }

    #[test]
    fn canonical_order_within_degree() {
        let x2 = Monomial::pow_of(var("x"), 2);
        let xy = Monomial::from_pairs([(var("x"), 1), (var("y"), 1)]);
        let y2 = Monomial::pow_of(var("y"), 2);
        assert_eq!(x2.canonical_cmp(&xy), Ordering::Less);
        assert_eq!(xy.canonical_cmp(&y2), Ordering::Less);
        assert_eq!(Monomial::one().canonical_cmp(&y2), Ordering::Less);
    }
}
