//! Exact sparse multivariate polynomials over interned variable names.
//!
//! Coefficients are arbitrary-precision integers and exponents are signed, so
//! Laurent terms can be represented. All arithmetic is exact.

mod accumulate;
mod gamma;
mod monomial;
mod text;
mod var;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use accumulate::WeightAccumulator;
pub use gamma::{gamma_decompose, gamma_recompose};
pub use monomial::Monomial;
pub use var::{var, Var};

use crate::error::{Result, SpkError};

/// An exact polynomial: a map from monomials to nonzero integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

/// An assignment of exact rationals to variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalPoint(pub BTreeMap<Var, BigRational>);

impl RationalPoint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, value: BigRational) -> Self {
        self.0.insert(v, value);
        self
    }

    pub fn get(&self, v: Var) -> Option<&BigRational> {
        self.0.get(&v)
    }
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Polynomial {
        Polynomial::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial::term(1, Monomial::var(v))
    }

    /// `x` for a named variable; panics on invalid names.
    pub fn named(name: &str) -> Polynomial {
        Polynomial::var(var(name))
    }

    pub fn term<T: Into<BigInt>>(c: T, m: Monomial) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, BigInt> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.exponents().iter().map(|p| p.0))
            .collect()
    }

    /// Maximum total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|m| m.has_negative())
    }

    /// The single `(monomial, coefficient)` pair when there is exactly one term.
    pub fn as_monomial(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution `v -> subs[v]`; unmapped variables pass through.
    ///
    /// A variable with a negative exponent must map to a monomial with
    /// coefficient ±1 so that its inverse stays integral.
    pub fn substitute(&self, subs: &BTreeMap<Var, Polynomial>) -> Result<Polynomial> {
        if subs.is_empty() {
            return Ok(self.clone());
        }
        let mut powers: HashMap<(Var, i32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Polynomial::constant(c.clone());
            for &(v, e) in m.exponents() {
                let Some(image) = subs.get(&v) else {
                    kept.push((v, e));
                    continue;
                };
                if !powers.contains_key(&(v, e)) {
                    let pw = if e >= 0 {
                        image.pow(e as u32)
                    } else {
                        let inv = image
                            .unit_monomial_inverse()
                            .ok_or_else(|| SpkError::NonMonomialSubstitution {
                                var: v.name().to_string(),
                            })?;
                        inv.pow((-e) as u32)
                    };
                    powers.insert((v, e), pw);
                }
                factor = &factor * &powers[&(v, e)];
            }
            let rest = Monomial::from_pairs(kept);
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&rest), fc);
            }
        }
        Ok(out)
    }

    fn unit_monomial_inverse(&self) -> Option<Polynomial> {
        let (m, c) = self.as_monomial()?;
        if c.abs().is_one() {
            Some(Polynomial::term(c.clone(), m.inverse()))
        } else {
            None
        }
    }

    /// Renames variables; a convenience over [`Polynomial::substitute`].
    pub fn rename(&self, map: &[(Var, Var)]) -> Polynomial {
        let subs: BTreeMap<Var, Polynomial> = map
            .iter()
            .map(|&(a, b)| (a, Polynomial::var(b)))
            .collect();
        self.substitute(&subs)
            .expect("renaming to a variable is always a unit monomial")
    }

    /// Formal partial derivative in `v`.
    pub fn diff(&self, v: Var) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e < 0 {
                return Err(SpkError::NegativeExponent {
                    var: v.name().to_string(),
                });
            }
            if e > 0 {
                out.add_term(m.shifted(v, -1), c * BigInt::from(e));
            }
        }
        Ok(out)
    }

    /// Exact value at a rational point.
    pub fn eval_at(&self, pt: &RationalPoint) -> Result<BigRational> {
        let mut total = BigRational::zero();
        let mut cache: HashMap<(Var, i32), BigRational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut val = BigRational::from_integer(c.clone());
            for &(v, e) in m.exponents() {
                let x = pt
                    .get(v)
                    .ok_or_else(|| SpkError::UnassignedVariable(v.name().to_string()))?;
                if e < 0 && x.is_zero() {
                    return Err(SpkError::ZeroToNegativePower(v.name().to_string()));
                }
                let pw = cache
                    .entry((v, e))
                    .or_insert_with(|| num_traits::pow::Pow::pow(x, e));
                val *= &*pw;
            }
            total += val;
        }
        Ok(total)
    }

    /// Groups terms by their monomial part over `in_vars`; the values are
    /// polynomials in the remaining variables.
    pub fn coeff_extract(&self, in_vars: &BTreeSet<Var>) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, rest) = m.split(|v| in_vars.contains(&v));
            out.entry(inside).or_default().add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Dense coefficient list of a polynomial in (at most) the single variable `v`.
    pub fn univariate_coeffs(&self, v: Var) -> Result<Vec<BigInt>> {
        let mut out: Vec<BigInt> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if m.exponents().len() > usize::from(e != 0) || e < 0 {
                return Err(SpkError::NotUnivariate(self.to_string()));
            }
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, BigInt::zero());
            }
            out[e] = c.clone();
        }
        Ok(out)
    }

    pub fn from_univariate(v: Var, coeffs: &[BigInt]) -> Polynomial {
        let mut p = Polynomial::zero();
        for (e, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::pow_of(v, e as i32), c.clone());
        }
        p
    }

    /// Sum of coefficients (value at all variables equal to one).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficient as an `i64`, when it fits.
    pub fn coeff_i64(&self, m: &Monomial) -> Option<i64> {
        self.coeff(m).to_i64()
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |a, b| a + b)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

/// Builds a substitution map from `(name, polynomial)` pairs.
pub fn subs_map<'a, I>(pairs: I) -> BTreeMap<Var, Polynomial>
where
    I: IntoIterator<Item = (&'a str, Polynomial)>,
{
    pairs.into_iter().map(|(k, p)| (var(k), p)).collect()
}

/// Parses canonical polynomial text, panicking on malformed input.
///
/// Intended for literals in code and tests.
pub fn poly(text: &str) -> Polynomial {
    text.parse()
        .unwrap_or_else(|e| panic!("bad polynomial literal {text:?}: {e}"))
}
