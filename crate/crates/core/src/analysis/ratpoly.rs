//! Dense univariate polynomials over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SpkError};
use crate::polynomial::{Polynomial, Var};

/// Coefficients in ascending degree, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly(Vec<BigRational>);

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> RatPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly(coeffs)
    }

    pub fn zero() -> RatPoly {
        RatPoly(Vec::new())
    }

    pub fn one() -> RatPoly {
        RatPoly(vec![BigRational::one()])
    }

    pub fn from_ints(coeffs: &[BigInt]) -> RatPoly {
        RatPoly::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> RatPoly {
        RatPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// `x - r`.
    pub fn linear(r: &BigRational) -> RatPoly {
        RatPoly(vec![-r.clone(), BigRational::one()])
    }

    /// Reads a polynomial in at most one variable. Constants are accepted.
    pub fn from_polynomial(p: &Polynomial) -> Result<RatPoly> {
        let vars = p.variables();
        if vars.len() > 1 || p.has_negative_exponents() {
            return Err(SpkError::NotUnivariate(p.to_string()));
        }
        let Some(&v) = vars.iter().next() else {
            return Ok(RatPoly::from_ints(&[p.as_constant().unwrap_or_default()]));
        };
        Ok(RatPoly::from_ints(&p.univariate_coeffs(v)?))
    }

    /// Converts back when every coefficient is an integer.
    pub fn to_polynomial(&self, v: Var) -> Option<Polynomial> {
        let ints: Option<Vec<BigInt>> = self
            .0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect();
        ints.map(|c| Polynomial::from_univariate(v, &c))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Sign of the value at `x`: -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign(&self.eval(x))
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly(self.0.iter().map(|a| -a).collect())
    }

    pub fn add(&self, o: &RatPoly) -> RatPoly {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        RatPoly::new(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&z) + o.0.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &RatPoly) -> RatPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn pow(&self, k: u32) -> RatPoly {
        (0..k).fold(RatPoly::one(), |acc, _| acc.mul(self))
    }

    /// Scales to leading coefficient 1.
    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => RatPoly::zero(),
        }
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let Some(dd) = d.degree() else {
            return Err(SpkError::ZeroPolynomial);
        };
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((RatPoly::zero(), self.clone()));
        };
        let mut q = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &r[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, b) in d.0.iter().enumerate() {
                r[k + i] -= &c * b;
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((RatPoly::new(q), RatPoly::new(r)))
    }

    /// Exact quotient; fails when the remainder is nonzero.
    pub fn div_exact(&self, d: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(SpkError::Invariant(format!("{d} does not divide {self}")));
        }
        Ok(q)
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("divisor is nonzero").1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn square_free_part(&self) -> Result<RatPoly> {
        if self.is_zero() {
            return Err(SpkError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_exact(&g)?.monic())
    }

    /// Yun's square-free decomposition: monic, pairwise coprime, square-free
    /// `a_1, a_2, ...` with `p = lc(p) * prod a_i^i`. Trailing ones are dropped.
    pub fn square_free_decomposition(&self) -> Result<Vec<RatPoly>> {
        if self.is_zero() {
            return Err(SpkError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_exact(&a0)?.monic();
        let mut c = d.div_exact(&a0)?.scale(&self.leading().unwrap().recip());
        let mut e = c.sub(&b.derivative());
        while b.degree() != Some(0) {
            let a = b.gcd(&e);
            b = b.div_exact(&a)?;
            c = e.div_exact(&a)?;
            e = c.sub(&b.derivative());
            out.push(a);
        }
        while out.last().is_some_and(|a| a.degree() == Some(0)) {
            out.pop();
        }
        Ok(out)
    }

    /// Largest `m` with `(x - r)^m` dividing `self`.
    pub fn multiplicity(&self, r: &BigRational) -> Result<u32> {
        if self.is_zero() {
            return Err(SpkError::ZeroPolynomial);
        }
        let mut p = self.0.clone();
        let mut m = 0;
        loop {
            // synthetic division by x - r
            let mut q = vec![BigRational::zero(); p.len() - 1];
            let mut acc = BigRational::zero();
            for k in (0..p.len()).rev() {
                acc = acc * r + &p[k];
                if k > 0 {
                    q[k - 1] = acc.clone();
                }
            }
            if !acc.is_zero() || q.is_empty() {
                return Ok(m);
            }
            m += 1;
            p = q;
        }
    }

    /// Integer multiple with coprime integer coefficients and positive leading
    /// coefficient.
    pub fn primitive(&self) -> Vec<BigInt> {
        use num_integer::Integer;
        if self.is_zero() {
            return Vec::new();
        }
        let den = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self.0.iter().map(|c| (c * &den).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let g = if ints.last().unwrap().is_negative() { -g } else { g };
        for c in &mut ints {
            *c /= &g;
        }
        ints
    }
}

pub(crate) fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}
