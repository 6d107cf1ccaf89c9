use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, Polynomial, Var};
use crate::error::{Result, SpkError};

fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for k in 1..=m {
        let next = &row[k - 1] * BigInt::from(m - k + 1) / BigInt::from(k);
        row.push(next);
    }
    row
}

fn sole_variable(p: &Polynomial) -> Result<Option<Var>> {
    let vars = p.variables();
    match vars.len() {
        0 => Ok(None),
        1 => Ok(vars.into_iter().next()),
        _ => Err(SpkError::NotUnivariate(p.to_string())),
    }
}

/// Decomposes a palindromic `p` into the basis `x^k (1+x)^(n-1-2k)`.
///
/// Returns `g_0, g_1, ..., g_{floor((n-1)/2)}`. Coefficients are peeled from
/// the low end, so every `g_k` is an exact integer.
pub fn gamma_decompose(p: &Polynomial, n: usize) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(SpkError::OutOfRange("gamma basis needs n >= 1".into()));
    }
    let v = sole_variable(p)?;
    let mut c = match v {
        Some(v) => p.univariate_coeffs(v)?,
        None => vec![p.as_constant().unwrap_or_default()],
    };
    let d = n - 1;
    let not_palindromic = || SpkError::NotPalindromic {
        poly: p.to_string(),
        center: format!("{d}/2"),
    };
    if c.len() > d + 1 {
        return Err(not_palindromic());
    }
    c.resize(d + 1, BigInt::zero());
    if (0..=d).any(|i| c[i] != c[d - i]) {
        return Err(not_palindromic());
    }
    let mut g = Vec::with_capacity(d / 2 + 1);
    for k in 0..=d / 2 {
        let gk = c[k].clone();
        if !gk.is_zero() {
            let row = binomial_row(d - 2 * k);
            for (j, b) in row.iter().enumerate() {
                c[k + j] -= &gk * b;
            }
        }
        g.push(gk);
    }
    if c.iter().any(|x| !x.is_zero()) {
        return Err(not_palindromic());
    }
    Ok(g)
}

/// Inverse of [`gamma_decompose`]: `sum_k g_k x^k (1+x)^(n-1-2k)` in variable `v`.
pub fn gamma_recompose(g: &[BigInt], n: usize, v: Var) -> Polynomial {
    let d = n - 1;
    let one_plus = Polynomial::one() + Polynomial::var(v);
    let mut out = Polynomial::zero();
    for (k, gk) in g.iter().enumerate() {
        if gk.is_zero() {
            continue;
        }
        let basis = one_plus
            .pow((d - 2 * k) as u32)
            .mul_monomial(&Monomial::pow_of(v, k as i32), gk);
        out = out + basis;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::{poly, var};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn eulerian_a3() {
        assert_eq!(gamma_decompose(&poly("1 + 4*x + x^2"), 3).unwrap(), ints(&[1, 2]));
    }

    #[test]
    fn type_b_b2() {
        // B_2 in the basis x^k (1+x)^(2-2k)
        assert_eq!(gamma_decompose(&poly("1 + 6*x + x^2"), 3).unwrap(), ints(&[1, 4]));
    }

    #[test]
    fn pure_binomial() {
        assert_eq!(gamma_decompose(&poly("(1 + x)^2"), 3).unwrap(), ints(&[1, 0]));
    }

    #[test]
    fn rejects_non_palindromic() {
        assert!(gamma_decompose(&poly("1 + 2*x"), 3).is_err());
        assert!(gamma_decompose(&poly("1 + x + x^3"), 3).is_err());
        assert!(gamma_decompose(&poly("x + y"), 2).is_err());
    }

    #[test]
    fn recompose_round_trip() {
        let p = poly("1 + 26*x + 66*x^2 + 26*x^3 + x^4");
        let g = gamma_decompose(&p, 5).unwrap();
        assert_eq!(gamma_recompose(&g, 5, var("x")), p);
    }
}
