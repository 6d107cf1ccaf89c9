//! The zero claims for `f_n`, `xi_n` and `zeta_n`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{interlace_rat, is_real_rooted, Bound, InterlaceVerdict, RatPoly, SturmChain, Window};
use crate::catalog::{f_recursion, xi_zeta_coefficients};
use crate::error::{Result, SpkError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZerosItem {
    pub n: usize,
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl ZerosItem {
    pub fn to_json(&self) -> Value {
        json!({
            "claim": self.claim,
            "n": self.n,
            "status": if self.passed { "pass" } else { "fail" },
            "detail": self.detail,
        })
    }
}

impl fmt::Display for ZerosItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{:<16} n={:<2} {status}  {}", self.claim, self.n, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZerosReport {
    pub n_max: usize,
    pub items: Vec<ZerosItem>,
}

impl ZerosReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn first_failure(&self) -> Option<&ZerosItem> {
        self.items.iter().find(|i| !i.passed)
    }
}

impl fmt::Display for ZerosReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{item}")?;
        }
        Ok(())
    }
}

struct Data {
    f: RatPoly,
    f_next: RatPoly,
    xi: RatPoly,
    zeta: RatPoly,
}

fn data(n: usize) -> Result<Data> {
    let (xi, zeta) = xi_zeta_coefficients(n)?;
    Ok(Data {
        f: RatPoly::from_ints(&f_recursion(n)?),
        f_next: RatPoly::from_ints(&f_recursion(n + 1)?),
        xi: RatPoly::from_ints(&xi),
        zeta: RatPoly::from_ints(&zeta),
    })
}

type Outcome = std::result::Result<String, String>;

fn item(n: usize, claim: &'static str, outcome: Result<Outcome>) -> ZerosItem {
    let (passed, detail) = match outcome {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, e.to_string()),
    };
    ZerosItem { n, claim, passed, detail }
}

fn verdict(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn minus_one() -> BigRational {
    -BigRational::one()
}

fn multiplicity(d: &Data, n: usize) -> Result<Outcome> {
    let m = d.f.multiplicity(&minus_one())?;
    Ok(verdict(m as usize == n / 2, format!("mult(-1) = {m}, expected {}", n / 2)))
}

/// `f_n / (1+x)^{n/2}` is square-free of degree `(n-1)/2` with every root in
/// `(-1,0)`, and `f_n` lies in `RZ[-1,0)`.
fn interior(d: &Data, n: usize) -> Result<Outcome> {
    let g = d.f.div_exact(&RatPoly::from_i64(&[1, 1]).pow((n / 2) as u32))?;
    let deg = g.degree().unwrap();
    let square_free = g.gcd(&g.derivative()).degree() == Some(0);
    let chain = SturmChain::new(&g)?;
    let inside = chain.count(&Window::open(Bound::int(-1), Bound::int(0))?);
    let f_chain = SturmChain::new(&d.f)?;
    let in_window = f_chain.count(&"[-1,0)".parse()?);
    let distinct = f_chain.count(&Window::real_line());
    let nonzero_at_0 = !d.f.eval(&BigRational::zero()).is_zero();
    let ok = square_free
        && deg == (n - 1) / 2
        && inside == deg
        && in_window == distinct
        && is_real_rooted(&d.f)?
        && nonzero_at_0;
    Ok(verdict(
        ok,
        format!(
            "deg g = {deg} (expected {}), square-free {square_free}, roots in (-1,0): {inside}, f in RZ[-1,0): {}",
            (n - 1) / 2,
            in_window == distinct && nonzero_at_0
        ),
    ))
}

fn f_interlace(d: &Data, n: usize) -> Result<Outcome> {
    let v = interlace_rat(&d.f, &d.f_next)?;
    let expected = if n == 1 { InterlaceVerdict::Vacuous } else { InterlaceVerdict::Interlaces };
    Ok(verdict(v == expected, format!("f_{n} vs f_{}: {v}", n + 1)))
}

/// Real-rooted, every root negative and simple.
fn negative_simple(p: &RatPoly, name: &str) -> Result<Outcome> {
    if p.degree() == Some(0) {
        return Ok(Ok(format!("{name} = {p} is constant")));
    }
    let chain = SturmChain::new(p)?;
    let deg = p.degree().ok_or(SpkError::ZeroPolynomial)?;
    let distinct = chain.count(&Window::real_line());
    let nonneg = chain.count(&"[0,+inf)".parse()?);
    let simple = chain.base().degree() == Some(deg);
    Ok(verdict(
        distinct == deg && nonneg == 0 && simple,
        format!("{name}: degree {deg}, distinct real roots {distinct}, roots >= 0: {nonneg}"),
    ))
}

fn parity(d: &Data, n: usize) -> Result<Outcome> {
    let v = interlace_rat(&d.zeta, &d.xi)?;
    let expected = if n % 2 == 0 {
        InterlaceVerdict::AlternatesLeft
    } else {
        InterlaceVerdict::Interlaces
    };
    Ok(verdict(
        v == expected || v == InterlaceVerdict::Vacuous,
        format!("zeta_{n} vs xi_{n}: {v} (expected {expected})"),
    ))
}

/// Right-hand side of the Hermite-Biehler equivalence for
/// `f_n = 2 xi_n(x^2) + x zeta_n(x^2)`, checked alongside the direct fact
/// that `f_n` has only real nonpositive zeros.
fn hermite_biehler(d: &Data) -> Result<Outcome> {
    let two = BigRational::from_integer(2.into());
    let even = d.xi.scale(&two);
    let odd = &d.zeta;
    let len = 2 * even.coeffs().len().max(odd.coeffs().len()) + 1;
    let mut joined = vec![BigRational::zero(); len];
    for (k, c) in even.coeffs().iter().enumerate() {
        joined[2 * k] = c.clone();
    }
    for (k, c) in odd.coeffs().iter().enumerate() {
        joined[2 * k + 1] = c.clone();
    }
    let split_ok = RatPoly::new(joined) == d.f;
    let positive = Window::open(Bound::int(0), Bound::PosInf)?;
    let nonpositive = |p: &RatPoly| -> Result<bool> {
        Ok(is_real_rooted(p)? && SturmChain::new(p)?.count(&positive) == 0)
    };
    let standard = |p: &RatPoly| p.leading().is_some_and(|l| l.is_positive());
    let left = nonpositive(&d.f)? && standard(&d.f);
    let odd_ok = odd.is_zero() || (standard(odd) && nonpositive(odd)?);
    let prec = odd.is_zero() || interlace_rat(odd, &even)?.precedes();
    let right = standard(&even) && nonpositive(&even)? && odd_ok && prec;
    Ok(verdict(
        split_ok && left && right,
        format!("even/odd split {split_ok}, f real nonpositive {left}, right-hand side {right}"),
    ))
}

/// Every zero claim for `1 <= n <= n_max`, in `(n, claim)` order.
pub fn theorem_zeros_report(n_max: usize) -> Result<ZerosReport> {
    if n_max < 2 {
        return Err(SpkError::OutOfRange(format!("n_max = {n_max}, need at least 2")));
    }
    let per_n: Vec<Vec<ZerosItem>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let d = match data(n) {
                Ok(d) => d,
                Err(e) => return vec![item(n, "data", Err(e))],
            };
            let zeta = if n == 1 {
                Ok(Ok("zeta_1 = 0 is excluded".to_string()))
            } else {
                negative_simple(&d.zeta, &format!("zeta_{n}"))
            };
            let par = if n == 1 { Ok(Ok("zeta_1 = 0".to_string())) } else { parity(&d, n) };
            vec![
                item(n, "multiplicity", multiplicity(&d, n)),
                item(n, "interior", interior(&d, n)),
                item(n, "f-interlace", f_interlace(&d, n)),
                item(n, "xi-roots", negative_simple(&d.xi, &format!("xi_{n}"))),
                item(n, "zeta-roots", zeta),
                item(n, "parity", par),
                item(n, "hermite-biehler", hermite_biehler(&d)),
            ]
        })
        .collect();
    Ok(ZerosReport { n_max, items: per_n.into_iter().flatten().collect() })
}
