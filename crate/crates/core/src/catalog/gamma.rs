//! The universal coefficients `gamma_{n,i,j,k}` and substitutions into them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Result, SpkError};
use crate::grammar::{builtin, GrammarName};
use crate::polynomial::{poly, var, Monomial, Polynomial};

/// `gamma_{n,i,j,k}` for a fixed `n`, keyed by `(i, j, k)`, zeros omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTable {
    pub n: usize,
    pub entries: BTreeMap<(u32, u32, u32), BigInt>,
}

impl GammaTable {
    pub fn get(&self, i: u32, j: u32, k: u32) -> BigInt {
        self.entries.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    /// The table as `sum gamma u^i v^j w^k`.
    pub fn to_polynomial(&self) -> Polynomial {
        let (u, v, w) = (var("u"), var("v"), var("w"));
        let mut p = Polynomial::zero();
        for (&(i, j, k), g) in &self.entries {
            let m = Monomial::from_pairs([(u, i as i32), (v, j as i32), (w, k as i32)]);
            p.add_term(m, g.clone());
        }
        p
    }

    /// Rows in the canonical output order: descending `k`, then ascending `j`, then `i`.
    pub fn rows(&self) -> Vec<((u32, u32, u32), BigInt)> {
        let mut rows: Vec<_> = self.entries.iter().map(|(&key, g)| (key, g.clone())).collect();
        rows.sort_by_key(|&((i, j, k), _)| (std::cmp::Reverse(k), j, i));
        rows
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows()
            .into_iter()
            .map(|((i, j, k), g)| json!({"i": i, "j": j, "k": k, "gamma": g.to_string()}))
            .collect();
        json!({"n": self.n, "entries": rows})
    }

    /// Checks nonnegativity, the support condition `i + 2j + 3k = 2n + 1` and
    /// the total mass `sum gamma 3^(i+j) = (2n-1)!!`.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(SpkError::Invariant(format!("gamma table n={}: {msg}", self.n)));
        let mut mass = BigInt::zero();
        for (&(i, j, k), g) in &self.entries {
            if g.is_negative() {
                return bad(format!("negative entry at ({i},{j},{k})"));
            }
            if (i + 2 * j + 3 * k) as usize != 2 * self.n + 1 {
                return bad(format!("entry off the support at ({i},{j},{k})"));
            }
            mass += g * num_traits::pow(BigInt::from(3), (i + j) as usize);
        }
        let want = (1..=self.n as u64).fold(BigInt::one(), |acc, k| acc * (2 * k - 1));
        if mass != want {
            return bad(format!("total mass {mass} but (2n-1)!! = {want}"));
        }
        Ok(())
    }
}

impl fmt::Display for GammaTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, j, k), g) in self.rows() {
            writeln!(f, "({i},{j},{k}): {g}")?;
        }
        Ok(())
    }
}

/// The table at `n` by the three-term recursion from `gamma_{1,0,0,1} = 1`.
pub fn gamma_table_recursion(n: usize) -> Result<GammaTable> {
    if n == 0 {
        return Err(SpkError::OutOfRange("gamma tables start at n = 1".into()));
    }
    let mut cur: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
    cur.insert((0, 0, 1), BigInt::one());
    for _ in 2..=n {
        let mut next: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
        for (&(i, j, k), g) in &cur {
            // each source entry feeds the three terms of the recursion
            if i > 0 {
                *next.entry((i - 1, j, k + 1)).or_default() += g * BigInt::from(3 * i);
            }
            if j > 0 {
                *next.entry((i + 1, j - 1, k + 1)).or_default() += g * BigInt::from(2 * j);
            }
            *next.entry((i, j + 1, k)).or_default() += g * BigInt::from(k);
        }
        next.retain(|_, g| !g.is_zero());
        cur = next;
    }
    Ok(GammaTable { n, entries: cur })
}

/// The table at `n` read off `D_H^(n-1)(w)` as coefficients of `u^i v^j w^k`.
pub fn gamma_table_grammar(n: usize) -> Result<GammaTable> {
    if n == 0 {
        return Err(SpkError::OutOfRange("gamma tables start at n = 1".into()));
    }
    let h = builtin(GrammarName::H);
    let p = h.derive_iter(&poly("w"), n - 1)?;
    let (u, v, w) = (var("u"), var("v"), var("w"));
    let mut entries = BTreeMap::new();
    for (m, c) in p.terms() {
        let key = (m.exponent(u) as u32, m.exponent(v) as u32, m.exponent(w) as u32);
        entries.insert(key, c.clone());
    }
    Ok(GammaTable { n, entries })
}

/// The table at `n`, computed by both routes; they must agree.
pub fn gamma_table(n: usize) -> Result<GammaTable> {
    let a = gamma_table_recursion(n)?;
    let b = gamma_table_grammar(n)?;
    if a != b {
        return Err(SpkError::RouteDisagreement {
            what: format!("gamma table n={n}"),
            detail: format!("recursion {:?} vs grammar {:?}", a.entries, b.entries),
        });
    }
    Ok(a)
}

/// The recursion route, memoized per `n` for the life of the process.
pub fn gamma_table_cached(n: usize) -> Result<Arc<GammaTable>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GammaTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("gamma cache poisoned").get(&n) {
        return Ok(t.clone());
    }
    let t = Arc::new(gamma_table_recursion(n)?);
    cache
        .lock()
        .expect("gamma cache poisoned")
        .insert(n, t.clone());
    Ok(t)
}

/// Images of `u, v, w, t` for [`gamma_substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSpec {
    pub u: Polynomial,
    pub v: Polynomial,
    pub w: Polynomial,
    pub t: Polynomial,
}

impl GammaSpec {
    pub fn new(u: &str, v: &str, w: &str, t: &str) -> GammaSpec {
        GammaSpec {
            u: poly(u),
            v: poly(v),
            w: poly(w),
            t: poly(t),
        }
    }

    pub fn builtin(name: SpecName) -> GammaSpec {
        match name {
            SpecName::C3 => GammaSpec::new("x + y + z", "x*y + y*z + z*x", "x*y*z", "1"),
            SpecName::N => GammaSpec::new("3", "p + q + r", "p*q*r", "1"),
            SpecName::Q6 => GammaSpec::new("x + y + z", "x*y*p + x*z*q + y*z*r", "x*y*z*p*q*r", "1"),
            SpecName::Q8 => {
                GammaSpec::new("x + y + z", "x*y*p + x*z*q + y*z*r", "x*y*z*p*q*r*s", "t")
            }
            SpecName::F17 => GammaSpec::new(
                "alpha1*beta2*beta4*x + alpha2*beta1*beta6*y + alpha3*beta3*beta5*z",
                "beta4*beta6*x*y*p + beta2*beta5*x*z*q + beta1*beta3*y*z*r",
                "x*y*z*p*q*r*s",
                "t",
            ),
            SpecName::NP => GammaSpec::new("alpha1 + alpha2 + alpha3", "p + q + r", "p*q*r", "1"),
            SpecName::Palpha => GammaSpec::new("alpha1 + alpha2 + alpha3", "3", "1", "1"),
            SpecName::E6 => GammaSpec::new(
                "beta2*beta4 + beta1*beta6 + beta3*beta5",
                "beta4*beta6 + beta2*beta5 + beta1*beta3",
                "1",
                "1",
            ),
            SpecName::Mbeta => {
                GammaSpec::new("beta1 + beta4 + beta5", "beta1 + beta4 + beta5", "1", "1")
            }
        }
    }
}

/// The built-in substitution specs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecName {
    C3,
    N,
    Q6,
    Q8,
    F17,
    NP,
    Palpha,
    E6,
    Mbeta,
}

impl SpecName {
    pub const ALL: [SpecName; 9] = [
        SpecName::C3,
        SpecName::N,
        SpecName::Q6,
        SpecName::Q8,
        SpecName::F17,
        SpecName::NP,
        SpecName::Palpha,
        SpecName::E6,
        SpecName::Mbeta,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SpecName::C3 => "C3",
            SpecName::N => "N",
            SpecName::Q6 => "Q6",
            SpecName::Q8 => "Q8",
            SpecName::F17 => "F17",
            SpecName::NP => "NP",
            SpecName::Palpha => "Palpha",
            SpecName::E6 => "E6",
            SpecName::Mbeta => "Mbeta",
        }
    }
}

impl FromStr for SpecName {
    type Err = SpkError;

    fn from_str(s: &str) -> Result<SpecName> {
        SpecName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| SpkError::UnknownFamily(s.to_string()))
    }
}

fn t_exponent(n: usize, i: u32, j: u32, k: u32) -> Result<u32> {
    let e = n as i64 - (i + j + k) as i64;
    if e < 0 {
        return Err(SpkError::Invariant(format!(
            "t exponent n-i-j-k < 0 at n={n}, ({i},{j},{k})"
        )));
    }
    Ok(e as u32)
}

/// `sum gamma_{n,i,j,k} u^i v^j w^k t^(n-i-j-k)` under the images in `spec`.
pub fn gamma_substitute(table: &GammaTable, spec: &GammaSpec) -> Result<Polynomial> {
    let mut pows: [HashMap<u32, Polynomial>; 4] = Default::default();
    let bases = [&spec.u, &spec.v, &spec.w, &spec.t];
    let mut power = |slot: usize, e: u32| -> Polynomial {
        pows[slot]
            .entry(e)
            .or_insert_with(|| bases[slot].pow(e))
            .clone()
    };
    let mut out = Polynomial::zero();
    for (&(i, j, k), g) in &table.entries {
        let e = t_exponent(table.n, i, j, k)?;
        let term = &(&power(0, i) * &power(1, j)) * &(&power(2, k) * &power(3, e));
        out += &term.scale(g);
    }
    Ok(out)
}

/// As [`gamma_substitute`] with rational values in place of polynomials.
pub fn gamma_evaluate(
    table: &GammaTable,
    u: &BigRational,
    v: &BigRational,
    w: &BigRational,
    t: &BigRational,
) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for (&(i, j, k), g) in &table.entries {
        let e = t_exponent(table.n, i, j, k)?;
        let term = BigRational::from_integer(g.clone())
            * num_traits::pow(u.clone(), i as usize)
            * num_traits::pow(v.clone(), j as usize)
            * num_traits::pow(w.clone(), k as usize)
            * num_traits::pow(t.clone(), e as usize);
        total += term;
    }
    Ok(total)
}

/// Variables that occur in a spec's images.
pub fn spec_variables(spec: &GammaSpec) -> BTreeSet<crate::polynomial::Var> {
    let mut vars = spec.u.variables();
    vars.extend(spec.v.variables());
    vars.extend(spec.w.variables());
    vars.extend(spec.t.variables());
    vars
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(t: &GammaTable) -> Vec<((u32, u32, u32), i64)> {
        t.entries
            .iter()
            .map(|(&k, g)| (k, i64::try_from(g).unwrap()))
            .collect()
    }

    #[test]
    fn small_tables() {
        assert_eq!(entries(&gamma_table(1).unwrap()), [((0, 0, 1), 1)]);
        assert_eq!(entries(&gamma_table(2).unwrap()), [((0, 1, 1), 1)]);
        assert_eq!(entries(&gamma_table(3).unwrap()), [((0, 2, 1), 1), ((1, 0, 2), 2)]);
        assert_eq!(
            entries(&gamma_table(4).unwrap()),
            [((0, 0, 3), 6), ((0, 3, 1), 1), ((1, 1, 2), 8)]
        );
        for n in 1..=8 {
            gamma_table(n).unwrap().validate().unwrap();
        }
        assert!(gamma_table(0).is_err());
    }

    #[test]
    fn row_order() {
        let rows: Vec<_> = gamma_table(4).unwrap().rows().into_iter().map(|r| r.0).collect();
        assert_eq!(rows, [(0, 0, 3), (1, 1, 2), (0, 3, 1)]);
    }

    #[test]
    fn substitutions() {
        let t2 = gamma_table(2).unwrap();
        assert_eq!(
            gamma_substitute(&t2, &GammaSpec::builtin(SpecName::C3)).unwrap(),
            poly("x^2*y^2*z + x*y^2*z^2 + x^2*y*z^2")
        );
        assert_eq!(
            gamma_substitute(&t2, &GammaSpec::builtin(SpecName::Q8)).unwrap(),
            poly("x*y*z*p*q*r*s*(x*y*p + x*z*q + y*z*r)")
        );
        let t1 = gamma_table(1).unwrap();
        assert_eq!(
            gamma_substitute(&t1, &GammaSpec::builtin(SpecName::F17)).unwrap(),
            poly("x*y*z*p*q*r*s")
        );
    }

    #[test]
    fn evaluate_matches_substitute() {
        let t = gamma_table(5).unwrap();
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let (u, v, w, tt) = (r(2, 3), r(5, 7), r(11, 2), r(13, 5));
        let p = gamma_substitute(&t, &GammaSpec::new("a", "b", "c", "d")).unwrap();
        let pt = crate::polynomial::RationalPoint::new()
            .with(var("a"), u.clone())
            .with(var("b"), v.clone())
            .with(var("c"), w.clone())
            .with(var("d"), tt.clone());
        assert_eq!(p.eval_at(&pt).unwrap(), gamma_evaluate(&t, &u, &v, &w, &tt).unwrap());
    }
}
