//! Named polynomial families, each with a fast route and, where one exists,
//! an enumeration route.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::gamma::{gamma_substitute, gamma_table_cached, GammaSpec, SpecName};
use crate::enumerate::{guard, Family, PermIter, QZeroIter, SignedPermIter, StirlingIter};
use crate::error::{Result, SpkError};
use crate::grammar::{builtin, GrammarName};
use crate::polynomial::{poly, subs_map, var, Polynomial, Var, WeightAccumulator};
use crate::stats::{
    letter_stats, perm_stats, qzero_letter_stats, signed_stats, PermStatRecord, QZeroStatRecord,
    SignedStatRecord, Stat, StatRecord,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyName {
    /// Eulerian polynomials `A_n(x)`.
    A,
    /// Type B Eulerian polynomials `B_n(x)`.
    B,
    /// `B_n(x, q)`: `x^desB q^neg` over signed permutations.
    Bq,
    /// `b_n(x, y)`: `x^desA y^desB` over signed permutations.
    LowerB,
    /// Type D Eulerian polynomials `D_n(x)`.
    D,
    /// Derangement polynomials `d_n(x)` by excedances.
    LowerD,
    /// Trivariate second-order Eulerian polynomials `C_n(x, y, z)`.
    C3,
    /// Up-down run polynomials `T_n(x)`.
    T,
    Xi,
    Zeta,
    /// `f_n(x) = 2 xi_n(x^2) + x zeta_n(x^2)`.
    F,
    /// Ascent-plateau polynomials.
    M,
    /// Left ascent-plateau polynomials.
    Mtilde,
    /// `N_n(p, q, r)`.
    N,
    Q6,
    Q8,
    F17,
    NP,
    Palpha,
    E6,
    Mbeta,
    /// Row `n` of the Stirling numbers of the second kind, `sum_k S2(n,k) x^k`.
    S2,
}

impl FamilyName {
    pub const ALL: [FamilyName; 22] = [
        FamilyName::A,
        FamilyName::B,
        FamilyName::Bq,
        FamilyName::LowerB,
        FamilyName::D,
        FamilyName::LowerD,
        FamilyName::C3,
        FamilyName::T,
        FamilyName::Xi,
        FamilyName::Zeta,
        FamilyName::F,
        FamilyName::M,
        FamilyName::Mtilde,
        FamilyName::N,
        FamilyName::Q6,
        FamilyName::Q8,
        FamilyName::F17,
        FamilyName::NP,
        FamilyName::Palpha,
        FamilyName::E6,
        FamilyName::Mbeta,
        FamilyName::S2,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::A => "A",
            FamilyName::B => "B",
            FamilyName::Bq => "Bq",
            FamilyName::LowerB => "b",
            FamilyName::D => "D",
            FamilyName::LowerD => "d",
            FamilyName::C3 => "C3",
            FamilyName::T => "T",
            FamilyName::Xi => "xi",
            FamilyName::Zeta => "zeta",
            FamilyName::F => "f",
            FamilyName::M => "M",
            FamilyName::Mtilde => "Mtilde",
            FamilyName::N => "N",
            FamilyName::Q6 => "Q6",
            FamilyName::Q8 => "Q8",
            FamilyName::F17 => "F17",
            FamilyName::NP => "NP",
            FamilyName::Palpha => "Palpha",
            FamilyName::E6 => "E6",
            FamilyName::Mbeta => "Mbeta",
            FamilyName::S2 => "S2",
        }
    }

    /// The variables the family is written in.
    pub fn variables(&self) -> Vec<&'static str> {
        match self {
            FamilyName::Bq => vec!["x", "q"],
            FamilyName::LowerB => vec!["x", "y"],
            FamilyName::C3 => vec!["x", "y", "z"],
            FamilyName::N => vec!["p", "q", "r"],
            FamilyName::Q6 => vec!["x", "y", "z", "p", "q", "r"],
            FamilyName::Q8 => vec!["x", "y", "z", "p", "q", "r", "s", "t"],
            FamilyName::F17 => vec![
                "x", "y", "z", "p", "q", "r", "s", "t", "alpha1", "alpha2", "alpha3", "beta1",
                "beta2", "beta3", "beta4", "beta5", "beta6",
            ],
            FamilyName::NP => vec!["p", "q", "r", "alpha1", "alpha2", "alpha3"],
            FamilyName::Palpha => vec!["alpha1", "alpha2", "alpha3"],
            FamilyName::E6 => vec!["beta1", "beta2", "beta3", "beta4", "beta5", "beta6"],
            FamilyName::Mbeta => vec!["beta1", "beta4", "beta5"],
            _ => vec!["x"],
        }
    }

    /// Smallest `n` the family is defined for.
    pub fn min_n(&self) -> usize {
        match self {
            FamilyName::A
            | FamilyName::B
            | FamilyName::T
            | FamilyName::M
            | FamilyName::Mtilde
            | FamilyName::S2
            | FamilyName::LowerD => 0,
            FamilyName::D => 2,
            _ => 1,
        }
    }

    /// The gamma-substitution spec of the family, if it has one.
    pub fn spec(&self) -> Option<SpecName> {
        Some(match self {
            FamilyName::C3 => SpecName::C3,
            FamilyName::N => SpecName::N,
            FamilyName::Q6 => SpecName::Q6,
            FamilyName::Q8 => SpecName::Q8,
            FamilyName::F17 => SpecName::F17,
            FamilyName::NP => SpecName::NP,
            FamilyName::Palpha => SpecName::Palpha,
            FamilyName::E6 => SpecName::E6,
            FamilyName::Mbeta => SpecName::Mbeta,
            _ => return None,
        })
    }

    /// Statistic markers of the Stirling-permutation families.
    pub fn stirling_weight(&self) -> Option<Vec<(&'static str, Stat)>> {
        let q6 = [
            ("x", Stat::asc),
            ("y", Stat::plat),
            ("z", Stat::des),
            ("p", Stat::lap),
            ("q", Stat::eud),
            ("r", Stat::rpd),
        ];
        let q8 = [&q6[..], &[("s", Stat::apd), ("t", Stat::vv)]].concat();
        let alpha = [
            ("alpha1", Stat::apap),
            ("alpha2", Stat::dpa),
            ("alpha3", Stat::pdpd),
        ];
        let beta = [
            ("beta1", Stat::dplat),
            ("beta2", Stat::dasc),
            ("beta3", Stat::dd),
            ("beta4", Stat::uu),
            ("beta5", Stat::ddes),
            ("beta6", Stat::pasc),
        ];
        Some(match self {
            FamilyName::C3 => q6[..3].to_vec(),
            FamilyName::N => q6[3..].to_vec(),
            FamilyName::Q6 => q6.to_vec(),
            FamilyName::Q8 => q8,
            FamilyName::F17 => [&q8[..], &alpha[..], &beta[..]].concat(),
            FamilyName::NP => [&q6[3..], &alpha[..]].concat(),
            FamilyName::Palpha => alpha.to_vec(),
            FamilyName::E6 => beta.to_vec(),
            FamilyName::Mbeta => vec![beta[0], beta[3], beta[4]],
            FamilyName::M => vec![("x", Stat::ap)],
            FamilyName::Mtilde => vec![("x", Stat::lap)],
            _ => return None,
        })
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = SpkError;

    /// Exact names first; otherwise a case-insensitive match that is unique.
    fn from_str(s: &str) -> Result<FamilyName> {
        if let Some(f) = FamilyName::ALL.into_iter().find(|f| f.as_str() == s) {
            return Ok(f);
        }
        let matches: Vec<_> = FamilyName::ALL
            .into_iter()
            .filter(|f| f.as_str().eq_ignore_ascii_case(s))
            .collect();
        match matches.as_slice() {
            [f] => Ok(*f),
            _ => Err(SpkError::UnknownFamily(s.to_string())),
        }
    }
}

// Dense univariate helpers, coefficient of x^k at index k.

type Dense = Vec<BigInt>;

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// `a(x) p(x) + b(x) p'(x)` for small integer polynomials `a`, `b`.
fn step(p: &[BigInt], a: &[i64], b: &[i64]) -> Dense {
    let mut out = vec![BigInt::zero(); p.len() + a.len().max(b.len()) + 1];
    for (i, c) in p.iter().enumerate() {
        for (j, &aj) in a.iter().enumerate() {
            if aj != 0 {
                out[i + j] += c * aj;
            }
        }
        if i > 0 {
            let dc = c * BigInt::from(i);
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    out[i - 1 + j] += &dc * bj;
                }
            }
        }
    }
    trim(out)
}

fn add_dense(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn shift(p: &[BigInt], k: usize) -> Dense {
    let mut out = vec![BigInt::zero(); k];
    out.extend_from_slice(p);
    trim(out)
}

fn scale_dense(p: &[BigInt], c: i64) -> Dense {
    trim(p.iter().map(|x| x * c).collect())
}

fn x_poly(p: &[BigInt]) -> Polynomial {
    Polynomial::from_univariate(var("x"), p)
}

fn dense_of(p: &Polynomial) -> Result<Dense> {
    if p.is_zero() {
        return Ok(Vec::new());
    }
    p.univariate_coeffs(var("x"))
}

fn ints(v: &[i64]) -> Dense {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// `A_n` by `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)`, with `A_0 = 1`.
pub fn eulerian_a(n: usize) -> Dense {
    let mut row = ints(&[1]);
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m];
        for k in 0..m {
            let keep = row.get(k).cloned().unwrap_or_default() * (k + 1);
            let from = if k > 0 {
                row.get(k - 1).cloned().unwrap_or_default() * (m - k)
            } else {
                BigInt::zero()
            };
            next[k] = keep + from;
        }
        row = next;
    }
    row
}

/// `B_n` by `B(n,k) = (2k+1) B(n-1,k) + (2n-2k+1) B(n-1,k-1)`, with `B_0 = 1`.
pub fn eulerian_b(n: usize) -> Dense {
    let mut row = ints(&[1]);
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 0..=m {
            let keep = row.get(k).cloned().unwrap_or_default() * (2 * k + 1);
            let from = if k > 0 {
                row.get(k - 1).cloned().unwrap_or_default() * (2 * m - 2 * k + 1)
            } else {
                BigInt::zero()
            };
            next[k] = keep + from;
        }
        row = next;
    }
    row
}

/// `T_{n+1} = x(nx+1) T_n + x(1-x^2) T_n'`, `T_0 = 1`, `T_1 = x`.
pub fn updown_t(n: usize) -> Dense {
    if n == 0 {
        return ints(&[1]);
    }
    let mut t = ints(&[0, 1]);
    for m in 1..n {
        t = step(&t, &[0, 1, m as i64], &[0, 1, 0, -1]);
    }
    t
}

/// `f_{n+1} = (1 + x + (n-1)x^2) f_n + x(1-x^2) f_n'`, `f_1 = 2`.
pub fn f_recursion(n: usize) -> Result<Dense> {
    if n == 0 {
        return Err(SpkError::OutOfRange("f_n starts at n = 1".into()));
    }
    let mut f = ints(&[2]);
    for m in 1..n {
        f = step(&f, &[1, 1, m as i64 - 1], &[0, 1, 0, -1]);
    }
    Ok(f)
}

/// `(xi(n,.), zeta(n,.))` by the integer coefficient system, `xi(1,0) = 1`.
pub fn xi_zeta_coefficients(n: usize) -> Result<(Dense, Dense)> {
    if n == 0 {
        return Err(SpkError::OutOfRange("xi and zeta start at n = 1".into()));
    }
    let mut xi = ints(&[1]);
    let mut zeta: Dense = Vec::new();
    let get = |v: &Dense, k: i64| -> BigInt {
        if k < 0 {
            BigInt::zero()
        } else {
            v.get(k as usize).cloned().unwrap_or_default()
        }
    };
    for m in 1..n as i64 {
        let len = (m as usize + 2) / 2 + 1;
        let mut nxi = vec![BigInt::zero(); len];
        let mut nzeta = vec![BigInt::zero(); len];
        for k in 0..len as i64 {
            let half = get(&zeta, k - 1);
            let (q, r) = half.div_rem(&BigInt::from(2));
            if !r.is_zero() {
                return Err(SpkError::Invariant(format!(
                    "zeta({m},{}) = {half} is odd",
                    k - 1
                )));
            }
            nxi[k as usize] =
                get(&xi, k) * (1 + 2 * k) + get(&xi, k - 1) * (m - 2 * k + 1) + q;
            nzeta[k as usize] =
                get(&zeta, k) * (2 * (1 + k)) + get(&zeta, k - 1) * (m - 2 * k) + get(&xi, k) * 2;
        }
        xi = trim(nxi);
        zeta = trim(nzeta);
    }
    Ok((xi, zeta))
}

/// `(xi_n, zeta_n)` by the differential system, `xi_1 = 1`, `zeta_1 = 0`.
pub fn xi_zeta_differential(n: usize) -> Result<(Dense, Dense)> {
    if n == 0 {
        return Err(SpkError::OutOfRange("xi and zeta start at n = 1".into()));
    }
    let mut xi = ints(&[1]);
    let mut zeta: Dense = Vec::new();
    for m in 1..n as i64 {
        // x/2 zeta must stay integral
        let mut half = Vec::with_capacity(zeta.len());
        for c in &zeta {
            let (q, r) = c.div_rem(&BigInt::from(2));
            if !r.is_zero() {
                return Err(SpkError::Invariant(format!("zeta_{m} has an odd coefficient")));
            }
            half.push(q);
        }
        let nxi = add_dense(&step(&xi, &[1, m - 1], &[0, 2, -2]), &shift(&half, 1));
        let nzeta = add_dense(&step(&zeta, &[2, m - 2], &[0, 2, -2]), &scale_dense(&xi, 2));
        xi = nxi;
        zeta = nzeta;
    }
    Ok((xi, zeta))
}

/// `Mtilde_{n+1} = (2n+1) x Mtilde_n + 2x(1-x) Mtilde_n'`, `Mtilde_0 = 1`.
pub fn mtilde_recursion(n: usize) -> Dense {
    let mut p = ints(&[1]);
    for m in 0..n as i64 {
        p = step(&p, &[0, 2 * m + 1], &[0, 2, -2]);
    }
    p
}

/// `M_{n+1} = (1 + 2nx) M_n + 2x(1-x) M_n'`, `M_0 = 1`.
pub fn m_recursion(n: usize) -> Dense {
    let mut p = ints(&[1]);
    for m in 0..n as i64 {
        p = step(&p, &[1, 2 * m], &[0, 2, -2]);
    }
    p
}

/// `d_n = (n-1) x (d_{n-1} + d_{n-2}) + x(1-x) d_{n-1}'`, `d_0 = 1`, `d_1 = 0`.
pub fn derangement_recursion(n: usize) -> Dense {
    let mut prev = ints(&[1]);
    let mut cur: Dense = Vec::new();
    if n == 0 {
        return prev;
    }
    for m in 2..=n as i64 {
        let sum = add_dense(&cur, &prev);
        let next = add_dense(&shift(&scale_dense(&sum, m - 1), 1), &step(&cur, &[], &[0, 1, -1]));
        prev = cur;
        cur = next;
    }
    cur
}

/// Stirling number of the second kind by `S2(n,k) = k S2(n-1,k) + S2(n-1,k-1)`.
pub fn stirling2(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(SpkError::OutOfRange(format!("S2({n},{k}) needs k <= n")));
    }
    Ok(stirling2_row(n).swap_remove(k))
}

/// `S2(n, 0..=n)`.
pub fn stirling2_row(n: usize) -> Dense {
    let mut row = ints(&[1]);
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let keep = row.get(k).cloned().unwrap_or_default() * k;
            next[k] = keep + &row[k - 1];
        }
        row = next;
    }
    row
}

fn check_n(name: FamilyName, n: usize) -> Result<()> {
    if n < name.min_n() {
        return Err(SpkError::OutOfRange(format!(
            "{name} needs n >= {}",
            name.min_n()
        )));
    }
    Ok(())
}

/// Substitutes the named variables of `p` by constants or polynomials given as text.
fn specialize(p: &Polynomial, pairs: &[(&str, &str)]) -> Result<Polynomial> {
    p.substitute(&subs_map(pairs.iter().map(|&(v, e)| (v, poly(e)))))
}

/// `D_G^(n-1)(PE + NE)` of the signed-permutation grammar, specialized to `b_n(x,y)`.
pub fn lemma21_route(n: usize) -> Result<Polynomial> {
    let g = builtin(GrammarName::Lemma21);
    let p = g.derive_iter(&GrammarName::Lemma21.seed(), n - 1)?;
    specialize(&p, &[("P", "1"), ("A", "1"), ("E", "1"), ("N", "y"), ("D", "x*y")])
}

/// `D_G1^(n-1)(PE + qNE)` at `P=x, A=E=1, N=D=xy`: `x^(desA+1) y^desB q^neg` over `S_n^B`.
pub fn g1_route(n: usize) -> Result<Polynomial> {
    let g = builtin(GrammarName::G1);
    let p = g.derive_iter(&GrammarName::G1.seed(), n - 1)?;
    specialize(&p, &[("P", "x"), ("A", "1"), ("E", "1"), ("N", "x*y"), ("D", "x*y")])
}

/// `D_G2^(n-1)(alpha W + q beta gamma)` at `alpha=x, gamma=W=1, beta=xy`.
pub fn g2_route(n: usize) -> Result<Polynomial> {
    let g = builtin(GrammarName::G2);
    let p = g.derive_iter(&GrammarName::G2.seed(), n - 1)?;
    specialize(
        &p,
        &[("g2_alpha", "x"), ("g2_gamma", "1"), ("g2_W", "1"), ("g2_beta", "x*y")],
    )
}

/// The fast route for every family.
pub fn family_poly(name: FamilyName, n: usize) -> Result<Polynomial> {
    check_n(name, n)?;
    if let Some(spec) = name.spec() {
        let table = gamma_table_cached(n)?;
        return gamma_substitute(&table, &GammaSpec::builtin(spec));
    }
    Ok(match name {
        FamilyName::A => x_poly(&eulerian_a(n)),
        FamilyName::B => x_poly(&eulerian_b(n)),
        FamilyName::Bq => {
            // x^(desA+1) y^desB q^neg at x = 1, then y renamed to x
            let p = g1_route(n)?;
            specialize(&p, &[("x", "1")])?.rename(&[(var("y"), var("x"))])
        }
        FamilyName::LowerB => lemma21_route(n)?,
        FamilyName::D => {
            // B_n(x) - n 2^(n-1) x A_{n-1}(x)
            let b = eulerian_b(n);
            let a = eulerian_a(n - 1);
            let c = BigInt::from(n) << (n - 1);
            let sub: Dense = shift(&a, 1).into_iter().map(|v| -(v * &c)).collect();
            x_poly(&add_dense(&b, &sub))
        }
        FamilyName::LowerD => x_poly(&derangement_recursion(n)),
        FamilyName::T => x_poly(&updown_t(n)),
        FamilyName::Xi => x_poly(&xi_zeta_coefficients(n)?.0),
        FamilyName::Zeta => x_poly(&xi_zeta_coefficients(n)?.1),
        FamilyName::F => x_poly(&f_recursion(n)?),
        FamilyName::M => x_poly(&m_recursion(n)),
        FamilyName::Mtilde => x_poly(&mtilde_recursion(n)),
        FamilyName::S2 => x_poly(&stirling2_row(n)),
        _ => unreachable!("gamma families handled above"),
    })
}

/// The enumeration route, or `None` for families without one.
pub fn family_poly_enumerated(name: FamilyName, n: usize, cap: u64) -> Result<Option<Polynomial>> {
    check_n(name, n)?;
    if let Some(weight) = name.stirling_weight() {
        if n == 0 {
            return Ok(Some(Polynomial::one()));
        }
        return stirling_poly(n, &weight, cap).map(Some);
    }
    let x = |e: u32| vec![e as i32];
    Ok(Some(match name {
        FamilyName::A => perm_poly(n, &["x"], cap, |r| x(r.des))?,
        FamilyName::B => signed_poly(n, &["x"], cap, |r| x(r.des_b))?,
        FamilyName::Bq => signed_poly(n, &["x", "q"], cap, |r| vec![r.des_b as i32, r.neg as i32])?,
        FamilyName::LowerB => {
            signed_poly(n, &["x", "y"], cap, |r| vec![r.des_a as i32, r.des_b as i32])?
        }
        FamilyName::D => {
            guard(Family::SD, n, cap)?;
            let mut acc = WeightAccumulator::new(vec![var("x")]);
            for p in SignedPermIter::new(n).filter(|p| p.neg() % 2 == 0) {
                let d = signed_stats(&p).des_d.expect("n >= 2");
                acc.add(&[d as i32], 1);
            }
            acc.into_polynomial()
        }
        FamilyName::LowerD => {
            guard(Family::Derange, n, cap)?;
            let mut acc = WeightAccumulator::new(vec![var("x")]);
            for p in PermIter::new(n) {
                let r = perm_stats(&p);
                if r.fix == 0 {
                    acc.add(&[r.exc as i32], 1);
                }
            }
            acc.into_polynomial()
        }
        FamilyName::T => perm_poly(n, &["x"], cap, |r| x(r.udrun))?,
        FamilyName::F | FamilyName::Xi | FamilyName::Zeta => {
            // T_n = (x/2) f_n, so xi(n,k) = T(n,2k+1) and zeta(n,k) = 2 T(n,2k+2)
            let t = dense_of(&perm_poly(n, &["x"], cap, |r| x(r.udrun))?)?;
            let f: Dense = t.iter().skip(1).map(|c| c * 2).collect();
            let pick = |parity: usize| -> Dense {
                f.iter()
                    .enumerate()
                    .filter(|(i, _)| i % 2 == parity)
                    .map(|(_, c)| c.clone())
                    .collect()
            };
            match name {
                FamilyName::F => x_poly(&f),
                FamilyName::Xi => x_poly(&pick(0).iter().map(|c| c / 2).collect::<Dense>()),
                _ => x_poly(&pick(1)),
            }
        }
        _ => return Ok(None),
    }))
}

/// `sum over Q_n` of `prod var^stat` for the given markers.
pub fn stirling_poly(n: usize, weight: &[(&str, Stat)], cap: u64) -> Result<Polynomial> {
    guard(Family::Q, n, cap)?;
    let vars: Vec<Var> = weight.iter().map(|(v, _)| var(v)).collect();
    let mut acc = WeightAccumulator::new(vars);
    let mut exps = vec![0i32; weight.len()];
    for (w, _) in StirlingIter::new(n, false) {
        let r = letter_stats(w.letters());
        for (e, (_, s)) in exps.iter_mut().zip(weight) {
            *e = r.get(*s) as i32;
        }
        acc.add(&exps, 1);
    }
    Ok(acc.into_polynomial())
}

/// Folds a weight over `Q_n` with full statistic records.
pub fn stirling_fold<F>(n: usize, vars: &[&str], cap: u64, mut weight: F) -> Result<Polynomial>
where
    F: FnMut(&StatRecord) -> Vec<i32>,
{
    guard(Family::Q, n, cap)?;
    let mut acc = WeightAccumulator::new(vars.iter().map(|v| var(v)).collect());
    for (w, _) in StirlingIter::new(n, false) {
        acc.add(&weight(&letter_stats(w.letters())), 1);
    }
    Ok(acc.into_polynomial())
}

pub fn signed_poly<F>(n: usize, vars: &[&str], cap: u64, weight: F) -> Result<Polynomial>
where
    F: Fn(&SignedStatRecord) -> Vec<i32>,
{
    guard(Family::SB, n, cap)?;
    let mut acc = WeightAccumulator::new(vars.iter().map(|v| var(v)).collect());
    for p in SignedPermIter::new(n) {
        acc.add(&weight(&signed_stats(&p)), 1);
    }
    Ok(acc.into_polynomial())
}

pub fn perm_poly<F>(n: usize, vars: &[&str], cap: u64, weight: F) -> Result<Polynomial>
where
    F: Fn(&PermStatRecord) -> Vec<i32>,
{
    guard(Family::S, n, cap)?;
    let mut acc = WeightAccumulator::new(vars.iter().map(|v| var(v)).collect());
    for p in PermIter::new(n) {
        acc.add(&weight(&perm_stats(&p)), 1);
    }
    Ok(acc.into_polynomial())
}

/// `sum over Q^(0)_n` (Stirling-side index) of a weight in `lap, ap, even`.
pub fn qzero_poly<F>(n: usize, vars: &[&str], cap: u64, weight: F) -> Result<Polynomial>
where
    F: Fn(&QZeroStatRecord) -> Vec<i32>,
{
    guard(Family::Q0, n, cap)?;
    let mut acc = WeightAccumulator::new(vars.iter().map(|v| var(v)).collect());
    for w in QZeroIter::new(n) {
        acc.add(&weight(&qzero_letter_stats(w.letters())), 1);
    }
    Ok(acc.into_polynomial())
}

/// Right-hand side of the `b_n(x,y)` expansion in the basis `(xy)^k (1+xy)^m`,
/// with `xi(n,k) = T(n,2k+1)` and `zeta(n,k) = 2T(n,2k+2)`.
pub fn bn_expansion_rhs(n: usize) -> Result<Polynomial> {
    if n < 2 {
        return Err(SpkError::OutOfRange("the b_n expansion needs n >= 2".into()));
    }
    let t = updown_t(n);
    let at = |k: usize| t.get(k).cloned().unwrap_or_default();
    let xy = poly("x*y");
    let one_xy = poly("1 + x*y");
    let mut first = Polynomial::zero();
    let mut second = Polynomial::zero();
    for k in 0..=n / 2 {
        let four = BigInt::one() << (2 * k);
        let xi = at(2 * k + 1);
        if !xi.is_zero() {
            let e = (n - 1).checked_sub(2 * k).ok_or_else(|| {
                SpkError::Invariant(format!("xi({n},{k}) nonzero past the basis"))
            })?;
            first += &(&xy.pow(k as u32) * &one_xy.pow(e as u32)).scale(&(four.clone() * xi));
        }
        let zeta: BigInt = at(2 * k + 2) * 2;
        if !zeta.is_zero() {
            let e = (n - 2).checked_sub(2 * k).ok_or_else(|| {
                SpkError::Invariant(format!("zeta({n},{k}) nonzero past the basis"))
            })?;
            second += &(&xy.pow(k as u32) * &one_xy.pow(e as u32)).scale(&(four * zeta));
        }
    }
    Ok(&poly("1 + y") * &first + &poly("y*(1 + x)") * &second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_CAP;

    fn d(v: &[i64]) -> Dense {
        ints(v)
    }

    #[test]
    fn names() {
        assert_eq!("b".parse::<FamilyName>().unwrap(), FamilyName::LowerB);
        assert_eq!("B".parse::<FamilyName>().unwrap(), FamilyName::B);
        assert_eq!("mtilde".parse::<FamilyName>().unwrap(), FamilyName::Mtilde);
        assert!("Q7".parse::<FamilyName>().is_err());
        for f in FamilyName::ALL {
            assert_eq!(f.as_str().parse::<FamilyName>().unwrap(), f);
        }
    }

    #[test]
    fn recurrences() {
        assert_eq!(eulerian_a(3), d(&[1, 4, 1]));
        assert_eq!(eulerian_b(2), d(&[1, 6, 1]));
        assert_eq!(updown_t(2), d(&[0, 1, 1]));
        assert_eq!(f_recursion(2).unwrap(), d(&[2, 2]));
        let (xi, zeta) = xi_zeta_coefficients(3).unwrap();
        assert_eq!((xi, zeta), (d(&[1, 2]), d(&[6])));
        assert_eq!(xi_zeta_differential(3).unwrap(), (d(&[1, 2]), d(&[6])));
        assert_eq!(xi_zeta_differential(2).unwrap(), (d(&[1]), d(&[2])));
        assert_eq!(derangement_recursion(4), d(&[0, 1, 7, 1]));
        assert_eq!(m_recursion(1), d(&[1]));
        assert_eq!(mtilde_recursion(1), d(&[0, 1]));
        assert_eq!(stirling2(3, 2).unwrap(), BigInt::from(3));
        assert_eq!(stirling2(5, 5).unwrap(), BigInt::one());
        assert!(stirling2(4, 0).unwrap().is_zero());
        assert!(stirling2(2, 3).is_err());
    }

    #[test]
    fn b_displays() {
        assert_eq!(family_poly(FamilyName::LowerB, 1).unwrap(), poly("1 + y"));
        assert_eq!(
            family_poly(FamilyName::LowerB, 2).unwrap(),
            poly("(1 + y + x*y + x*y^2) + (2*y + 2*x*y)")
        );
        let b3 = poly(
            "(1 + y + 10*x*y + 10*x*y^2 + x^2*y^2 + x^2*y^3) + (6*y + 6*x*y + 6*x*y^2 + 6*x^2*y^2)",
        );
        assert_eq!(family_poly(FamilyName::LowerB, 3).unwrap(), b3);
        assert_eq!(bn_expansion_rhs(3).unwrap(), b3);
        assert_eq!(
            bn_expansion_rhs(2).unwrap(),
            poly("(1 + y + x*y + x*y^2) + (2*y + 2*x*y)")
        );
        assert!(bn_expansion_rhs(1).is_err());
    }

    #[test]
    fn fast_equals_enumeration_small() {
        for f in FamilyName::ALL {
            for n in f.min_n().max(1)..=4 {
                if let Some(e) = family_poly_enumerated(f, n, DEFAULT_CAP).unwrap() {
                    assert_eq!(family_poly(f, n).unwrap(), e, "{f} at n={n}");
                }
            }
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(family_poly(FamilyName::Xi, 3).unwrap(), poly("1 + 2*x"));
        assert_eq!(family_poly(FamilyName::Zeta, 3).unwrap(), poly("6"));
        assert_eq!(family_poly(FamilyName::T, 2).unwrap(), poly("x + x^2"));
        assert_eq!(family_poly(FamilyName::Zeta, 1).unwrap(), Polynomial::zero());
    }
}
