//! Exact real-root location: Sturm counting, root isolation, multiplicities
//! and interlacing verdicts.
//!
//! Everything is rational arithmetic. A window is counted by the sign
//! variations of a Sturm chain built on the square-free part, so the counts
//! are of distinct roots; multiplicities come from Yun's decomposition.

mod ratpoly;
mod zeros;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

pub use ratpoly::RatPoly;
pub use zeros::{theorem_zeros_report, ZerosItem, ZerosReport};

use crate::error::{Result, SpkError};
use crate::polynomial::Polynomial;
use ratpoly::sign;

/// Endpoint of a counting window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(BigRational),
    PosInf,
}

impl Bound {
    pub fn int(v: i64) -> Bound {
        Bound::At(BigRational::from_integer(v.into()))
    }

    fn rank(&self) -> (i8, Option<&BigRational>) {
        match self {
            Bound::NegInf => (-1, None),
            Bound::At(x) => (0, Some(x)),
            Bound::PosInf => (1, None),
        }
    }

    fn le(&self, o: &Bound) -> bool {
        self.rank() <= o.rank()
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::At(x) => write!(f, "{x}"),
            Bound::PosInf => f.write_str("+inf"),
        }
    }
}

/// A real interval with each end open or closed. Infinite ends are open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: Bound,
    pub lo_closed: bool,
    pub hi: Bound,
    pub hi_closed: bool,
}

impl Window {
    pub fn new(lo: Bound, lo_closed: bool, hi: Bound, hi_closed: bool) -> Result<Window> {
        if !lo.le(&hi) || lo == Bound::PosInf || hi == Bound::NegInf {
            return Err(SpkError::OutOfRange(format!("empty window from {lo} to {hi}")));
        }
        let lo_closed = lo_closed && matches!(lo, Bound::At(_));
        let hi_closed = hi_closed && matches!(hi, Bound::At(_));
        Ok(Window { lo, lo_closed, hi, hi_closed })
    }

    pub fn real_line() -> Window {
        Window { lo: Bound::NegInf, lo_closed: false, hi: Bound::PosInf, hi_closed: false }
    }

    pub fn open(lo: Bound, hi: Bound) -> Result<Window> {
        Window::new(lo, false, hi, false)
    }

    /// The windows every root report counts.
    pub fn standard() -> Vec<Window> {
        vec![
            Window::real_line(),
            Window::open(Bound::NegInf, Bound::int(0)).unwrap(),
            Window::new(Bound::int(-1), true, Bound::int(0), false).unwrap(),
            Window::new(Bound::int(0), true, Bound::PosInf, false).unwrap(),
        ]
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        let above = match &self.lo {
            Bound::NegInf => true,
            Bound::At(a) => x > a || (self.lo_closed && x == a),
            Bound::PosInf => false,
        };
        let below = match &self.hi {
            Bound::PosInf => true,
            Bound::At(b) => x < b || (self.hi_closed && x == b),
            Bound::NegInf => false,
        };
        above && below
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{},{}{r}", self.lo, self.hi)
    }
}

impl FromStr for Window {
    type Err = SpkError;

    /// Reads `[a,b)`, `(-inf,0]` and the like.
    fn from_str(s: &str) -> Result<Window> {
        let bad = || SpkError::Parse { pos: 0, msg: format!("bad window `{s}`") };
        let s = s.trim();
        let lo_closed = match s.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(bad()),
        };
        let hi_closed = match s.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(bad()),
        };
        let inner = &s[1..s.len() - 1];
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let bound = |t: &str| -> Result<Bound> {
            match t.trim() {
                "-inf" => Ok(Bound::NegInf),
                "inf" | "+inf" => Ok(Bound::PosInf),
                t => t.parse::<BigRational>().map(Bound::At).map_err(|_| bad()),
            }
        };
        Window::new(bound(a)?, lo_closed, bound(b)?, hi_closed)
    }
}

/// Sturm chain of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> Result<SturmChain> {
        let s = p.square_free_part()?;
        let mut chain = vec![s.clone(), s.derivative()];
        while chain.last().is_some_and(|c| !c.is_zero()) {
            let k = chain.len();
            let r = chain[k - 2].div_rem(&chain[k - 1])?.1;
            // positive rescaling keeps the signs and the numbers small
            let r = match r.leading() {
                Some(l) => r.scale(&l.abs().recip()).neg(),
                None => r,
            };
            chain.push(r);
        }
        chain.pop();
        Ok(SturmChain { chain })
    }

    /// The square-free polynomial the chain starts from.
    pub fn base(&self) -> &RatPoly {
        &self.chain[0]
    }

    pub fn variations(&self, at: &Bound) -> usize {
        let signs = self.chain.iter().map(|p| match at {
            Bound::At(x) => p.sign_at(x),
            Bound::PosInf => sign(p.leading().unwrap()),
            Bound::NegInf => {
                let s = sign(p.leading().unwrap());
                if p.degree().unwrap() % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        });
        let mut last = 0;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open(&self, lo: &Bound, hi: &Bound) -> usize {
        if hi.le(lo) {
            return 0;
        }
        self.variations(lo) - self.variations(hi)
    }

    /// Distinct roots in `w`.
    pub fn count(&self, w: &Window) -> usize {
        let base = self.base();
        let zero_at = |b: &Bound| matches!(b, Bound::At(x) if base.sign_at(x) == 0);
        if w.hi.le(&w.lo) {
            return usize::from(w.lo_closed && w.hi_closed && zero_at(&w.lo));
        }
        let mut c = self.count_half_open(&w.lo, &w.hi);
        if w.lo_closed && zero_at(&w.lo) {
            c += 1;
        }
        if !w.hi_closed && zero_at(&w.hi) {
            c -= 1;
        }
        c
    }
}

/// Number of distinct real roots of a univariate polynomial in `window`.
pub fn sturm_count(p: &Polynomial, window: &Window) -> Result<usize> {
    let rp = RatPoly::from_polynomial(p)?;
    Ok(SturmChain::new(&rp)?.count(window))
}

/// Largest `m` with `(x - r)^m` dividing `p`.
pub fn root_multiplicity(p: &Polynomial, r: &BigRational) -> Result<u32> {
    RatPoly::from_polynomial(p)?.multiplicity(r)
}

/// A closed rational interval. `lo == hi` is an exactly known root; otherwise
/// the root lies strictly inside and neither endpoint is a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn exact(r: BigRational) -> RatInterval {
        RatInterval { lo: r.clone(), hi: r }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Halves an inexact interval around the single root of square-free `s`
    /// inside it. May land on the root exactly.
    fn refine(&mut self, s: &RatPoly) {
        if self.is_exact() {
            return;
        }
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        let m = s.sign_at(&mid);
        if m == 0 {
            *self = RatInterval::exact(mid);
        } else if m == s.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "({}, {})", self.lo, self.hi)
        }
    }
}

const DIVISOR_TRIAL_LIMIT: u64 = 1 << 16;

/// Positive divisors found by trial division up to a fixed limit.
fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut i = 1u64;
    while i <= DIVISOR_TRIAL_LIMIT {
        let b = BigInt::from(i);
        if &b * &b > n {
            break;
        }
        let (q, r) = n.div_rem(&b);
        if r.is_zero() {
            out.push(b);
            out.push(q);
        }
        i += 1;
    }
    out
}

/// Rational roots among the candidates `±a/b` with `a | c_0`, `b | c_d`.
fn rational_roots(s: &RatPoly) -> Vec<BigRational> {
    let mut ints = s.primitive();
    let mut found = BTreeSet::new();
    while ints.len() > 1 && ints[0].is_zero() {
        found.insert(BigRational::zero());
        ints.remove(0);
    }
    if ints.len() <= 1 {
        return found.into_iter().collect();
    }
    let rest = RatPoly::from_ints(&ints);
    let nums = small_divisors(&ints[0]);
    let dens = small_divisors(ints.last().unwrap());
    for a in &nums {
        for b in &dens {
            for r in [BigRational::new(a.clone(), b.clone()), BigRational::new(-a.clone(), b.clone())] {
                if !found.contains(&r) && rest.sign_at(&r) == 0 {
                    found.insert(r);
                }
            }
        }
    }
    found.into_iter().collect()
}

/// `1 + max |a_i / a_d|`; every root is strictly inside.
fn cauchy_bound(s: &RatPoly) -> BigRational {
    let c = s.coeffs();
    let lead = c.last().unwrap();
    let m = c[..c.len() - 1]
        .iter()
        .map(|a| (a / lead).abs())
        .max()
        .unwrap_or_else(BigRational::zero);
    m + BigRational::one()
}

/// Sorted, pairwise disjoint isolating intervals for the roots of a
/// square-free polynomial.
pub fn isolate_square_free(s: &RatPoly) -> Result<Vec<RatInterval>> {
    if s.is_zero() {
        return Err(SpkError::ZeroPolynomial);
    }
    let mut exact = rational_roots(s);
    let mut rest = s.clone();
    for r in &exact {
        rest = rest.div_exact(&RatPoly::linear(r))?;
    }
    let mut intervals: Vec<RatInterval> = Vec::new();
    'restart: loop {
        intervals.clear();
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        let chain = SturmChain::new(&rest)?;
        let b = cauchy_bound(&rest);
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            match chain.count_half_open(&Bound::At(lo.clone()), &Bound::At(hi.clone())) {
                0 => {}
                1 => intervals.push(RatInterval { lo, hi }),
                _ => {
                    let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                    if rest.sign_at(&mid) == 0 {
                        rest = rest.div_exact(&RatPoly::linear(&mid))?;
                        exact.push(mid);
                        continue 'restart;
                    }
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
        break;
    }
    let mut all: Vec<RatInterval> = exact.into_iter().map(RatInterval::exact).collect();
    all.extend(intervals);
    // shrink until the closed intervals are pairwise disjoint
    loop {
        all.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        let clash = (1..all.len()).find(|&i| all[i - 1].hi >= all[i].lo);
        let Some(i) = clash else { break };
        let (a, b) = (all[i - 1].width(), all[i].width());
        let k = if a >= b { i - 1 } else { i };
        all[k].refine(&rest);
    }
    Ok(all)
}

/// Multiplicity in `p` of a root of some square-free multiple of `p`.
/// `parts` is the Yun decomposition of `p`.
fn multiplicity_in(p: &RatPoly, parts: &[RatPoly], root: &RatInterval) -> Result<u32> {
    if root.is_exact() {
        return p.multiplicity(&root.lo);
    }
    Ok(parts
        .iter()
        .position(|a| a.sign_at(&root.lo) * a.sign_at(&root.hi) < 0)
        .map_or(0, |i| i as u32 + 1))
}

/// One distinct real root and its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEntry {
    pub root: RatInterval,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    pub id: String,
    pub polynomial: RatPoly,
    pub degree: usize,
    /// Distinct real roots in increasing order.
    pub roots: Vec<RootEntry>,
    /// Distinct-root counts per window.
    pub windows: Vec<(Window, usize)>,
}

impl RootReport {
    /// Exactly known rational roots with multiplicities.
    pub fn exact_roots(&self) -> BTreeMap<BigRational, u32> {
        self.roots
            .iter()
            .filter(|e| e.root.is_exact())
            .map(|e| (e.root.lo.clone(), e.multiplicity))
            .collect()
    }

    /// Isolating intervals of the remaining roots.
    pub fn intervals(&self) -> Vec<&RootEntry> {
        self.roots.iter().filter(|e| !e.root.is_exact()).collect()
    }

    /// Real roots counted with multiplicity.
    pub fn real_root_count(&self) -> usize {
        self.roots.iter().map(|e| e.multiplicity as usize).sum()
    }

    pub fn is_real_rooted(&self) -> bool {
        self.real_root_count() == self.degree
    }

    pub fn all_simple(&self) -> bool {
        self.roots.iter().all(|e| e.multiplicity == 1)
    }

    pub fn count(&self, w: &Window) -> Option<usize> {
        self.windows.iter().find(|(x, _)| x == w).map(|(_, c)| *c)
    }

    pub fn to_json(&self) -> Value {
        let exact: Vec<Value> = self
            .exact_roots()
            .into_iter()
            .map(|(r, m)| json!({ "root": r.to_string(), "multiplicity": m }))
            .collect();
        let intervals: Vec<Value> = self
            .intervals()
            .into_iter()
            .map(|e| {
                json!({
                    "lo": e.root.lo.to_string(),
                    "hi": e.root.hi.to_string(),
                    "multiplicity": e.multiplicity,
                })
            })
            .collect();
        let windows: Vec<Value> = self
            .windows
            .iter()
            .map(|(w, c)| json!({ "window": w.to_string(), "distinct_roots": c }))
            .collect();
        json!({
            "id": self.id,
            "polynomial": self.polynomial.to_string(),
            "degree": self.degree,
            "real_rooted": self.is_real_rooted(),
            "exact": exact,
            "intervals": intervals,
            "windows": windows,
        })
    }
}

impl fmt::Display for RootReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} = {}", self.id, self.polynomial)?;
        writeln!(f, "degree {}, real roots {}", self.degree, self.real_root_count())?;
        for e in &self.roots {
            writeln!(f, "  {}  multiplicity {}", e.root, e.multiplicity)?;
        }
        for (w, c) in &self.windows {
            writeln!(f, "  {w}: {c}")?;
        }
        Ok(())
    }
}

/// Isolates every real root and counts the standard windows.
pub fn isolate_roots(p: &Polynomial) -> Result<RootReport> {
    isolate_rat(&p.to_string(), &RatPoly::from_polynomial(p)?)
}

pub fn isolate_rat(id: &str, p: &RatPoly) -> Result<RootReport> {
    let degree = p.degree().ok_or(SpkError::ZeroPolynomial)?;
    let parts = p.square_free_decomposition()?;
    let s = p.square_free_part()?;
    let chain = SturmChain::new(&s)?;
    let roots = isolate_square_free(&s)?
        .into_iter()
        .map(|root| {
            let multiplicity = multiplicity_in(p, &parts, &root)?;
            Ok(RootEntry { root, multiplicity })
        })
        .collect::<Result<Vec<_>>>()?;
    let windows = Window::standard()
        .into_iter()
        .map(|w| {
            let c = chain.count(&w);
            (w, c)
        })
        .collect();
    Ok(RootReport { id: id.to_string(), polynomial: p.clone(), degree, roots, windows })
}

/// Real-rootedness via Sturm: the square-free part has as many distinct real
/// roots as its degree.
pub fn is_real_rooted(p: &RatPoly) -> Result<bool> {
    let chain = SturmChain::new(p)?;
    Ok(chain.count(&Window::real_line()) == chain.base().degree().unwrap())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InterlaceVerdict {
    Interlaces,
    AlternatesLeft,
    Neither,
    Vacuous,
}

impl InterlaceVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            InterlaceVerdict::Interlaces => "interlaces",
            InterlaceVerdict::AlternatesLeft => "alternates-left",
            InterlaceVerdict::Neither => "neither",
            InterlaceVerdict::Vacuous => "vacuous",
        }
    }

    /// Whether `p ≺ q` holds (vacuous counts as holding).
    pub fn precedes(&self) -> bool {
        *self != InterlaceVerdict::Neither
    }
}

impl fmt::Display for InterlaceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Weak interlacing of the zeros of `p` against those of `q`, with shared
/// roots compared by multiplicity.
pub fn interlace_verdict(p: &Polynomial, q: &Polynomial) -> Result<InterlaceVerdict> {
    interlace_rat(&RatPoly::from_polynomial(p)?, &RatPoly::from_polynomial(q)?)
}

pub fn interlace_rat(p: &RatPoly, q: &RatPoly) -> Result<InterlaceVerdict> {
    for r in [p, q] {
        if !is_real_rooted(r)? {
            return Err(SpkError::NotRealRooted(r.to_string()));
        }
    }
    let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
    if dp == 0 {
        return Ok(if dq <= 1 { InterlaceVerdict::Vacuous } else { InterlaceVerdict::Neither });
    }
    if dq != dp && dq != dp + 1 {
        return Ok(InterlaceVerdict::Neither);
    }
    // each root becomes its rank among the distinct roots of p*q
    let s = p.mul(q).square_free_part()?;
    let (pp, qp) = (p.square_free_decomposition()?, q.square_free_decomposition()?);
    let mut xs = Vec::with_capacity(dp);
    let mut ts = Vec::with_capacity(dq);
    for (j, root) in isolate_square_free(&s)?.iter().enumerate() {
        xs.extend(std::iter::repeat_n(j, multiplicity_in(p, &pp, root)? as usize));
        ts.extend(std::iter::repeat_n(j, multiplicity_in(q, &qp, root)? as usize));
    }
    if xs.len() != dp || ts.len() != dq {
        return Err(SpkError::Invariant("root count differs from degree".into()));
    }
    let ok = if dq == dp + 1 {
        (0..dp).all(|i| ts[i] <= xs[i] && xs[i] <= ts[i + 1])
    } else {
        (0..dp).all(|i| xs[i] <= ts[i] && (i + 1 == dp || ts[i] <= xs[i + 1]))
    };
    Ok(match (ok, dq == dp + 1) {
        (false, _) => InterlaceVerdict::Neither,
        (true, true) => InterlaceVerdict::Interlaces,
        (true, false) => InterlaceVerdict::AlternatesLeft,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sturm_counts() {
        let w: Window = "(-2,0)".parse().unwrap();
        assert_eq!(sturm_count(&poly("x^2 - 1"), &w).unwrap(), 1);
        let neg: Window = "(-inf,0)".parse().unwrap();
        assert_eq!(sturm_count(&poly("1 + 2*x"), &neg).unwrap(), 1);
        let closed: Window = "[-1,1]".parse().unwrap();
        assert_eq!(sturm_count(&poly("x^2 - 1"), &closed).unwrap(), 2);
        let open: Window = "(-1,1)".parse().unwrap();
        assert_eq!(sturm_count(&poly("x^2 - 1"), &open).unwrap(), 0);
        assert_eq!(sturm_count(&poly("(x+1)^3*(x-5)"), &Window::real_line()).unwrap(), 2);
        assert_eq!(sturm_count(&poly("x^2 + 1"), &Window::real_line()).unwrap(), 0);
        assert!(sturm_count(&Polynomial::zero(), &w).is_err());
    }

    #[test]
    fn windows_parse() {
        let w: Window = "[-1/2, +inf)".parse().unwrap();
        assert_eq!(w.to_string(), "[-1/2,+inf)");
        assert!(w.contains(&q(-1, 2)));
        assert!(!w.contains(&q(-1, 1)));
        assert!("(1,0)".parse::<Window>().is_err());
        assert!("1,0".parse::<Window>().is_err());
        assert_eq!("[-inf,0]".parse::<Window>().unwrap().to_string(), "(-inf,0]");
    }

    #[test]
    fn multiplicities() {
        assert_eq!(root_multiplicity(&poly("(1+x)^3"), &q(-1, 1)).unwrap(), 3);
        assert_eq!(root_multiplicity(&poly("2"), &q(-1, 1)).unwrap(), 0);
        assert_eq!(root_multiplicity(&poly("2 + 2*x"), &q(-1, 1)).unwrap(), 1);
    }

    #[test]
    fn isolation() {
        let r = isolate_roots(&poly("x^2 - 1")).unwrap();
        let exact = r.exact_roots();
        assert_eq!(exact.len(), 2);
        assert_eq!(exact[&q(-1, 1)], 1);
        assert_eq!(exact[&q(1, 1)], 1);
        let r = isolate_roots(&poly("(x^2 - 2)^2*(3*x - 1)")).unwrap();
        assert_eq!(r.real_root_count(), 5);
        assert_eq!(r.intervals().len(), 2);
        assert!(r.intervals().iter().all(|e| e.multiplicity == 2));
        for e in r.intervals() {
            let s = RatPoly::from_i64(&[-2, 0, 1]);
            assert!(s.sign_at(&e.root.lo) * s.sign_at(&e.root.hi) < 0);
        }
        assert!(!isolate_roots(&poly("x^2 + x + 1")).unwrap().is_real_rooted());
    }

    #[test]
    fn verdicts() {
        let v = interlace_verdict(&poly("x + 1"), &poly("x^2 + 3*x + 2")).unwrap();
        assert_eq!(v, InterlaceVerdict::Interlaces);
        let v = interlace_verdict(&poly("6"), &poly("1 + 2*x")).unwrap();
        assert_eq!(v, InterlaceVerdict::Vacuous);
        let v = interlace_verdict(&poly("(x+2)*(x+4)"), &poly("(x+1)*(x+3)")).unwrap();
        assert_eq!(v, InterlaceVerdict::AlternatesLeft);
        let v = interlace_verdict(&poly("(x+1)*(x+3)"), &poly("(x+2)*(x+4)")).unwrap();
        assert_eq!(v, InterlaceVerdict::Neither);
        let v = interlace_verdict(&poly("x + 5"), &poly("x^2 + 3*x + 2")).unwrap();
        assert_eq!(v, InterlaceVerdict::Neither);
        assert!(matches!(
            interlace_verdict(&poly("x^2 + 1"), &poly("x")),
            Err(SpkError::NotRealRooted(_))
        ));
    }
}
