//! Sturm-sequence real root counting, isolation and refinement.
//!
//! Event times produced by the tracker are real algebraic numbers. They are
//! carried exactly as a square-free defining polynomial together with an
//! isolating interval, and compared or sign-tested by refining that interval
//! until the answer is certain.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::{rat_to_decimal, rat_to_f64, simplest_between, Poly, Rat};

/// Closed rational interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(r: Rat) -> Self {
        Interval {
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, t: &Rat) -> bool {
        &self.lo <= t && t <= &self.hi
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }
}

/// Sturm sequence of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<Poly>,
}

impl SturmSequence {
    pub fn new(p: &Poly) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let p0 = p.squarefree_part().primitive();
        let mut seq = vec![p0.clone()];
        if p0.is_constant() {
            return SturmSequence { seq };
        }
        let mut prev = p0;
        let mut cur = prev.derivative().primitive();
        while !cur.is_zero() {
            let next = (-prev.rem(&cur)).primitive();
            seq.push(cur.clone());
            prev = cur;
            cur = next;
        }
        SturmSequence { seq }
    }

    pub fn variations(&self, t: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.seq {
            let s = p.sign_at(t);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &Rat, hi: &Rat) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations(lo) - self.variations(hi)
    }

    /// Distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &Rat, hi: &Rat) -> usize {
        let at_lo = usize::from(self.seq[0].sign_at(lo) == 0);
        self.count(lo, hi) + at_lo
    }

    pub fn squarefree(&self) -> &Poly {
        &self.seq[0]
    }
}

/// Number of distinct real roots of `p` in `(iv.lo, iv.hi]`.
pub fn sturm_count(p: &Poly, iv: &Interval) -> usize {
    SturmSequence::new(p).count(&iv.lo, &iv.hi)
}

/// A real algebraic number given by a square-free defining polynomial and an
/// isolating interval.
///
/// Either `lo == hi` and the number is that rational, or `lo < hi`, the
/// defining polynomial is nonzero at both endpoints with opposite signs, and
/// it has exactly one root in `(lo, hi)`.
#[derive(Clone)]
pub struct AlgebraicTime {
    defining: Poly,
    lo: Rat,
    hi: Rat,
}

impl AlgebraicTime {
    pub fn rational(r: Rat) -> Self {
        AlgebraicTime {
            defining: Poly::linear_root(&r),
            lo: r.clone(),
            hi: r,
        }
    }

    /// Caller guarantees the invariant; checked in debug builds.
    fn from_parts(defining: Poly, lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo < hi);
        debug_assert!(defining.sign_at(&lo) * defining.sign_at(&hi) < 0);
        AlgebraicTime { defining, lo, hi }
    }

    /// Checked constructor: `lo == hi` must be a root, otherwise `(lo, hi)`
    /// must isolate exactly one root of the square-free part with a sign
    /// change across it.
    pub fn from_isolating(defining: &Poly, lo: Rat, hi: Rat) -> Option<Self> {
        if defining.is_zero() || lo > hi {
            return None;
        }
        if lo == hi {
            return (defining.sign_at(&lo) == 0).then(|| AlgebraicTime::rational(lo));
        }
        let sq = defining.squarefree_part();
        let iv = Interval::new(lo.clone(), hi.clone());
        if sq.sign_at(&lo) * sq.sign_at(&hi) >= 0 || sturm_count(&sq, &iv) != 1 {
            return None;
        }
        Some(AlgebraicTime::from_parts(sq, lo, hi).rationalized())
    }

    pub fn defining(&self) -> &Poly {
        &self.defining
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn isolate(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.lo)
    }

    /// Midpoint of the isolating interval; exact for rational times.
    pub fn approx(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.approx())
    }

    /// Halves the isolating interval once.
    fn bisect(&mut self) {
        if self.is_rational() {
            return;
        }
        let m = self.approx();
        let sm = self.defining.sign_at(&m);
        if sm == 0 {
            self.defining = Poly::linear_root(&m);
            self.lo = m.clone();
            self.hi = m;
        } else if sm == self.defining.sign_at(&self.lo) {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    /// Collapses the interval to a point when the root is a rational with a
    /// small denominator: once the interval is narrower than `1/q^2`, the
    /// simplest rational inside it is the root `p/q` itself.
    fn rationalized(mut self) -> Self {
        if self.defining.degree() == Some(1) {
            let c = self.defining.coeffs();
            return AlgebraicTime::rational(-&c[0] / &c[1]);
        }
        for bits in [16u32, 32, 48, 64] {
            let w = Rat::new(1.into(), num_bigint::BigInt::from(1u8) << bits);
            self.refine_in_place(&w);
            if self.is_rational() {
                return self;
            }
            let r = simplest_between(&self.lo, &self.hi);
            if self.defining.sign_at(&r) == 0 {
                return AlgebraicTime::rational(r);
            }
        }
        self
    }

    pub fn refine_in_place(&mut self, width: &Rat) {
        assert!(width > &Rat::zero(), "refinement width must be positive");
        while &(&self.hi - &self.lo) > width {
            self.bisect();
        }
    }

    /// Same number with an isolating interval no wider than `width`.
    pub fn refine(&self, width: &Rat) -> AlgebraicTime {
        let mut out = self.clone();
        out.refine_in_place(width);
        out
    }

    /// Sign of `q` at this number, decided exactly.
    pub fn sign_of(&self, q: &Poly) -> i8 {
        if let Some(r) = self.as_rational() {
            return q.sign_at(r);
        }
        if q.is_zero() {
            return 0;
        }
        let g = Poly::gcd(&self.defining, q);
        if !g.is_constant() && g.sign_at(&self.lo) * g.sign_at(&self.hi) < 0 {
            return 0;
        }
        let sturm = SturmSequence::new(q);
        let mut cur = self.clone();
        loop {
            if let Some(r) = cur.as_rational() {
                return q.sign_at(r);
            }
            if sturm.count_closed(&cur.lo, &cur.hi) == 0 {
                return q.sign_at(&cur.lo);
            }
            cur.bisect();
        }
    }

    /// Exact comparison of two algebraic numbers.
    pub fn cmp_exact(&self, other: &AlgebraicTime) -> Ordering {
        if self.hi < other.lo {
            return Ordering::Less;
        }
        if other.hi < self.lo {
            return Ordering::Greater;
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => return a.cmp(b),
            (Some(a), None) => return cmp_rational(a, other),
            (None, Some(b)) => return cmp_rational(b, self).reverse(),
            _ => {}
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let g = Poly::gcd(&a.defining, &b.defining);
        let common = !g.is_constant()
            && g.sign_at(&a.lo) * g.sign_at(&a.hi) < 0
            && g.sign_at(&b.lo) * g.sign_at(&b.hi) < 0;
        let sturm = common.then(|| SturmSequence::new(&g));
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if let Some(s) = &sturm {
                let lo = if a.lo < b.lo { &a.lo } else { &b.lo };
                let hi = if a.hi > b.hi { &a.hi } else { &b.hi };
                if s.count_closed(lo, hi) == 1 {
                    return Ordering::Equal;
                }
            }
            a.bisect();
            b.bisect();
            if a.is_rational() || b.is_rational() {
                return a.cmp_exact(&b);
            }
        }
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        cmp_rational(r, self).reverse()
    }
}

// compares a rational against an algebraic number
fn cmp_rational(r: &Rat, b: &AlgebraicTime) -> Ordering {
    if let Some(x) = b.as_rational() {
        return r.cmp(x);
    }
    if r > &b.lo && r < &b.hi && b.defining.sign_at(r) == 0 {
        return Ordering::Equal;
    }
    let mut b = b.clone();
    loop {
        if r < &b.lo {
            return Ordering::Less;
        }
        if r > &b.hi {
            return Ordering::Greater;
        }
        if let Some(x) = b.as_rational() {
            return r.cmp(x);
        }
        if r == &b.lo {
            return Ordering::Less;
        }
        if r == &b.hi {
            return Ordering::Greater;
        }
        b.bisect();
    }
}

impl PartialEq for AlgebraicTime {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicTime {}

impl PartialOrd for AlgebraicTime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicTime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Debug for AlgebraicTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(
                f,
                "root of {} in ({}, {}) ~ {}",
                self.defining,
                self.lo,
                self.hi,
                rat_to_decimal(&self.approx(), 12)
            ),
        }
    }
}

impl fmt::Display for AlgebraicTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{}", rat_to_decimal(&self.approx(), 12)),
        }
    }
}

/// A distinct real root together with its multiplicity in the original
/// polynomial.
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    pub time: AlgebraicTime,
    pub multiplicity: usize,
}

impl IsolatedRoot {
    /// Odd multiplicity means the polynomial changes sign at the root.
    pub fn odd_parity(&self) -> bool {
        self.multiplicity % 2 == 1
    }
}

/// Every distinct real root of `p` in the closed interval `iv`, sorted
/// increasingly, with pairwise disjoint isolating intervals.
pub fn isolate_roots(p: &Poly, iv: &Interval) -> Vec<IsolatedRoot> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    if p.is_constant() {
        return Vec::new();
    }
    let factors = p.squarefree_factors();
    let sturm = SturmSequence::new(p);
    let sq = sturm.squarefree().clone();
    let mut times = Vec::new();
    if sq.sign_at(&iv.lo) == 0 {
        times.push(AlgebraicTime::rational(iv.lo.clone()));
    }
    let c = sturm.count(&iv.lo, &iv.hi);
    split(&sturm, &sq, iv.lo.clone(), iv.hi.clone(), c, &mut times);

    times
        .into_iter()
        .map(|time| {
            let (defining, multiplicity) = factors
                .iter()
                .find(|(f, _)| time.sign_of(f) == 0)
                .map(|(f, k)| (f.clone(), *k))
                .expect("every root of p is a root of one square-free factor");
            let time = if time.is_rational() {
                time
            } else {
                AlgebraicTime::from_parts(defining, time.lo, time.hi).rationalized()
            };
            IsolatedRoot { time, multiplicity }
        })
        .collect()
}

// roots of `sq` in (lo, hi], `count` of them, appended in increasing order
fn split(
    sturm: &SturmSequence,
    sq: &Poly,
    lo: Rat,
    hi: Rat,
    count: usize,
    out: &mut Vec<AlgebraicTime>,
) {
    if count == 0 {
        return;
    }
    if count == 1 {
        if sq.sign_at(&hi) == 0 {
            out.push(AlgebraicTime::rational(hi));
            return;
        }
        if sq.sign_at(&lo) != 0 {
            out.push(AlgebraicTime::from_parts(sq.clone(), lo, hi));
            return;
        }
    }
    let mid = (&lo + &hi) / Rat::from_integer(2.into());
    let left = sturm.count(&lo, &mid);
    split(sturm, sq, lo, mid.clone(), left, out);
    split(sturm, sq, mid, hi, count - left, out);
}

/// The simplest rational strictly between `a < b`.
pub fn rational_between(a: &AlgebraicTime, b: &AlgebraicTime) -> Rat {
    let mut a = a.clone();
    let mut b = b.clone();
    let two = Rat::from_integer(2.into());
    while a.hi() >= b.lo() {
        for x in [&mut a, &mut b] {
            if !x.is_rational() {
                let w = (x.hi() - x.lo()) / &two;
                x.refine_in_place(&w);
            }
        }
    }
    simplest_between(a.hi(), b.lo())
}

/// Same root refined to an interval of width at most `width`.
pub fn refine(a: &AlgebraicTime, width: &Rat) -> AlgebraicTime {
    a.refine(width)
}

/// `10^-k` as a rational.
pub fn ten_pow_neg(k: u32) -> Rat {
    Rat::new(One::one(), num_bigint::BigInt::from(10u32).pow(k))
}
