use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Poly, Rat};
use super::PolyError;

/// Univariate rational function `num / den` in canonical form: coprime
/// numerator and denominator, monic denominator, and `den == 1` whenever the
/// numerator is zero. Structural equality is therefore functional equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    /// Reduces `num / den`. Panics if `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFn::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFn { num, den }
    }

    pub fn zero() -> Self {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatFn {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn eval(&self, t: &Rat) -> Result<Rat, PolyError> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(PolyError::PoleAtSample { t: t.clone() });
        }
        Ok(self.num.eval(t) / d)
    }

    pub fn derivative(&self) -> RatFn {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFn::new(n, &self.den * &self.den)
    }

    pub fn try_div(&self, rhs: &RatFn) -> Result<RatFn, PolyError> {
        if rhs.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(RatFn::new(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn scale(&self, c: &Rat) -> RatFn {
        if c.is_zero() {
            return RatFn::zero();
        }
        RatFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Functional identity via the cross-multiplied polynomial
    /// `a.num * b.den - b.num * a.den == 0`.
    pub fn same_function(&self, other: &RatFn) -> bool {
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn::new(&self.num - &rhs.num, self.den.clone());
        }
        RatFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: RatFn) -> RatFn {
        &self + &rhs
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, rhs: RatFn) -> RatFn {
        &self - &rhs
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, rhs: RatFn) -> RatFn {
        &self * &rhs
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::{int, rat};
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn common_factor_cancels() {
        let t = RatFn::from_poly(p(&[0, 1]));
        let other = RatFn::new(p(&[0, 4, 1]), p(&[4, 1]));
        assert!(t.same_function(&other));
        assert_eq!(t, other);
    }

    #[test]
    fn middle_branch_values() {
        // first coordinate t^2 / (2(t+4)) has zero slope at t = 0
        let x = RatFn::new(p(&[0, 0, 1]), p(&[8, 2]));
        assert_eq!(x.derivative().eval(&int(0)).unwrap(), int(0));
        let y = RatFn::new(p(&[16, 4, -1]), p(&[8, 2]));
        assert_eq!(y.eval(&int(2)).unwrap(), rat(5, 3));
    }

    #[test]
    fn pole_is_reported() {
        let f = RatFn::new(p(&[1]), p(&[-1, 1]));
        assert!(matches!(
            f.eval(&int(1)),
            Err(PolyError::PoleAtSample { .. })
        ));
    }

    #[test]
    fn division_by_zero_function() {
        let f = RatFn::one();
        assert!(matches!(
            f.try_div(&RatFn::zero()),
            Err(PolyError::DivisionByZero)
        ));
    }

    #[test]
    fn arithmetic_identities() {
        let a = RatFn::new(p(&[1, 2]), p(&[3, 0, 1]));
        let b = RatFn::new(p(&[-1, 0, 5]), p(&[1, 1]));
        let s = &(&a + &b) - &b;
        assert_eq!(s, a);
        let q = (&a * &b).try_div(&b).unwrap();
        assert_eq!(q, a);
        assert!((&a - &a).is_zero());
    }
}
