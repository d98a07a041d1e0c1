use num_traits::{One, Zero};

use crate::polyalg::{Poly, Rat};

/// Commutative ring with exact division, enough for fraction-free
/// elimination.
pub trait ExactRing: Clone {
    fn r_zero() -> Self;
    fn r_one() -> Self;
    fn r_is_zero(&self) -> bool;
    fn r_add(&self, rhs: &Self) -> Self;
    fn r_sub(&self, rhs: &Self) -> Self;
    fn r_mul(&self, rhs: &Self) -> Self;
    fn r_neg(&self) -> Self;
    /// `self / rhs`, where the caller knows the division is exact.
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl ExactRing for Rat {
    fn r_zero() -> Self {
        Zero::zero()
    }
    fn r_one() -> Self {
        One::one()
    }
    fn r_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn r_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn r_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn r_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn r_neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl ExactRing for Poly {
    fn r_zero() -> Self {
        Poly::zero()
    }
    fn r_one() -> Self {
        Poly::one()
    }
    fn r_is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn r_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn r_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn r_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn r_neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.exact_div(rhs)
            .expect("Bareiss step must divide exactly")
    }
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn bareiss_det<R: ExactRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::r_one();
    }
    let mut negate = false;
    let mut prev = R::r_one();
    for k in 0..n - 1 {
        if m[k][k].r_is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].r_is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::r_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].r_mul(&m[k][k]).r_sub(&m[i][k].r_mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.r_neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::int;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(bareiss_det(ints(&[&[2, 1], &[1, 3]])), int(5));
        assert_eq!(bareiss_det(ints(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(
            bareiss_det(ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])),
            int(0)
        );
        assert_eq!(
            bareiss_det(ints(&[&[0, 2, 1], &[3, 0, 1], &[1, 1, 0]])),
            int(5)
        );
    }

    #[test]
    fn polynomial_determinant() {
        // [[8, 8 - 2t], [8 - 2t, t^2 + 16]] -> 4 (t + 4)^2
        let m = vec![
            vec![Poly::from_ints(&[8]), Poly::from_ints(&[8, -2])],
            vec![Poly::from_ints(&[8, -2]), Poly::from_ints(&[16, 0, 1])],
        ];
        assert_eq!(bareiss_det(m), Poly::from_ints(&[64, 32, 4]));
    }
}
