use num_traits::{One, Zero};

use super::linalg::bareiss_det;
use super::{dot, Ball, GeomError, Point};
use crate::curve::RatCurve;
use crate::polyalg::{Interval, Poly, Rat, RatFn};

/// Linear system for the circumcenter of `p_0, ..., p_k`: with
/// `v_i = p_i - p_0`, `M[i][j] = v_i . v_j` and `rhs[i] = v_i . v_i / 2`, and
/// the circumcenter is `p_0 + sum_j lambda_j v_j` where `M lambda = rhs`.
#[derive(Clone, Debug)]
pub struct GramSystem {
    pub base: Point,
    pub edges: Vec<Vec<Rat>>,
    pub matrix: Vec<Vec<Rat>>,
    pub rhs: Vec<Rat>,
}

impl GramSystem {
    pub fn new(points: &[Point]) -> Result<Self, GeomError> {
        let base = points.first().ok_or(GeomError::Empty)?.clone();
        check_dims(points)?;
        let edges: Vec<Vec<Rat>> = points[1..].iter().map(|p| p.sub(&base)).collect();
        let matrix = edges
            .iter()
            .map(|a| edges.iter().map(|b| dot(a, b)).collect())
            .collect();
        let half = Rat::new(1.into(), 2.into());
        let rhs = edges.iter().map(|e| dot(e, e) * &half).collect();
        Ok(GramSystem {
            base,
            edges,
            matrix,
            rhs,
        })
    }

    pub fn det(&self) -> Rat {
        bareiss_det(self.matrix.clone())
    }

    /// Cramer's rule: `lambda_j = det(M_j) / det(M)` with `M_j` the matrix
    /// whose `j`-th column is replaced by `rhs`.
    pub fn solve(&self) -> Result<Vec<Rat>, GeomError> {
        let det = self.det();
        if det.is_zero() {
            return Err(GeomError::DegenerateSimplex);
        }
        Ok((0..self.rhs.len())
            .map(|j| bareiss_det(replace_column(&self.matrix, j, &self.rhs)) / &det)
            .collect())
    }
}

fn replace_column<T: Clone>(m: &[Vec<T>], j: usize, col: &[T]) -> Vec<Vec<T>> {
    m.iter()
        .zip(col)
        .map(|(row, c)| {
            let mut r = row.clone();
            r[j] = c.clone();
            r
        })
        .collect()
}

fn check_dims(points: &[Point]) -> Result<(), GeomError> {
    let d = points[0].dim();
    match points.iter().find(|p| p.dim() != d) {
        Some(p) => Err(GeomError::DimensionMismatch {
            expected: d,
            found: p.dim(),
        }),
        None => Ok(()),
    }
}

/// Circumball of affinely independent points: the unique ball centered in
/// their affine hull with all of them on its boundary.
pub fn circumcenter(points: &[Point]) -> Result<Ball, GeomError> {
    let sys = GramSystem::new(points)?;
    let lambda = sys.solve()?;
    let d = sys.base.dim();
    let mut offset = vec![Rat::zero(); d];
    for (l, e) in lambda.iter().zip(&sys.edges) {
        for (o, x) in offset.iter_mut().zip(e) {
            *o += l * x;
        }
    }
    let radius_sq = dot(&offset, &offset);
    let center = Point::new(
        sys.base
            .coords()
            .iter()
            .zip(offset)
            .map(|(b, o)| b + o)
            .collect(),
    );
    Ok(Ball { center, radius_sq })
}

/// Coefficients `(1 - sum lambda, lambda_1, ..., lambda_k)` expressing the
/// circumcenter as an affine combination of the input points. The
/// circumcenter lies in the convex hull iff all of them are non-negative.
pub fn cc_affine_coefficients(points: &[Point]) -> Result<Vec<Rat>, GeomError> {
    let lambda = GramSystem::new(points)?.solve()?;
    let first = lambda.iter().fold(Rat::one(), |acc, l| acc - l);
    let mut out = Vec::with_capacity(points.len());
    out.push(first);
    out.extend(lambda);
    Ok(out)
}

/// Dimension of the affine hull and the greedy lowest-index maximum affinely
/// independent subset (indices into `points`).
pub fn affine_rank(points: &[Point]) -> (usize, Vec<usize>) {
    let Some(base) = points.first() else {
        return (0, Vec::new());
    };
    // echelon rows with their pivot columns
    let mut basis: Vec<(usize, Vec<Rat>)> = Vec::new();
    let mut chosen = vec![0];
    for (i, p) in points.iter().enumerate().skip(1) {
        let mut v = p.sub(base);
        for (piv, row) in &basis {
            if !v[*piv].is_zero() {
                let f = &v[*piv] / &row[*piv];
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        if let Some(piv) = v.iter().position(|x| !x.is_zero()) {
            basis.push((piv, v));
            chosen.push(i);
        }
    }
    (basis.len(), chosen)
}

/// Circumcenter of static points and moving points as a rational curve, plus
/// the squared circumradius as a rational function.
#[derive(Clone, Debug)]
pub struct SymbolicCircumcenter {
    pub curve: RatCurve,
    pub radius_sq: RatFn,
    /// Affine coefficients `(1 - sum lambda, lambda_1, ..., lambda_k)` of
    /// the circumcenter with respect to the vertices, statics first.
    pub coefficients: Vec<RatFn>,
}

/// Circumcenter of `statics ∪ mobiles(t)` as rational functions of `t`, by
/// Cramer's rule on the Gram system with polynomial entries.
///
/// Rows are scaled by the lcm of their denominators before the fraction-free
/// determinants are taken; the scaling cancels in each ratio
/// `det(M_j) / det(M)`.
pub fn circumcenter_symbolic(
    statics: &[Point],
    mobiles: &[RatCurve],
    domain: &Interval,
) -> Result<SymbolicCircumcenter, GeomError> {
    let mut verts: Vec<Vec<RatFn>> = statics
        .iter()
        .map(|p| p.coords().iter().cloned().map(RatFn::constant).collect())
        .collect();
    verts.extend(mobiles.iter().map(|c| c.components().to_vec()));
    let base = verts.first().ok_or(GeomError::Empty)?.clone();
    let d = base.len();
    if let Some(v) = verts.iter().find(|v| v.len() != d) {
        return Err(GeomError::DimensionMismatch {
            expected: d,
            found: v.len(),
        });
    }
    let edges: Vec<Vec<RatFn>> = verts[1..]
        .iter()
        .map(|v| v.iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    let k = edges.len();
    let half = RatFn::constant(Rat::new(1.into(), 2.into()));
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(k);
    let mut rhs: Vec<Poly> = Vec::with_capacity(k);
    for a in &edges {
        let mut entries: Vec<RatFn> = edges.iter().map(|b| rat_dot(a, b)).collect();
        entries.push(&rat_dot(a, a) * &half);
        let l = entries
            .iter()
            .fold(Poly::one(), |acc, e| lcm(&acc, e.den()));
        let mut polys: Vec<Poly> = entries
            .iter()
            .map(|e| &e.num().clone() * &l.exact_div(e.den()).unwrap())
            .collect();
        rhs.push(polys.pop().unwrap());
        rows.push(polys);
    }
    let det = if k == 0 {
        Poly::one()
    } else {
        bareiss_det(rows.clone())
    };
    if det.is_zero() {
        return Err(GeomError::IdenticallyDegenerate);
    }
    let lambda: Vec<RatFn> = (0..k)
        .map(|j| RatFn::new(bareiss_det(replace_column(&rows, j, &rhs)), det.clone()))
        .collect();
    let mut offset = vec![RatFn::zero(); d];
    for (l, e) in lambda.iter().zip(&edges) {
        for (o, x) in offset.iter_mut().zip(e) {
            *o = &*o + &(l * x);
        }
    }
    let radius_sq = rat_dot(&offset, &offset);
    let comps = base.iter().zip(&offset).map(|(b, o)| b + o).collect();
    let first = lambda.iter().fold(RatFn::one(), |acc, l| &acc - l);
    let mut coefficients = Vec::with_capacity(k + 1);
    coefficients.push(first);
    coefficients.extend(lambda);
    Ok(SymbolicCircumcenter {
        curve: RatCurve::new_unchecked(comps, domain.clone()),
        radius_sq,
        coefficients,
    })
}

fn rat_dot(a: &[RatFn], b: &[RatFn]) -> RatFn {
    a.iter()
        .zip(b)
        .fold(RatFn::zero(), |acc, (x, y)| &acc + &(x * y))
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    if b.is_constant() {
        return a.clone();
    }
    let g = Poly::gcd(a, b);
    (a * &b.exact_div(&g).unwrap()).monic()
}
