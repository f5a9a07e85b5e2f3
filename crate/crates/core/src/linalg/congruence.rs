use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::{sign, Rational};
use crate::error::{Error, Result};

/// Result of diagonalising a symmetric matrix by congruence: `Sᵀ G S = D`.
#[derive(Clone, Debug, PartialEq)]
pub struct Congruence {
    pub diagonal: Vec<Rational>,
    pub transform: Matrix,
    pub positive: usize,
    pub negative: usize,
}

impl Congruence {
    pub fn signature(&self) -> (usize, usize) {
        (self.positive, self.negative)
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

fn swap(a: &mut Matrix, s: &mut Matrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for m in [&mut *a, &mut *s] {
        for r in 0..n {
            let t = m[(r, i)].clone();
            m[(r, i)] = m[(r, j)].clone();
            m[(r, j)] = t;
        }
    }
}

/// row_i += f row_j and col_i += f col_j on `a`; col_i += f col_j on `s`.
fn add_multiple(a: &mut Matrix, s: &mut Matrix, i: usize, j: usize, f: &Rational) {
    let n = a.rows();
    for c in 0..n {
        let t = f * &a[(j, c)];
        a[(i, c)] += t;
    }
    for m in [&mut *a, &mut *s] {
        for r in 0..n {
            let t = f * &m[(r, j)];
            m[(r, i)] += t;
        }
    }
}

/// Symmetric Gaussian elimination. A zero diagonal pivot with a nonzero
/// off-diagonal entry `g[k][j]` is repaired by adding row/column `j` to
/// `k`, which leaves `2 g[k][j]` on the diagonal.
pub fn congruence_diagonalize(g: &Matrix) -> Result<Congruence> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    let mut a = g.clone();
    let mut s = Matrix::identity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap(&mut a, &mut s, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                add_multiple(&mut a, &mut s, k, j, &Rational::one());
            } else {
                continue;
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -(&a[(i, k)] / &pivot);
            add_multiple(&mut a, &mut s, i, k, &f);
        }
    }
    let diagonal: Vec<Rational> = (0..n).map(|i| a[(i, i)].clone()).collect();
    let positive = diagonal.iter().filter(|d| sign(d) > 0).count();
    let negative = diagonal.iter().filter(|d| sign(d) < 0).count();
    Ok(Congruence {
        diagonal,
        transform: s,
        positive,
        negative,
    })
}

pub fn signature(g: &Matrix) -> Result<(usize, usize)> {
    Ok(congruence_diagonalize(g)?.signature())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn check(g: &Matrix) -> Congruence {
        let c = congruence_diagonalize(g).unwrap();
        let d = &(&c.transform.transpose() * g) * &c.transform;
        assert_eq!(d, Matrix::diagonal(&c.diagonal));
        assert!(c.transform.is_invertible());
        c
    }

    #[test]
    fn identity_form() {
        let c = check(&Matrix::identity(2));
        assert_eq!(c.diagonal, vec![int(1), int(1)]);
        assert_eq!(c.signature(), (2, 0));
    }

    #[test]
    fn hyperbolic_plane() {
        let c = check(&Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(c.signature(), (1, 1));
    }

    #[test]
    fn degenerate_and_zero_pivots() {
        let g = Matrix::from_ints(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, 0]]);
        let c = check(&g);
        assert_eq!(c.signature(), (1, 1));
        assert_eq!(c.rank(), 2);
        assert_eq!(check(&Matrix::zeros(3, 3)).signature(), (0, 0));
    }

    #[test]
    fn non_symmetric_rejected() {
        let g = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        assert_eq!(congruence_diagonalize(&g), Err(Error::NotSymmetric));
    }
}
