use num_traits::Zero;

use super::rational::Rational;
use super::reduce::RowReducer;
use crate::error::{Error, Result};

/// A subspace of `K^n` held by the reduced row-echelon form of a basis.
///
/// The representation is canonical: two spans of the same space compare
/// equal with `==`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(
            ambient_dim,
            (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)),
        )
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator,
        I::Item: AsRef<[Rational]>,
    {
        let mut red = RowReducer::new(ambient_dim);
        for v in vectors {
            red.push_dense(v.as_ref());
        }
        Self {
            ambient_dim,
            basis: red.into_rref(),
        }
    }

    /// Span of a subset of the standard basis.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        Self::span(ambient_dim, indices.iter().map(|&i| unit_vector(ambient_dim, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero"))
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n == self.ambient_dim {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected: self.ambient_dim,
                found: n,
            })
        }
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` lies
    /// outside the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        self.check_ambient(v.len())?;
        let coords: Vec<Rational> = self.pivots().map(|p| v[p].clone()).collect();
        let mut rebuilt = vec![Rational::zero(); self.ambient_dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rebuilt.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r += c * x;
                }
            }
        }
        Ok((rebuilt.as_slice() == v).then_some(coords))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Linear combination of the canonical basis.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim(), "coordinate count must match dimension");
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        Ok(Self::span(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis),
        ))
    }

    /// Vectors annihilated by every basis vector under the standard dot
    /// product.
    pub fn annihilator(&self) -> Subspace {
        let mut red = RowReducer::new(self.ambient_dim);
        for row in &self.basis {
            red.push_dense(row);
        }
        red.null_space()
    }

    /// Intersection computed as the kernel of the stacked annihilator
    /// equations.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        let mut red = RowReducer::new(self.ambient_dim);
        for row in self.annihilator().basis.iter().chain(other.annihilator().basis.iter()) {
            red.push_dense(row);
        }
        Ok(red.null_space())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient_dim)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = num_traits::One::one();
    v
}
