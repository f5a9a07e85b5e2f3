//! Invariant bilinear forms and the adjoint/coadjoint correspondence.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{frac, int, signature, Matrix, Rational, RowReducer, Subspace};
use crate::linalg::reduce::sparse_from_terms;

/// A bilinear form given by its Gram matrix on the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceViolation {
    /// `(x, y, z)` basis indices.
    pub triple: (usize, usize, usize),
    /// `φ([x,y],z) + φ(y,[x,z])`.
    pub value: Rational,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Shape(format!(
                "Gram matrix is {} x {}",
                gram.rows(),
                gram.cols()
            )));
        }
        Ok(Self { gram })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            gram: Matrix::identity(n),
        }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let gv = self.gram.mul_vec(v);
        u.iter().zip(&gv).map(|(a, b)| a * b).sum()
    }

    pub fn transpose(&self) -> Self {
        Self {
            gram: self.gram.transpose(),
        }
    }

    pub fn symmetric_part(&self) -> Self {
        Self {
            gram: (&self.gram + &self.gram.transpose()).scale(&frac(1, 2)),
        }
    }

    pub fn skew_part(&self) -> Self {
        Self {
            gram: (&self.gram - &self.gram.transpose()).scale(&frac(1, 2)),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram.is_symmetric()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.is_invertible()
    }

    pub fn determinant(&self) -> Rational {
        self.gram.determinant()
    }

    pub fn signature(&self) -> Result<(usize, usize)> {
        signature(&self.gram)
    }

    /// All ordered basis triples with `φ([x,y],z) + φ(y,[x,z]) ≠ 0`.
    pub fn check_invariance(&self, g: &LieAlgebra) -> Vec<InvarianceViolation> {
        let n = g.dim();
        assert_eq!(self.dim(), n, "form and algebra dimensions differ");
        let mut bad = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut value = Rational::zero();
                    for (l, c) in g.structure(x, y).iter().enumerate() {
                        if !c.is_zero() {
                            value += c * &self.gram[(l, z)];
                        }
                    }
                    for (l, c) in g.structure(x, z).iter().enumerate() {
                        if !c.is_zero() {
                            value += c * &self.gram[(y, l)];
                        }
                    }
                    if !value.is_zero() {
                        bad.push(InvarianceViolation {
                            triple: (x, y, z),
                            value,
                        });
                    }
                }
            }
        }
        bad
    }

    pub fn is_invariant(&self, g: &LieAlgebra) -> bool {
        self.check_invariance(g).is_empty()
    }

    /// `{v : φ(v, s) = 0}` for nondegenerate `φ`.
    pub fn orthogonal_complement(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        if !self.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        let mut red = RowReducer::new(self.dim());
        for w in s.basis() {
            red.push_dense(&self.gram.mul_vec(w));
        }
        Ok(red.null_space())
    }

    /// Whether the restriction of the form to `s` is nondegenerate.
    pub fn is_nondegenerate_on(&self, s: &Subspace) -> bool {
        let k = s.dim();
        let b = s.basis();
        Matrix::from_fn(k, k, |i, j| self.eval(&b[i], &b[j])).is_invertible()
    }

    /// The map `x ↦ b(x, ·)` into the dual space, with the module-map check
    /// `ψ([x,y]) = -ψ(y) ∘ ad x` on every basis pair.
    pub fn delta_map(&self, g: &LieAlgebra) -> Result<DeltaMap> {
        let bad = self.check_invariance(g);
        if !bad.is_empty() {
            return Err(Error::NotInvariant(bad.into_iter().map(|v| v.triple).collect()));
        }
        let n = g.dim();
        let psi = self.gram.transpose();
        let mut module_violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = psi.mul_vec(g.structure(i, j));
                let rhs: Vec<Rational> = (0..n)
                    .map(|k| {
                        let t: Rational = g
                            .structure(i, k)
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(l, c)| &self.gram[(j, l)] * c)
                            .sum();
                        -t
                    })
                    .collect();
                if lhs != rhs {
                    module_violations.push((i, j));
                }
            }
        }
        Ok(DeltaMap {
            bijective: psi.is_invertible(),
            matrix: psi,
            module_violations,
        })
    }
}

/// The linear map `ψ_b : g → g*`; column `i` is `ψ_b(e_i)` in the dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMap {
    pub matrix: Matrix,
    pub module_violations: Vec<(usize, usize)>,
    pub bijective: bool,
}

impl DeltaMap {
    pub fn is_module_map(&self) -> bool {
        self.module_violations.is_empty()
    }

    /// `b_ψ(x, y) = ψ(x)(y)`.
    pub fn reconstruct(&self) -> BilinearForm {
        BilinearForm {
            gram: self.matrix.transpose(),
        }
    }
}

/// The space `B_inv(g)` with its symmetric and skew-symmetric parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFormSpace {
    n: usize,
    space: Subspace,
    sym: Subspace,
    skew: Subspace,
}

impl InvariantFormSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn sym_dim(&self) -> usize {
        self.sym.dim()
    }

    pub fn skew_dim(&self) -> usize {
        self.skew.dim()
    }

    /// Flattened Gram matrices, as a subspace of `K^{n²}`.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    fn forms(&self, s: &Subspace) -> Vec<BilinearForm> {
        s.basis()
            .iter()
            .map(|v| BilinearForm {
                gram: Matrix::from_flat(self.n, v),
            })
            .collect()
    }

    pub fn basis(&self) -> Vec<BilinearForm> {
        self.forms(&self.space)
    }

    pub fn sym_basis(&self) -> Vec<BilinearForm> {
        self.forms(&self.sym)
    }

    pub fn skew_basis(&self) -> Vec<BilinearForm> {
        self.forms(&self.skew)
    }

    pub fn contains(&self, form: &BilinearForm) -> bool {
        self.space
            .contains(&form.gram.flatten())
            .expect("form dimension matches")
    }

    /// A nondegenerate symmetric invariant form, if one exists.
    ///
    /// The determinant of a generic combination `Σ c_i S_i` has degree at
    /// most `n` in each `c_i`, so it vanishes identically iff it vanishes on
    /// the grid `{0..=n}^k`. A vector in every radical settles the question
    /// immediately.
    pub fn find_nondegenerate_symmetric(&self) -> Option<BilinearForm> {
        let sym = self.sym_basis();
        let k = sym.len();
        if k == 0 {
            return (self.n == 0).then(|| BilinearForm::identity(0));
        }
        let mut red = RowReducer::new(self.n);
        for f in &sym {
            for r in 0..self.n {
                red.push_dense(f.gram.row(r));
            }
        }
        if red.rank() < self.n {
            return None;
        }
        let combine = |coeffs: &[i64]| {
            let mut g = Matrix::zeros(self.n, self.n);
            for (c, f) in coeffs.iter().zip(&sym) {
                if *c != 0 {
                    g = &g + &f.gram.scale(&int(*c));
                }
            }
            BilinearForm { gram: g }
        };
        let mut seeds: Vec<Vec<i64>> = (0..k)
            .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
            .collect();
        seeds.push(vec![1; k]);
        for s in seeds {
            let f = combine(&s);
            if f.is_nondegenerate() {
                return Some(f);
            }
        }
        let top = self.n as i64;
        let mut point = vec![0i64; k];
        loop {
            let f = combine(&point);
            if f.is_nondegenerate() {
                return Some(f);
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return None;
                }
                if point[pos] < top {
                    point[pos] += 1;
                    break;
                }
                point[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// Solves `φ([e_x,e_y],e_z) + φ(e_y,[e_x,e_z]) = 0` over all ordered triples.
pub fn invariant_forms(g: &LieAlgebra) -> InvariantFormSpace {
    let n = g.dim();
    let mut red = RowReducer::new(n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let terms = g
                    .structure(x, y)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(l, c)| (l * n + z, c.clone()))
                    .chain(
                        g.structure(x, z)
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(l, c)| (y * n + l, c.clone())),
                    );
                let row = sparse_from_terms(terms);
                if !row.is_empty() {
                    red.push(row);
                }
            }
        }
    }
    let space = red.null_space();
    let part = |f: fn(&BilinearForm) -> BilinearForm| {
        Subspace::span(
            n * n,
            space
                .basis()
                .iter()
                .map(|v| f(&BilinearForm { gram: Matrix::from_flat(n, v) }).gram.flatten()),
        )
    };
    let sym = part(BilinearForm::symmetric_part);
    let skew = part(BilinearForm::skew_part);
    InvariantFormSpace { n, space, sym, skew }
}

pub fn metric_dimension(g: &LieAlgebra) -> usize {
    invariant_forms(g).dim()
}

/// Killing form as a [`BilinearForm`].
pub fn killing_form(g: &LieAlgebra) -> BilinearForm {
    BilinearForm {
        gram: g.killing_matrix(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h3() -> LieAlgebra {
        let labels = ["u1", "u2", "z"].map(String::from).to_vec();
        LieAlgebra::from_brackets(labels, &[(0, 1, vec![int(0), int(0), int(1)])]).unwrap()
    }

    #[test]
    fn abelian_forms_are_everything() {
        for n in 1..4 {
            let s = invariant_forms(&LieAlgebra::abelian(n));
            assert_eq!(s.dim(), n * n);
            assert_eq!(s.sym_dim(), n * (n + 1) / 2);
            assert_eq!(s.skew_dim(), n * (n - 1) / 2);
        }
        let s = invariant_forms(&LieAlgebra::abelian(2));
        assert!(s.find_nondegenerate_symmetric().unwrap().is_nondegenerate());
    }

    #[test]
    fn h3_forms_have_z_in_radical() {
        let g = h3();
        let s = invariant_forms(&g);
        assert_eq!(s.dim(), 4);
        assert_eq!((s.sym_dim(), s.skew_dim()), (3, 1));
        for f in s.basis() {
            for i in 0..3 {
                assert!(f.gram()[(2, i)].is_zero() && f.gram()[(i, 2)].is_zero());
            }
            assert!(f.is_invariant(&g));
            assert!(!f.delta_map(&g).unwrap().bijective);
        }
        assert!(s.find_nondegenerate_symmetric().is_none());
    }

    #[test]
    fn degenerate_complement_rejected() {
        let f = BilinearForm::new(Matrix::zeros(2, 2)).unwrap();
        assert_eq!(
            f.orthogonal_complement(&Subspace::full(2)),
            Err(Error::DegenerateForm)
        );
        let id = BilinearForm::identity(2);
        assert!(id.orthogonal_complement(&Subspace::full(2)).unwrap().is_zero());
    }

    #[test]
    fn delta_rejects_non_invariant() {
        let g = h3();
        let f = BilinearForm::identity(3);
        assert!(matches!(f.delta_map(&g), Err(Error::NotInvariant(_))));
    }
}
