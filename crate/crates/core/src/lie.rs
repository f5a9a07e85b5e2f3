//! Finite-dimensional Lie algebras given by structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix, Rational, RowReducer, Subspace};

/// A Lie algebra over the rationals: `c[i][j]` holds the coordinates of
/// `[e_i, e_j]`. Both `c[i][j]` and `c[j][i]` are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    c: Vec<Vec<Vec<Rational>>>,
}

/// A basis triple on which the Jacobi identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub value: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    pub subspace: Subspace,
    pub is_ideal: bool,
    /// `(i, v)` with `[e_i, v]` outside the subspace, `v` a basis vector of it.
    pub witnesses: Vec<(usize, Vec<Rational>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSummary {
    pub dim_g2: usize,
    pub dim_center: usize,
    pub local: bool,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn new(labels: Vec<String>, c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let g = Self::new_unchecked_jacobi(labels, c)?;
        let bad = g.check_jacobi();
        if !bad.is_empty() {
            return Err(Error::Jacobi(bad.into_iter().map(|v| v.triple).collect()));
        }
        Ok(g)
    }

    /// Validates shape and antisymmetry only. Used to inspect tables that
    /// are not Lie algebras.
    pub fn new_unchecked_jacobi(labels: Vec<String>, c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = labels.len();
        if c.len() != n || c.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(Error::Shape(format!("structure tensor must be {n} x {n} x {n}")));
        }
        for i in 0..n {
            for j in i..n {
                let anti = c[i][j].iter().zip(&c[j][i]).all(|(a, b)| a == &-b);
                if !anti {
                    return Err(Error::Antisymmetry { i, j });
                }
            }
        }
        Ok(Self { labels, c })
    }

    /// Builds from the brackets `[e_i, e_j] = v` for `i < j`; unlisted pairs
    /// are zero.
    pub fn from_brackets(labels: Vec<String>, brackets: &[(usize, usize, Vec<Rational>)]) -> Result<Self> {
        let c = Self::table_from_brackets(labels.len(), brackets)?;
        Self::new(labels, c)
    }

    fn table_from_brackets(
        n: usize,
        brackets: &[(usize, usize, Vec<Rational>)],
    ) -> Result<Vec<Vec<Vec<Rational>>>> {
        let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= j || j >= n {
                return Err(Error::Shape(format!("bracket pair ({i}, {j}) must satisfy i < j < {n}")));
            }
            if v.len() != n {
                return Err(Error::Shape(format!("bracket ({i}, {j}) has {} coordinates, expected {n}", v.len())));
            }
            c[i][j] = v.clone();
            c[j][i] = v.iter().map(|x| -x).collect();
        }
        Ok(c)
    }

    pub fn abelian(n: usize) -> Self {
        Self {
            labels: (1..=n).map(|i| format!("e{i}")).collect(),
            c: vec![vec![vec![Rational::zero(); n]; n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim(), "label count must equal dimension");
        self.labels = labels;
        self
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Rational] {
        &self.c[i][j]
    }

    pub fn structure_tensor(&self) -> &[Vec<Vec<Rational>>] {
        &self.c
    }

    /// Nonzero `(i, j, [e_i, e_j])` with `i < j`.
    pub fn brackets(&self) -> Vec<(usize, usize, Vec<Rational>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.c[i][j].iter().any(|x| !x.is_zero()) {
                    out.push((i, j, self.c[i][j].clone()));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().flatten().all(Zero::is_zero)
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        assert!(u.len() == n && v.len() == n, "vectors must live in the algebra");
        let mut out = vec![Rational::zero(); n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// `[e_i, v]`.
    pub fn bracket_basis(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        self.bracket(&unit_vector(self.dim(), i), v)
    }

    /// Matrix of `ad e_i`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |r, col| self.c[i][col][r].clone())
    }

    /// Matrix of `ad v`.
    pub fn ad_vector(&self, v: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, a) in v.iter().enumerate() {
            if !a.is_zero() {
                m = &m + &self.ad(i).scale(a);
            }
        }
        m
    }

    /// `J(e_i, e_j, e_k) = [[e_i, e_j], e_k] + [[e_k, e_i], e_j] + [[e_j, e_k], e_i]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (a, b, last) in [(i, j, k), (k, i, j), (j, k, i)] {
            for (l, x) in self.c[a][b].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&self.c[l][last]) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
        }
        out
    }

    /// All triples `i < j < k` on which the Jacobi identity fails.
    pub fn check_jacobi(&self) -> Vec<JacobiViolation> {
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let value = self.jacobiator(i, j, k);
                    if value.iter().any(|x| !x.is_zero()) {
                        bad.push(JacobiViolation {
                            triple: (i, j, k),
                            value,
                        });
                    }
                }
            }
        }
        bad
    }

    fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            })
        }
    }

    /// `[a, b]` as a subspace.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_ambient(a)?;
        self.check_ambient(b)?;
        let mut products = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                products.push(self.bracket(x, y));
            }
        }
        Ok(Subspace::span(self.dim(), products))
    }

    /// The smallest ideal containing `s`.
    pub fn ideal_generated(&self, s: &Subspace) -> Result<Subspace> {
        let g = self.full();
        let mut ideal = s.clone();
        loop {
            let next = ideal.sum(&self.bracket_subspaces(&g, &ideal)?)?;
            if next == ideal {
                return Ok(ideal);
            }
            ideal = next;
        }
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// `[g, g]`.
    pub fn derived_algebra(&self) -> Subspace {
        let n = self.dim();
        let mut red = RowReducer::new(n);
        for i in 0..n {
            for j in i + 1..n {
                red.push_dense(&self.c[i][j]);
            }
        }
        Subspace::span(n, red.into_rref())
    }

    /// `D_0 = g`, `D_{k+1} = [D_k, D_k]`, up to and including the first
    /// repeated term's predecessor (the last entry is the stable term).
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.full()];
        loop {
            let last = series.last().expect("series is nonempty");
            let next = self.bracket_subspaces(last, last).expect("same ambient");
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// `C_1 = g`, `C_{k+1} = [g, C_k]`, until stable.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let g = self.full();
        let mut series = vec![g.clone()];
        loop {
            let last = series.last().expect("series is nonempty");
            let next = self.bracket_subspaces(&g, last).expect("same ambient");
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// `Z_0 = 0`, `Z_{k+1} = {v : [g, v] ⊆ Z_k}`, until stable.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::zero(self.dim())];
        loop {
            let last = series.last().expect("series is nonempty");
            let next = self.centralizer_mod(last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// `{v : [e_i, v] ∈ s for all i}`.
    fn centralizer_mod(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let ann = s.annihilator();
        let mut red = RowReducer::new(n);
        // Row for (i, f): v ↦ f([e_i, v]) = Σ_j v_j f(c[i][j]).
        for i in 0..n {
            for f in ann.basis() {
                let row: Vec<Rational> = (0..n)
                    .map(|j| {
                        self.c[i][j]
                            .iter()
                            .zip(f)
                            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                            .map(|(a, b)| a * b)
                            .sum()
                    })
                    .collect();
                red.push_dense(&row);
            }
        }
        red.null_space()
    }

    pub fn center(&self) -> Subspace {
        self.centralizer_mod(&Subspace::zero(self.dim()))
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<IdealReport> {
        self.check_ambient(s)?;
        let mut witnesses = Vec::new();
        for i in 0..self.dim() {
            for v in s.basis() {
                let w = self.bracket_basis(i, v);
                if !s.contains(&w)? {
                    witnesses.push((i, v.clone()));
                }
            }
        }
        Ok(IdealReport {
            subspace: s.clone(),
            is_ideal: witnesses.is_empty(),
            witnesses,
        })
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.check_ambient(s)?;
        for (a, x) in s.basis().iter().enumerate() {
            for y in &s.basis()[a + 1..] {
                if !s.contains(&self.bracket(x, y))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `dim g²`, `dim Z(g)` and the locality flag. An ideal containing `g²`
    /// is any subspace containing it, so `g²` is the only maximal ideal
    /// above itself exactly when it has codimension one. For solvable
    /// algebras every maximal ideal contains `g²`, so the flag is exact
    /// there.
    pub fn quotient_dims_sanity(&self) -> StructureSummary {
        let dim_g2 = self.derived_algebra().dim();
        StructureSummary {
            dim_g2,
            dim_center: self.center().dim(),
            local: self.dim() == dim_g2 + 1,
        }
    }

    /// The subalgebra spanned by `s`, in the coordinates of its canonical
    /// basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        self.check_ambient(s)?;
        let k = s.dim();
        let mut c = vec![vec![vec![Rational::zero(); k]; k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let w = self.bracket(&s.basis()[a], &s.basis()[b]);
                let coords = s.coordinates(&w)?.ok_or(Error::NotClosed { i: a, j: b })?;
                c[b][a] = coords.iter().map(|x| -x).collect();
                c[a][b] = coords;
            }
        }
        let labels = (1..=k).map(|i| format!("s{i}")).collect();
        LieAlgebra::new(labels, c)
    }

    /// Whether `map` (column `j` = image of `e_j` in `target`) preserves
    /// brackets on all basis pairs.
    pub fn is_homomorphism(&self, target: &LieAlgebra, map: &Matrix) -> bool {
        let n = self.dim();
        if map.cols() != n || map.rows() != target.dim() {
            return false;
        }
        let images: Vec<Vec<Rational>> = (0..n).map(|j| map.column(j)).collect();
        (0..n).all(|i| {
            (i + 1..n).all(|j| map.mul_vec(&self.c[i][j]) == target.bracket(&images[i], &images[j]))
        })
    }

    /// Killing form `κ(e_i, e_j) = tr(ad e_i ad e_j)`.
    pub fn killing_matrix(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad(i)).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        k
    }

    /// Cartan's criterion.
    pub fn is_semisimple(&self) -> bool {
        self.killing_matrix().is_invertible()
    }

    /// `g = Z(g) ⊕ g²` with `g²` semisimple.
    pub fn is_reductive(&self) -> bool {
        let z = self.center();
        let g2 = self.derived_algebra();
        if z.dim() + g2.dim() != self.dim() || !z.intersection(&g2).expect("same ambient").is_zero() {
            return false;
        }
        self.subalgebra(&g2).expect("g² is a subalgebra").is_semisimple()
    }

    /// Whether the algebra is of Heisenberg type: one-dimensional center
    /// equal to the derived algebra.
    pub fn is_heisenberg_type(&self) -> bool {
        let z = self.center();
        z.dim() == 1 && z == self.derived_algebra()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn h3() -> LieAlgebra {
        let labels = ["u1", "u2", "z"].map(String::from).to_vec();
        LieAlgebra::from_brackets(labels, &[(0, 1, vec![int(0), int(0), int(1)])]).unwrap()
    }

    #[test]
    fn abelian_is_trivial() {
        let g = LieAlgebra::abelian(3);
        assert!(g.check_jacobi().is_empty());
        assert!(g.derived_algebra().is_zero());
        assert_eq!(g.center(), Subspace::full(3));
        assert_eq!(g.derived_series().len(), 2);
        assert!(g.is_solvable() && g.is_nilpotent() && g.is_reductive());
        let s = LieAlgebra::abelian(2).quotient_dims_sanity();
        assert_eq!(s, StructureSummary { dim_g2: 0, dim_center: 2, local: false });
    }

    #[test]
    fn h3_structure() {
        let g = h3();
        assert!(g.check_jacobi().is_empty());
        let z = Subspace::coordinate(3, &[2]);
        assert_eq!(g.derived_algebra(), z);
        assert_eq!(g.center(), z);
        assert!(g.is_solvable() && g.is_nilpotent());
        assert!(g.is_heisenberg_type());
        assert_eq!(g.upper_central_series().last().unwrap(), &Subspace::full(3));
    }

    #[test]
    fn mutated_h3_breaks_jacobi() {
        let g = h3();
        let mut c = g.structure_tensor().to_vec();
        c[0][2] = vec![int(1), int(0), int(0)];
        c[2][0] = vec![int(-1), int(0), int(0)];
        let bad = LieAlgebra::new_unchecked_jacobi(g.labels().to_vec(), c.clone()).unwrap();
        let v = bad.check_jacobi();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].triple, (0, 1, 2));
        // [[u1,u2],z] + [[z,u1],u2] + [[u2,z],u1] = 0 + [-u1, u2] + 0 = -z
        assert_eq!(v[0].value, vec![int(0), int(0), int(-1)]);
        assert!(matches!(LieAlgebra::new(g.labels().to_vec(), c), Err(Error::Jacobi(_))));
    }

    #[test]
    fn antisymmetry_enforced() {
        let mut c = LieAlgebra::abelian(2).structure_tensor().to_vec();
        c[0][1] = vec![int(1), int(0)];
        let labels = vec!["a".into(), "b".into()];
        assert_eq!(
            LieAlgebra::new(labels, c),
            Err(Error::Antisymmetry { i: 0, j: 1 })
        );
    }

    #[test]
    fn bad_bracket_pairs_rejected() {
        let labels = vec!["a".into(), "b".into()];
        assert!(LieAlgebra::from_brackets(labels.clone(), &[(1, 0, vec![int(1), int(0)])]).is_err());
        assert!(LieAlgebra::from_brackets(labels, &[(0, 1, vec![int(1)])]).is_err());
    }

    #[test]
    fn ad_is_bracket() {
        let g = h3();
        assert_eq!(g.ad(0).column(1), vec![int(0), int(0), int(1)]);
        assert_eq!(g.ad(1).column(0), vec![int(0), int(0), int(-1)]);
    }
}
