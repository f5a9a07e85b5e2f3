//! Derivation algebras and the analysis of linear Lie algebras.

use num_traits::Zero;

use crate::constructions::{heisenberg, oscillator, Oscillator, OscillatorSpec};
use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::lie::LieAlgebra;
use crate::linalg::reduce::sparse_from_terms;
use crate::linalg::{int, Matrix, Rational, RowReducer, Subspace};

/// A Lie subalgebra of `gl_n` with a re-checkable closure certificate.
///
/// The basis is the canonical echelon basis of the row-major flattenings,
/// so two equal subalgebras compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixLieAlgebra {
    n: usize,
    basis: Subspace,
    /// `certificate[a][b]` = coordinates of `[A_a, A_b]`.
    certificate: Vec<Vec<Vec<Rational>>>,
}

impl MatrixLieAlgebra {
    pub fn from_subspace(n: usize, basis: Subspace) -> Result<Self> {
        if basis.ambient_dim() != n * n {
            return Err(Error::AmbientMismatch {
                expected: n * n,
                found: basis.ambient_dim(),
            });
        }
        let mats: Vec<Matrix> = basis.basis().iter().map(|v| Matrix::from_flat(n, v)).collect();
        let k = mats.len();
        let mut certificate = vec![vec![vec![Rational::zero(); k]; k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let comm = mats[a].commutator(&mats[b]).flatten();
                let coords = basis.coordinates(&comm)?.ok_or(Error::NotClosed { i: a, j: b })?;
                certificate[b][a] = coords.iter().map(|x| -x).collect();
                certificate[a][b] = coords;
            }
        }
        Ok(Self {
            n,
            basis,
            certificate,
        })
    }

    pub fn span(n: usize, mats: &[Matrix]) -> Result<Self> {
        if let Some(m) = mats.iter().find(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Shape(format!(
                "expected {n} x {n} matrices, found {} x {}",
                m.rows(),
                m.cols()
            )));
        }
        Self::from_subspace(n, Subspace::span(n * n, mats.iter().map(Matrix::flatten)))
    }

    /// Rebuilds from serialized parts and re-checks the certificate.
    pub fn from_parts(n: usize, mats: &[Matrix], certificate: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let alg = Self::span(n, mats)?;
        if alg.dim() != mats.len() || alg.matrices() != mats {
            return Err(Error::Parse(
                "matrix basis is not in canonical echelon form".to_string(),
            ));
        }
        if alg.certificate != certificate {
            return Err(Error::Parse("closure certificate does not match".to_string()));
        }
        Ok(alg)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.basis
    }

    pub fn certificate(&self) -> &[Vec<Vec<Rational>>] {
        &self.certificate
    }

    pub fn matrix(&self, i: usize) -> Matrix {
        Matrix::from_flat(self.n, &self.basis.basis()[i])
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.matrix(i)).collect()
    }

    /// Recomputes every commutator and compares against the certificate.
    pub fn verify_certificate(&self) -> bool {
        let mats = self.matrices();
        let k = mats.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let expected = self.basis.combine(&self.certificate[a][b]);
                mats[a].commutator(&mats[b]).flatten() == expected
            })
        })
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.rows() == self.n && m.cols() == self.n && self.basis.contains(&m.flatten()).unwrap_or(false)
    }

    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Rational>> {
        self.basis.coordinates(&m.flatten()).ok().flatten()
    }

    /// The abstract Lie algebra whose structure constants are the
    /// certificate.
    pub fn to_lie_algebra(&self) -> LieAlgebra {
        let labels = (1..=self.dim()).map(|i| format!("A{i}")).collect();
        LieAlgebra::new(labels, self.certificate.clone())
            .expect("commutator brackets satisfy Jacobi")
    }

    /// `[L, L]`.
    pub fn derived(&self) -> MatrixLieAlgebra {
        let mats = self.matrices();
        let mut comms = Vec::new();
        for a in 0..mats.len() {
            for b in a + 1..mats.len() {
                comms.push(mats[a].commutator(&mats[b]));
            }
        }
        Self::span(self.n, &comms).expect("derived algebra is closed")
    }

    pub fn is_subalgebra_of(&self, other: &MatrixLieAlgebra) -> bool {
        self.n == other.n && self.basis.is_subspace_of(&other.basis).unwrap_or(false)
    }

    /// Intersection with a linear subspace of matrices, which must itself
    /// be closed.
    pub fn intersect(&self, s: &Subspace) -> Result<MatrixLieAlgebra> {
        Self::from_subspace(self.n, self.basis.intersection(s)?)
    }

    pub fn killing_form(&self) -> BilinearForm {
        crate::forms::killing_form(&self.to_lie_algebra())
    }

    pub fn is_semisimple(&self) -> bool {
        self.to_lie_algebra().is_semisimple()
    }

    pub fn is_abelian(&self) -> bool {
        self.certificate.iter().flatten().flatten().all(Zero::is_zero)
    }

    pub fn is_reductive(&self) -> bool {
        self.to_lie_algebra().is_reductive()
    }
}

fn push_derivation_equations(g: &LieAlgebra, red: &mut RowReducer) {
    let n = g.dim();
    let c = g.structure_tensor();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j], component k.
                let terms = c[i][j]
                    .iter()
                    .enumerate()
                    .map(|(l, x)| (k * n + l, x.clone()))
                    .chain((0..n).map(|r| (r * n + i, -&c[r][j][k])))
                    .chain((0..n).map(|r| (r * n + j, -&c[i][r][k])));
                let row = sparse_from_terms(terms);
                if !row.is_empty() {
                    red.push(row);
                }
            }
        }
    }
}

fn push_skew_equations(form: &BilinearForm, red: &mut RowReducer) {
    let n = form.dim();
    let gm = form.gram();
    for a in 0..n {
        for b in a..n {
            // (G D + Dᵀ G)[a][b]
            let terms = (0..n)
                .map(|r| (r * n + b, gm[(a, r)].clone()))
                .chain((0..n).map(|r| (r * n + a, gm[(r, b)].clone())));
            let row = sparse_from_terms(terms);
            if !row.is_empty() {
                red.push(row);
            }
        }
    }
}

/// `der g`: kernel of `D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j]`.
pub fn derivations(g: &LieAlgebra) -> MatrixLieAlgebra {
    let n = g.dim();
    let mut red = RowReducer::new(n * n);
    push_derivation_equations(g, &mut red);
    MatrixLieAlgebra::from_subspace(n, red.null_space()).expect("derivations are closed")
}

/// Whether `d` satisfies the derivation identity on all basis pairs.
pub fn is_derivation(g: &LieAlgebra, d: &Matrix) -> bool {
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return false;
    }
    let images: Vec<Vec<Rational>> = (0..n).map(|j| d.column(j)).collect();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let lhs = d.mul_vec(g.structure(i, j));
            let a = g.bracket(&images[i], &crate::linalg::unit_vector(n, j));
            let b = g.bracket(&crate::linalg::unit_vector(n, i), &images[j]);
            lhs.iter().zip(a.iter().zip(&b)).all(|(l, (x, y))| l == &(x + y))
        })
    })
}

/// Whether `φ(Dx, y) + φ(x, Dy) = 0`, i.e. `Dᵀ G + G D = 0`.
pub fn is_skew(form: &BilinearForm, d: &Matrix) -> bool {
    let g = form.gram();
    (&(&d.transpose() * g) + &(g * d)).is_zero()
}

pub fn inner_derivations(g: &LieAlgebra) -> MatrixLieAlgebra {
    let ads: Vec<Matrix> = (0..g.dim()).map(|i| g.ad(i)).collect();
    MatrixLieAlgebra::span(g.dim(), &ads).expect("inner derivations are closed")
}

/// `der_φ g` for a nondegenerate invariant form.
pub fn skew_derivations(g: &LieAlgebra, form: &BilinearForm) -> Result<MatrixLieAlgebra> {
    let n = g.dim();
    if form.dim() != n {
        return Err(Error::AmbientMismatch {
            expected: n,
            found: form.dim(),
        });
    }
    let bad = form.check_invariance(g);
    if !bad.is_empty() {
        return Err(Error::NotInvariant(bad.into_iter().map(|v| v.triple).collect()));
    }
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let mut red = RowReducer::new(n * n);
    push_derivation_equations(g, &mut red);
    push_skew_equations(form, &mut red);
    MatrixLieAlgebra::from_subspace(n, red.null_space())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationDims {
    pub der: usize,
    pub inner: usize,
    pub skew: Option<usize>,
    pub center: usize,
}

#[derive(Clone, Debug)]
pub struct DerivationProfile {
    pub der: MatrixLieAlgebra,
    pub inner: MatrixLieAlgebra,
    pub skew: Option<MatrixLieAlgebra>,
    pub dims: DerivationDims,
}

impl DerivationProfile {
    /// `inner ⊆ der`, `skew ⊆ der`, `dim inner = dim g - dim Z(g)`.
    pub fn is_consistent(&self, g: &LieAlgebra) -> bool {
        self.inner.is_subalgebra_of(&self.der)
            && self.skew.as_ref().is_none_or(|s| s.is_subalgebra_of(&self.der))
            && self.dims.inner + self.dims.center == g.dim()
    }
}

pub fn derivation_profile(g: &LieAlgebra, form: Option<&BilinearForm>) -> Result<DerivationProfile> {
    let der = derivations(g);
    let inner = inner_derivations(g);
    let skew = form.map(|f| skew_derivations(g, f)).transpose()?;
    let dims = DerivationDims {
        der: der.dim(),
        inner: inner.dim(),
        skew: skew.as_ref().map(MatrixLieAlgebra::dim),
        center: g.center().dim(),
    };
    Ok(DerivationProfile {
        der,
        inner,
        skew,
        dims,
    })
}

/// The block template of a derivation of `h_{2m+1}` in its standard basis
/// `u_1..u_m, u_{m+1}..u_{2m}, z`:
///
/// ```text
/// [ M + αI    P        0  ]
/// [ Q        -Mᵗ + αI  0  ]
/// [ c1ᵗ       c2ᵗ      2α ]
/// ```
/// with `P`, `Q` symmetric.
pub fn heisenberg_derivation_template(m: usize) -> Vec<Matrix> {
    let n = 2 * m + 1;
    let z = 2 * m;
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            let mut d = Matrix::unit(n, a, b);
            d[(m + b, m + a)] = int(-1);
            out.push(d);
        }
    }
    let mut alpha = Matrix::identity(n);
    alpha[(z, z)] = int(2);
    out.push(alpha);
    for a in 0..m {
        for b in a..m {
            let mut p = Matrix::unit(n, a, m + b);
            p[(b, m + a)] = int(1);
            out.push(p);
            let mut q = Matrix::unit(n, m + a, b);
            q[(m + b, a)] = int(1);
            out.push(q);
        }
    }
    for col in 0..2 * m {
        out.push(Matrix::unit(n, z, col));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeCheck {
    pub solver_dim: usize,
    pub template_dim: usize,
    /// Template matrices outside the solver span.
    pub template_residual: usize,
    /// Solver basis matrices outside the template span.
    pub solver_residual: usize,
}

impl ShapeCheck {
    pub fn matches(&self) -> bool {
        self.template_residual == 0 && self.solver_residual == 0
    }
}

fn compare_spans(solver: &MatrixLieAlgebra, template: &[Matrix]) -> ShapeCheck {
    let n = solver.n();
    let tspan = Subspace::span(n * n, template.iter().map(Matrix::flatten));
    ShapeCheck {
        solver_dim: solver.dim(),
        template_dim: tspan.dim(),
        template_residual: template.iter().filter(|t| !solver.contains(t)).count(),
        solver_residual: solver
            .subspace()
            .basis()
            .iter()
            .filter(|v| !tspan.contains(v).unwrap_or(false))
            .count(),
    }
}

/// Compares `der h_{2m+1}` from the solver with the block template.
pub fn heisenberg_derivation_shape_check(m: usize) -> Result<ShapeCheck> {
    let h = heisenberg(m)?;
    Ok(compare_spans(&derivations(&h), &heisenberg_derivation_template(m)))
}

/// Template for `der d_{2m+2}(1,…,1)` in the basis `δ, x_1..x_m, y_1..y_m, z`:
///
/// ```text
/// [ 0   0        0         0  ]
/// [ b   M + αI   P         0  ]
/// [ c  -P       -Mᵗ + αI   0  ]
/// [ β  -bᵗ      -cᵗ        2α ]
/// ```
/// with `M` skew and `P` symmetric. With `skew_only` the `α` and `β`
/// generators are dropped.
pub fn oscillator_derivation_template(m: usize, skew_only: bool) -> Vec<Matrix> {
    let n = 2 * m + 2;
    let x = |i: usize| 1 + i;
    let y = |i: usize| 1 + m + i;
    let z = n - 1;
    let mut out = Vec::new();
    for i in 0..m {
        let mut b = Matrix::unit(n, x(i), 0);
        b[(z, x(i))] = int(-1);
        out.push(b);
        let mut c = Matrix::unit(n, y(i), 0);
        c[(z, y(i))] = int(-1);
        out.push(c);
    }
    if !skew_only {
        out.push(Matrix::unit(n, z, 0));
        let mut alpha = Matrix::zeros(n, n);
        for i in 0..m {
            alpha[(x(i), x(i))] = int(1);
            alpha[(y(i), y(i))] = int(1);
        }
        alpha[(z, z)] = int(2);
        out.push(alpha);
    }
    for a in 0..m {
        for b in a + 1..m {
            let mut d = Matrix::zeros(n, n);
            d[(x(a), x(b))] = int(1);
            d[(x(b), x(a))] = int(-1);
            d[(y(a), y(b))] = int(1);
            d[(y(b), y(a))] = int(-1);
            out.push(d);
        }
    }
    for a in 0..m {
        for b in a..m {
            let mut d = Matrix::zeros(n, n);
            d[(x(a), y(b))] = int(1);
            d[(x(b), y(a))] = int(1);
            d[(y(a), x(b))] = int(-1);
            d[(y(b), x(a))] = int(-1);
            out.push(d);
        }
    }
    out
}

/// Compares the solver's `der` (or `der_φ`) of `d_{2m+2}(1,…,1)` with the
/// block template, after reordering to `δ, x.., y.., z`.
pub fn oscillator_derivation_shape_check(m: usize, skew_only: bool) -> Result<ShapeCheck> {
    let osc = oscillator(&OscillatorSpec::uniform(m)?)?;
    let g = osc.algebra();
    let solved = if skew_only {
        skew_derivations(g, osc.form())?
    } else {
        derivations(g)
    };
    let perm = osc.xy_order();
    let reordered: Vec<Matrix> = solved.matrices().iter().map(|d| d.permuted(&perm)).collect();
    let solved = MatrixLieAlgebra::span(g.dim(), &reordered)?;
    Ok(compare_spans(&solved, &oscillator_derivation_template(m, skew_only)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OscillatorClass {
    OI,
    OII,
    OIII,
}

impl OscillatorClass {
    pub fn predict(lambda: &[Rational]) -> Self {
        let distinct = lambda.windows(2).all(|w| w[0] != w[1]);
        let equal = lambda.windows(2).all(|w| w[0] == w[1]);
        if distinct {
            OscillatorClass::OI
        } else if equal {
            OscillatorClass::OII
        } else {
            OscillatorClass::OIII
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            OscillatorClass::OI => "O-I",
            OscillatorClass::OII => "O-II",
            OscillatorClass::OIII => "O-III",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTraits {
    pub dim: usize,
    pub abelian: bool,
    pub reductive: bool,
    pub derived_dim: usize,
    pub derived_semisimple: bool,
}

impl AlgebraTraits {
    pub fn of(l: &MatrixLieAlgebra) -> Self {
        let derived = l.derived();
        Self {
            dim: l.dim(),
            abelian: l.is_abelian(),
            reductive: l.is_reductive(),
            derived_dim: derived.dim(),
            derived_semisimple: derived.is_semisimple(),
        }
    }
}

/// Observed structure of `der_{φ_{0,1}} d_{2m+2}(λ)`.
///
/// The skew-derivation algebra always contains the abelian ideal
/// `t = (inner d)² = span{ad e_i}` on which `ad δ` acts invertibly, so it
/// is never abelian or reductive by itself. It splits as `s_λ ⊕ t` where
/// `s_λ` is the stabiliser of `δ`; the class statements concern `s_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCheck {
    pub lambda: Vec<Rational>,
    pub predicted: OscillatorClass,
    pub full: AlgebraTraits,
    pub stabilizer: AlgebraTraits,
    pub abelian_ideal_dim: usize,
    /// `der_φ = s_λ ⊕ t` with `t` an abelian ideal.
    pub splits: bool,
    pub mismatches: Vec<String>,
}

impl ClassCheck {
    pub fn consistent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Derivations in `l` that kill basis vector `index`.
pub fn stabilizer(l: &MatrixLieAlgebra, index: usize) -> Result<MatrixLieAlgebra> {
    let n = l.n();
    let others: Vec<usize> = (0..n * n).filter(|k| k % n != index).collect();
    l.intersect(&Subspace::coordinate(n * n, &others))
}

pub fn oscillator_class_check(lambda: &[Rational]) -> Result<ClassCheck> {
    let spec = OscillatorSpec::new(lambda.to_vec(), int(0), int(1))?;
    let osc = oscillator(&spec)?;
    let g = osc.algebra();
    let skew = skew_derivations(g, osc.form())?;
    let stab = stabilizer(&skew, osc.delta_index())?;
    let t = inner_derivations(g).derived();

    let sum = stab.subspace().sum(t.subspace())?;
    let splits = t.is_subalgebra_of(&skew)
        && t.is_abelian()
        && stab.dim() + t.dim() == skew.dim()
        && &sum == skew.subspace()
        && skew
            .matrices()
            .iter()
            .all(|a| t.matrices().iter().all(|b| t.contains(&a.commutator(b))));

    let predicted = OscillatorClass::predict(lambda);
    let full = AlgebraTraits::of(&skew);
    let stabilizer = AlgebraTraits::of(&stab);
    let m = lambda.len();
    let mut mismatches = Vec::new();
    if !splits {
        mismatches.push("skew derivations do not split as stabiliser ⊕ abelian ideal".into());
    }
    match predicted {
        OscillatorClass::OI => {
            if !stabilizer.abelian {
                mismatches.push("O-I: reductive part is not abelian".into());
            }
        }
        OscillatorClass::OII => {
            if !(stabilizer.reductive
                && stabilizer.derived_semisimple
                && stabilizer.derived_dim == m * m - 1)
            {
                mismatches.push(format!("O-II: no semisimple factor of dimension {}", m * m - 1));
            }
        }
        OscillatorClass::OIII => {
            if stabilizer.abelian || !stabilizer.reductive {
                mismatches.push("O-III: reductive part is abelian or not reductive".into());
            }
        }
    }
    Ok(ClassCheck {
        lambda: lambda.to_vec(),
        predicted,
        full,
        stabilizer,
        abelian_ideal_dim: t.dim(),
        splits,
        mismatches,
    })
}

/// The three conditions characterising derivations of an oscillator
/// algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OscillatorDerivationConditions {
    /// The nilradical is invariant and `D` restricts to a derivation of it.
    pub nilradical: bool,
    /// `D(δ*) ∈ K·δ*`.
    pub center_eigen: bool,
    /// `D(δ(a)) = [D(δ), a] + [δ, D(a)]` for `a ∈ V`.
    pub delta_rule: bool,
}

impl OscillatorDerivationConditions {
    pub fn holds(&self) -> bool {
        self.nilradical && self.center_eigen && self.delta_rule
    }
}

pub fn verify_oscillator_derivation_characterization(
    osc: &Oscillator,
    d: &Matrix,
) -> Result<OscillatorDerivationConditions> {
    let g = osc.algebra();
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::Shape(format!("expected a {n} x {n} matrix")));
    }
    let nil = g.derived_algebra();
    let invariant = nil.basis().iter().all(|v| nil.contains(&d.mul_vec(v)).unwrap_or(false));
    let nilradical = invariant && {
        let h = g.subalgebra(&nil)?;
        let k = nil.dim();
        let restricted = Matrix::from_fn(k, k, |r, c| {
            let image = d.mul_vec(&nil.basis()[c]);
            nil.coordinates(&image).ok().flatten().expect("invariant")[r].clone()
        });
        is_derivation(&h, &restricted)
    };

    let star = osc.dual_index();
    let center_eigen = (0..n).all(|r| r == star || d[(r, star)].is_zero());

    let delta = osc.delta_index();
    let d_delta = d.column(delta);
    let delta_vec = crate::linalg::unit_vector(n, delta);
    let delta_rule = osc.v_indices().all(|a| {
        let e_a = crate::linalg::unit_vector(n, a);
        let lhs = d.mul_vec(&g.bracket(&delta_vec, &e_a));
        let r1 = g.bracket(&d_delta, &e_a);
        let r2 = g.bracket(&delta_vec, &d.column(a));
        lhs.iter().zip(r1.iter().zip(&r2)).all(|(l, (x, y))| l == &(x + y))
    });
    Ok(OscillatorDerivationConditions {
        nilradical,
        center_eigen,
        delta_rule,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::killing_form;

    #[test]
    fn abelian_derivations_are_gl() {
        for n in 1..4 {
            let g = LieAlgebra::abelian(n);
            assert_eq!(derivations(&g).dim(), n * n);
            assert_eq!(inner_derivations(&g).dim(), 0);
            let k = killing_form(&g);
            assert!(k.gram().is_zero());
        }
    }

    #[test]
    fn euclidean_plane_skew_maps_are_rotations() {
        let g = LieAlgebra::abelian(2);
        let s = skew_derivations(&g, &BilinearForm::identity(2)).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&Matrix::from_ints(&[&[0, -1], &[1, 0]])));
    }

    #[test]
    fn heisenberg_template_counts() {
        for m in 1..4 {
            assert_eq!(heisenberg_derivation_template(m).len(), 2 * m * m + 3 * m + 1);
            assert_eq!(oscillator_derivation_template(m, false).len(), m * m + 2 * m + 2);
            assert_eq!(oscillator_derivation_template(m, true).len(), m * m + 2 * m);
        }
    }

    #[test]
    fn unclosed_span_rejected() {
        let a = Matrix::unit(2, 0, 1);
        let b = Matrix::unit(2, 1, 0);
        assert!(matches!(
            MatrixLieAlgebra::span(2, &[a, b]),
            Err(Error::NotClosed { .. })
        ));
    }

    #[test]
    fn class_prediction() {
        assert_eq!(OscillatorClass::predict(&[int(1), int(2)]), OscillatorClass::OI);
        assert_eq!(OscillatorClass::predict(&[int(1), int(1)]), OscillatorClass::OII);
        assert_eq!(OscillatorClass::predict(&[int(1), int(1), int(2)]), OscillatorClass::OIII);
        assert_eq!(OscillatorClass::predict(&[int(1)]), OscillatorClass::OI);
    }
}
