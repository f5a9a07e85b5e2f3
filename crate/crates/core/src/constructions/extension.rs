use num_traits::Zero;

use super::{oscillator, MetricLieAlgebra, OscillatorSpec};
use crate::derivations::{is_derivation, is_skew};
use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::lie::LieAlgebra;
use crate::linalg::{format_rational, Matrix, Rational, Subspace};

/// Data for the double extension of `(g, φ)` by `(b, ϕ)`.
#[derive(Clone, Debug)]
pub struct ExtensionInput {
    pub base: MetricLieAlgebra,
    pub extender: LieAlgebra,
    /// `ϕ(b_i)` for each basis vector of the extender, as matrices on `g`.
    pub hom: Vec<Matrix>,
}

/// Identities verified while building a double extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCertificate {
    pub dim: usize,
    pub derivation_checks: usize,
    pub homomorphism_pairs_checked: usize,
    pub jacobi_triples_checked: usize,
    pub invariance_triples_checked: usize,
    pub determinant: Rational,
    pub signature: (usize, usize),
}

#[derive(Clone, Debug)]
pub struct DoubleExtension {
    pub metric: MetricLieAlgebra,
    pub certificate: ExtensionCertificate,
    /// Dimension of the extender `b`; the basis is `b, g, b*` in that order.
    pub extender_dim: usize,
}

impl ExtensionInput {
    /// Checks that every `ϕ(b_i)` is a `φ`-skew derivation and that
    /// `b_i ↦ ϕ(b_i)` preserves brackets. Returns the number of individual
    /// checks performed.
    pub fn validate(&self) -> Result<(usize, usize)> {
        let g = self.base.algebra();
        let n = g.dim();
        let k = self.extender.dim();
        if self.hom.len() != k {
            return Err(Error::Extension(format!(
                "expected {k} hom matrices, found {}",
                self.hom.len()
            )));
        }
        for (i, h) in self.hom.iter().enumerate() {
            if h.rows() != n || h.cols() != n {
                return Err(Error::Extension(format!(
                    "hom matrix {i} is {} x {}, expected {n} x {n}",
                    h.rows(),
                    h.cols()
                )));
            }
            if !is_derivation(g, h) {
                return Err(Error::Extension(format!("hom matrix {i} is not a derivation")));
            }
            if !is_skew(self.base.form(), h) {
                let g = self.base.form().gram();
                let residual = &(&h.transpose() * g) + &(g * h);
                return Err(Error::Extension(format!(
                    "hom matrix {i} is not skew for the form; residual:\n{residual}"
                )));
            }
        }
        let mut pairs = 0;
        for i in 0..k {
            for j in i + 1..k {
                let mut image = Matrix::zeros(n, n);
                for (l, c) in self.extender.structure(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        image = &image + &self.hom[l].scale(c);
                    }
                }
                let comm = self.hom[i].commutator(&self.hom[j]);
                if comm != image {
                    let residual = &comm - &image;
                    return Err(Error::Extension(format!(
                        "hom does not preserve the bracket of ({i}, {j}); residual:\n{residual}"
                    )));
                }
                pairs += 1;
            }
        }
        Ok((2 * k, pairs))
    }
}

/// Bracket table on `b ⊕ g ⊕ b*`. `coadjoint_sign = -1` gives the
/// coadjoint action `[b, β] = -β ∘ ad b`.
fn extension_table(input: &ExtensionInput, coadjoint_sign: i64) -> Vec<Vec<Vec<Rational>>> {
    let g = input.base.algebra();
    let gram = input.base.form().gram();
    let b = &input.extender;
    let (k, n) = (b.dim(), g.dim());
    let total = 2 * k + n;
    let sign = Rational::from_integer(coadjoint_sign.into());
    let mut c = vec![vec![vec![Rational::zero(); total]; total]; total];
    let set = |c: &mut Vec<Vec<Vec<Rational>>>, i: usize, j: usize, v: Vec<Rational>| {
        c[j][i] = v.iter().map(|x| -x).collect();
        c[i][j] = v;
    };
    for i in 0..k {
        for j in i + 1..k {
            let mut v = vec![Rational::zero(); total];
            v[..k].clone_from_slice(b.structure(i, j));
            set(&mut c, i, j, v);
        }
        for j in 0..n {
            let mut v = vec![Rational::zero(); total];
            for (r, x) in input.hom[i].column(j).into_iter().enumerate() {
                v[k + r] = x;
            }
            set(&mut c, i, k + j, v);
        }
        for j in 0..k {
            // [b_i, b*_j] = sign · b*_j ∘ ad b_i = sign · Σ_l c_{il}^j b*_l
            let mut v = vec![Rational::zero(); total];
            for l in 0..k {
                v[k + n + l] = &sign * &b.structure(i, l)[j];
            }
            set(&mut c, i, k + n + j, v);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![Rational::zero(); total];
            for (r, x) in g.structure(i, j).iter().enumerate() {
                v[k + r] = x.clone();
            }
            // w(a_i, a_j)(b_l) = φ(ϕ(b_l) a_i, a_j)
            for (l, h) in input.hom.iter().enumerate() {
                let w: Rational = (0..n)
                    .filter(|&r| !h[(r, i)].is_zero())
                    .map(|r| &h[(r, i)] * &gram[(r, j)])
                    .sum();
                v[k + n + l] = w;
            }
            set(&mut c, k + i, k + j, v);
        }
    }
    c
}

fn extension_form(input: &ExtensionInput) -> BilinearForm {
    let (k, n) = (input.extender.dim(), input.base.dim());
    let total = 2 * k + n;
    let gram = input.base.form().gram();
    let m = Matrix::from_fn(total, total, |r, c| {
        if r < k && c == r + k + n || c < k && r == c + k + n {
            Rational::from_integer(1.into())
        } else if (k..k + n).contains(&r) && (k..k + n).contains(&c) {
            gram[(r - k, c - k)].clone()
        } else {
            Rational::zero()
        }
    });
    BilinearForm::new(m).expect("square")
}

fn extension_labels(input: &ExtensionInput) -> Vec<String> {
    let b = input.extender.labels();
    b.iter()
        .cloned()
        .chain(input.base.algebra().labels().iter().cloned())
        .chain(b.iter().map(|l| format!("{l}*")))
        .collect()
}

/// The double extension `b ⊕ g ⊕ b*` with form
/// `φ_b(b+a+β, b'+a'+β') = β(b') + β'(b) + φ(a,a')`.
pub fn double_extension(input: &ExtensionInput) -> Result<DoubleExtension> {
    let (derivation_checks, homomorphism_pairs_checked) = input.validate()?;
    let labels = extension_labels(input);
    let table = extension_table(input, -1);
    let algebra = LieAlgebra::new_unchecked_jacobi(labels, table)?;
    let total = algebra.dim();
    let jacobi = algebra.check_jacobi();
    if let Some(v) = jacobi.first() {
        let residual: Vec<String> = v.value.iter().map(format_rational).collect();
        return Err(Error::Extension(format!(
            "Jacobi fails on {:?}, residual [{}]",
            v.triple,
            residual.join(", ")
        )));
    }
    let form = extension_form(input);
    if let Some(v) = form.check_invariance(&algebra).first() {
        return Err(Error::Extension(format!(
            "form not invariant on {:?}, residual {}",
            v.triple,
            format_rational(&v.value)
        )));
    }
    let determinant = form.determinant();
    if determinant.is_zero() {
        return Err(Error::Extension("extended form is degenerate".into()));
    }
    let signature = form.signature()?;
    let certificate = ExtensionCertificate {
        dim: total,
        derivation_checks,
        homomorphism_pairs_checked,
        jacobi_triples_checked: total * total.saturating_sub(1) * total.saturating_sub(2) / 6,
        invariance_triples_checked: total * total * total,
        determinant,
        signature,
    };
    Ok(DoubleExtension {
        metric: MetricLieAlgebra::new(algebra, form)?,
        certificate,
        extender_dim: input.extender.dim(),
    })
}

/// A proper nonzero ideal `I` on which the form is nondegenerate, so that
/// `g = I ⊥ I^⊥` with both summands ideals.
pub fn find_orthogonal_splitting(metric: &MetricLieAlgebra) -> Option<Subspace> {
    let g = metric.algebra();
    let form = metric.form();
    let n = g.dim();
    let good = |s: &Subspace| {
        !s.is_zero()
            && !s.is_full()
            && form.is_nondegenerate_on(s)
            && g.is_ideal(s).map(|r| r.is_ideal).unwrap_or(false)
    };

    let z = g.center();
    let mut candidates = vec![z.clone()];
    // Small integer combinations of the center basis: every subspace of the
    // center is an ideal.
    let mut combos: Vec<Vec<Rational>> = Vec::new();
    let k = z.dim();
    if k > 0 && k <= 6 {
        let mut coeffs = vec![-1i64; k];
        loop {
            if coeffs.iter().any(|&c| c != 0) {
                let c: Vec<Rational> = coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect();
                combos.push(z.combine(&c));
            }
            let mut pos = 0;
            while pos < k && coeffs[pos] == 1 {
                coeffs[pos] = -1;
                pos += 1;
            }
            if pos == k {
                break;
            }
            coeffs[pos] += 1;
        }
    }
    candidates.extend(combos.iter().map(|v| Subspace::span(n, [v])));
    for (a, u) in combos.iter().enumerate() {
        for v in &combos[a + 1..] {
            candidates.push(Subspace::span(n, [u, v]));
        }
    }
    for series in [g.derived_series(), g.lower_central_series(), g.upper_central_series()] {
        for s in series {
            if let Ok(perp) = form.orthogonal_complement(&s) {
                candidates.push(perp);
            }
            candidates.push(s);
        }
    }
    candidates.into_iter().find(good)
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub extension: DoubleExtension,
    pub witness: Option<Subspace>,
    pub complement: Option<Subspace>,
}

impl DecompositionReport {
    pub fn decomposable(&self) -> bool {
        self.witness.is_some()
    }
}

/// Double-extends `(d_4, φ_{0,1})` by a one-dimensional `b` acting through
/// `hom` and searches for an orthogonal ideal splitting of the result.
/// Absence of a witness means none was found, not indecomposability.
pub fn d4_skew_extension_decomposability(hom: &Matrix) -> Result<DecompositionReport> {
    let d4 = oscillator(&OscillatorSpec::uniform(1)?)?;
    let input = ExtensionInput {
        base: d4.metric().clone(),
        extender: LieAlgebra::abelian(1).with_labels(vec!["b".into()]),
        hom: vec![hom.clone()],
    };
    let extension = double_extension(&input)?;
    let witness = find_orthogonal_splitting(&extension.metric);
    let complement = witness
        .as_ref()
        .map(|w| extension.metric.form().orthogonal_complement(w))
        .transpose()?;
    Ok(DecompositionReport {
        extension,
        witness,
        complement,
    })
}
