//! Parametrised constructions: Heisenberg and oscillator algebras, double
//! extensions and the matrix models used for mixed extensions.

mod extension;
mod models;
mod oscillator;

pub use extension::{
    d4_skew_extension_decomposability, double_extension, find_orthogonal_splitting,
    DecompositionReport, DoubleExtension, ExtensionCertificate, ExtensionInput,
};
pub use models::{
    mixed_double_extension, model_embedding, so_model, su_model, unitary_isomorphism_check,
    unitary_part, BlockMapCheck, IsomorphismReport, MixedKind, MixedReport,
};
pub use oscillator::{oscillator, oscillator_form, uniform_rescaling, Oscillator, OscillatorSpec};

use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::lie::LieAlgebra;
use crate::linalg::{one, zero, Rational};

/// A Lie algebra with a symmetric, invariant, nondegenerate form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    form: BilinearForm,
}

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, form: BilinearForm) -> Result<Self> {
        if form.dim() != algebra.dim() {
            return Err(Error::AmbientMismatch {
                expected: algebra.dim(),
                found: form.dim(),
            });
        }
        if !form.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let bad = form.check_invariance(&algebra);
        if !bad.is_empty() {
            return Err(Error::NotInvariant(bad.into_iter().map(|v| v.triple).collect()));
        }
        if !form.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        Ok(Self { algebra, form })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn into_parts(self) -> (LieAlgebra, BilinearForm) {
        (self.algebra, self.form)
    }
}

/// `h_{2m+1}` with basis `u_1..u_{2m}, z` and `[u_i, u_{m+i}] = z`.
pub fn heisenberg(m: usize) -> Result<LieAlgebra> {
    if m == 0 {
        return Err(Error::InvalidSpec("Heisenberg algebra needs m >= 1".into()));
    }
    let n = 2 * m + 1;
    let mut labels: Vec<String> = (1..=2 * m).map(|i| format!("u{i}")).collect();
    labels.push("z".into());
    let brackets: Vec<(usize, usize, Vec<Rational>)> = (0..m)
        .map(|i| {
            let mut v = vec![zero(); n];
            v[n - 1] = one();
            (i, m + i, v)
        })
        .collect();
    LieAlgebra::from_brackets(labels, &brackets)
}

/// The abelian algebra `K^n` with the identity form.
pub fn euclidean_space(n: usize) -> MetricLieAlgebra {
    MetricLieAlgebra::new(LieAlgebra::abelian(n), BilinearForm::identity(n))
        .expect("identity form is metric on an abelian algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, Subspace};

    #[test]
    fn heisenberg_brackets() {
        assert!(heisenberg(0).is_err());
        let h5 = heisenberg(2).unwrap();
        assert_eq!(h5.dim(), 5);
        let z = vec![int(0), int(0), int(0), int(0), int(1)];
        assert_eq!(h5.structure(0, 2), z.as_slice());
        assert_eq!(h5.structure(1, 3), z.as_slice());
        assert_eq!(h5.brackets().len(), 2);
        for m in 1..4 {
            let h = heisenberg(m).unwrap();
            let zs = Subspace::coordinate(2 * m + 1, &[2 * m]);
            assert_eq!(h.center(), zs);
            assert_eq!(h.derived_algebra(), zs);
        }
    }

    #[test]
    fn metric_validation() {
        let g = heisenberg(1).unwrap();
        assert!(matches!(
            MetricLieAlgebra::new(g.clone(), BilinearForm::identity(3)),
            Err(Error::NotInvariant(_))
        ));
        assert_eq!(
            MetricLieAlgebra::new(LieAlgebra::abelian(2), BilinearForm::new(crate::Matrix::zeros(2, 2)).unwrap()),
            Err(Error::DegenerateForm)
        );
    }
}
