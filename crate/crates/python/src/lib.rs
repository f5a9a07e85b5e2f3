//! Python bindings. Rationals cross the boundary as strings (`"p"` or
//! `"p/q"`); inputs may be anything whose `str()` parses, such as `int` or
//! `fractions.Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use quadlie::constructions::{self, ExtensionInput, MixedKind, OscillatorSpec};
use quadlie::derivations::derivation_profile;
use quadlie::io::AlgebraDocument;
use quadlie::linalg::{format_rational, parse_rational};
use quadlie::reproduce::{reproduce as run_claim, ClaimParams, CLAIMS};
use quadlie::{invariant_forms, BilinearForm, Matrix, Rational};

fn err(e: quadlie::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(obj.str()?.to_str()?.trim()).map_err(err)
}

fn rationals(objs: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    objs.iter().map(rational).collect()
}

fn matrix(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Matrix> {
    let rows = rows.iter().map(|r| rationals(r)).collect::<PyResult<Vec<_>>>()?;
    Matrix::from_rows(rows).map_err(err)
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// A Lie algebra given by structure constants.
#[pyclass(name = "LieAlgebra", module = "quadlie_py", frozen, skip_from_py_object)]
struct PyLieAlgebra {
    inner: quadlie::LieAlgebra,
}

#[pymethods]
impl PyLieAlgebra {
    #[staticmethod]
    fn abelian(n: usize) -> Self {
        Self {
            inner: quadlie::LieAlgebra::abelian(n),
        }
    }

    #[staticmethod]
    fn heisenberg(m: usize) -> PyResult<Self> {
        Ok(Self {
            inner: constructions::heisenberg(m).map_err(err)?,
        })
    }

    /// Parses the algebra JSON format; Jacobi is validated.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: AlgebraDocument::from_json(text).map_err(err)?.algebra,
        })
    }

    fn to_json(&self) -> String {
        AlgebraDocument::plain(self.inner.clone()).to_json()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    /// Coordinates of `[e_i, e_j]`.
    fn bracket(&self, i: usize, j: usize) -> PyResult<Vec<String>> {
        let n = self.inner.dim();
        if i >= n || j >= n {
            return Err(PyValueError::new_err(format!("basis index out of range for dimension {n}")));
        }
        Ok(strings(self.inner.structure(i, j)))
    }

    fn check_jacobi(&self) -> Vec<(usize, usize, usize)> {
        self.inner.check_jacobi().into_iter().map(|v| v.triple).collect()
    }

    fn derived_series_dims(&self) -> Vec<usize> {
        self.inner.derived_series().iter().map(|s| s.dim()).collect()
    }

    fn lower_central_series_dims(&self) -> Vec<usize> {
        self.inner.lower_central_series().iter().map(|s| s.dim()).collect()
    }

    fn center_dim(&self) -> usize {
        self.inner.center().dim()
    }

    fn is_solvable(&self) -> bool {
        self.inner.is_solvable()
    }

    fn is_nilpotent(&self) -> bool {
        self.inner.is_nilpotent()
    }

    fn is_semisimple(&self) -> bool {
        self.inner.is_semisimple()
    }

    fn metric_dimension(&self) -> usize {
        quadlie::metric_dimension(&self.inner)
    }

    /// `(total, symmetric, skew)` dimensions of the invariant forms.
    fn invariant_form_dims(&self) -> (usize, usize, usize) {
        let s = invariant_forms(&self.inner);
        (s.dim(), s.sym_dim(), s.skew_dim())
    }

    /// `(der, inner)` dimensions.
    fn derivation_dims(&self) -> PyResult<(usize, usize)> {
        let p = derivation_profile(&self.inner, None).map_err(err)?;
        Ok((p.dims.der, p.dims.inner))
    }

    fn __repr__(&self) -> String {
        format!("LieAlgebra(dim={}, labels={:?})", self.inner.dim(), self.inner.labels())
    }
}

/// A Lie algebra with a symmetric, invariant, nondegenerate form.
#[pyclass(name = "MetricLieAlgebra", module = "quadlie_py", frozen, skip_from_py_object)]
struct PyMetricLieAlgebra {
    inner: constructions::MetricLieAlgebra,
    oscillator: Option<OscillatorSpec>,
}

#[pymethods]
impl PyMetricLieAlgebra {
    #[new]
    fn new(algebra: &PyLieAlgebra, gram: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let form = BilinearForm::new(matrix(gram)?).map_err(err)?;
        Ok(Self {
            inner: constructions::MetricLieAlgebra::new(algebra.inner.clone(), form).map_err(err)?,
            oscillator: None,
        })
    }

    /// `d_{2m+2}(λ)` with `φ_{t,s}`.
    #[staticmethod]
    #[pyo3(signature = (lam, t = None, s = None))]
    fn oscillator(lam: Vec<Bound<'_, PyAny>>, t: Option<Bound<'_, PyAny>>, s: Option<Bound<'_, PyAny>>) -> PyResult<Self> {
        let t = t.map(|x| rational(&x)).transpose()?.unwrap_or_else(quadlie::linalg::zero);
        let s = s.map(|x| rational(&x)).transpose()?.unwrap_or_else(quadlie::linalg::one);
        let spec = OscillatorSpec::new(rationals(&lam)?, t, s).map_err(err)?;
        let o = constructions::oscillator(&spec).map_err(err)?;
        Ok(Self {
            inner: o.metric().clone(),
            oscillator: Some(spec),
        })
    }

    #[staticmethod]
    fn euclidean(n: usize) -> Self {
        Self {
            inner: constructions::euclidean_space(n),
            oscillator: None,
        }
    }

    /// The mixed double extension of `d_{2m+2}(1,…,1)` by `su_m` or `so_m`.
    #[staticmethod]
    fn mixed(m: usize, kind: &str) -> PyResult<Self> {
        let kind: MixedKind = kind.parse().map_err(err)?;
        let r = constructions::mixed_double_extension(m, kind).map_err(err)?;
        Ok(Self {
            inner: r.extension.metric,
            oscillator: None,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = AlgebraDocument::from_json(text).map_err(err)?;
        let form = doc
            .metric
            .ok_or_else(|| PyValueError::new_err("file has no metric"))?;
        Ok(Self {
            inner: constructions::MetricLieAlgebra::new(doc.algebra, form).map_err(err)?,
            oscillator: doc.oscillator,
        })
    }

    fn to_json(&self) -> String {
        AlgebraDocument {
            algebra: self.inner.algebra().clone(),
            metric: Some(self.inner.form().clone()),
            oscillator: self.oscillator.clone(),
        }
        .to_json()
    }

    #[getter]
    fn algebra(&self) -> PyLieAlgebra {
        PyLieAlgebra {
            inner: self.inner.algebra().clone(),
        }
    }

    #[getter]
    fn gram(&self) -> Vec<Vec<String>> {
        self.inner.form().gram().to_rows().iter().map(|r| strings(r)).collect()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn signature(&self) -> PyResult<(usize, usize)> {
        self.inner.form().signature().map_err(err)
    }

    fn skew_derivation_dim(&self) -> PyResult<usize> {
        let p = derivation_profile(self.inner.algebra(), Some(self.inner.form())).map_err(err)?;
        Ok(p.dims.skew.expect("form given"))
    }

    /// Full analysis report as canonical JSON.
    fn analyze(&self) -> PyResult<String> {
        let doc = AlgebraDocument {
            algebra: self.inner.algebra().clone(),
            metric: Some(self.inner.form().clone()),
            oscillator: self.oscillator.clone(),
        };
        Ok(quadlie::report::analyze(&doc, None).map_err(err)?.to_json())
    }

    fn __repr__(&self) -> String {
        format!("MetricLieAlgebra(dim={})", self.inner.dim())
    }
}

/// Double extension of `base` by `extender`, with `hom[i]` the matrix of
/// the image of the i-th extender basis vector.
#[pyfunction]
fn double_extension(
    base: &PyMetricLieAlgebra,
    extender: &PyLieAlgebra,
    hom: Vec<Vec<Vec<Bound<'_, PyAny>>>>,
) -> PyResult<PyMetricLieAlgebra> {
    let hom = hom.into_iter().map(matrix).collect::<PyResult<Vec<_>>>()?;
    let input = ExtensionInput {
        base: base.inner.clone(),
        extender: extender.inner.clone(),
        hom,
    };
    let ext = constructions::double_extension(&input).map_err(err)?;
    Ok(PyMetricLieAlgebra {
        inner: ext.metric,
        oscillator: None,
    })
}

#[pyfunction]
fn claims() -> Vec<&'static str> {
    CLAIMS.to_vec()
}

/// Runs a named check; returns `(passed, transcript)`.
#[pyfunction]
#[pyo3(signature = (claim, m = None, lam = None, seed = 0))]
fn reproduce(claim: &str, m: Option<usize>, lam: Option<Vec<Bound<'_, PyAny>>>, seed: u64) -> PyResult<(bool, String)> {
    let params = ClaimParams {
        m,
        lambda: lam.map(|l| rationals(&l)).transpose()?,
        seed,
    };
    let outcome = run_claim(claim, &params).map_err(err)?;
    Ok((outcome.passed(), outcome.to_string()))
}

#[pymodule]
fn quadlie_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLieAlgebra>()?;
    m.add_class::<PyMetricLieAlgebra>()?;
    m.add_function(wrap_pyfunction!(double_extension, m)?)?;
    m.add_function(wrap_pyfunction!(claims, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    Ok(())
}
