use num_traits::{One, Signed, Zero};

use super::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::lie::LieAlgebra;
use crate::linalg::{int, Matrix, Rational};

/// Parameters of `d_{2m+2}(λ)` with the form `φ_{t,s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OscillatorSpec {
    lambda: Vec<Rational>,
    t: Rational,
    s: Rational,
}

impl OscillatorSpec {
    pub fn new(lambda: Vec<Rational>, t: Rational, s: Rational) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidSpec("λ needs at least one entry".into()));
        }
        if lambda.iter().any(|l| !l.is_positive()) {
            return Err(Error::InvalidSpec("λ entries must be positive".into()));
        }
        if lambda.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidSpec("λ entries must be ascending".into()));
        }
        if s.is_zero() {
            return Err(Error::InvalidSpec("φ_{t,s} needs s != 0".into()));
        }
        Ok(Self { lambda, t, s })
    }

    /// `λ = (1, …, 1)` with `φ_{0,1}`.
    pub fn uniform(m: usize) -> Result<Self> {
        Self::new(vec![int(1); m], int(0), int(1))
    }

    pub fn m(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[Rational] {
        &self.lambda
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }
}

/// An oscillator algebra in the basis `δ, e_1, …, e_{2m}, δ*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oscillator {
    spec: OscillatorSpec,
    metric: MetricLieAlgebra,
}

impl Oscillator {
    pub fn spec(&self) -> &OscillatorSpec {
        &self.spec
    }

    pub fn metric(&self) -> &MetricLieAlgebra {
        &self.metric
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.metric.algebra()
    }

    pub fn form(&self) -> &BilinearForm {
        self.metric.form()
    }

    pub fn m(&self) -> usize {
        self.spec.m()
    }

    pub fn delta_index(&self) -> usize {
        0
    }

    pub fn dual_index(&self) -> usize {
        2 * self.m() + 1
    }

    pub fn v_indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=2 * self.m()
    }

    /// The skew map `δ_λ` on `V`: `e_{2i-1} ↦ λ_i e_{2i}`, `e_{2i} ↦ -λ_i e_{2i-1}`.
    pub fn skew_map(&self) -> Matrix {
        skew_map(&self.spec.lambda)
    }

    /// Basis order `δ, x_1..x_m, y_1..y_m, δ*` (with `x_i = e_{2i-1}`,
    /// `y_i = e_{2i}`) as a permutation of the native order.
    pub fn xy_order(&self) -> Vec<usize> {
        let m = self.m();
        let mut perm = vec![0];
        perm.extend((0..m).map(|i| 2 * i + 1));
        perm.extend((0..m).map(|i| 2 * i + 2));
        perm.push(2 * m + 1);
        perm
    }
}

fn skew_map(lambda: &[Rational]) -> Matrix {
    let m = lambda.len();
    let mut d = Matrix::zeros(2 * m, 2 * m);
    for (i, l) in lambda.iter().enumerate() {
        d[(2 * i + 1, 2 * i)] = l.clone();
        d[(2 * i, 2 * i + 1)] = -l;
    }
    d
}

/// `φ_{t,s}`: `δ, δ*` isotropic, `φ(δ,δ) = t`, `φ(δ,δ*) = s`, and the `e_i`
/// orthogonal with `φ(e_i, e_i) = s`.
pub fn oscillator_form(m: usize, t: &Rational, s: &Rational) -> BilinearForm {
    let n = 2 * m + 2;
    let mut g = Matrix::zeros(n, n);
    g[(0, 0)] = t.clone();
    g[(0, n - 1)] = s.clone();
    g[(n - 1, 0)] = s.clone();
    for i in 1..n - 1 {
        g[(i, i)] = s.clone();
    }
    BilinearForm::new(g).expect("square")
}

pub fn oscillator(spec: &OscillatorSpec) -> Result<Oscillator> {
    let m = spec.m();
    let n = 2 * m + 2;
    let star = n - 1;
    let mut labels = vec!["delta".to_string()];
    labels.extend((1..=2 * m).map(|i| format!("e{i}")));
    labels.push("delta*".into());

    let mut brackets = Vec::new();
    for (i, l) in spec.lambda.iter().enumerate() {
        let (x, y) = (2 * i + 1, 2 * i + 2);
        let mut v = vec![Rational::zero(); n];
        v[y] = l.clone();
        brackets.push((0, x, v));
        let mut v = vec![Rational::zero(); n];
        v[x] = -l;
        brackets.push((0, y, v));
        let mut v = vec![Rational::zero(); n];
        v[star] = l.clone();
        brackets.push((x, y, v));
    }
    let algebra = LieAlgebra::from_brackets(labels, &brackets)?;
    let form = oscillator_form(m, &spec.t, &spec.s);
    Ok(Oscillator {
        spec: spec.clone(),
        metric: MetricLieAlgebra::new(algebra, form)?,
    })
}

/// For uniform `λ = (μ, …, μ)`, the linear map `d_{2m+2}(1,…,1) → d_{2m+2}(λ)`
/// sending `δ ↦ δ/μ`, `e_i ↦ e_i`, `δ* ↦ μ δ*`. It preserves structure
/// constants.
pub fn uniform_rescaling(lambda: &[Rational]) -> Result<Matrix> {
    let mu = lambda
        .first()
        .ok_or_else(|| Error::InvalidSpec("λ must be nonempty".into()))?;
    if lambda.iter().any(|l| l != mu) || mu.is_zero() {
        return Err(Error::InvalidSpec("rescaling needs equal nonzero λ entries".into()));
    }
    let n = 2 * lambda.len() + 2;
    let mut diag = vec![Rational::one(); n];
    diag[0] = mu.recip();
    diag[n - 1] = mu.clone();
    Ok(Matrix::diagonal(&diag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    #[test]
    fn spec_validation() {
        assert!(OscillatorSpec::new(vec![], int(0), int(1)).is_err());
        assert!(OscillatorSpec::new(vec![int(2), int(1)], int(0), int(1)).is_err());
        assert!(OscillatorSpec::new(vec![int(0)], int(0), int(1)).is_err());
        assert!(OscillatorSpec::new(vec![int(1)], int(0), int(0)).is_err());
        assert!(OscillatorSpec::new(vec![frac(1, 2), int(3)], int(5), int(-2)).is_ok());
    }

    #[test]
    fn d4_brackets() {
        let osc = oscillator(&OscillatorSpec::uniform(1).unwrap()).unwrap();
        let g = osc.algebra();
        let e = |i: usize| crate::linalg::unit_vector(4, i);
        assert_eq!(g.bracket(&e(0), &e(1)), e(2));
        assert_eq!(g.bracket(&e(0), &e(2)), e(1).iter().map(|x| -x).collect::<Vec<_>>());
        assert_eq!(g.bracket(&e(1), &e(2)), e(3));
        assert_eq!(osc.skew_map(), Matrix::from_ints(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn xy_order_permutation() {
        let osc = oscillator(&OscillatorSpec::uniform(2).unwrap()).unwrap();
        assert_eq!(osc.xy_order(), vec![0, 1, 3, 2, 4, 5]);
    }
}
