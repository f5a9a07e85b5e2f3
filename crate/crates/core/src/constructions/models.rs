//! Real matrix models of `su_m` and `so_m` and their embeddings into the
//! skew-derivations of `d_{2m+2}(1,…,1)`.

use num_traits::Zero;

use super::extension::{double_extension, DoubleExtension, ExtensionInput};
use super::{oscillator, Oscillator, OscillatorSpec};
use crate::derivations::{skew_derivations, stabilizer, MatrixLieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Rational, Subspace};

fn skew_basis(m: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let mut e = Matrix::unit(m, a, b);
            e[(b, a)] = int(-1);
            out.push(e);
        }
    }
    out
}

fn traceless_symmetric_basis(m: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let mut e = Matrix::unit(m, a, b);
            e[(b, a)] = int(1);
            out.push(e);
        }
    }
    for a in 1..m {
        let mut e = Matrix::unit(m, 0, 0);
        e[(a, a)] = int(-1);
        out.push(e);
    }
    out
}

/// `[[M, P], [-P, M]]`.
fn unitary_block(mb: &Matrix, pb: &Matrix) -> Matrix {
    let m = mb.rows();
    Matrix::from_fn(2 * m, 2 * m, |r, c| match (r < m, c < m) {
        (true, true) => mb[(r, c)].clone(),
        (false, false) => mb[(r - m, c - m)].clone(),
        (true, false) => pb[(r, c - m)].clone(),
        (false, true) => -&pb[(r - m, c)],
    })
}

/// `su_m` as `{[[M, P], [-P, M]] : Mᵗ = -M, Pᵗ = P, tr P = 0}`, the
/// realification of `M - iP`.
pub fn su_model(m: usize) -> Result<MatrixLieAlgebra> {
    if m < 2 {
        return Err(Error::InvalidSpec(format!("su model needs m >= 2, got {m}")));
    }
    let zero = Matrix::zeros(m, m);
    let mut gens: Vec<Matrix> = skew_basis(m).iter().map(|a| unitary_block(a, &zero)).collect();
    gens.extend(traceless_symmetric_basis(m).iter().map(|p| unitary_block(&zero, p)));
    MatrixLieAlgebra::span(2 * m, &gens)
}

/// `so_m` as the `m x m` skew matrices.
pub fn so_model(m: usize) -> Result<MatrixLieAlgebra> {
    if m < 2 {
        return Err(Error::InvalidSpec(format!("so model needs m >= 2, got {m}")));
    }
    MatrixLieAlgebra::span(m, &skew_basis(m))
}

/// Outcome of comparing a block-read linear map against a model algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMapCheck {
    pub source_dim: usize,
    pub target_dim: usize,
    /// Every source element's block lies in the model.
    pub block_shape: bool,
    pub bijective: bool,
    pub brackets_preserved: bool,
}

impl BlockMapCheck {
    pub fn passes(&self) -> bool {
        self.block_shape && self.bijective && self.brackets_preserved
    }
}

fn block_map_check(
    source: &MatrixLieAlgebra,
    target: &MatrixLieAlgebra,
    read: impl Fn(&Matrix) -> Matrix,
) -> BlockMapCheck {
    let (k, t) = (source.dim(), target.dim());
    let images: Vec<Option<Vec<Rational>>> = source.matrices().iter().map(|a| target.coordinates(&read(a))).collect();
    let block_shape = images.iter().all(Option::is_some);
    if !block_shape {
        return BlockMapCheck {
            source_dim: k,
            target_dim: t,
            block_shape,
            bijective: false,
            brackets_preserved: false,
        };
    }
    let images: Vec<Vec<Rational>> = images.into_iter().map(Option::unwrap).collect();
    let map = Matrix::from_fn(t, k, |r, c| images[c][r].clone());
    let bijective = k == t && map.is_invertible();
    let model = target.to_lie_algebra();
    let cert = source.certificate();
    let brackets_preserved = (0..k).all(|a| {
        (a + 1..k).all(|b| map.mul_vec(&cert[a][b]) == model.bracket(&images[a], &images[b]))
    });
    BlockMapCheck {
        source_dim: k,
        target_dim: t,
        block_shape,
        bijective,
        brackets_preserved,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismReport {
    pub m: usize,
    /// `dim s`, the skew-derivations fixing `δ`.
    pub s_dim: usize,
    /// `s² ≅ su_m`.
    pub su: BlockMapCheck,
    /// `s_0 ≅ so_m`, the part of `s` with no `x`/`y` mixing.
    pub so: BlockMapCheck,
    pub s2_killing_nondegenerate: bool,
    pub model_killing_nondegenerate: bool,
}

impl IsomorphismReport {
    pub fn passes(&self) -> bool {
        self.su.passes()
            && self.so.passes()
            && self.su.source_dim == self.m * self.m - 1
            && self.s2_killing_nondegenerate
            && self.model_killing_nondegenerate
    }
}

/// The `δ`-stabiliser `s` of `der_{φ_{0,1}} d_{2m+2}(1,…,1)`, with the
/// oscillator it lives on.
pub fn unitary_part(m: usize) -> Result<(Oscillator, MatrixLieAlgebra)> {
    let osc = oscillator(&OscillatorSpec::uniform(m)?)?;
    let skew = skew_derivations(osc.algebra(), osc.form())?;
    let s = stabilizer(&skew, osc.delta_index())?;
    Ok((osc, s))
}

/// Checks that reading the `V`-block of `s² = [s, s]` (in `x`/`y` order) is
/// a Lie isomorphism onto `su_model(m)`, and reading the `x`-block of `s_0`
/// is one onto `so_model(m)`.
pub fn unitary_isomorphism_check(m: usize) -> Result<IsomorphismReport> {
    let (osc, s) = unitary_part(m)?;
    let n = osc.algebra().dim();
    let perm = osc.xy_order();
    let s2 = s.derived();

    let su = su_model(m)?;
    let v_block = |d: &Matrix| {
        let p = d.permuted(&perm);
        Matrix::from_fn(2 * m, 2 * m, |r, c| p[(r + 1, c + 1)].clone())
    };
    let su_check = block_map_check(&s2, &su, v_block);

    // Native indices are 1 + 2i for x_i and 2 + 2i for y_i.
    let is_x = |i: usize| (1..n - 1).contains(&i) && i % 2 == 1;
    let is_y = |i: usize| (1..n - 1).contains(&i) && i % 2 == 0;
    let unmixed: Vec<usize> = (0..n * n)
        .filter(|k| {
            let (r, c) = (k / n, k % n);
            !(is_x(r) && is_y(c) || is_y(r) && is_x(c))
        })
        .collect();
    let s0 = s.intersect(&Subspace::coordinate(n * n, &unmixed))?;
    let so = so_model(m)?;
    let x_block = |d: &Matrix| {
        let p = d.permuted(&perm);
        Matrix::from_fn(m, m, |r, c| p[(r + 1, c + 1)].clone())
    };
    let so_check = block_map_check(&s0, &so, x_block);

    Ok(IsomorphismReport {
        m,
        s_dim: s.dim(),
        su: su_check,
        so: so_check,
        s2_killing_nondegenerate: s2.is_semisimple(),
        model_killing_nondegenerate: su.is_semisimple(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedKind {
    Su,
    So,
}

impl MixedKind {
    pub fn name(&self) -> &'static str {
        match self {
            MixedKind::Su => "su",
            MixedKind::So => "so",
        }
    }
}

impl std::str::FromStr for MixedKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "su" => Ok(MixedKind::Su),
            "so" => Ok(MixedKind::So),
            other => Err(Error::InvalidSpec(format!("unknown model kind {other:?}, expected su or so"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MixedReport {
    pub m: usize,
    pub kind: MixedKind,
    pub extension: DoubleExtension,
    /// The copy of the extender inside the result has nondegenerate Killing
    /// form.
    pub extender_semisimple: bool,
}

/// The model algebra and its images in `der_{φ_{0,1}} d_{2m+2}(1,…,1)`.
pub fn model_embedding(m: usize, kind: MixedKind) -> Result<(Oscillator, MatrixLieAlgebra, Vec<Matrix>)> {
    let min = match kind {
        MixedKind::Su => 2,
        MixedKind::So => 3,
    };
    if m < min {
        return Err(Error::InvalidSpec(format!(
            "{} extension needs m >= {min}, got {m}",
            kind.name()
        )));
    }
    let osc = oscillator(&OscillatorSpec::uniform(m)?)?;
    let n = 2 * m + 2;
    let perm = osc.xy_order();
    let model = match kind {
        MixedKind::Su => su_model(m)?,
        MixedKind::So => so_model(m)?,
    };
    let hom: Vec<Matrix> = model
        .matrices()
        .iter()
        .map(|a| {
            let xy = Matrix::from_fn(n, n, |r, c| {
                if r == 0 || c == 0 || r == n - 1 || c == n - 1 {
                    return Rational::zero();
                }
                let (r, c) = (r - 1, c - 1);
                match kind {
                    MixedKind::Su => a[(r, c)].clone(),
                    MixedKind::So if (r < m) == (c < m) => a[(r % m, c % m)].clone(),
                    MixedKind::So => Rational::zero(),
                }
            });
            xy.unpermuted(&perm)
        })
        .collect();
    let skew = skew_derivations(osc.algebra(), osc.form())?;
    if let Some(i) = hom.iter().position(|h| !skew.contains(h)) {
        return Err(Error::Extension(format!("model generator {i} is not a skew derivation")));
    }
    Ok((osc, model, hom))
}

/// `(d_{2m+2})_b = b ⊕ d_{2m+2} ⊕ b*` for `b = su_m` or `so_m` acting through
/// its block embedding.
pub fn mixed_double_extension(m: usize, kind: MixedKind) -> Result<MixedReport> {
    let (osc, model, hom) = model_embedding(m, kind)?;
    let input = ExtensionInput {
        base: osc.metric().clone(),
        extender: model.to_lie_algebra(),
        hom,
    };
    let extension = double_extension(&input)?;
    let g = extension.metric.algebra();
    let k = model.dim();
    let copy = Subspace::coordinate(g.dim(), &(0..k).collect::<Vec<_>>());
    let extender_semisimple = g.is_subalgebra(&copy)? && g.subalgebra(&copy)?.is_semisimple();
    Ok(MixedReport {
        m,
        kind,
        extension,
        extender_semisimple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_dimensions() {
        for m in 2..5 {
            let su = su_model(m).unwrap();
            assert_eq!(su.dim(), m * m - 1);
            assert!(su.verify_certificate());
            assert_eq!(so_model(m).unwrap().dim(), m * (m - 1) / 2);
        }
        assert!(su_model(2).unwrap().is_semisimple());
        assert!(so_model(3).unwrap().is_semisimple());
        assert!(!so_model(2).unwrap().is_semisimple());
        assert!(su_model(1).is_err());
    }

    #[test]
    fn unitary_isomorphism_m2() {
        let r = unitary_isomorphism_check(2).unwrap();
        assert_eq!(r.s_dim, 4);
        assert_eq!(r.su.source_dim, 3);
        assert_eq!(r.so.source_dim, 1);
        assert!(r.passes(), "{r:?}");
    }

    #[test]
    fn mixed_su2() {
        let r = mixed_double_extension(2, MixedKind::Su).unwrap();
        assert_eq!(r.extension.metric.dim(), 12);
        assert!(r.extender_semisimple);
        assert!(mixed_double_extension(2, MixedKind::So).is_err());
    }
}
