//! JSON file formats. Rationals are strings `"p"` or `"p/q"`; output is
//! canonical (sorted keys, fixed indentation) so files compare bytewise.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::constructions::{ExtensionCertificate, OscillatorSpec};
use crate::derivations::MatrixLieAlgebra;
use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::lie::LieAlgebra;
use crate::linalg::{format_rational, parse_rational, Matrix, Rational};

type RationalRow = Vec<String>;

#[derive(Serialize, Deserialize)]
struct BracketEntry {
    i: usize,
    j: usize,
    v: RationalRow,
}

#[derive(Serialize, Deserialize)]
struct OscillatorEntry {
    lambda: RationalRow,
    t: String,
    s: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    labels: Vec<String>,
    brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metric: Option<Vec<RationalRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    oscillator: Option<OscillatorEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormFile {
    gram: Vec<RationalRow>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomFile {
    hom: Vec<Vec<RationalRow>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixAlgebraFile {
    n: usize,
    basis: Vec<Vec<RationalRow>>,
    certificate: Vec<Vec<RationalRow>>,
}

/// An algebra file after validation.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraDocument {
    pub algebra: LieAlgebra,
    pub metric: Option<BilinearForm>,
    pub oscillator: Option<OscillatorSpec>,
}

impl AlgebraDocument {
    pub fn plain(algebra: LieAlgebra) -> Self {
        Self {
            algebra,
            metric: None,
            oscillator: None,
        }
    }

    pub fn to_json(&self) -> String {
        let g = &self.algebra;
        let file = AlgebraFile {
            dim: g.dim(),
            labels: g.labels().to_vec(),
            brackets: g
                .brackets()
                .into_iter()
                .map(|(i, j, v)| BracketEntry { i, j, v: row(&v) })
                .collect(),
            metric: self.metric.as_ref().map(|f| matrix_rows(f.gram())),
            oscillator: self.oscillator.as_ref().map(|s| OscillatorEntry {
                lambda: row(s.lambda()),
                t: format_rational(s.t()),
                s: format_rational(s.s()),
            }),
        };
        canonical(&file)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = from_str(text)?;
        if file.labels.len() != file.dim {
            return Err(Error::Parse(format!(
                "dim is {} but {} labels were given",
                file.dim,
                file.labels.len()
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut brackets = Vec::with_capacity(file.brackets.len());
        for b in &file.brackets {
            if !seen.insert((b.i, b.j)) {
                return Err(Error::Parse(format!("bracket ({}, {}) listed twice", b.i, b.j)));
            }
            if b.i >= b.j || b.j >= file.dim {
                return Err(Error::Parse(format!(
                    "bracket ({}, {}) must satisfy i < j < {}",
                    b.i, b.j, file.dim
                )));
            }
            if b.v.len() != file.dim {
                return Err(Error::Parse(format!(
                    "bracket ({}, {}) has {} coordinates, expected {}",
                    b.i,
                    b.j,
                    b.v.len(),
                    file.dim
                )));
            }
            brackets.push((b.i, b.j, parse_row(&b.v)?));
        }
        let algebra = LieAlgebra::from_brackets(file.labels, &brackets)?;
        let metric = file
            .metric
            .map(|rows| -> Result<BilinearForm> {
                let m = parse_matrix(&rows)?;
                if m.rows() != file.dim || m.cols() != file.dim {
                    return Err(Error::Parse(format!("metric must be {0} x {0}", file.dim)));
                }
                BilinearForm::new(m)
            })
            .transpose()?;
        let oscillator = file
            .oscillator
            .map(|o| -> Result<OscillatorSpec> {
                let spec = OscillatorSpec::new(parse_row(&o.lambda)?, parse_rational(&o.t)?, parse_rational(&o.s)?)?;
                if 2 * spec.m() + 2 != file.dim {
                    return Err(Error::Parse(format!(
                        "oscillator parameters describe dimension {}, file has {}",
                        2 * spec.m() + 2,
                        file.dim
                    )));
                }
                Ok(spec)
            })
            .transpose()?;
        Ok(Self {
            algebra,
            metric,
            oscillator,
        })
    }
}

pub fn form_to_json(form: &BilinearForm) -> String {
    canonical(&FormFile {
        gram: matrix_rows(form.gram()),
    })
}

pub fn form_from_json(text: &str) -> Result<BilinearForm> {
    let file: FormFile = from_str(text)?;
    BilinearForm::new(parse_matrix(&file.gram)?)
}

pub fn hom_to_json(hom: &[Matrix]) -> String {
    canonical(&HomFile {
        hom: hom.iter().map(matrix_rows).collect(),
    })
}

pub fn hom_from_json(text: &str) -> Result<Vec<Matrix>> {
    let file: HomFile = from_str(text)?;
    file.hom.iter().map(|m| parse_matrix(m)).collect()
}

pub fn matrix_algebra_to_json(l: &MatrixLieAlgebra) -> String {
    canonical(&MatrixAlgebraFile {
        n: l.n(),
        basis: l.matrices().iter().map(matrix_rows).collect(),
        certificate: l
            .certificate()
            .iter()
            .map(|plane| plane.iter().map(|v| row(v)).collect())
            .collect(),
    })
}

pub fn matrix_algebra_from_json(text: &str) -> Result<MatrixLieAlgebra> {
    let file: MatrixAlgebraFile = from_str(text)?;
    let basis: Vec<Matrix> = file.basis.iter().map(|m| parse_matrix(m)).collect::<Result<_>>()?;
    let certificate = file
        .certificate
        .iter()
        .map(|plane| plane.iter().map(|v| parse_row(v)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    MatrixLieAlgebra::from_parts(file.n, &basis, certificate)
}

pub fn certificate_to_json(cert: &ExtensionCertificate) -> String {
    let value = serde_json::json!({
        "dim": cert.dim,
        "derivation_checks": cert.derivation_checks,
        "homomorphism_pairs_checked": cert.homomorphism_pairs_checked,
        "jacobi_triples_checked": cert.jacobi_triples_checked,
        "invariance_triples_checked": cert.invariance_triples_checked,
        "determinant": format_rational(&cert.determinant),
        "signature": [cert.signature.0, cert.signature.1],
        "nondegenerate": !cert.determinant.is_zero(),
    });
    canonical(&value)
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical<T: Serialize>(value: &T) -> String {
    // `serde_json::Value` keeps object keys in a BTreeMap.
    let value = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
    s.push('\n');
    s
}

fn from_str<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn row(v: &[Rational]) -> RationalRow {
    v.iter().map(format_rational).collect()
}

fn matrix_rows(m: &Matrix) -> Vec<RationalRow> {
    m.to_rows().iter().map(|r| row(r)).collect()
}

fn parse_row(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn parse_matrix(rows: &[RationalRow]) -> Result<Matrix> {
    let parsed: Vec<Vec<Rational>> = rows.iter().map(|r| parse_row(r)).collect::<Result<_>>()?;
    let cols = parsed.first().map_or(0, Vec::len);
    if parsed.len() != cols {
        return Err(Error::Parse(format!("expected a square matrix, found {} x {cols}", parsed.len())));
    }
    Matrix::from_rows(parsed).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{heisenberg, oscillator, su_model};
    use crate::linalg::{frac, int};

    #[test]
    fn heisenberg_file_shape() {
        let doc = AlgebraDocument::plain(heisenberg(1).unwrap());
        let json = doc.to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["dim"], 3);
        assert_eq!(v["brackets"][0]["i"], 0);
        assert_eq!(v["brackets"][0]["j"], 1);
        assert_eq!(v["brackets"][0]["v"], serde_json::json!(["0", "0", "1"]));
        assert_eq!(AlgebraDocument::from_json(&json).unwrap(), doc);
    }

    #[test]
    fn oscillator_round_trip_is_byte_identical() {
        let spec = OscillatorSpec::new(vec![frac(1, 2), int(3)], int(2), int(-1)).unwrap();
        let o = oscillator(&spec).unwrap();
        let doc = AlgebraDocument {
            algebra: o.algebra().clone(),
            metric: Some(o.form().clone()),
            oscillator: Some(spec),
        };
        let json = doc.to_json();
        let back = AlgebraDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
        assert!(json.contains("\"1/2\""));
    }

    #[test]
    fn rejects_bad_files() {
        let jacobi_broken = r#"{"dim":3,"labels":["a","b","c"],"brackets":[
            {"i":0,"j":1,"v":["0","0","1"]},{"i":0,"j":2,"v":["1","0","0"]}]}"#;
        assert!(matches!(AlgebraDocument::from_json(jacobi_broken), Err(Error::Jacobi(_))));
        let zero_den = r#"{"dim":1,"labels":["a"],"brackets":[],"metric":[["1/0"]]}"#;
        assert!(matches!(AlgebraDocument::from_json(zero_den), Err(Error::Parse(_))));
        let reversed = r#"{"dim":2,"labels":["a","b"],"brackets":[{"i":1,"j":0,"v":["0","0"]}]}"#;
        assert!(matches!(AlgebraDocument::from_json(reversed), Err(Error::Parse(_))));
        assert!(matches!(AlgebraDocument::from_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn matrix_algebra_round_trip() {
        let su = su_model(2).unwrap();
        let json = matrix_algebra_to_json(&su);
        assert_eq!(matrix_algebra_from_json(&json).unwrap(), su);
        let tampered = json.replacen("\"1\"", "\"2\"", 1);
        assert!(matrix_algebra_from_json(&tampered).is_err());
    }

    #[test]
    fn hom_and_form_round_trip() {
        let hom = vec![Matrix::from_ints(&[&[0, -1], &[1, 0]])];
        assert_eq!(hom_from_json(&hom_to_json(&hom)).unwrap(), hom);
        let f = BilinearForm::identity(3);
        assert_eq!(form_from_json(&form_to_json(&f)).unwrap(), f);
    }
}
