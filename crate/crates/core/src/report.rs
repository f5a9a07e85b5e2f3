//! Full structural analysis of one algebra, as text or canonical JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::derivations::{derivation_profile, oscillator_class_check};
use crate::error::Result;
use crate::forms::{invariant_forms, BilinearForm};
use crate::io::{canonical, AlgebraDocument};
use crate::linalg::format_rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesDims {
    pub derived: Vec<usize>,
    pub lower_central: Vec<usize>,
    pub upper_central: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormDims {
    pub total: usize,
    pub symmetric: usize,
    pub skew: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormSummary {
    pub source: String,
    pub symmetric: bool,
    pub invariant: bool,
    pub nondegenerate: bool,
    pub determinant: String,
    /// `None` when the form is not symmetric.
    pub signature: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationSummary {
    pub der: usize,
    pub inner: usize,
    pub skew: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub lambda: Vec<String>,
    pub class: String,
    /// Stabiliser of `δ` in `der_{φ_{0,1}}`.
    pub reductive_part_dim: usize,
    pub reductive_part_abelian: bool,
    pub reductive_part_reductive: bool,
    pub semisimple_factor_dim: usize,
    pub abelian_ideal_dim: usize,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub dim: usize,
    pub labels: Vec<String>,
    pub series: SeriesDims,
    pub center_dim: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    pub semisimple: bool,
    pub invariant_forms: FormDims,
    pub metric_dimension: usize,
    pub form: Option<FormSummary>,
    pub derivations: DerivationSummary,
    pub classification: Option<ClassSummary>,
    pub checks: Vec<ConsistencyCheck>,
}

impl AnalysisReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        canonical(self)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let yn = |b: bool| if b { "yes" } else { "no" };
        let dims = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" > ");
        let _ = writeln!(s, "dimension: {}", self.dim);
        let _ = writeln!(s, "basis: {}", self.labels.join(", "));
        let _ = writeln!(s, "derived series dims: {}", dims(&self.series.derived));
        let _ = writeln!(s, "lower central series dims: {}", dims(&self.series.lower_central));
        let _ = writeln!(s, "upper central series dims: {}", dims(&self.series.upper_central));
        let _ = writeln!(s, "center dim: {}", self.center_dim);
        let _ = writeln!(s, "solvable: {}", yn(self.solvable));
        let _ = writeln!(s, "nilpotent: {}", yn(self.nilpotent));
        let _ = writeln!(s, "semisimple: {}", yn(self.semisimple));
        let f = &self.invariant_forms;
        let _ = writeln!(
            s,
            "invariant forms: dim {} (symmetric {}, skew {})",
            f.total, f.symmetric, f.skew
        );
        let _ = writeln!(s, "metric dimension: {}", self.metric_dimension);
        match &self.form {
            Some(form) => {
                let _ = writeln!(s, "form: {}", form.source);
                let _ = writeln!(
                    s,
                    "  symmetric: {}, invariant: {}, nondegenerate: {}, determinant: {}",
                    yn(form.symmetric),
                    yn(form.invariant),
                    yn(form.nondegenerate),
                    form.determinant
                );
                if let Some((p, q)) = form.signature {
                    let _ = writeln!(s, "  signature: ({p}, {q})");
                }
            }
            None => {
                let _ = writeln!(s, "form: none");
            }
        }
        let d = &self.derivations;
        let skew = d.skew.map_or("n/a".to_string(), |k| k.to_string());
        let _ = writeln!(s, "derivations: der {}, inner {}, skew {}", d.der, d.inner, skew);
        if let Some(c) = &self.classification {
            let _ = writeln!(s, "oscillator class: {} for λ = ({})", c.class, c.lambda.join(", "));
            let _ = writeln!(
                s,
                "  reductive part: dim {}, abelian {}, reductive {}, semisimple factor dim {}",
                c.reductive_part_dim,
                yn(c.reductive_part_abelian),
                yn(c.reductive_part_reductive),
                c.semisimple_factor_dim
            );
            let _ = writeln!(s, "  abelian ideal dim: {}", c.abelian_ideal_dim);
        }
        let _ = writeln!(s, "checks:");
        for c in &self.checks {
            let _ = writeln!(s, "  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
        }
        s
    }
}

/// Analyzes `doc.algebra`, using `form` if given and otherwise the attached
/// metric. `form_source` names the form in the report.
pub fn analyze(doc: &AlgebraDocument, form: Option<(&BilinearForm, &str)>) -> Result<AnalysisReport> {
    let g = &doc.algebra;
    let n = g.dim();
    let form = form.or(doc.metric.as_ref().map(|f| (f, "attached metric")));
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool| {
        checks.push(ConsistencyCheck {
            name: name.to_string(),
            passed,
        })
    };

    let derived = g.derived_series();
    let lower = g.lower_central_series();
    let upper = g.upper_central_series();
    let center = g.center();
    let solvable = g.is_solvable();
    let nilpotent = g.is_nilpotent();
    check("nilpotent implies solvable", !nilpotent || solvable);
    check(
        "upper central series starts at the center",
        upper.get(1).map_or(center.is_zero(), |z1| z1 == &center),
    );

    let space = invariant_forms(g);
    check("B_inv = symmetric ⊕ skew", space.dim() == space.sym_dim() + space.skew_dim());

    let form_summary = match form {
        Some((f, source)) => {
            if f.dim() != n {
                return Err(crate::Error::AmbientMismatch {
                    expected: n,
                    found: f.dim(),
                });
            }
            let symmetric = f.is_symmetric();
            let invariant = f.is_invariant(g);
            let nondegenerate = f.is_nondegenerate();
            check("form is symmetric", symmetric);
            check("form is invariant", invariant);
            check("form is nondegenerate", nondegenerate);
            check("form lies in B_inv", space.contains(f));
            if symmetric && invariant && nondegenerate {
                let g2 = g.derived_algebra();
                check("(g²)^⊥ = center", f.orthogonal_complement(&g2)? == center);
            }
            Some(FormSummary {
                source: source.to_string(),
                symmetric,
                invariant,
                nondegenerate,
                determinant: format_rational(&f.determinant()),
                signature: if symmetric { Some(f.signature()?) } else { None },
            })
        }
        None => None,
    };

    let usable = form.filter(|(f, _)| f.is_symmetric() && f.is_invariant(g) && f.is_nondegenerate());
    let profile = derivation_profile(g, usable.map(|(f, _)| f))?;
    check("inner ⊆ der, skew ⊆ der, dim inner = dim g - dim Z", profile.is_consistent(g));
    check("derivation algebras are closed", profile.der.verify_certificate());

    let classification = match &doc.oscillator {
        Some(spec) => {
            let c = oscillator_class_check(spec.lambda())?;
            check("oscillator class matches the λ pattern", c.consistent());
            Some(ClassSummary {
                lambda: spec.lambda().iter().map(format_rational).collect(),
                class: c.predicted.name().to_string(),
                reductive_part_dim: c.stabilizer.dim,
                reductive_part_abelian: c.stabilizer.abelian,
                reductive_part_reductive: c.stabilizer.reductive,
                semisimple_factor_dim: c.stabilizer.derived_dim,
                abelian_ideal_dim: c.abelian_ideal_dim,
                consistent: c.consistent(),
            })
        }
        None => None,
    };

    Ok(AnalysisReport {
        dim: n,
        labels: g.labels().to_vec(),
        series: SeriesDims {
            derived: derived.iter().map(|s| s.dim()).collect(),
            lower_central: lower.iter().map(|s| s.dim()).collect(),
            upper_central: upper.iter().map(|s| s.dim()).collect(),
        },
        center_dim: center.dim(),
        solvable,
        nilpotent,
        semisimple: g.is_semisimple(),
        invariant_forms: FormDims {
            total: space.dim(),
            symmetric: space.sym_dim(),
            skew: space.skew_dim(),
        },
        metric_dimension: space.dim(),
        form: form_summary,
        derivations: DerivationSummary {
            der: profile.dims.der,
            inner: profile.dims.inner,
            skew: profile.dims.skew,
        },
        classification,
        checks,
    })
}
