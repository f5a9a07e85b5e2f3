//! `quadlie`: construct, analyze and double-extend metric Lie algebras.
//!
//! Exit codes: 0 success, 1 validation failure, 2 I/O or parse failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quadlie::constructions::{
    double_extension, euclidean_space, heisenberg, mixed_double_extension, model_embedding, oscillator,
    oscillator_form, so_model, su_model, ExtensionInput, MixedKind, OscillatorSpec,
};
use quadlie::forms::killing_form;
use quadlie::io::{certificate_to_json, form_from_json, hom_from_json, hom_to_json, AlgebraDocument};
use quadlie::linalg::{int, parse_rational};
use quadlie::report::analyze;
use quadlie::reproduce::{reproduce, ClaimParams, CLAIMS};
use quadlie::{BilinearForm, LieAlgebra, Rational};

const DEFAULT_MAX_DIM: usize = 64;

#[derive(Parser)]
#[command(name = "quadlie", version, about = "Exact metric Lie algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and write it as JSON.
    ///
    /// Kinds: heisenberg M | oscillator λ1 [λ2 ...] | abelian N | euclidean N |
    /// su M | so M | mixed M su|so | su-hom M | so-hom M
    Construct {
        kind: String,
        params: Vec<String>,
        /// φ_{t,s} for oscillators, default 0,1.
        #[arg(long, value_name = "T,S", allow_hyphen_values = true)]
        form: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print a structural report for an algebra file.
    Analyze {
        file: PathBuf,
        /// Use φ_{t,s}; only for oscillator files.
        #[arg(long, value_name = "T,S", allow_hyphen_values = true, conflicts_with = "form_file")]
        form: Option<String>,
        #[arg(long)]
        form_file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Double-extend a metric algebra by an extender through a hom file.
    Extend {
        base: PathBuf,
        extender: PathBuf,
        hom: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Where to write the certificate; printed to stdout otherwise.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Re-run a named acceptance check, or `all`.
    Reproduce {
        claim: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        lambda: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Validation(String),
    Io(String),
}

impl From<quadlie::Error> for Failure {
    fn from(e: quadlie::Error) -> Self {
        match e {
            quadlie::Error::Parse(_) => Failure::Io(e.to_string()),
            quadlie::Error::Jacobi(ref triples) => {
                let list: Vec<String> = triples.iter().map(|(i, j, k)| format!("({i}, {j}, {k})")).collect();
                Failure::Validation(format!("Jacobi identity fails on triples {}", list.join(", ")))
            }
            _ => Failure::Validation(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct {
            kind,
            params,
            form,
            output,
        } => construct(&kind, &params, form.as_deref(), output.as_deref()),
        Command::Analyze {
            file,
            form,
            form_file,
            json,
        } => cmd_analyze(&file, form.as_deref(), form_file.as_deref(), json),
        Command::Extend {
            base,
            extender,
            hom,
            output,
            certificate,
        } => extend(&base, &extender, &hom, &output, certificate.as_deref()),
        Command::Reproduce { claim, m, lambda, seed } => cmd_reproduce(&claim, m, lambda, seed),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn max_dim() -> CliResult<usize> {
    match std::env::var("QUADLIE_MAX_DIM") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Validation(format!("QUADLIE_MAX_DIM must be a number, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn guard_dim(dim: usize) -> CliResult<()> {
    let max = max_dim()?;
    if dim > max {
        return Err(Failure::Validation(format!(
            "dimension {dim} exceeds QUADLIE_MAX_DIM={max}"
        )));
    }
    Ok(())
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> CliResult<AlgebraDocument> {
    let text = read(path)?;
    // Cheap size check before the Jacobi validation in the parser.
    if let Ok(v) = serde_json::from_str::<serde_json::Value>(&text) {
        if let Some(dim) = v.get("dim").and_then(serde_json::Value::as_u64) {
            guard_dim(dim as usize)?;
        }
    }
    Ok(AlgebraDocument::from_json(&text)?)
}

fn parse_count(kind: &str, params: &[String]) -> CliResult<usize> {
    match params {
        [p] => p
            .parse()
            .map_err(|_| Failure::Validation(format!("{kind}: expected a natural number, got {p:?}"))),
        _ => Err(Failure::Validation(format!("{kind}: expected exactly one parameter"))),
    }
}

fn parse_pair(text: &str) -> CliResult<(Rational, Rational)> {
    match text.split(',').collect::<Vec<_>>()[..] {
        [t, s] => Ok((parse_rational(t.trim())?, parse_rational(s.trim())?)),
        _ => Err(Failure::Validation(format!("expected T,S, got {text:?}"))),
    }
}

fn parse_rationals(items: &[String]) -> CliResult<Vec<Rational>> {
    items
        .iter()
        .map(|s| parse_rational(s.trim()).map_err(|e| Failure::Validation(e.to_string())))
        .collect()
}

enum Constructed {
    Algebra(AlgebraDocument),
    Hom(Vec<quadlie::Matrix>),
}

fn build(kind: &str, params: &[String], form: Option<&str>) -> CliResult<Constructed> {
    if form.is_some() && kind != "oscillator" {
        return Err(Failure::Validation("--form applies to oscillators only".into()));
    }
    let doc = match kind {
        "heisenberg" => {
            let m = parse_count(kind, params)?;
            guard_dim(2 * m + 1)?;
            AlgebraDocument::plain(heisenberg(m)?)
        }
        "oscillator" => {
            if params.is_empty() {
                return Err(Failure::Validation("oscillator: expected λ values".into()));
            }
            guard_dim(2 * params.len() + 2)?;
            let (t, s) = match form {
                Some(f) => parse_pair(f)?,
                None => (int(0), int(1)),
            };
            let spec = OscillatorSpec::new(parse_rationals(params)?, t, s)?;
            let o = oscillator(&spec)?;
            AlgebraDocument {
                algebra: o.algebra().clone(),
                metric: Some(o.form().clone()),
                oscillator: Some(spec),
            }
        }
        "abelian" => {
            let n = parse_count(kind, params)?;
            guard_dim(n)?;
            AlgebraDocument::plain(LieAlgebra::abelian(n))
        }
        "euclidean" => {
            let n = parse_count(kind, params)?;
            guard_dim(n)?;
            let (algebra, form) = euclidean_space(n).into_parts();
            AlgebraDocument {
                algebra,
                metric: Some(form),
                oscillator: None,
            }
        }
        "su" | "so" => {
            let m = parse_count(kind, params)?;
            let model = if kind == "su" { su_model(m)? } else { so_model(m)? };
            let algebra = model.to_lie_algebra();
            let kappa = killing_form(&algebra);
            AlgebraDocument {
                metric: kappa.is_nondegenerate().then_some(kappa),
                algebra,
                oscillator: None,
            }
        }
        "su-hom" | "so-hom" => {
            let m = parse_count(kind, params)?;
            let k = if kind == "su-hom" { MixedKind::Su } else { MixedKind::So };
            let (_, _, hom) = model_embedding(m, k)?;
            return Ok(Constructed::Hom(hom));
        }
        "mixed" => {
            let (m, k) = match params {
                [m, k] => (
                    m.parse::<usize>()
                        .map_err(|_| Failure::Validation(format!("mixed: bad m {m:?}")))?,
                    k.parse::<MixedKind>()?,
                ),
                _ => return Err(Failure::Validation("mixed: expected M su|so".into())),
            };
            let (algebra, form) = mixed_double_extension(m, k)?.extension.metric.into_parts();
            guard_dim(algebra.dim())?;
            AlgebraDocument {
                algebra,
                metric: Some(form),
                oscillator: None,
            }
        }
        other => {
            return Err(Failure::Validation(format!(
                "unknown kind {other:?}; expected heisenberg, oscillator, abelian, euclidean, su, so, mixed, su-hom or so-hom"
            )))
        }
    };
    Ok(Constructed::Algebra(doc))
}

fn construct(kind: &str, params: &[String], form: Option<&str>, output: Option<&Path>) -> CliResult<ExitCode> {
    let (json, summary) = match build(kind, params, form)? {
        Constructed::Algebra(doc) => (
            doc.to_json(),
            format!("dim {}: {}", doc.algebra.dim(), doc.algebra.labels().join(", ")),
        ),
        Constructed::Hom(hom) => (hom_to_json(&hom), format!("{} hom matrices", hom.len())),
    };
    match output {
        Some(path) => {
            write(path, &json)?;
            println!("{summary}");
        }
        None => {
            print!("{json}");
            eprintln!("{summary}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_analyze(file: &Path, form: Option<&str>, form_file: Option<&Path>, json: bool) -> CliResult<ExitCode> {
    let doc = load_algebra(file)?;
    let chosen: Option<(BilinearForm, String)> = match (form, form_file) {
        (Some(f), _) => {
            let spec = doc
                .oscillator
                .as_ref()
                .ok_or_else(|| Failure::Validation("--form needs an oscillator file".into()))?;
            let (t, s) = parse_pair(f)?;
            let name = format!("φ_{{{},{}}}", quadlie::linalg::format_rational(&t), quadlie::linalg::format_rational(&s));
            Some((oscillator_form(spec.m(), &t, &s), name))
        }
        (None, Some(path)) => Some((form_from_json(&read(path)?)?, path.display().to_string())),
        (None, None) => None,
    };
    let report = analyze(&doc, chosen.as_ref().map(|(f, n)| (f, n.as_str())))?;
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn extend(base: &Path, extender: &Path, hom: &Path, output: &Path, certificate: Option<&Path>) -> CliResult<ExitCode> {
    let base = load_algebra(base)?;
    let extender = load_algebra(extender)?;
    let hom = hom_from_json(&read(hom)?)?;
    guard_dim(base.algebra.dim() + 2 * extender.algebra.dim())?;
    let form = base
        .metric
        .ok_or_else(|| Failure::Validation("base file has no metric".into()))?;
    let input = ExtensionInput {
        base: quadlie::constructions::MetricLieAlgebra::new(base.algebra, form)?,
        extender: extender.algebra,
        hom,
    };
    let ext = double_extension(&input)?;
    let cert = certificate_to_json(&ext.certificate);
    let (algebra, form) = ext.metric.into_parts();
    let summary = format!("dim {}: {}", algebra.dim(), algebra.labels().join(", "));
    let doc = AlgebraDocument {
        algebra,
        metric: Some(form),
        oscillator: None,
    };
    write(output, &doc.to_json())?;
    match certificate {
        Some(path) => {
            write(path, &cert)?;
            println!("{summary}");
        }
        None => print!("{cert}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reproduce(claim: &str, m: Option<usize>, lambda: Option<Vec<String>>, seed: u64) -> CliResult<ExitCode> {
    let params = ClaimParams {
        m,
        lambda: lambda.map(|l| parse_rationals(&l)).transpose()?,
        seed,
    };
    let ids: Vec<&str> = if claim == "all" { CLAIMS.to_vec() } else { vec![claim] };
    let mut ok = true;
    for id in ids {
        let outcome = reproduce(id, &params)?;
        println!("{outcome}");
        ok &= outcome.passed();
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
