use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::classify::{analyze_structure, classify_dim2, classify_dim3, ClassifyError, ClassifyOptions, Outcome};
use crate::commutant::{
    centralizer_algebra, dickson_radical, find_rotational_element, invariant_flag_search,
    truncated_derived_series, AlgebraBasis, Certificate, CertificateError, CommutantError, Decomposition,
    DerivedSeries, Flag, RotationalElement,
};
use crate::linalg::rational::{format_rational, parse_rational};
use crate::linalg::{RatMatrix, Rational, Subspace, Vector};
use crate::representation::{
    benzecri_suspend, embed_affine_as_projective, Assumption, LiftSelection, RepError, RepKind, Representation,
};

use super::document::input_digest;

pub const REPORT_SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Suspend,
    Classify,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Suspend => "suspend",
            Command::Classify => "classify",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Command::Analyze, Command::Suspend, Command::Classify]
            .into_iter()
            .find(|c| c.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub max_word_length: usize,
    pub commutator_depth: usize,
    pub search_bound: i64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            max_word_length: 6,
            commutator_depth: 8,
            search_bound: crate::commutant::DEFAULT_SEARCH_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutantSummary {
    pub ambient_dim: usize,
    pub dim: usize,
    pub radical_dim: usize,
    pub quotient_dim: usize,
    pub quotient_commutative: bool,
    pub radical_commutative: bool,
    pub idempotent_witnesses: usize,
}

impl CommutantSummary {
    fn new(commutant: &AlgebraBasis, dec: &Decomposition) -> Self {
        Self {
            ambient_dim: commutant.ambient_dim(),
            dim: commutant.dim(),
            radical_dim: dec.radical.dim(),
            quotient_dim: dec.quotient_dim,
            quotient_commutative: dec.quotient_commutative,
            radical_commutative: dec.radical_commutative,
            idempotent_witnesses: dec.idempotent_witnesses.len(),
        }
    }
}

/// Everything one command produces for one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: Command,
    pub input_digest: String,
    pub input: Representation,
    pub commutant: Option<CommutantSummary>,
    pub automorphism_dim: Option<usize>,
    pub derived: Option<(DerivedSeries, usize, usize)>,
    pub certificates: Vec<Certificate>,
    pub outcome: Option<Outcome>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(command: Command, rep: &Representation) -> Self {
        Self {
            command,
            input_digest: input_digest(rep),
            input: rep.clone(),
            commutant: None,
            automorphism_dim: None,
            derived: None,
            certificates: Vec::new(),
            outcome: None,
            notes: Vec::new(),
        }
    }
}

/// Commutant, radical, truncated derived series and certificates of the
/// representation as given.
pub fn analyze_report(rep: &Representation, options: &AnalyzeOptions) -> Result<Report, CommutantError> {
    let mut report = Report::new(Command::Analyze, rep);
    let commutant = centralizer_algebra(rep);
    let dec = dickson_radical(&commutant)?;
    report.commutant = Some(CommutantSummary::new(&commutant, &dec));
    let series = truncated_derived_series(rep, options.commutator_depth, options.max_word_length)?;
    report.derived = Some((series, options.commutator_depth, options.max_word_length));
    if !rep.assumptions().compact {
        report
            .notes
            .push("compact not declared: the commutant is reported as a model of the automorphism algebra".into());
    }
    if let Some(flag) = invariant_flag_search(rep) {
        report.certificates.push(Certificate::InvariantFlag(flag));
    }
    if let Some(rot) = find_rotational_element(&commutant, options.search_bound) {
        report.certificates.push(Certificate::RotationalElement(rot));
    }
    Ok(report)
}

/// Suspension of a projective-class input, returned with its report.
pub fn suspend_report(
    rep: &Representation,
    factor: &Rational,
) -> Result<(Representation, Report), RepError> {
    let suspended = benzecri_suspend(rep, &LiftSelection::Canonical, factor)?;
    let mut report = Report::new(Command::Suspend, rep);
    report.notes.push(format!(
        "suspended to a linear representation of dimension {} with central generator {}·I",
        suspended.dimension(),
        format_rational(factor)
    ));
    report.notes.push(format!("suspended digest {}", input_digest(&suspended)));
    Ok((suspended, report))
}

pub fn classify_report(
    rep: &Representation,
    dimension: usize,
    options: &ClassifyOptions,
) -> Result<Report, ClassifyError> {
    let outcome = match dimension {
        2 => classify_dim2(rep, options)?,
        3 => classify_dim3(rep, options)?,
        _ => {
            return Err(ClassifyError::WrongDimension {
                expected: if rep.dimension() == 2 { 2 } else { 3 },
                found: dimension,
            })
        }
    };
    let mut report = Report::new(Command::Classify, rep);
    let analysis = analyze_structure(&projective_view(rep)?, options)?;
    report.commutant = Some(CommutantSummary::new(&analysis.commutant, &analysis.decomposition));
    report.automorphism_dim = Some(analysis.automorphism_dim);
    report.certificates = outcome.certificates.clone();
    report.outcome = Some(outcome);
    Ok(report)
}

/// The representation certificates of a classify report refer to.
fn projective_view(rep: &Representation) -> Result<Representation, RepError> {
    match rep.kind() {
        RepKind::ProjectiveClass => Ok(rep.clone()),
        _ => embed_affine_as_projective(rep),
    }
}

fn rat(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn matrix_json(m: &RatMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| rat(&m[(i, j)])).collect())).collect())
}

fn subspace_json(s: &Subspace) -> Value {
    json!({
        "ambient_dim": s.ambient_dim(),
        "dim": s.dim(),
        "basis": s.basis().iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    let mut obj = Map::new();
    obj.insert("type".into(), c.kind().into());
    match c {
        Certificate::InvariantFlag(flag) => {
            obj.insert("dims".into(), json!(flag.dims()));
            obj.insert("complete".into(), flag.is_complete().into());
            obj.insert("chain".into(), Value::Array(flag.chain().iter().map(subspace_json).collect()));
        }
        Certificate::RotationalElement(rot) => {
            obj.insert("matrix".into(), matrix_json(&rot.j));
            obj.insert("u".into(), subspace_json(&rot.u));
            obj.insert("v".into(), subspace_json(&rot.v));
        }
        Certificate::FixedProjectivePoint(p) => {
            obj.insert("point".into(), vector_json(p));
        }
        Certificate::InvariantSubspace(s) => {
            obj.insert("subspace".into(), subspace_json(s));
        }
        Certificate::NoneFound => {}
    }
    Value::Object(obj)
}

fn outcome_json(o: &Outcome) -> Value {
    json!({
        "branch": o.branch.as_str(),
        "branch_description": o.branch.description(),
        "conclusion": o.conclusion.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
        "label": o.label(),
        "assumptions_used": o.assumptions_used.iter().map(|a| a.key()).collect::<Vec<_>>(),
        "notes": o.notes,
    })
}

impl Report {
    pub fn to_value(&self) -> Value {
        let assumptions: Map<String, Value> = Assumption::ALL
            .iter()
            .map(|&a| (a.key().to_string(), self.input.assumptions().holds(a).into()))
            .collect();
        let mut obj = Map::new();
        obj.insert("schema_version".into(), REPORT_SCHEMA_VERSION.into());
        obj.insert("command".into(), self.command.as_str().into());
        obj.insert("input_digest".into(), self.input_digest.clone().into());
        obj.insert(
            "input".into(),
            json!({
                "dimension": self.input.dimension(),
                "kind": self.input.kind().as_str(),
                "generators": self.input.generators().iter().map(|g| g.label.clone()).collect::<Vec<_>>(),
                "assumptions": assumptions,
            }),
        );
        if let Some(c) = &self.commutant {
            obj.insert(
                "commutant".into(),
                json!({
                    "ambient_dim": c.ambient_dim,
                    "dim": c.dim,
                    "radical_dim": c.radical_dim,
                    "quotient_dim": c.quotient_dim,
                    "quotient_commutative": c.quotient_commutative,
                    "radical_commutative": c.radical_commutative,
                    "idempotent_witnesses": c.idempotent_witnesses,
                }),
            );
        }
        if let Some(d) = self.automorphism_dim {
            obj.insert("automorphism_dim".into(), d.into());
        }
        if let Some((series, depth, word)) = &self.derived {
            obj.insert(
                "derived_series".into(),
                json!({
                    "commutator_depth": depth,
                    "max_word_length": word,
                    "verdict": series.verdict.as_str(),
                    "levels": series.levels.iter().map(|l| json!({
                        "depth": l.depth,
                        "nontrivial": l.nontrivial,
                        "all_trivial": l.all_trivial,
                        "truncated": l.truncated,
                    })).collect::<Vec<_>>(),
                }),
            );
        }
        obj.insert(
            "certificates".into(),
            Value::Array(self.certificates.iter().map(certificate_json).collect()),
        );
        obj.insert("outcome".into(), self.outcome.as_ref().map_or(Value::Null, outcome_json));
        obj.insert("notes".into(), json!(self.notes));
        Value::Object(obj)
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command.as_str());
        let _ = writeln!(s, "input digest: {}", self.input_digest);
        let _ = writeln!(
            s,
            "input: dimension {}, kind {}, {} generator(s)",
            self.input.dimension(),
            self.input.kind(),
            self.input.generators().len()
        );
        if let Some(c) = &self.commutant {
            let _ = writeln!(
                s,
                "commutant: dim {} in M_{}, radical dim {}, quotient dim {} ({}commutative)",
                c.dim,
                c.ambient_dim,
                c.radical_dim,
                c.quotient_dim,
                if c.quotient_commutative { "" } else { "non" }
            );
        }
        if let Some(d) = self.automorphism_dim {
            let _ = writeln!(s, "automorphism dimension: {d}");
        }
        if let Some((series, depth, word)) = &self.derived {
            let _ = writeln!(
                s,
                "derived series (depth {depth}, words ≤ {word}): {}",
                series.verdict.as_str()
            );
        }
        for c in &self.certificates {
            let _ = write!(s, "certificate: {}", c.kind());
            match c {
                Certificate::InvariantFlag(f) => {
                    let _ = write!(s, " dims {:?}", f.dims());
                }
                Certificate::RotationalElement(r) => {
                    let _ = write!(s, " dim U {}, dim V {}", r.u.dim(), r.v.dim());
                }
                Certificate::FixedProjectivePoint(p) => {
                    let p: Vec<String> = p.iter().map(format_rational).collect();
                    let _ = write!(s, " [{}]", p.join(", "));
                }
                Certificate::InvariantSubspace(u) => {
                    let _ = write!(s, " dim {}", u.dim());
                }
                Certificate::NoneFound => {}
            }
            s.push('\n');
        }
        if let Some(o) = &self.outcome {
            let _ = writeln!(s, "branch: {} ({})", o.branch.as_str(), o.branch.description());
            let _ = writeln!(s, "conclusion: {}", o.label());
            let used: Vec<&str> = o.assumptions_used.iter().map(|a| a.key()).collect();
            let _ = writeln!(s, "assumptions used: {}", if used.is_empty() { "none".into() } else { used.join(", ") });
            for n in &o.notes {
                let _ = writeln!(s, "note: {n}");
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Malformed(String),
    #[error("certificate {index}: {source}")]
    Certificate {
        index: usize,
        #[source]
        source: CertificateError,
    },
    #[error(transparent)]
    Rep(#[from] RepError),
}

fn malformed(what: &str) -> ReportError {
    ReportError::Malformed(what.to_string())
}

fn rat_from(v: &Value) -> Result<Rational, ReportError> {
    v.as_str()
        .and_then(|s| parse_rational(s).ok())
        .ok_or_else(|| malformed("rational entry"))
}

fn vector_from(v: &Value) -> Result<Vector, ReportError> {
    v.as_array().ok_or_else(|| malformed("vector"))?.iter().map(rat_from).collect()
}

fn subspace_from(v: &Value) -> Result<Subspace, ReportError> {
    let n = v["ambient_dim"].as_u64().ok_or_else(|| malformed("ambient_dim"))? as usize;
    let basis = v["basis"]
        .as_array()
        .ok_or_else(|| malformed("basis"))?
        .iter()
        .map(vector_from)
        .collect::<Result<Vec<_>, _>>()?;
    if basis.iter().any(|b| b.len() != n) {
        return Err(malformed("basis vector length"));
    }
    Ok(Subspace::span(n, basis))
}

/// Reads certificates back from a report value.
pub fn certificates_from_value(report: &Value) -> Result<Vec<Certificate>, ReportError> {
    let list = report["certificates"].as_array().ok_or_else(|| malformed("certificates"))?;
    list.iter()
        .map(|c| match c["type"].as_str() {
            Some("invariant_flag") => {
                let chain = c["chain"]
                    .as_array()
                    .ok_or_else(|| malformed("chain"))?
                    .iter()
                    .map(subspace_from)
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Certificate::InvariantFlag(Flag::new(chain).map_err(|e| ReportError::Malformed(e.to_string()))?))
            }
            Some("rotational_element") => {
                let rows = c["matrix"]
                    .as_array()
                    .ok_or_else(|| malformed("matrix"))?
                    .iter()
                    .map(vector_from)
                    .collect::<Result<Vec<_>, _>>()?;
                let j = RatMatrix::from_rows(rows).map_err(|e| ReportError::Malformed(e.to_string()))?;
                Ok(Certificate::RotationalElement(RotationalElement {
                    j,
                    u: subspace_from(&c["u"])?,
                    v: subspace_from(&c["v"])?,
                }))
            }
            Some("fixed_projective_point") => Ok(Certificate::FixedProjectivePoint(vector_from(&c["point"])?)),
            Some("invariant_subspace") => Ok(Certificate::InvariantSubspace(subspace_from(&c["subspace"])?)),
            Some("none_found") => Ok(Certificate::NoneFound),
            _ => Err(malformed("certificate type")),
        })
        .collect()
}

/// Re-verifies every certificate of a report against the input representation.
pub fn verify_report(report: &Value, input: &Representation) -> Result<usize, ReportError> {
    let certificates = certificates_from_value(report)?;
    let target = match report["command"].as_str() {
        Some("classify") => projective_view(input)?,
        _ => input.clone(),
    };
    for (index, c) in certificates.iter().enumerate() {
        c.verify(&target)
            .map_err(|source| ReportError::Certificate { index, source })?;
    }
    Ok(certificates.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_rep;

    const T3: &str = r#"{"dimension": 3, "kind": "projective-class", "generators": [
        {"label": "a", "matrix": [[1,0,0,1],[0,1,0,0],[0,0,1,0],[0,0,0,1]]},
        {"label": "b", "matrix": [[1,0,0,0],[0,1,0,1],[0,0,1,0],[0,0,0,1]]},
        {"label": "c", "matrix": [[1,0,0,0],[0,1,0,0],[0,0,1,1],[0,0,0,1]]}]}"#;

    #[test]
    fn empty_generators_have_full_commutant() {
        let rep = parse_rep(r#"{"dimension": 3, "kind": "projective-class", "generators": []}"#).unwrap();
        let report = analyze_report(&rep, &AnalyzeOptions::default()).unwrap();
        assert_eq!(report.commutant.as_ref().unwrap().dim, 16);
        assert_eq!(verify_report(&report.to_value(), &rep).unwrap(), report.certificates.len());
    }

    #[test]
    fn classify_report_round_trips_certificates() {
        let rep = parse_rep(T3).unwrap();
        let report = classify_report(&rep, 3, &ClassifyOptions::default()).unwrap();
        let value: Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(value["outcome"]["label"], "SolvableFundamentalGroup");
        assert_eq!(certificates_from_value(&value).unwrap(), report.certificates);
        assert!(verify_report(&value, &rep).unwrap() > 0);
        assert_eq!(report.to_json(), classify_report(&rep, 3, &ClassifyOptions::default()).unwrap().to_json());
        assert!(report.to_text().contains("branch: CommutativeAut"));
    }

    #[test]
    fn undetermined_report_keeps_branch() {
        let rep = parse_rep(
            r#"{"dimension": 2, "kind": "projective-class", "generators": [
            {"label": "d", "matrix": [[1,0,0],[0,2,0],[0,0,3]]},
            {"label": "s", "matrix": [[2,0,1],[1,2,0],[0,1,2]]}]}"#,
        )
        .unwrap();
        let value = classify_report(&rep, 2, &ClassifyOptions::default()).unwrap().to_value();
        assert_eq!(value["outcome"]["branch"], "AutTooSmall");
        assert_eq!(value["certificates"], json!([]));
    }

    #[test]
    fn tampered_certificate_fails() {
        let rep = parse_rep(T3).unwrap();
        let mut value = classify_report(&rep, 3, &ClassifyOptions::default()).unwrap().to_value();
        let cert = value["certificates"]
            .as_array_mut()
            .unwrap()
            .iter_mut()
            .find(|c| c["type"] == "invariant_flag")
            .unwrap();
        cert["chain"] = json!([{"ambient_dim": 4, "basis": [["0", "0", "0", "1"]]}]);
        assert!(matches!(verify_report(&value, &rep), Err(ReportError::Certificate { .. })));
    }

    #[test]
    fn suspend_requires_projective_class() {
        let rep = parse_rep(r#"{"dimension": 2, "kind": "linear"}"#).unwrap();
        let err = suspend_report(&rep, &crate::linalg::rational::int(2)).unwrap_err();
        assert!(err.to_string().contains("kind must be projective-class"), "{err}");
    }
}
