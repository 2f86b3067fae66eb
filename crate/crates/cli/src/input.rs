//! JSON input documents: a Lie algebra by its brackets, a metric by its Gram entries, and an
//! optional block turning a 4-dimensional algebra into a homogeneous model.

use lorhom3_core::isotropy::HomogeneousModel;
use lorhom3_core::lie::LieError;
use lorhom3_core::linalg;
use lorhom3_core::rational::{self, Rational};
use lorhom3_core::{InvariantMetric, LieAlgebra, QVector};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A rational written as a JSON integer or as a `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalField {
    Int(i64),
    Text(String),
}

impl RationalField {
    fn parse(&self, field: &str) -> Result<Rational, InputError> {
        match self {
            RationalField::Int(n) => Ok(rational::int(*n)),
            RationalField::Text(s) => rational::parse(s).map_err(|e| InputError::field(field, e.to_string())),
        }
    }

    fn from_rational(q: &Rational) -> Self {
        RationalField::Text(rational::format(q))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub on: [String; 2],
    pub result: BTreeMap<String, RationalField>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelBlock {
    /// Basis name of the isotropy generator; the remaining basis vectors span the quotient.
    pub isotropy: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, RationalField>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dimension: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    /// Keys `"A,B"` or `"AB"`; missing entries are 0.
    #[serde(default)]
    pub metric: BTreeMap<String, RationalField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("Jacobi identity fails for ({0}, {1}, {2}), component {3}")]
    Jacobi(String, String, String, String),
}

impl InputError {
    fn field(field: &str, message: impl Into<String>) -> Self {
        InputError::Field { field: field.to_string(), message: message.into() }
    }
}

/// What a document describes.
#[derive(Debug, Clone, PartialEq)]
pub enum Parsed {
    LeftInvariant { name: Option<String>, algebra: LieAlgebra, metric: InvariantMetric },
    Model(HomogeneousModel),
}

pub fn parse_document(text: &str) -> Result<InputDocument, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse(text: &str) -> Result<Parsed, InputError> {
    parse_document(text)?.validate()
}

impl InputDocument {
    pub fn validate(&self) -> Result<Parsed, InputError> {
        let n = self.dimension;
        if !(3..=4).contains(&n) {
            return Err(InputError::field("dimension", format!("must be 3 or 4, got {n}")));
        }
        if self.basis.len() != n {
            return Err(InputError::field("basis", format!("expected {n} names, got {}", self.basis.len())));
        }
        for (i, b) in self.basis.iter().enumerate() {
            if b.is_empty() || b.contains(',') {
                return Err(InputError::field(&format!("basis[{i}]"), "names must be nonempty and contain no comma"));
            }
            if self.basis[..i].contains(b) {
                return Err(InputError::field(&format!("basis[{i}]"), format!("duplicate name {b:?}")));
            }
        }
        let algebra = self.algebra()?;
        match (&self.model, n) {
            (None, 3) => {
                let metric = self.metric(&self.basis)?;
                Ok(Parsed::LeftInvariant { name: self.name.clone(), algebra, metric })
            }
            (Some(_), 3) => Err(InputError::field("model", "a model needs a 4-dimensional algebra")),
            (None, _) => Err(InputError::field("model", "a 4-dimensional document needs a model block")),
            (Some(block), _) => self.model(block, algebra).map(Parsed::Model),
        }
    }

    fn index(&self, name: &str, field: &str) -> Result<usize, InputError> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| InputError::field(field, format!("unknown basis name {name:?}")))
    }

    fn algebra(&self) -> Result<LieAlgebra, InputError> {
        let n = self.dimension;
        let names: Vec<&str> = self.basis.iter().map(String::as_str).collect();
        let mut seen: Vec<(usize, usize, usize)> = Vec::new();
        let mut brackets = Vec::new();
        for (k, entry) in self.brackets.iter().enumerate() {
            let field = format!("brackets[{k}]");
            let i = self.index(&entry.on[0], &format!("{field}.on[0]"))?;
            let j = self.index(&entry.on[1], &format!("{field}.on[1]"))?;
            if i == j {
                return Err(InputError::field(&format!("{field}.on"), "a bracket needs two distinct basis vectors"));
            }
            if let Some(&(_, _, prev)) = seen.iter().find(|&&(a, b, _)| (a, b) == (i.min(j), i.max(j))) {
                return Err(InputError::field(&format!("{field}.on"), format!("pair already given in brackets[{prev}]")));
            }
            seen.push((i.min(j), i.max(j), k));
            let mut v: QVector = vec![Rational::zero(); n];
            for (name, value) in &entry.result {
                let rf = format!("{field}.result.{name}");
                v[self.index(name, &rf)?] = value.parse(&rf)?;
            }
            brackets.push((i, j, v));
        }
        let algebra = LieAlgebra::from_brackets(&names, &brackets).map_err(|e| InputError::field("brackets", e.to_string()))?;
        algebra.validate().map_err(|e| match e {
            LieError::JacobiViolation { i, j, l, k } => InputError::Jacobi(
                self.basis[i].clone(),
                self.basis[j].clone(),
                self.basis[l].clone(),
                self.basis[k].clone(),
            ),
            other => InputError::field("brackets", other.to_string()),
        })?;
        Ok(algebra)
    }

    /// Splits a metric key into two names of `names`.
    fn metric_key(key: &str, names: &[String]) -> Result<(usize, usize), InputError> {
        let field = format!("metric.{key}");
        let pos = |s: &str| names.iter().position(|b| b == s);
        if let Some((a, b)) = key.split_once(',') {
            return match (pos(a.trim()), pos(b.trim())) {
                (Some(i), Some(j)) => Ok((i, j)),
                _ => Err(InputError::field(&field, "names must come from the metric basis")),
            };
        }
        let splits: Vec<(usize, usize)> = (1..key.len())
            .filter(|&c| key.is_char_boundary(c))
            .filter_map(|c| Some((pos(&key[..c])?, pos(&key[c..])?)))
            .collect();
        match splits.as_slice() {
            [one] => Ok(*one),
            [] => Err(InputError::field(&field, "not a pair of basis names; write \"A,B\"")),
            _ => Err(InputError::field(&field, "ambiguous pair of basis names; write \"A,B\"")),
        }
    }

    fn metric(&self, names: &[String]) -> Result<InvariantMetric, InputError> {
        let n = names.len();
        let mut set: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; n];
        for (key, value) in &self.metric {
            let (i, j) = Self::metric_key(key, names)?;
            let q = value.parse(&format!("metric.{key}"))?;
            if let Some(prev) = &set[i][j] {
                if *prev != q {
                    return Err(InputError::field(&format!("metric.{key}"), "conflicts with the symmetric entry"));
                }
            }
            set[i][j] = Some(q.clone());
            set[j][i] = Some(q);
        }
        let entries: Vec<(usize, usize, Rational)> = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .filter_map(|(i, j)| set[i][j].clone().map(|q| (i, j, q)))
            .collect();
        let m = InvariantMetric::from_entries(n, &entries);
        if m.gram().rank() < n {
            return Err(InputError::field("metric", "Gram matrix is degenerate"));
        }
        Ok(m)
    }

    fn model(&self, block: &ModelBlock, algebra: LieAlgebra) -> Result<HomogeneousModel, InputError> {
        let y = self.index(&block.isotropy, "model.isotropy")?;
        let quotient: Vec<String> = self.basis.iter().enumerate().filter(|&(i, _)| i != y).map(|(_, b)| b.clone()).collect();
        let metric = self.metric(&quotient)?;
        let mut parameters = Vec::new();
        for (k, v) in &block.parameters {
            parameters.push((k.clone(), v.parse(&format!("model.parameters.{k}"))?));
        }
        let q: Vec<QVector> = (0..4).filter(|&i| i != y).map(|i| linalg::unit(4, i)).collect();
        let name = self.name.clone().unwrap_or_else(|| "input".to_string());
        HomogeneousModel::new(&name, algebra, linalg::unit(4, y), q, metric, parameters)
            .map_err(|e| InputError::field("model", e.to_string()))
    }
}

fn brackets_of(a: &LieAlgebra) -> Vec<BracketEntry> {
    let names = a.names();
    a.nonzero_brackets()
        .into_iter()
        .map(|(i, j, v)| BracketEntry {
            on: [names[i].clone(), names[j].clone()],
            result: v
                .iter()
                .enumerate()
                .filter(|(_, q)| !q.is_zero())
                .map(|(k, q)| (names[k].clone(), RationalField::from_rational(q)))
                .collect(),
        })
        .collect()
}

fn metric_of(m: &InvariantMetric, names: &[String]) -> BTreeMap<String, RationalField> {
    let n = names.len();
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            let q = &m.gram()[(i, j)];
            if !q.is_zero() {
                out.insert(format!("{},{}", names[i], names[j]), RationalField::from_rational(q));
            }
        }
    }
    out
}

/// Document describing a left-invariant metric.
pub fn document_for(name: Option<&str>, a: &LieAlgebra, m: &InvariantMetric) -> InputDocument {
    InputDocument {
        name: name.map(str::to_string),
        dimension: a.dim(),
        basis: a.names().to_vec(),
        brackets: brackets_of(a),
        metric: metric_of(m, a.names()),
        model: None,
    }
}

/// Document describing a model whose isotropy line and quotient are basis vectors.
/// Returns `None` for models built on other vectors.
pub fn document_for_model(model: &HomogeneousModel) -> Option<InputDocument> {
    let y = (0..4).find(|&i| model.isotropy_line == linalg::unit(4, i))?;
    let expected: Vec<QVector> = (0..4).filter(|&i| i != y).map(|i| linalg::unit(4, i)).collect();
    if model.quotient_basis != expected {
        return None;
    }
    let names = model.algebra4.names();
    let quotient: Vec<String> = (0..4).filter(|&i| i != y).map(|i| names[i].clone()).collect();
    Some(InputDocument {
        name: Some(model.name.clone()),
        dimension: 4,
        basis: names.to_vec(),
        brackets: brackets_of(&model.algebra4),
        metric: metric_of(&model.induced_metric, &quotient),
        model: Some(ModelBlock {
            isotropy: names[y].clone(),
            parameters: model
                .parameters
                .iter()
                .map(|(k, v)| (k.clone(), RationalField::from_rational(v)))
                .collect(),
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lorhom3_core::catalog;

    const HEIS: &str = r#"{
        "dimension": 3,
        "basis": ["X", "Z", "T"],
        "brackets": [{"on": ["Z", "T"], "result": {"X": 1}}],
        "metric": {"XX": "1", "Z,T": 1}
    }"#;

    #[test]
    fn parses_keys_in_both_forms() {
        let Parsed::LeftInvariant { algebra, metric, .. } = parse(HEIS).unwrap() else { panic!() };
        assert_eq!(algebra, catalog::heis().with_names(&["X", "Z", "T"]).unwrap());
        assert_eq!(metric, catalog::lorentz_heisenberg_metric());
    }

    #[test]
    fn errors_name_the_field() {
        let bad = HEIS.replace("\"1\"", "\"1/0\"");
        assert!(matches!(parse(&bad), Err(InputError::Field { field, .. }) if field == "metric.XX"));
        let bad = HEIS.replace("\"Z,T\"", "\"Z,Q\"");
        assert!(matches!(parse(&bad), Err(InputError::Field { field, .. }) if field == "metric.Z,Q"));
        let bad = HEIS.replace("\"dimension\": 3,", "\"dimension\": 3,\n \"extra\": 1,");
        assert!(matches!(parse(&bad), Err(InputError::Json { line: 3, .. })));
    }

    #[test]
    fn jacobi_violation_names_basis_vectors() {
        let doc = r#"{"dimension": 3, "basis": ["a","b","c"],
            "brackets": [{"on": ["a","b"], "result": {"a": 1}}, {"on": ["a","c"], "result": {"b": 1}}],
            "metric": {"a,a": 1, "b,b": 1, "c,c": -1}}"#;
        assert!(matches!(parse(doc), Err(InputError::Jacobi(..))));
    }

    #[test]
    fn ambiguous_and_degenerate_inputs() {
        let doc = r#"{"dimension": 3, "basis": ["a","aa","b"], "metric": {"aaa": 1}}"#;
        assert!(matches!(parse(doc), Err(InputError::Field { message, .. }) if message.contains("ambiguous")));
        let doc = r#"{"dimension": 3, "basis": ["a","b","c"], "metric": {"a,a": 1}}"#;
        assert!(matches!(parse(doc), Err(InputError::Field { field, .. }) if field == "metric"));
    }

    #[test]
    fn round_trip_catalog_and_models() {
        for e in catalog::catalog() {
            let doc = document_for(Some(e.name), &e.algebra, &e.metric);
            let text = serde_json::to_string(&doc).unwrap();
            let Parsed::LeftInvariant { algebra, metric, .. } = parse(&text).unwrap() else { panic!() };
            assert_eq!((algebra, metric), (e.algebra, e.metric), "{}", e.name);
        }
        for m in catalog::fixed_models() {
            let doc = document_for_model(&m).unwrap();
            let Parsed::Model(back) = parse(&serde_json::to_string(&doc).unwrap()).unwrap() else { panic!() };
            assert_eq!(back, m);
        }
    }
}
