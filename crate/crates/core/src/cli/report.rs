//! Structured command output, rendered as aligned text or as JSON.

use std::fmt::Write as _;

use serde_json::{Map, Value as Json};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Int(u64),
    Text(String),
    List(Vec<Value>),
    Map(ReportDocument),
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as u64)
    }
}

impl From<u64> for Value {
    fn from(n: u64) -> Self {
        Value::Int(n)
    }
}

impl From<u32> for Value {
    fn from(n: u32) -> Self {
        Value::Int(n.into())
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<ReportDocument> for Value {
    fn from(d: ReportDocument) -> Self {
        Value::Map(d)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

/// Ordered key-value tree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportDocument {
    entries: Vec<(String, Value)>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportParseError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("unsupported JSON value: {0}")]
    Unsupported(String),
}

impl ReportDocument {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.entries.push((key.into(), value.into()));
        self
    }

    pub fn with(mut self, key: impl Into<String>, value: impl Into<Value>) -> Self {
        self.push(key, value);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render_map(&mut out, self, 0);
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&map_to_json(self)).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, ReportParseError> {
        match serde_json::from_str::<Json>(text)? {
            Json::Object(map) => map_from_json(map),
            other => Err(ReportParseError::Unsupported(other.to_string())),
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.to_string()),
        Value::Int(n) => Some(n.to_string()),
        Value::Text(s) => Some(s.clone()),
        _ => None,
    }
}

fn render_map(out: &mut String, doc: &ReportDocument, indent: usize) {
    let width = doc
        .entries
        .iter()
        .filter(|(_, v)| scalar(v).is_some())
        .map(|(k, _)| k.len())
        .max()
        .unwrap_or(0);
    let pad = " ".repeat(indent);
    for (key, value) in &doc.entries {
        match value {
            Value::List(items) if items.is_empty() => {
                let _ = writeln!(out, "{pad}{key}: (none)");
            }
            Value::List(items) => {
                let _ = writeln!(out, "{pad}{key}:");
                for item in items {
                    match item {
                        Value::Map(m) => {
                            let _ = writeln!(out, "{pad}  -");
                            render_map(out, m, indent + 4);
                        }
                        other => {
                            let text = scalar(other).unwrap_or_else(|| "...".into());
                            let _ = writeln!(out, "{pad}  - {text}");
                        }
                    }
                }
            }
            Value::Map(m) => {
                let _ = writeln!(out, "{pad}{key}:");
                render_map(out, m, indent + 2);
            }
            v => {
                let text = scalar(v).unwrap();
                let _ = writeln!(out, "{pad}{key:<width$}  {text}");
            }
        }
    }
}

fn to_json(v: &Value) -> Json {
    match v {
        Value::Bool(b) => Json::Bool(*b),
        Value::Int(n) => Json::from(*n),
        Value::Text(s) => Json::String(s.clone()),
        Value::List(items) => Json::Array(items.iter().map(to_json).collect()),
        Value::Map(m) => map_to_json(m),
    }
}

fn map_to_json(doc: &ReportDocument) -> Json {
    let mut map = Map::new();
    for (k, v) in &doc.entries {
        map.insert(k.clone(), to_json(v));
    }
    Json::Object(map)
}

fn from_json(v: Json) -> Result<Value, ReportParseError> {
    Ok(match v {
        Json::Bool(b) => Value::Bool(b),
        Json::Number(n) => Value::Int(
            n.as_u64()
                .ok_or_else(|| ReportParseError::Unsupported(n.to_string()))?,
        ),
        Json::String(s) => Value::Text(s),
        Json::Array(items) => Value::List(items.into_iter().map(from_json).collect::<Result<_, _>>()?),
        Json::Object(map) => Value::Map(map_from_json(map)?),
        Json::Null => return Err(ReportParseError::Unsupported("null".into())),
    })
}

fn map_from_json(map: Map<String, Json>) -> Result<ReportDocument, ReportParseError> {
    let mut doc = ReportDocument::new();
    for (k, v) in map {
        doc.push(k, from_json(v)?);
    }
    Ok(doc)
}
