use serde::Serialize;
use serde_json::Value;
use tree_eigen::{format_rational, Error, Forest, Rational};

/// The document printed on standard output. Field order is fixed and
/// nested objects are key-sorted, so equal inputs give equal bytes.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub provenance: Provenance,
    /// Exit with status 1 after printing (used by `verify`).
    #[serde(skip)]
    pub failed: bool,
}

#[derive(Debug, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results,
            provenance: Provenance {
                tool: "tree-eigen",
                version: env!("CARGO_PKG_VERSION"),
                seed: None,
            },
            failed: false,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.provenance.seed = Some(seed);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// A refusal (code 1) or an input error (code 2).
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn refusal(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::input(e.to_string())
        } else {
            Failure::refusal(e.to_string())
        }
    }
}

pub fn rational(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn vector(x: &[Rational]) -> Value {
    Value::Array(x.iter().map(rational).collect())
}

pub fn labels(f: &Forest, vertices: &[usize]) -> Value {
    Value::Array(
        vertices
            .iter()
            .map(|&v| Value::String(f.label(v).to_string()))
            .collect(),
    )
}

pub fn edges(f: &Forest) -> Value {
    let mut pairs: Vec<(String, String)> = f
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (f.label(u).to_string(), f.label(v).to_string());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    pairs.sort();
    Value::Array(
        pairs
            .into_iter()
            .map(|(a, b)| serde_json::json!([a, b]))
            .collect(),
    )
}
