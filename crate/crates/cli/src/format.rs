//! Rendering of coefficient tables as text, JSON and CSV.
//!
//! JSON documents carry coefficients as decimal strings, since they leave
//! 64-bit range for modest `n`:
//!
//! ```json
//! { "n": 8, "degree": 28, "method": "recursive", "coefficients": ["1", "6", ...] }
//! ```

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigUint;
use qderange_core::{derangement_count, CoeffSeq, MethodTag};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffDocument {
    pub n: u32,
    pub degree: usize,
    pub method: String,
    pub coefficients: Vec<String>,
}

impl CoeffDocument {
    pub fn new(seq: &CoeffSeq, method: MethodTag) -> Self {
        CoeffDocument {
            n: seq.n(),
            degree: seq.degree(),
            method: method.to_string(),
            coefficients: seq.coeffs().iter().map(ToString::to_string).collect(),
        }
    }

    /// Rebuilds the sequence, re-checking every invariant.
    pub fn to_seq(&self) -> Result<(CoeffSeq, MethodTag), CliError> {
        let method: MethodTag = self.method.parse()?;
        if self.degree != self.coefficients.len() {
            return Err(CliError::Document(format!(
                "degree {} but {} coefficients",
                self.degree,
                self.coefficients.len()
            )));
        }
        let coeffs = self
            .coefficients
            .iter()
            .map(|s| {
                s.parse::<BigUint>()
                    .map_err(|e| CliError::Document(format!("coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((CoeffSeq::new(self.n, coeffs)?, method))
    }
}

pub fn render(seq: &CoeffSeq, method: MethodTag, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_text(seq, method),
        OutputFormat::Json => render_json(seq, method),
        OutputFormat::Csv => render_csv(seq),
    }
}

pub fn render_json(seq: &CoeffSeq, method: MethodTag) -> String {
    let mut out = serde_json::to_string_pretty(&CoeffDocument::new(seq, method))
        .expect("document serializes");
    out.push('\n');
    out
}

pub fn parse_json(input: &str) -> Result<(CoeffSeq, MethodTag), CliError> {
    let doc: CoeffDocument = serde_json::from_str(input)?;
    doc.to_seq()
}

pub fn render_csv(seq: &CoeffSeq) -> String {
    let mut out = String::from("index,coefficient\n");
    for (k, c) in seq.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{},{c}", k + 1);
    }
    out
}

pub fn render_text(seq: &CoeffSeq, method: MethodTag) -> String {
    let mut out = String::new();
    let n = seq.n();
    let _ = writeln!(out, "# d_{n}(q), method {method}");
    let _ = writeln!(out, "# degree beta_n = {}", seq.degree());
    let _ = writeln!(out, "# D_n = d_n(1) = {}", derangement_count(n));
    match seq.peak() {
        Some((k, c)) => {
            let _ = writeln!(out, "# peak index {k} (coefficient {c})");
        }
        None => {
            let _ = writeln!(out, "# d_{n}(q) = 0, no coefficients");
        }
    }
    let index_width = seq.degree().to_string().len();
    let coeff_width = seq
        .coeffs()
        .iter()
        .map(|c| c.to_string().len())
        .max()
        .unwrap_or(0);
    for (k, c) in seq.coeffs().iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>iw$} → {:>cw$}",
            k + 1,
            c.to_string(),
            iw = index_width,
            cw = coeff_width
        );
    }
    out
}
