//! The ideal file format: a JSON document `{"vars": [...], "gens": [[...], ...]}`
//! listing variable names and generator exponent vectors.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::monomial::{Monomial, MonomialIdeal, Ring};
use crate::{Error, Exponent, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub gens: Vec<Vec<Exponent>>,
}

/// A parsed ideal together with diagnostics about the input.
#[derive(Clone, Debug)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    /// Set when the listed generators were not already minimal.
    pub non_minimal_input: bool,
}

impl IdealFile {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealFile {
            vars: ideal.ring().names().to_vec(),
            gens: ideal
                .gens()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
    }

    pub fn into_ideal(self) -> Result<ParsedIdeal> {
        let ring = Arc::new(Ring::new(self.vars)?);
        let n = ring.n();
        for (idx, g) in self.gens.iter().enumerate() {
            if g.len() != n {
                return Err(Error::Parse(format!(
                    "gens[{idx}] has {} exponents, expected {n}",
                    g.len()
                )));
            }
        }
        let listed = self.gens.len();
        let ideal =
            MonomialIdeal::minimalize(ring, self.gens.into_iter().map(Monomial::new).collect())?;
        Ok(ParsedIdeal {
            non_minimal_input: ideal.num_gens() != listed,
            ideal,
        })
    }
}

pub fn parse_ideal_str(text: &str) -> Result<ParsedIdeal> {
    let file: IdealFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    file.into_ideal()
}

pub fn read_ideal(path: &Path) -> Result<ParsedIdeal> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_ideal_str(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// Compact single-line JSON in the ideal file format.
pub fn serialize_ideal(ideal: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealFile::from_ideal(ideal)).expect("plain data serializes")
}
