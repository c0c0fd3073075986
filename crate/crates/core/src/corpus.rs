//! The bundled corpus: a `manifest.json` listing ideal files, class tags and
//! expected values that the pipeline must reproduce exactly.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::asymptotics::{self, Classification, Status, Verdict};
use crate::io::{self, serialize_ideal};
use crate::resolution::Caps;
use crate::sample::{IdealSampler, IdealShape};
use crate::{Error, FieldChar, MonomialIdeal, Result};

pub const MANIFEST: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub entries: Vec<CorpusEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    /// Path of the ideal file, relative to the corpus directory.
    pub file: String,
    pub tags: Vec<String>,
    /// Sweep length for this entry.
    #[serde(default, rename = "K", skip_serializing_if = "Option::is_none")]
    pub max_k: Option<u32>,
    /// How a random entry was generated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub random: Option<RandomSpec>,
    #[serde(default)]
    pub expected: Expected,
    /// Where each expected value comes from, keyed like `expected`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub provenance: BTreeMap<String, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct RandomSpec {
    pub seed: u64,
    pub n: usize,
    pub max_gens: usize,
    pub max_exp: u32,
}

impl RandomSpec {
    pub fn generate(&self) -> MonomialIdeal {
        IdealSampler::new(self.seed).ideal(IdealShape {
            n: self.n,
            max_gens: self.max_gens,
            max_exp: self.max_exp,
        })
    }
}

/// Expected values at `k = 1` (`e`, `U`, `L`) and for the sweep (`q`, `E`,
/// `limit`). Rationals are written as `"num/den"` or integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<u64>,
    #[serde(default, rename = "U", skip_serializing_if = "Option::is_none")]
    pub upper: Option<String>,
    #[serde(default, rename = "L", skip_serializing_if = "Option::is_none")]
    pub lower: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(default, rename = "E", skip_serializing_if = "Option::is_none")]
    pub e_invariant: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit: Option<String>,
}

pub const TAG_RADICAL: &str = "radical";
pub const TAG_DIFFERENT_DEGREES: &str = "different-degrees";
pub const TAG_ZERO_DIM_DIFFERENT_DEGREES: &str = "zero-dim-different-degrees";
pub const TAG_COMPLETE_INTERSECTION: &str = "complete-intersection";
pub const TAG_OUTSIDE: &str = "outside-classes";
/// `A/I` is Cohen-Macaulay, i.e. `p = c`.
pub const TAG_COHEN_MACAULAY: &str = "cohen-macaulay";

/// A corpus directory with its manifest.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub dir: PathBuf,
    pub manifest: Manifest,
}

impl Corpus {
    pub fn load(dir: &Path) -> Result<Self> {
        let path = dir.join(MANIFEST);
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let manifest = serde_json::from_str(&text).map_err(|e| {
            Error::Parse(format!(
                "{}: line {}, column {}: {e}",
                path.display(),
                e.line(),
                e.column()
            ))
        })?;
        Ok(Corpus {
            dir: dir.to_path_buf(),
            manifest,
        })
    }

    pub fn ideal(&self, entry: &CorpusEntry) -> Result<MonomialIdeal> {
        Ok(io::read_ideal(&self.dir.join(&entry.file))?.ideal)
    }

    pub fn entry(&self, name: &str) -> Option<&CorpusEntry> {
        self.manifest.entries.iter().find(|e| e.name == name)
    }

    pub fn check(
        &self,
        entry: &CorpusEntry,
        default_k: u32,
        field: FieldChar,
        caps: &Caps,
    ) -> Result<EntryCheck> {
        let ideal = self.ideal(entry)?;
        check_entry(entry, &ideal, default_k, field, caps)
    }
}

/// Result of checking one corpus entry.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EntryCheck {
    pub name: String,
    pub mismatches: Vec<String>,
    pub report: Verdict,
}

impl EntryCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.report.verdict == Status::Pass
    }
}

fn tag_mismatches(tags: &[String], class: &Classification) -> Vec<String> {
    let has = |t: &str| tags.iter().any(|x| x == t);
    let mut out = Vec::new();
    let pairs = [
        (TAG_RADICAL, class.radical_squarefree),
        (TAG_DIFFERENT_DEGREES, class.monomial_different_degrees),
        (
            TAG_ZERO_DIM_DIFFERENT_DEGREES,
            class.zero_dim_different_degrees,
        ),
        (TAG_COMPLETE_INTERSECTION, class.complete_intersection),
        (TAG_OUTSIDE, !class.theorem_applies),
    ];
    for (tag, actual) in pairs {
        if has(tag) != actual {
            out.push(format!(
                "tag {tag:?}: tagged {}, computed {actual}",
                has(tag)
            ));
        }
    }
    out
}

/// Runs the full harness on `ideal` and compares against `entry`. The sweep
/// length is the entry's `K` if set, else `default_k`.
pub fn check_entry(
    entry: &CorpusEntry,
    ideal: &MonomialIdeal,
    default_k: u32,
    field: FieldChar,
    caps: &Caps,
) -> Result<EntryCheck> {
    let report = asymptotics::verify_theorem(ideal, entry.max_k.unwrap_or(default_k), field, caps)?;
    let mut mismatches = tag_mismatches(&entry.tags, &report.classification);
    if let Some(first) = report.records.first() {
        let tagged = entry.tags.iter().any(|t| t == TAG_COHEN_MACAULAY);
        let cm = first.p == report.c;
        if tagged != cm {
            mismatches.push(format!(
                "tag {TAG_COHEN_MACAULAY:?}: tagged {tagged}, but p = {} and c = {}",
                first.p, report.c
            ));
        }
    }

    if let Some(spec) = &entry.random {
        let regenerated = spec.generate();
        if serialize_ideal(&regenerated) != serialize_ideal(ideal) {
            mismatches.push(format!(
                "random entry does not match its seed: file has {ideal}, seed gives {regenerated}"
            ));
        }
    }

    let first = report.records.first();
    let mut compare = |what: &str, expected: Option<String>, actual: Option<String>| {
        if let Some(exp) = expected {
            if actual.as_deref() != Some(exp.as_str()) {
                mismatches.push(format!(
                    "{what}: expected {exp}, computed {}",
                    actual.unwrap_or_else(|| "nothing".into())
                ));
            }
        }
    };
    let x = &entry.expected;
    compare(
        "e",
        x.e.map(|v| v.to_string()),
        first.map(|r| r.e.to_string()),
    );
    compare("U", x.upper.clone(), first.map(|r| r.upper.to_string()));
    compare("L", x.lower.clone(), first.map(|r| r.lower.to_string()));
    compare(
        "q",
        x.q.map(|v| v.to_string()),
        report.fit.as_ref().map(|f| f.q.to_string()),
    );
    compare(
        "E",
        x.e_invariant.map(|v| v.to_string()),
        report.e_invariant.map(|v| v.to_string()),
    );
    compare(
        "limit",
        x.limit.clone(),
        report.limit.as_ref().map(|l| l.to_string()),
    );

    Ok(EntryCheck {
        name: entry.name.clone(),
        mismatches,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::DEFAULT_K;

    #[test]
    fn manifest_round_trip() {
        let text = r#"{"entries":[{"name":"t","file":"t.ideal","tags":["radical"],
            "expected":{"e":3,"U":"3","limit":"3/4"},"provenance":{"e":"by hand"}}]}"#;
        let m: Manifest = serde_json::from_str(text).unwrap();
        assert_eq!(m.entries[0].expected.limit.as_deref(), Some("3/4"));
        let again: Manifest = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(again, m);
        assert!(serde_json::from_str::<Manifest>(r#"{"entries":[{"name":"t"}]}"#).is_err());
    }

    #[test]
    fn check_flags_wrong_expectations() {
        let ideal = io::parse_ideal_str(r#"{"vars":["x","y"],"gens":[[2,0],[0,3]]}"#)
            .unwrap()
            .ideal;
        let mut entry = CorpusEntry {
            name: "ci".into(),
            file: "unused".into(),
            tags: vec![
                TAG_DIFFERENT_DEGREES.into(),
                TAG_ZERO_DIM_DIFFERENT_DEGREES.into(),
                TAG_COMPLETE_INTERSECTION.into(),
                TAG_COHEN_MACAULAY.into(),
            ],
            max_k: None,
            random: None,
            expected: Expected {
                e: Some(6),
                upper: Some("15/2".into()),
                lower: Some("5".into()),
                q: Some(3),
                e_invariant: Some(6),
                limit: Some("2/3".into()),
            },
            provenance: BTreeMap::new(),
        };
        let check =
            check_entry(&entry, &ideal, DEFAULT_K, FieldChar::Zero, &Caps::default()).unwrap();
        assert!(check.passed(), "{:?}", check.mismatches);

        entry.expected.limit = Some("1".into());
        entry.tags.push(TAG_RADICAL.into());
        let check =
            check_entry(&entry, &ideal, DEFAULT_K, FieldChar::Zero, &Caps::default()).unwrap();
        assert_eq!(check.mismatches.len(), 2, "{:?}", check.mismatches);
        assert!(!check.passed());
    }
}
