//! JSON file format:
//!
//! ```json
//! {"ring": {"kind": "int_mod", "modulus": 3}, "dim": 2, "parity": [0, 1],
//!  "left": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
//!  "right": [[0, 0, 0, "1"], [0, 1, 1, 1], [1, 0, 1, 1]],
//!  "bar_unit": ["1", "0"], "name": "example"}
//! ```
//!
//! Triples `[i, j, k, c]` mean that `e_i ∘ e_j` has coefficient `c` on
//! `e_k`. Omitted triples are zero. Coefficients are strings such as `"3"`
//! or `"-2/5"`; plain JSON integers are accepted too.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::SuperDialgebra;
use crate::error::{Error, Result};
use crate::exactlin::{GradedFreeModule, Parity, RingSpec, SparseVec};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Text(String),
    Int(i64),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DialgebraFile {
    pub ring: RingSpec,
    pub dim: usize,
    pub parity: Vec<Parity>,
    #[serde(default)]
    pub left: Vec<(usize, usize, usize, Coeff)>,
    #[serde(default)]
    pub right: Vec<(usize, usize, usize, Coeff)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bar_unit: Option<Vec<Coeff>>,
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn coeff(ring: &RingSpec, c: &Coeff, at: &str) -> Result<crate::exactlin::Elem> {
    let parsed = match c {
        Coeff::Text(s) => ring.parse(s),
        Coeff::Int(v) => Ok(ring.from_i64(*v)),
    };
    parsed.map_err(|e| Error::Parse(format!("{at}: {e}")))
}

fn table(
    ring: &RingSpec,
    n: usize,
    triples: &[(usize, usize, usize, Coeff)],
    field: &str,
) -> Result<Vec<Vec<SparseVec>>> {
    let mut raw = vec![vec![Vec::new(); n]; n];
    for (t, (i, j, k, c)) in triples.iter().enumerate() {
        let at = format!("{field}[{t}]");
        if *i >= n || *j >= n || *k >= n {
            return Err(Error::Parse(format!(
                "{at}: index out of range for dimension {n}"
            )));
        }
        raw[*i][*j].push((*k, coeff(ring, c, &at)?));
    }
    Ok(raw
        .into_iter()
        .map(|row| row.into_iter().map(|e| SparseVec::from_entries(ring, e)).collect())
        .collect())
}

impl DialgebraFile {
    pub fn into_dialgebra(self) -> Result<SuperDialgebra> {
        self.ring
            .validate()
            .map_err(|e| Error::Parse(format!("ring: {e}")))?;
        let ring = self.ring;
        let n = self.dim;
        if self.parity.len() != n {
            return Err(Error::Parse(format!(
                "parity: {} entries for dimension {n}",
                self.parity.len()
            )));
        }
        let left = table(&ring, n, &self.left, "left")?;
        let right = table(&ring, n, &self.right, "right")?;
        let bar_unit = match &self.bar_unit {
            None => None,
            Some(cs) => {
                if cs.len() != n {
                    return Err(Error::Parse(format!(
                        "bar_unit: {} coefficients for dimension {n}",
                        cs.len()
                    )));
                }
                let mut e = Vec::new();
                for (i, c) in cs.iter().enumerate() {
                    e.push((i, coeff(&ring, c, &format!("bar_unit[{i}]"))?));
                }
                Some(SparseVec::from_entries(&ring, e))
            }
        };
        let module = match self.labels {
            Some(l) => GradedFreeModule::with_labels(self.parity, l)
                .map_err(|e| Error::Parse(format!("labels: {e}")))?,
            None => GradedFreeModule::new(self.parity),
        };
        SuperDialgebra::new(self.name, ring, module, left, right, bar_unit)
    }

    pub fn from_dialgebra(d: &SuperDialgebra) -> Self {
        let ring = *d.ring();
        let n = d.dim();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in d.left_basis(i, j).entries() {
                    left.push((i, j, *k, Coeff::Text(ring.format(c))));
                }
                for (k, c) in d.right_basis(i, j).entries() {
                    right.push((i, j, *k, Coeff::Text(ring.format(c))));
                }
            }
        }
        DialgebraFile {
            ring,
            dim: n,
            parity: d.module().parities().to_vec(),
            left,
            right,
            bar_unit: d
                .bar_unit()
                .map(|e| (0..n).map(|i| Coeff::Text(ring.format(&e.get(i)))).collect()),
            name: d.name().to_string(),
            labels: d.module().labels().map(|l| l.to_vec()),
        }
    }
}

pub fn from_json(text: &str) -> Result<SuperDialgebra> {
    let file: DialgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_dialgebra()
}

pub fn to_json(d: &SuperDialgebra) -> String {
    serde_json::to_string_pretty(&DialgebraFile::from_dialgebra(d)).expect("serializable")
}

pub fn load_file(path: &Path) -> Result<SuperDialgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let d = from_json(&text)?;
    if d.name().is_empty() {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        return Ok(d.with_name(stem));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superdialg::{builtin, builtin_names};

    #[test]
    fn round_trip_catalog() {
        for name in builtin_names() {
            let d = builtin(name).unwrap();
            let back = from_json(&to_json(&d)).unwrap();
            assert_eq!(back.dim(), d.dim());
            assert_eq!(back.bar_unit(), d.bar_unit());
            for i in 0..d.dim() {
                for j in 0..d.dim() {
                    assert_eq!(back.left_basis(i, j), d.left_basis(i, j));
                    assert_eq!(back.right_basis(i, j), d.right_basis(i, j));
                }
            }
        }
    }

    #[test]
    fn parse_errors_carry_location() {
        let e = from_json("{\"ring\": {\"kind\": \"rationals\"}, \"dim\": 1,").unwrap_err();
        assert!(matches!(e, Error::Parse(ref m) if m.contains("line")));
        let e = from_json(
            r#"{"ring": {"kind": "rationals"}, "dim": 1, "parity": [0], "left": [[0, 0, 3, "1"]]}"#,
        )
        .unwrap_err();
        assert!(matches!(e, Error::Parse(ref m) if m.contains("left[0]")));
        let e = from_json(
            r#"{"ring": {"kind": "integers"}, "dim": 1, "parity": [0], "left": [[0, 0, 0, "1/2"]]}"#,
        )
        .unwrap_err();
        assert!(matches!(e, Error::Parse(_)));
    }

    #[test]
    fn minimal_file() {
        let d = from_json(
            r#"{"ring": {"kind": "int_mod", "modulus": 3}, "dim": 1, "parity": [0],
                "left": [[0, 0, 0, "1"]], "right": [[0, 0, 0, 1]], "bar_unit": ["1"], "name": "f3"}"#,
        )
        .unwrap();
        assert!(d.validate().is_empty());
        assert_eq!(d.name(), "f3");
    }
}
