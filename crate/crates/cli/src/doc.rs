//! The text format: one structure per file, `key: value` lines, lists in
//! JSON. `#` starts a comment line.
//!
//! ```text
//! kind: lattice
//! name: diamond
//! elements: ["0","a","b","1"]
//! leq: [["0","a"],["0","b"],["a","1"],["b","1"]]
//! ```
//!
//! `leq` and `opens` are generators: the order is closed reflexively and
//! transitively, the opens under finite unions and intersections. Saving
//! writes the canonical form (canonical element order, cover pairs, every
//! open), which loads back to the same bytes.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use stonekit::bits::{self, Mask};
use stonekit::dlat::{DistLattice, LatticeError};
use stonekit::order::{FinPoset, OrderError};
use stonekit::topspace::{FinSpace, TopologyError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Lattice(Arc<DistLattice>),
    Space(Arc<FinSpace>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub structure: Structure,
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Lattice { line: usize, source: LatticeError },
    #[error("line {line}: {source}")]
    Topology { line: usize, source: TopologyError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl DocError {
    /// The 1-based line the diagnostic points at, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            DocError::Parse { line, .. } | DocError::Lattice { line, .. } | DocError::Topology { line, .. } => {
                Some(*line)
            }
            DocError::Io { .. } => None,
        }
    }
}

const KEYS: [&str; 6] = ["kind", "name", "elements", "leq", "points", "opens"];

struct Fields<'a> {
    values: BTreeMap<&'static str, (usize, &'a str)>,
    kind_line: usize,
}

impl<'a> Fields<'a> {
    fn get(&self, key: &'static str) -> Result<(usize, &'a str), DocError> {
        self.values.get(key).copied().ok_or_else(|| DocError::Parse {
            line: self.kind_line,
            message: format!("document lacks the `{key}` key"),
        })
    }

    fn forbid(&self, keys: &[&'static str], kind: &str) -> Result<(), DocError> {
        for key in keys {
            if let Some(&(line, _)) = self.values.get(key) {
                return Err(DocError::Parse {
                    line,
                    message: format!("`{key}` does not belong in a {kind} document"),
                });
            }
        }
        Ok(())
    }
}

fn json<T: serde::de::DeserializeOwned>(line: usize, key: &str, what: &str, text: &str) -> Result<T, DocError> {
    serde_json::from_str(text).map_err(|e| DocError::Parse {
        line,
        message: format!("`{key}` must be {what}: {e}"),
    })
}

pub fn parse(text: &str) -> Result<Document, DocError> {
    let mut values = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed.split_once(':').ok_or_else(|| DocError::Parse {
            line,
            message: format!("expected `key: value`, found `{trimmed}`"),
        })?;
        let key = key.trim();
        let known = KEYS.iter().find(|&&k| k == key).ok_or_else(|| DocError::Parse {
            line,
            message: format!("unknown key `{key}`"),
        })?;
        if let Some((first, _)) = values.insert(*known, (line, value.trim())) {
            return Err(DocError::Parse {
                line,
                message: format!("`{key}` repeated (first given on line {first})"),
            });
        }
    }
    let kind_line = values.get("kind").map(|&(l, _)| l).unwrap_or(1);
    let fields = Fields { values, kind_line };
    let (_, kind) = fields.get("kind")?;
    let (_, name) = fields.get("name")?;
    let structure = match kind {
        "lattice" => {
            fields.forbid(&["points", "opens"], "lattice")?;
            Structure::Lattice(Arc::new(load_lattice(&fields)?))
        }
        "space" => {
            fields.forbid(&["elements", "leq"], "space")?;
            Structure::Space(Arc::new(load_space(&fields)?))
        }
        other => {
            return Err(DocError::Parse {
                line: kind_line,
                message: format!("kind must be `lattice` or `space`, not `{other}`"),
            })
        }
    };
    Ok(Document {
        name: name.to_string(),
        structure,
    })
}

fn load_lattice(fields: &Fields) -> Result<DistLattice, DocError> {
    let (el_line, el_text) = fields.get("elements")?;
    let (leq_line, leq_text) = fields.get("leq")?;
    let elements: Vec<String> = json(el_line, "elements", "a list of strings", el_text)?;
    let pairs: Vec<(String, String)> = json(leq_line, "leq", "a list of [lower, upper] pairs", leq_text)?;
    let at = |e: &LatticeError| match e {
        LatticeError::Order(OrderError::DuplicateElement(_) | OrderError::TooLarge(_)) | LatticeError::Empty => el_line,
        _ => leq_line,
    };
    let lattice = FinPoset::order_closure(&elements, &pairs)
        .map_err(LatticeError::from)
        .and_then(DistLattice::new);
    lattice.map_err(|source| DocError::Lattice {
        line: at(&source),
        source,
    })
}

fn load_space(fields: &Fields) -> Result<FinSpace, DocError> {
    let (pt_line, pt_text) = fields.get("points")?;
    let (op_line, op_text) = fields.get("opens")?;
    let points: Vec<String> = json(pt_line, "points", "a list of strings", pt_text)?;
    let opens: Vec<Vec<String>> = json(op_line, "opens", "a list of lists of points", op_text)?;
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(DocError::Topology {
                line: pt_line,
                source: TopologyError::DuplicatePoint(p.clone()),
            });
        }
    }
    let mut masks = Vec::with_capacity(opens.len());
    for open in &opens {
        let mut m: Mask = 0;
        for p in open {
            let i = points.iter().position(|q| q == p).ok_or_else(|| DocError::Topology {
                line: op_line,
                source: TopologyError::UnknownPoint(p.clone()),
            })?;
            m |= bits::bit(i);
        }
        masks.push(m);
    }
    let at = |e: &TopologyError| match e {
        TopologyError::DuplicatePoint(_) | TopologyError::TooLarge(_) => pt_line,
        _ => op_line,
    };
    FinSpace::generated(points, &masks)
        .map(|(x, _)| x)
        .map_err(|source| DocError::Topology {
            line: at(&source),
            source,
        })
}

pub fn load(path: &Path) -> Result<Document, DocError> {
    let text = std::fs::read_to_string(path).map_err(|source| DocError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn save(doc: &Document, path: &Path) -> Result<(), DocError> {
    std::fs::write(path, doc.to_string()).map_err(|source| DocError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn json_list<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("lists of strings serialize")
}

fn point_list(x: &FinSpace, m: Mask) -> Vec<&str> {
    bits::ones(m).map(|i| x.label(i)).collect()
}

impl Document {
    pub fn lattice(name: impl Into<String>, l: Arc<DistLattice>) -> Self {
        Document {
            name: name.into(),
            structure: Structure::Lattice(l),
        }
    }

    pub fn space(name: impl Into<String>, x: Arc<FinSpace>) -> Self {
        Document {
            name: name.into(),
            structure: Structure::Space(x),
        }
    }
}

/// The canonical text.
impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.structure {
            Structure::Lattice(l) => {
                let covers: Vec<(&str, &str)> = l
                    .order()
                    .covers()
                    .into_iter()
                    .map(|(a, b)| (l.label(a), l.label(b)))
                    .collect();
                writeln!(f, "kind: lattice")?;
                writeln!(f, "name: {}", self.name)?;
                writeln!(f, "elements: {}", json_list(&l.labels()))?;
                writeln!(f, "leq: {}", json_list(&covers))
            }
            Structure::Space(x) => {
                let opens: Vec<Vec<&str>> = x.opens().iter().map(|&u| point_list(x, u)).collect();
                writeln!(f, "kind: space")?;
                writeln!(f, "name: {}", self.name)?;
                writeln!(f, "points: {}", json_list(&x.labels()))?;
                writeln!(f, "opens: {}", json_list(&opens))
            }
        }
    }
}
