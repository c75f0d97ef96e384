//! JSON algebra and module files, and Graphviz output.
//!
//! Coefficients are written as `"p/q"` strings (or `"p"` for integers).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{Arrow, QuiverPresentation, Relation};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat};
use crate::modules::Module;
use crate::algebra::AlgebraRef;

pub const ALGEBRA_EXT: &str = ".qalg.json";
pub const MODULE_EXT: &str = ".qmod.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
    #[serde(default)]
    pub relations: Vec<Vec<TermEntry>>,
}

fn parse_rat(s: &str) -> Result<Rat> {
    s.parse().map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))
}

impl AlgebraFile {
    pub fn from_presentation(p: &QuiverPresentation) -> Self {
        AlgebraFile {
            name: p.name.clone(),
            vertices: p.vertices.clone(),
            arrows: p
                .arrows
                .iter()
                .map(|a| ArrowEntry {
                    name: a.name.clone(),
                    from: a.source.clone(),
                    to: a.target.clone(),
                })
                .collect(),
            relations: p
                .relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, path)| TermEntry {
                            coeff: c.to_string(),
                            path: path.clone(),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_presentation(&self) -> Result<QuiverPresentation> {
        let relations = self
            .relations
            .iter()
            .map(|r| {
                Ok(Relation {
                    terms: r
                        .iter()
                        .map(|t| Ok((parse_rat(&t.coeff)?, t.path.clone())))
                        .collect::<Result<_>>()?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(QuiverPresentation {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.from.clone(),
                    target: a.to.clone(),
                })
                .collect(),
            relations,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// SHA-256 of the compact JSON form, hex encoded.
    pub fn digest(&self) -> String {
        hex_digest(serde_json::to_string(self).expect("serializable").as_bytes())
    }
}

pub fn hex_digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixEntry {
    pub arrow: String,
    /// Row-major, `dims[source]` rows of `dims[target]` entries.
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub algebra_digest: String,
    pub dims: Vec<usize>,
    pub matrices: Vec<MatrixEntry>,
}

impl ModuleFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Representation of a module over the algebra of `file`, one matrix per arrow.
    pub fn from_module(file: &AlgebraFile, m: &Module) -> Result<Self> {
        let p = m.algebra().presentation().ok_or(Error::NotQuiverPresented)?;
        let mut matrices = Vec::new();
        for (k, arrow) in p.arrows.iter().enumerate() {
            let (s, t) = (p.vertex_index(&arrow.source)?, p.vertex_index(&arrow.target)?);
            let g = &m.generator_actions()[k];
            let rows = m
                .block(s)
                .map(|r| m.block(t).map(|c| g[(r, c)].to_string()).collect())
                .collect();
            matrices.push(MatrixEntry {
                arrow: arrow.name.clone(),
                rows,
            });
        }
        Ok(ModuleFile {
            algebra_digest: file.digest(),
            dims: m.dims().to_vec(),
            matrices,
        })
    }

    pub fn to_module(&self, file: &AlgebraFile, alg: &AlgebraRef) -> Result<Module> {
        if self.algebra_digest != file.digest() {
            return Err(Error::Parse("module file belongs to a different algebra".into()));
        }
        let p = alg.presentation().ok_or(Error::NotQuiverPresented)?;
        let mut mats = Vec::new();
        for arrow in &p.arrows {
            let entry = self
                .matrices
                .iter()
                .find(|e| e.arrow == arrow.name)
                .ok_or_else(|| Error::Parse(format!("no matrix for arrow {}", arrow.name)))?;
            let (s, t) = (p.vertex_index(&arrow.source)?, p.vertex_index(&arrow.target)?);
            let (r, c) = (
                self.dims.get(s).copied().unwrap_or(0),
                self.dims.get(t).copied().unwrap_or(0),
            );
            if entry.rows.len() != r || entry.rows.iter().any(|row| row.len() != c) {
                return Err(Error::InvalidRepresentation(format!("matrix of {} has the wrong shape", arrow.name)));
            }
            let rows = entry
                .rows
                .iter()
                .map(|row| row.iter().map(|x| parse_rat(x)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            mats.push(Mat::from_rows_with_cols(rows, c).unwrap_or_else(|| Mat::zeros(r, c)));
        }
        Module::from_representation(alg.clone(), self.dims.clone(), mats)
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph of the quiver; relations are listed in a leading comment.
pub fn to_dot(p: &QuiverPresentation) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&p.name)).unwrap();
    if !p.relations.is_empty() {
        writeln!(out, "  /* relations:").unwrap();
        for r in &p.relations {
            writeln!(out, "     {} = 0", relation_text(r)).unwrap();
        }
        writeln!(out, "  */").unwrap();
    }
    for v in &p.vertices {
        writeln!(out, "  {};", quote(v)).unwrap();
    }
    for a in &p.arrows {
        writeln!(out, "  {} -> {} [label={}];", quote(&a.source), quote(&a.target), quote(&a.name)).unwrap();
    }
    out.push_str("}\n");
    out
}

fn relation_text(r: &Relation) -> String {
    let mut s = String::new();
    for (k, (c, path)) in r.terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c.clone() } else { c.clone() };
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if !abs.is_one() {
            write!(s, "{abs}*").unwrap();
        }
        s.push_str(&path.join("*"));
    }
    s
}
