//! JSON documents for shellings, base complexes and fibrations.
//!
//! Shelling file:
//!
//! ```json
//! {
//!   "vertices": ["a", "b", "c"],
//!   "simplices": [
//!     { "simplex": ["a", "b", "c"], "word": ["a", "b", "c", "a", "b", "c"] }
//!   ]
//! }
//! ```
//!
//! The order inside `simplex` is the orientation for 2-simplices and up.
//! Only maximal simplices are required; listed faces are cross-checked by the
//! validator, missing ones are derived by deletion. A base complex for
//! `product` is the same document with `word` omitted.
//!
//! Fibration file: `total_vertices`, `total_simplices` (lists of vertex
//! names), `projection` (total vertex to base vertex) and `fiber_orders`
//! (base vertex to its preimage in positive cyclic order).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shelling::{
    FibrationDescription, Orientations, OrientedSimplex, Shelling, Simplex, SimplicialComplex,
};
use crate::word::{CyclicWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplexRecord {
    pub simplex: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShellingFile {
    pub vertices: Vec<String>,
    pub simplices: Vec<SimplexRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FibrationFile {
    pub total_vertices: Vec<String>,
    pub total_simplices: Vec<Vec<String>>,
    pub projection: BTreeMap<String, String>,
    pub fiber_orders: BTreeMap<String, Vec<String>>,
}

/// A parsed shelling file: the shelling, the orientations it lists and the
/// declared vertex order.
#[derive(Debug, Clone)]
pub struct ShellingDocument {
    pub shelling: Shelling,
    pub orientations: Orientations,
    pub vertex_order: Vec<Letter>,
}

/// A parsed base complex with its listed orientations and vertex order.
#[derive(Debug, Clone)]
pub struct BaseDocument {
    pub complex: SimplicialComplex,
    pub orientations: Orientations,
    pub vertex_order: Vec<Letter>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn letters(names: &[String]) -> Vec<Letter> {
    names.iter().map(Letter::new).collect()
}

/// Shared checks for both document kinds.
fn read_simplices(
    file: &ShellingFile,
) -> Result<(Vec<Letter>, Vec<OrientedSimplex>, Orientations)> {
    let vertex_order = letters(&file.vertices);
    let declared: BTreeSet<&Letter> = vertex_order.iter().collect();
    if declared.len() != vertex_order.len() {
        return Err(parse_err("`vertices` lists a name twice"));
    }
    let mut oriented = Vec::with_capacity(file.simplices.len());
    let mut orientations = Orientations::new();
    for record in &file.simplices {
        if record.simplex.is_empty() {
            return Err(parse_err("empty `simplex`"));
        }
        let o = OrientedSimplex::new(letters(&record.simplex))?;
        if let Some(v) = o.vertices().iter().find(|v| !declared.contains(v)) {
            return Err(parse_err(format!(
                "simplex [{o}] uses undeclared vertex `{v}`"
            )));
        }
        if o.dim() >= 2 {
            if let Some(prev) = orientations.insert(o.simplex(), o.clone()) {
                if prev.agrees_with(&o) != Some(true) {
                    return Err(parse_err(format!(
                        "simplex [{o}] is listed with both orientations"
                    )));
                }
            }
        }
        oriented.push(o);
    }
    Ok((vertex_order, oriented, orientations))
}

impl ShellingDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ShellingFile =
            serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn from_file(file: &ShellingFile) -> Result<Self> {
        let (vertex_order, oriented, orientations) = read_simplices(file)?;
        let mut listed = Vec::with_capacity(oriented.len());
        for (record, o) in file.simplices.iter().zip(oriented) {
            let word = record
                .word
                .as_ref()
                .ok_or_else(|| parse_err(format!("simplex [{o}] has no `word`")))?;
            let word = CyclicWord::new(letters(word))
                .map_err(|_| parse_err(format!("simplex [{o}] has an empty `word`")))?;
            listed.push((o.simplex(), word));
        }
        Ok(ShellingDocument {
            shelling: Shelling::from_words(listed),
            orientations,
            vertex_order,
        })
    }

    /// Every simplex with its word, listed ones in their given orientation
    /// and derived faces in `vertex_order`.
    pub fn to_file(&self) -> ShellingFile {
        let rank: BTreeMap<&Letter, usize> = self.vertex_order.iter().zip(0..).collect();
        let mut simplices: Vec<&Simplex> = self.shelling.complex().simplices().collect();
        simplices.sort_by_key(|s| (std::cmp::Reverse(s.dim()), (*s).clone()));
        let records = simplices
            .into_iter()
            .map(|s| {
                let vertices = match self.orientations.get(s) {
                    Some(o) => o.vertices().to_vec(),
                    None => {
                        let mut v = s.vertices().to_vec();
                        v.sort_by_key(|x| rank.get(x).copied().unwrap_or(usize::MAX));
                        v
                    }
                };
                SimplexRecord {
                    simplex: vertices.iter().map(|v| v.name().to_owned()).collect(),
                    word: self
                        .shelling
                        .word(s)
                        .map(|w| w.linear().iter().map(|l| l.name().to_owned()).collect()),
                }
            })
            .collect();
        ShellingFile {
            vertices: self
                .vertex_order
                .iter()
                .map(|v| v.name().to_owned())
                .collect(),
            simplices: records,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("plain data serializes")
    }
}

impl BaseDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ShellingFile =
            serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
        let (vertex_order, oriented, orientations) = read_simplices(&file)?;
        let mut complex = SimplicialComplex::from_simplices(oriented.iter().map(|o| o.simplex()));
        let isolated: Vec<Simplex> = vertex_order
            .iter()
            .filter(|v| !complex.vertices().contains(*v))
            .map(|v| Simplex::new([v.clone()]))
            .collect();
        if !isolated.is_empty() {
            complex =
                SimplicialComplex::from_simplices(complex.simplices().cloned().chain(isolated));
        }
        Ok(BaseDocument {
            complex,
            orientations,
            vertex_order,
        })
    }
}

impl FibrationFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_description(&self) -> Result<FibrationDescription> {
        let name = |s: &String| Letter::new(s);
        FibrationDescription::new(
            self.total_vertices.iter().map(name),
            self.total_simplices
                .iter()
                .map(|s| Simplex::new(s.iter().map(name))),
            self.projection
                .iter()
                .map(|(k, v)| (name(k), name(v)))
                .collect(),
            self.fiber_orders
                .iter()
                .map(|(k, v)| (name(k), v.iter().map(name).collect()))
                .collect(),
        )
    }
}
