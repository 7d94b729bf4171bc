//! Shellings: a cyclic word on every simplex of a base complex, compatible
//! under letter deletion, encoding a simplicial circle bundle.

mod cochain;
mod complex;
mod fibration;

use std::collections::BTreeMap;
use std::fmt;

pub use cochain::{coboundary_of_word, CurvatureCochain, Orientations};
pub use complex::{OrientedSimplex, Simplex, SimplicialComplex};
pub use fibration::FibrationDescription;

use crate::error::{Error, Result};
use crate::word::{CyclicWord, Letter};

/// Minimum number of occurrences of each vertex in its simplex's word.
pub const MIN_OCCURRENCES: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingWord {
        simplex: Simplex,
    },
    ForeignLetter {
        simplex: Simplex,
        letter: Letter,
    },
    TooFewOccurrences {
        simplex: Simplex,
        letter: Letter,
        count: usize,
    },
    Incompatible {
        simplex: Simplex,
        face: Simplex,
        expected: CyclicWord,
        found: CyclicWord,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingWord { simplex } => write!(f, "[{simplex}]: no word"),
            Violation::ForeignLetter { simplex, letter } => {
                write!(f, "[{simplex}]: letter `{letter}` is not a vertex")
            }
            Violation::TooFewOccurrences {
                simplex,
                letter,
                count,
            } => write!(
                f,
                "[{simplex}]: vertex `{letter}` occurs {count} time(s), need at least {MIN_OCCURRENCES}"
            ),
            Violation::Incompatible {
                simplex,
                face,
                expected,
                found,
            } => write!(
                f,
                "[{simplex}] -> [{face}]: deletion gives `{expected}` but the face has `{found}`"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("PASS");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A complex together with a cyclic word for each of its simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shelling {
    complex: SimplicialComplex,
    words: BTreeMap<Simplex, CyclicWord>,
}

impl Shelling {
    /// Builds a shelling from words on some simplices.
    ///
    /// The complex is the face closure of the given simplices. A face without
    /// a word of its own gets the word of the first listed simplex containing
    /// it, with the other letters crossed out. Nothing is validated here.
    pub fn from_words(listed: impl IntoIterator<Item = (Simplex, CyclicWord)>) -> Self {
        let listed: Vec<(Simplex, CyclicWord)> = listed.into_iter().collect();
        let complex = SimplicialComplex::from_simplices(listed.iter().map(|(s, _)| s.clone()));
        let mut words: BTreeMap<Simplex, CyclicWord> = BTreeMap::new();
        for (s, w) in &listed {
            words.entry(s.clone()).or_insert_with(|| w.clone());
        }
        for face in complex.simplices() {
            if words.contains_key(face) {
                continue;
            }
            let derived = listed
                .iter()
                .find(|(s, _)| face.is_face_of(s))
                .and_then(|(_, w)| w.retain(|l| face.contains(l)).ok());
            if let Some(w) = derived {
                words.insert(face.clone(), w);
            }
        }
        Shelling { complex, words }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn word(&self, simplex: &Simplex) -> Option<&CyclicWord> {
        self.words.get(simplex)
    }

    pub fn words(&self) -> impl Iterator<Item = (&Simplex, &CyclicWord)> {
        self.words.iter()
    }

    /// Checks letters, occurrence counts and compatibility with every face.
    pub fn validate(&self) -> ValidationReport {
        self.check(|s| s.faces().into_iter().filter(|f| f != s).collect())
    }

    /// Like [`Shelling::validate`] but compares each word only with its
    /// codimension-one faces.
    pub fn validate_facets(&self) -> ValidationReport {
        self.check(Simplex::facets)
    }

    fn check(&self, faces: impl Fn(&Simplex) -> Vec<Simplex>) -> ValidationReport {
        let mut violations = Vec::new();
        for simplex in self.complex.simplices() {
            let Some(word) = self.words.get(simplex) else {
                violations.push(Violation::MissingWord {
                    simplex: simplex.clone(),
                });
                continue;
            };
            let mut foreign: Vec<&Letter> = word
                .linear()
                .iter()
                .filter(|l| !simplex.contains(l))
                .collect();
            foreign.sort();
            foreign.dedup();
            for letter in foreign {
                violations.push(Violation::ForeignLetter {
                    simplex: simplex.clone(),
                    letter: letter.clone(),
                });
            }
            for v in simplex.vertices() {
                let count = word.count(v);
                if count < MIN_OCCURRENCES {
                    violations.push(Violation::TooFewOccurrences {
                        simplex: simplex.clone(),
                        letter: v.clone(),
                        count,
                    });
                }
            }
            for face in faces(simplex) {
                let Some(found) = self.words.get(&face) else {
                    continue;
                };
                let Ok(expected) = word.retain(|l| face.contains(l)) else {
                    // Face letters absent altogether; already reported above.
                    continue;
                };
                if &expected != found {
                    violations.push(Violation::Incompatible {
                        simplex: simplex.clone(),
                        face,
                        expected,
                        found: found.clone(),
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidShelling(
                report.to_string().replace('\n', "; "),
            ))
        }
    }
}

/// The shelling of the trivial bundle with an `r`-vertex fiber: each simplex
/// with vertices `v0 < ... < vn` (in `vertex_order`) gets `(v0 v1 ... vn)^r`.
pub fn product_shelling(
    base: &SimplicialComplex,
    r: usize,
    vertex_order: &[Letter],
) -> Result<Shelling> {
    if r < MIN_OCCURRENCES {
        return Err(Error::FiberTooShort {
            len: r,
            min: MIN_OCCURRENCES,
        });
    }
    let rank: BTreeMap<&Letter, usize> = vertex_order.iter().zip(0..).collect();
    if rank.len() != vertex_order.len()
        || base.vertices().len() != rank.len()
        || base.vertices().iter().any(|v| !rank.contains_key(v))
    {
        return Err(Error::InvalidVertexOrder);
    }
    let words = base.simplices().map(|s| {
        let mut sorted = s.vertices().to_vec();
        sorted.sort_by_key(|v| rank[v]);
        let word = CyclicWord::new(
            sorted
                .iter()
                .cycle()
                .take(r * sorted.len())
                .cloned()
                .collect(),
        )
        .expect("simplices are nonempty");
        (s.clone(), word)
    });
    Ok(Shelling::from_words(words.collect::<Vec<_>>()))
}
