use std::collections::BTreeSet;
use std::fmt;

use crate::curvature::CyclicAlphabet3;
use crate::error::{Error, Result};
use crate::word::Letter;

/// An unoriented simplex, stored as its sorted vertex list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<Letter>);

impl Simplex {
    /// Sorts and deduplicates `vertices`.
    pub fn new(vertices: impl IntoIterator<Item = Letter>) -> Self {
        let set: BTreeSet<Letter> = vertices.into_iter().collect();
        Simplex(set.into_iter().collect())
    }

    pub fn vertices(&self) -> &[Letter] {
        &self.0
    }

    /// Dimension; `-1` for the empty simplex.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: &Letter) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u64..(1 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i].clone())
                        .collect(),
                )
            })
            .collect()
    }

    /// Faces of codimension one.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.0.len() < 2 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|skip| {
                let mut v = self.0.clone();
                v.remove(skip);
                Simplex(v)
            })
            .collect()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A simplex with an ordering of its vertices; orderings differing by an even
/// permutation are the same orientation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedSimplex(Vec<Letter>);

impl OrientedSimplex {
    pub fn new(vertices: Vec<Letter>) -> Result<Self> {
        let simplex = Simplex::new(vertices.iter().cloned());
        if simplex.0.len() != vertices.len() {
            return Err(Error::Parse(format!(
                "repeated vertex in oriented simplex {vertices:?}"
            )));
        }
        Ok(OrientedSimplex(vertices))
    }

    /// `"a b c"` or `"abc"`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.split_whitespace().count() > 1 {
            OrientedSimplex::new(s.split_whitespace().map(Letter::new).collect())
        } else {
            OrientedSimplex::new(s.trim().chars().map(Letter::from).collect())
        }
    }

    pub fn vertices(&self) -> &[Letter] {
        &self.0
    }

    pub fn simplex(&self) -> Simplex {
        Simplex::new(self.0.iter().cloned())
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    /// Opposite orientation (first two vertices swapped).
    pub fn reversed(&self) -> OrientedSimplex {
        let mut v = self.0.clone();
        if v.len() >= 2 {
            v.swap(0, 1);
        }
        OrientedSimplex(v)
    }

    /// The `i`-th face with the vertex list order inherited, unsigned.
    pub fn face(&self, i: usize) -> OrientedSimplex {
        let mut v = self.0.clone();
        v.remove(i);
        OrientedSimplex(v)
    }

    /// `Some(true)` if both orderings are even permutations of each other,
    /// `Some(false)` if odd, `None` for different vertex sets.
    pub fn agrees_with(&self, other: &OrientedSimplex) -> Option<bool> {
        if self.0.len() != other.0.len() {
            return None;
        }
        let mut perm: Vec<usize> = self
            .0
            .iter()
            .map(|v| other.0.iter().position(|u| u == v))
            .collect::<Option<_>>()?;
        let mut even = true;
        for i in 0..perm.len() {
            while perm[i] != i {
                let j = perm[i];
                perm.swap(i, j);
                even = !even;
            }
        }
        Some(even)
    }

    /// The cyclic alphabet of a 2-simplex.
    pub fn alphabet(&self) -> Result<CyclicAlphabet3> {
        match self.0.as_slice() {
            [a, b, c] => CyclicAlphabet3::new(a.clone(), b.clone(), c.clone()),
            _ => Err(Error::UnknownSimplex(format!("{self} is not a 2-simplex"))),
        }
    }
}

impl fmt::Display for OrientedSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OrientedSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A finite simplicial complex: a set of simplices closed under faces.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    /// The smallest complex containing every given simplex.
    pub fn from_simplices(simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut all = BTreeSet::new();
        for s in simplices {
            if all.contains(&s) {
                continue;
            }
            all.extend(s.faces());
        }
        SimplicialComplex { simplices: all }
    }

    /// Boundary of the `n`-simplex on the given vertices.
    pub fn boundary_of_simplex(vertices: &[Letter]) -> Self {
        SimplicialComplex::from_simplices(Simplex::new(vertices.iter().cloned()).facets())
    }

    pub fn vertices(&self) -> BTreeSet<Letter> {
        self.simplices
            .iter()
            .filter(|s| s.0.len() == 1)
            .map(|s| s.0[0].clone())
            .collect()
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn of_dim(&self, dim: isize) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().filter(move |s| s.dim() == dim)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn dim(&self) -> isize {
        self.simplices.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Simplices not contained in any larger one.
    pub fn maximal(&self) -> Vec<&Simplex> {
        self.simplices
            .iter()
            .filter(|s| {
                !self
                    .simplices
                    .iter()
                    .any(|t| t.0.len() > s.0.len() && s.is_face_of(t))
            })
            .collect()
    }

    /// Simplices one dimension up that contain `s`.
    pub fn cofaces<'a>(&'a self, s: &'a Simplex) -> impl Iterator<Item = &'a Simplex> + 'a {
        self.simplices
            .iter()
            .filter(move |t| t.0.len() == s.0.len() + 1 && s.is_face_of(t))
    }
}
