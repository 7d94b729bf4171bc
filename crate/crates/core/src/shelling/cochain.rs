use std::collections::{BTreeMap, HashMap};

use super::{OrientedSimplex, Shelling, Simplex};
use crate::curvature::curv_triangles;
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::rational::Rational;
use crate::word::{CyclicWord, Letter};

/// Chosen orientation per 2-simplex. Missing entries default to the sorted
/// vertex order.
pub type Orientations = BTreeMap<Simplex, OrientedSimplex>;

/// Curvature values on oriented 2-simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureCochain {
    values: BTreeMap<Simplex, (OrientedSimplex, Rational)>,
}

impl CurvatureCochain {
    /// Value on `sigma`, negated when its orientation is opposite to the
    /// stored one.
    pub fn value(&self, sigma: &OrientedSimplex) -> Option<Rational> {
        let (stored, v) = self.values.get(&sigma.simplex())?;
        Some(if sigma.agrees_with(stored)? { *v } else { -*v })
    }

    /// `(oriented simplex, value)` in simplex order.
    pub fn iter(&self) -> impl Iterator<Item = (&OrientedSimplex, Rational)> {
        self.values.values().map(|(s, v)| (s, *v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn orientation_of(simplex: &Simplex, orientations: &Orientations) -> Result<OrientedSimplex> {
    match orientations.get(simplex) {
        Some(o) if o.simplex() == *simplex => Ok(o.clone()),
        Some(o) => Err(Error::UnknownSimplex(format!(
            "orientation {o} does not match simplex {simplex}"
        ))),
        None => OrientedSimplex::new(simplex.vertices().to_vec()),
    }
}

/// Alternating sum over the faces of the oriented 3-simplex `tau` of the
/// curvature of `word` with the omitted vertex crossed out.
///
/// Only asks each vertex to occur at least once.
pub fn coboundary_of_word(word: &CyclicWord, tau: &OrientedSimplex) -> Result<Rational> {
    if tau.dim() != 3 {
        return Err(Error::UnknownSimplex(format!("{tau} is not a 3-simplex")));
    }
    let mut total = Rational::ZERO;
    for i in 0..4 {
        let omitted: &Letter = &tau.vertices()[i];
        let face = tau.face(i);
        let value = curv_triangles(&word.delete_letter(omitted)?, &face.alphabet()?)?;
        total = if i % 2 == 0 {
            total + value
        } else {
            total - value
        };
    }
    Ok(total)
}

impl Shelling {
    /// Curvature of every 2-simplex word under the chosen orientations.
    pub fn curvature_cochain(
        &self,
        orientations: &Orientations,
        exec: Execution,
    ) -> Result<CurvatureCochain> {
        self.require_valid()?;
        let triangles: Vec<&Simplex> = self.complex().of_dim(2).collect();
        let values = exec::map(exec, &triangles, |&s| -> Result<_> {
            let oriented = orientation_of(s, orientations)?;
            let word = self.word(s).expect("validated shelling has every word");
            let value = curv_triangles(word, &oriented.alphabet()?)?;
            Ok((s.clone(), (oriented, value)))
        });
        Ok(CurvatureCochain {
            values: values.into_iter().collect::<Result<_>>()?,
        })
    }

    /// Coboundary of the curvature cochain on an oriented 3-simplex.
    pub fn coboundary_on_3simplex(&self, tau: &OrientedSimplex) -> Result<Rational> {
        let simplex = tau.simplex();
        if tau.dim() != 3 || !self.complex().contains(&simplex) {
            return Err(Error::UnknownSimplex(tau.to_string()));
        }
        self.require_valid()?;
        let word = self
            .word(&simplex)
            .expect("validated shelling has every word");
        coboundary_of_word(word, tau)
    }

    /// Sum of the curvature over a consistently oriented closed surface.
    pub fn chern_number(&self, orientations: &Orientations, exec: Execution) -> Result<Rational> {
        let complex = self.complex();
        if complex.dim() != 2 {
            return Err(Error::NotClosedOrientedSurface(format!(
                "complex has dimension {}",
                complex.dim()
            )));
        }
        let mut directed: HashMap<(Letter, Letter), usize> = HashMap::new();
        for t in complex.of_dim(2) {
            let o = orientation_of(t, orientations)?;
            let v = o.vertices();
            for (x, y) in [(0, 1), (1, 2), (2, 0)] {
                *directed.entry((v[x].clone(), v[y].clone())).or_default() += 1;
            }
        }
        for edge in complex.of_dim(1) {
            let cofaces = complex.cofaces(edge).count();
            if cofaces != 2 {
                return Err(Error::NotClosedOrientedSurface(format!(
                    "edge [{edge}] lies in {cofaces} triangle(s)"
                )));
            }
            let [u, v] = edge.vertices() else {
                unreachable!("1-simplices have two vertices")
            };
            let forward = directed.get(&(u.clone(), v.clone())).copied().unwrap_or(0);
            let backward = directed.get(&(v.clone(), u.clone())).copied().unwrap_or(0);
            if forward != 1 || backward != 1 {
                return Err(Error::NotClosedOrientedSurface(format!(
                    "orientations are inconsistent along edge [{edge}]"
                )));
            }
        }
        let cochain = self.curvature_cochain(orientations, exec)?;
        Ok(cochain.iter().map(|(_, v)| v).sum())
    }
}
