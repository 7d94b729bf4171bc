//! Reading a shelling off a simplicial map with circle fibers.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{Shelling, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::word::{CyclicWord, Letter};

/// Total space, base, projection and the positive cyclic order of every
/// vertex fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationDescription {
    total: SimplicialComplex,
    base: SimplicialComplex,
    projection: BTreeMap<Letter, Letter>,
    fiber_orders: BTreeMap<Letter, Vec<Letter>>,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedFibration(msg.into())
}

impl FibrationDescription {
    pub fn new(
        total_vertices: impl IntoIterator<Item = Letter>,
        total_simplices: impl IntoIterator<Item = Simplex>,
        projection: BTreeMap<Letter, Letter>,
        fiber_orders: BTreeMap<Letter, Vec<Letter>>,
    ) -> Result<Self> {
        let total_vertices: BTreeSet<Letter> = total_vertices.into_iter().collect();
        let simplices: Vec<Simplex> = total_simplices.into_iter().collect();
        for s in &simplices {
            if let Some(v) = s.vertices().iter().find(|v| !total_vertices.contains(*v)) {
                return Err(malformed(format!(
                    "simplex [{s}] uses undeclared vertex `{v}`"
                )));
            }
        }
        for v in &total_vertices {
            if !projection.contains_key(v) {
                return Err(malformed(format!("vertex `{v}` has no projection")));
            }
        }
        if let Some(v) = projection.keys().find(|v| !total_vertices.contains(*v)) {
            return Err(malformed(format!("projection of undeclared vertex `{v}`")));
        }

        let mut preimages: BTreeMap<&Letter, BTreeSet<&Letter>> = BTreeMap::new();
        for (v, b) in &projection {
            preimages.entry(b).or_default().insert(v);
        }
        for (b, pre) in &preimages {
            let order = fiber_orders
                .get(*b)
                .ok_or_else(|| malformed(format!("no fiber order for base vertex `{b}`")))?;
            let listed: BTreeSet<&Letter> = order.iter().collect();
            if listed.len() != order.len() || &listed != pre {
                return Err(malformed(format!(
                    "fiber order of `{b}` must list exactly its preimage once each"
                )));
            }
            if order.len() < 2 {
                return Err(malformed(format!(
                    "fiber over `{b}` has fewer than 2 vertices"
                )));
            }
        }
        if let Some(b) = fiber_orders.keys().find(|b| !preimages.contains_key(b)) {
            return Err(malformed(format!(
                "fiber order for `{b}`, which has no preimage"
            )));
        }

        let mut images = Vec::with_capacity(simplices.len());
        for s in &simplices {
            let image = Simplex::new(s.vertices().iter().map(|v| projection[v].clone()));
            if s.vertices().len() - image.vertices().len() > 1 {
                return Err(malformed(format!(
                    "simplex [{s}] collapses by more than one dimension"
                )));
            }
            images.push(image);
        }
        Ok(FibrationDescription {
            total: SimplicialComplex::from_simplices(simplices),
            base: SimplicialComplex::from_simplices(images),
            projection,
            fiber_orders,
        })
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    fn image(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|v| self.projection[v].clone()))
    }

    /// Position of a total vertex in its fiber order.
    fn fiber_index(&self, v: &Letter) -> (usize, usize) {
        let order = &self.fiber_orders[&self.projection[v]];
        let idx = order.iter().position(|u| u == v).expect("checked in new");
        (idx, order.len())
    }

    /// The shelling induced on the base.
    ///
    /// Words of maximal base simplices are read from the cycle of top
    /// simplices over them; lower faces get their words by deletion. Fails if
    /// the result is not a valid shelling.
    pub fn extract_shelling(&self) -> Result<Shelling> {
        let mut listed = Vec::new();
        for delta in self.base.maximal() {
            listed.push((delta.clone(), self.word_over(delta)?));
        }
        let shelling = Shelling::from_words(listed);
        let report = shelling.validate();
        if !report.is_valid() {
            return Err(malformed(format!(
                "extracted words do not form a shelling: {}",
                report.to_string().replace('\n', "; ")
            )));
        }
        Ok(shelling)
    }

    fn word_over(&self, delta: &Simplex) -> Result<CyclicWord> {
        let n = delta.vertices().len();
        // Top simplices over delta, with the base vertex they double and its
        // two preimages.
        let mut tops: Vec<(&Simplex, Letter, [Letter; 2])> = Vec::new();
        for s in self.total.simplices() {
            if s.vertices().len() != n + 1 || self.image(s) != *delta {
                continue;
            }
            let doubled = delta
                .vertices()
                .iter()
                .find(|b| {
                    s.vertices()
                        .iter()
                        .filter(|v| self.projection[*v] == **b)
                        .count()
                        == 2
                })
                .expect("n + 2 vertices onto n + 1 doubles exactly one")
                .clone();
            let pair: Vec<Letter> = s
                .vertices()
                .iter()
                .filter(|v| self.projection[*v] == doubled)
                .cloned()
                .collect();
            tops.push((s, doubled, [pair[0].clone(), pair[1].clone()]));
        }
        if tops.is_empty() {
            return Err(malformed(format!("nothing lies over [{delta}]")));
        }

        // Faces projecting isomorphically onto delta glue consecutive tops.
        let section_faces = |i: usize| -> [Simplex; 2] {
            let (s, _, pair) = &tops[i];
            pair.clone()
                .map(|p| Simplex::new(s.vertices().iter().filter(|v| **v != p).cloned()))
        };
        let mut sharing: HashMap<Simplex, Vec<usize>> = HashMap::new();
        for i in 0..tops.len() {
            for f in section_faces(i) {
                sharing.entry(f).or_default().push(i);
            }
        }
        if let Some((f, owners)) = sharing.iter().find(|(_, o)| o.len() != 2) {
            return Err(malformed(format!(
                "section face [{f}] over [{delta}] bounds {} top simplices, expected 2",
                owners.len()
            )));
        }

        // Walk the cycle from the smallest top simplex. Each step records
        // the top simplex and the face through which the walk leaves it.
        let start = 0; // total.simplices() is sorted
        let mut cycle: Vec<(usize, Simplex)> = Vec::with_capacity(tops.len());
        let mut current = start;
        let mut exit = section_faces(start)[0].clone();
        loop {
            cycle.push((current, exit.clone()));
            let owners = &sharing[&exit];
            let next = if owners[0] == current {
                owners[1]
            } else {
                owners[0]
            };
            if next == start {
                break;
            }
            if cycle.len() > tops.len() {
                return Err(malformed(format!(
                    "top simplices over [{delta}] do not close up"
                )));
            }
            let [f0, f1] = section_faces(next);
            exit = if f0 == exit { f1 } else { f0 };
            current = next;
        }
        if cycle.len() != tops.len() {
            return Err(malformed(format!(
                "top simplices over [{delta}] form more than one cycle"
            )));
        }

        // Fiber steps made inside each top simplex while walking forward.
        let len = cycle.len();
        let mut steps: Vec<(&Letter, isize, usize)> = Vec::with_capacity(len);
        for t in 0..len {
            let (i, exit) = &cycle[t];
            let enter = &cycle[(t + len - 1) % len].1;
            let (_, doubled, pair) = &tops[*i];
            let from = pair
                .iter()
                .find(|p| enter.contains(p))
                .expect("section face");
            let to = pair
                .iter()
                .find(|p| exit.contains(p))
                .expect("section face");
            let (a, k) = self.fiber_index(from);
            let (b, _) = self.fiber_index(to);
            let step = if (a + 1) % k == b {
                1
            } else if (b + 1) % k == a {
                -1
            } else {
                return Err(malformed(format!(
                    "`{from}` and `{to}` are not adjacent in the fiber over `{doubled}`"
                )));
            };
            steps.push((doubled, step, k));
        }

        // Fibers of length two cannot tell the two directions apart, so the
        // first vertex of delta with a longer fiber decides and the others
        // must agree. Without one, the walk is taken forward when it leaves
        // the starting simplex towards the later vertex of its fiber.
        let decisive = delta.vertices().iter().find_map(|v| {
            steps
                .iter()
                .find(|(d, _, k)| *d == v && *k > 2)
                .map(|(_, step, _)| *step)
        });
        let forward = match decisive {
            Some(step) => {
                if steps.iter().any(|(_, s, k)| *k > 2 && *s != step) {
                    return Err(malformed(format!(
                        "fiber orders over [{delta}] disagree on the direction"
                    )));
                }
                step == 1
            }
            None => {
                let (i, exit) = &cycle[0];
                let enter = &cycle[len - 1].1;
                let pair = &tops[*i].2;
                let from = pair
                    .iter()
                    .find(|p| enter.contains(p))
                    .expect("section face");
                let to = pair
                    .iter()
                    .find(|p| exit.contains(p))
                    .expect("section face");
                self.fiber_index(from).0 < self.fiber_index(to).0
            }
        };

        let mut letters: Vec<Letter> = cycle.iter().map(|(i, _)| tops[*i].1.clone()).collect();
        if !forward {
            letters.reverse();
        }
        CyclicWord::new(letters)
    }
}
