#![allow(dead_code)]

use std::collections::BTreeMap;

use circle_chern::{FibrationDescription, Letter, Orientations, OrientedSimplex, Simplex};

pub fn letters(s: &str) -> Vec<Letter> {
    s.chars().map(Letter::from).collect()
}

pub fn os(s: &str) -> OrientedSimplex {
    OrientedSimplex::parse(s).unwrap()
}

pub fn orientations(oriented: &[&str]) -> Orientations {
    oriented.iter().map(|s| (os(s).simplex(), os(s))).collect()
}

/// Consistent orientation of the tetrahedron boundary on `a b c d`.
pub fn tetrahedron_boundary() -> Orientations {
    orientations(&["bcd", "adc", "abd", "acb"])
}

/// Octahedron with poles `n`, `s` and equator `e f w b` (in that cyclic order),
/// consistently oriented.
pub fn octahedron() -> Orientations {
    orientations(&["nef", "nfw", "nwb", "nbe", "sfe", "swf", "sbw", "seb"])
}

fn total_vertex(v: &Letter, i: usize) -> Letter {
    Letter::new(format!("{v}{i}"))
}

/// Staircase triangulation of `base x S^1` with an `r`-vertex fiber over
/// each base vertex. `maximal` lists the maximal base simplices with vertices
/// in a common global order; over each fiber segment `i -> i+1` the prism on
/// a simplex `v0 .. vn` is cut into the simplices that advance `v0`, then
/// `v1`, and so on.
pub fn staircase_fibration(maximal: &[Vec<Letter>], r: usize) -> FibrationDescription {
    let mut base_vertices: Vec<Letter> = maximal.iter().flatten().cloned().collect();
    base_vertices.sort();
    base_vertices.dedup();
    let mut total_simplices = Vec::new();
    for simplex in maximal {
        for i in 0..r {
            let next = (i + 1) % r;
            for t in 0..simplex.len() {
                let mut vertices: Vec<Letter> = Vec::new();
                for (s, v) in simplex.iter().enumerate() {
                    if s < t {
                        vertices.push(total_vertex(v, next));
                    } else if s == t {
                        vertices.push(total_vertex(v, i));
                        vertices.push(total_vertex(v, next));
                    } else {
                        vertices.push(total_vertex(v, i));
                    }
                }
                total_simplices.push(Simplex::new(vertices));
            }
        }
    }
    let mut projection = BTreeMap::new();
    let mut fiber_orders = BTreeMap::new();
    let mut total_vertices = Vec::new();
    for v in &base_vertices {
        let fiber: Vec<Letter> = (0..r).map(|i| total_vertex(v, i)).collect();
        for u in &fiber {
            projection.insert(u.clone(), v.clone());
            total_vertices.push(u.clone());
        }
        fiber_orders.insert(v.clone(), fiber);
    }
    FibrationDescription::new(total_vertices, total_simplices, projection, fiber_orders).unwrap()
}
