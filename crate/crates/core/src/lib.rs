//! Exact combinatorial first Chern class of simplicial circle bundles.
//!
//! The fiber structure over each base simplex is a cyclic word in the
//! simplex's vertices. This crate computes the rational curvature of
//! three-letter words in three independent ways ([`curv_mnev`],
//! [`curv_triangles`], [`curv_by_sections`]), validates shellings, evaluates
//! the curvature cochain, checks its coboundary on 3-simplices, and sums it
//! over closed oriented surfaces.
//!
//! ```
//! use circle_chern::{curv_triangles, CyclicAlphabet3, CyclicWord, Rational};
//!
//! let word = CyclicWord::from_compact("ddbbccdbc").unwrap();
//! let alphabet = CyclicAlphabet3::parse("cbd").unwrap();
//! assert_eq!(curv_triangles(&word, &alphabet).unwrap(), Rational::new(5, 18));
//! ```

pub mod crosscheck;
pub mod curvature;
mod error;
pub mod exec;
pub mod format;
mod rational;
pub mod sections;
pub mod shelling;
pub mod word;

pub use curvature::{
    count_triangles, count_triangles_enumerated, curv_mnev, curv_triangles, ind, sign_table,
    CyclicAlphabet3, LetterCounts, TriangleCount,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use rational::Rational;
pub use sections::{
    average_index, curv_by_sections, winding_index, ArcChoice, FiberCircle, TriangleSection,
};
pub use shelling::{
    product_shelling, CurvatureCochain, FibrationDescription, Orientations, OrientedSimplex,
    Shelling, Simplex, SimplicialComplex, ValidationReport, Violation,
};
pub use word::{CyclicWord, Letter};
