//! Averaging over boundary sections.
//!
//! The fiber over a 2-simplex is modelled as a circle of `m` slots, one per
//! letter of the word, with counterclockwise as the positive direction. A
//! section over the boundary picks one slot for each vertex and, for each side,
//! one of the two arcs joining the chosen slots. Its winding index averaged
//! over all choices reproduces the curvature.

use crate::curvature::{letter_counts, CyclicAlphabet3};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::rational::Rational;
use crate::word::CyclicWord;

/// A circle with `m >= 3` slots `0..m` in counterclockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberCircle {
    slots: usize,
}

impl FiberCircle {
    pub fn new(slots: usize) -> Result<Self> {
        if slots < 3 {
            return Err(Error::FiberTooShort { len: slots, min: 3 });
        }
        Ok(FiberCircle { slots })
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    /// Signed length of the arc from `from` to `to`: in `(0, m)` going
    /// counterclockwise, in `(-m, 0)` going clockwise.
    fn arc_length(&self, from: usize, to: usize, arc: ArcChoice) -> i64 {
        let m = self.slots as i64;
        let ccw = (to as i64 - from as i64).rem_euclid(m);
        match arc {
            ArcChoice::CounterClockwise => ccw,
            ArcChoice::Clockwise => ccw - m,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcChoice {
    Clockwise,
    CounterClockwise,
}

impl ArcChoice {
    pub const BOTH: [ArcChoice; 2] = [ArcChoice::Clockwise, ArcChoice::CounterClockwise];
}

/// Chosen slots over the three vertices and the arcs for the sides
/// A→B, B→C, C→A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleSection {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub arcs: [ArcChoice; 3],
}

/// All eight arc choices.
pub fn arc_choices() -> impl Iterator<Item = [ArcChoice; 3]> {
    ArcChoice::BOTH.into_iter().flat_map(|x| {
        ArcChoice::BOTH
            .into_iter()
            .flat_map(move |y| ArcChoice::BOTH.into_iter().map(move |z| [x, y, z]))
    })
}

fn check_slots(a: usize, b: usize, c: usize, circle: &FiberCircle) -> Result<()> {
    for slot in [a, b, c] {
        if slot >= circle.slots {
            return Err(Error::SlotOutOfRange {
                slot,
                len: circle.slots,
            });
        }
    }
    if a == b || b == c || a == c {
        return Err(Error::DegenerateTriple);
    }
    Ok(())
}

/// Number of turns made by the closed path A→B→C→A.
pub fn winding_index(section: &TriangleSection, circle: &FiberCircle) -> Result<i64> {
    let TriangleSection { a, b, c, arcs } = *section;
    check_slots(a, b, c, circle)?;
    let total = circle.arc_length(a, b, arcs[0])
        + circle.arc_length(b, c, arcs[1])
        + circle.arc_length(c, a, arcs[2]);
    let m = circle.slots as i64;
    debug_assert_eq!(total.rem_euclid(m), 0);
    Ok(total / m)
}

/// Mean winding index over the eight arc choices: `+1/2` when the slots sit
/// in cyclic order A, C, B and `-1/2` for A, B, C.
pub fn average_index(a: usize, b: usize, c: usize, circle: &FiberCircle) -> Result<Rational> {
    check_slots(a, b, c, circle)?;
    let mut sum = 0i64;
    for arcs in arc_choices() {
        sum += winding_index(&TriangleSection { a, b, c, arcs }, circle)?;
    }
    Ok(Rational::new(sum.into(), 8))
}

/// Curvature as the double average of the winding index over all triangles
/// (one occurrence of each letter) and all arc choices.
///
/// Cost is `8 k0 k1 k2`; this is a cross-check, not a fast path.
pub fn curv_by_sections(
    word: &CyclicWord,
    alphabet: &CyclicAlphabet3,
    exec: Execution,
) -> Result<Rational> {
    let counts = letter_counts(word, alphabet)?;
    let circle = FiberCircle::new(word.len())?;
    let positions = |i: usize| -> Vec<usize> {
        let letter = &alphabet.letters()[i];
        word.linear()
            .iter()
            .enumerate()
            .filter(|(_, l)| *l == letter)
            .map(|(p, _)| p)
            .collect()
    };
    let (slots_a, slots_b, slots_c) = (positions(0), positions(1), positions(2));
    let partial = exec::map(exec, &slots_a, |&a| -> Result<Rational> {
        let mut sum = Rational::ZERO;
        for &b in &slots_b {
            for &c in &slots_c {
                sum = sum + average_index(a, b, c, &circle)?;
            }
        }
        Ok(sum)
    });
    let total = partial.into_iter().collect::<Result<Vec<_>>>()?;
    let triangles = counts.triangles()? as i128;
    Ok(total.into_iter().sum::<Rational>() / Rational::from_integer(triangles))
}
