//! Letters and cyclic words.
//!
//! A [`CyclicWord`] keeps the linearization it was built from, because some
//! statistics (see [`crate::curvature::ind`]) depend on where the word is cut
//! open. Equality and hashing only look at the cyclic class, through the
//! lexicographically least rotation.

use std::borrow::Borrow;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A vertex name used as a letter. Letters order by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(name: impl AsRef<str>) -> Self {
        Letter(Arc::from(name.as_ref()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl From<&str> for Letter {
    fn from(s: &str) -> Self {
        Letter::new(s)
    }
}

impl From<char> for Letter {
    fn from(c: char) -> Self {
        Letter::new(c.encode_utf8(&mut [0; 4]))
    }
}

impl Borrow<str> for Letter {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// Index of the lexicographically least rotation of `s`.
///
/// Two-pointer scan in the style of Booth/Duval, linear time.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        match a.cmp(b) {
            std::cmp::Ordering::Equal => k += 1,
            std::cmp::Ordering::Greater => {
                i += k + 1;
                if i <= j {
                    i = j + 1;
                }
                k = 0;
            }
            std::cmp::Ordering::Less => {
                j += k + 1;
                if j <= i {
                    j = i + 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// A nonempty finite word considered up to rotation.
#[derive(Clone)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(CyclicWord { letters })
    }

    /// Parses a word written with one character per letter, e.g. `"bcabbccacb"`.
    pub fn from_compact(s: &str) -> Result<Self> {
        CyclicWord::new(s.chars().map(Letter::from).collect())
    }

    /// Parses a whitespace separated list of letter names.
    pub fn from_names(s: &str) -> Result<Self> {
        CyclicWord::new(s.split_whitespace().map(Letter::new).collect())
    }

    /// The stored linearization.
    pub fn linear(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn count(&self, letter: &Letter) -> usize {
        self.letters.iter().filter(|l| *l == letter).count()
    }

    /// Same cyclic word, cut open `start` positions later.
    pub fn rotated(&self, start: usize) -> CyclicWord {
        let mut letters = self.letters.clone();
        letters.rotate_left(start % self.len());
        CyclicWord { letters }
    }

    pub fn reversed(&self) -> CyclicWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        CyclicWord { letters }
    }

    /// Lexicographically least rotation of the linearization.
    pub fn canonical(&self) -> Vec<Letter> {
        let mut letters = self.letters.clone();
        letters.rotate_left(least_rotation(&self.letters));
        letters
    }

    /// Every occurrence of `letter` crossed out, the rest in the same cyclic order.
    pub fn delete_letter(&self, letter: &Letter) -> Result<CyclicWord> {
        self.retain(|l| l != letter)
    }

    /// Keeps only the letters accepted by `keep`.
    pub fn retain(&self, mut keep: impl FnMut(&Letter) -> bool) -> Result<CyclicWord> {
        CyclicWord::new(self.letters.iter().filter(|l| keep(l)).cloned().collect())
    }

    /// Applies a renaming to every letter.
    pub fn relabel(&self, mut f: impl FnMut(&Letter) -> Letter) -> CyclicWord {
        CyclicWord {
            letters: self.letters.iter().map(&mut f).collect(),
        }
    }

    /// Whether every letter name is a single character.
    pub fn is_compact(&self) -> bool {
        self.letters.iter().all(|l| l.name().chars().count() == 1)
    }
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl Eq for CyclicWord {}

impl Hash for CyclicWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.is_compact() { "" } else { " " };
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            f.write_str(l.name())?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord({self})")
    }
}
