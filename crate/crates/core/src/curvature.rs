//! The three-letter curvature of a cyclic word.
//!
//! Two routes to the same number are provided: the alternating sum of
//! pairwise indices of the letter-deleted words ([`curv_mnev`]) and the
//! oriented/disoriented triangle count ([`curv_triangles`]). Triangle counting
//! itself has a linear-time path built from pairwise prefix counts and a
//! cubic enumeration kept as an oracle.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::word::{CyclicWord, Letter};

/// Three distinct letters with a cyclic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicAlphabet3 {
    letters: [Letter; 3],
}

impl CyclicAlphabet3 {
    pub fn new(first: Letter, second: Letter, third: Letter) -> Result<Self> {
        if first == second || first == third {
            return Err(Error::DuplicateLetter(first));
        }
        if second == third {
            return Err(Error::DuplicateLetter(second));
        }
        Ok(CyclicAlphabet3 {
            letters: [first, second, third],
        })
    }

    /// `"abc"` or `"a b c"`.
    pub fn parse(s: &str) -> Result<Self> {
        let letters: Vec<Letter> = if s.split_whitespace().count() > 1 {
            s.split_whitespace().map(Letter::new).collect()
        } else {
            s.trim().chars().map(Letter::from).collect()
        };
        match <[Letter; 3]>::try_from(letters) {
            Ok([a, b, c]) => CyclicAlphabet3::new(a, b, c),
            Err(v) => Err(Error::Parse(format!(
                "alphabet needs exactly 3 letters, got {}",
                v.len()
            ))),
        }
    }

    pub fn letters(&self) -> &[Letter; 3] {
        &self.letters
    }

    pub fn index_of(&self, letter: &Letter) -> Option<usize> {
        self.letters.iter().position(|l| l == letter)
    }

    /// The opposite cyclic order (first letter kept, the other two swapped).
    pub fn reversed(&self) -> CyclicAlphabet3 {
        let [a, b, c] = self.letters.clone();
        CyclicAlphabet3 { letters: [a, c, b] }
    }

    /// Same cyclic order, starting one letter later.
    pub fn rotated(&self) -> CyclicAlphabet3 {
        let [a, b, c] = self.letters.clone();
        CyclicAlphabet3 { letters: [b, c, a] }
    }

    /// `Some(true)` for the same cyclic order, `Some(false)` for the opposite
    /// one, `None` when the letter sets differ.
    pub fn orientation_relative_to(&self, other: &CyclicAlphabet3) -> Option<bool> {
        let shift = other.index_of(&self.letters[0])?;
        let next = &other.letters[(shift + 1) % 3];
        let prev = &other.letters[(shift + 2) % 3];
        if &self.letters[1] == next && &self.letters[2] == prev {
            Some(true)
        } else if &self.letters[1] == prev && &self.letters[2] == next {
            Some(false)
        } else {
            None
        }
    }
}

impl fmt::Display for CyclicAlphabet3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.letters;
        write!(f, "({a},{b},{c})")
    }
}

impl fmt::Debug for CyclicAlphabet3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Occurrence counts of the three alphabet letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LetterCounts {
    pub k0: u64,
    pub k1: u64,
    pub k2: u64,
}

impl LetterCounts {
    pub fn total(&self) -> u64 {
        self.k0 + self.k1 + self.k2
    }

    /// `k0 * k1 * k2`, the number of triangles.
    pub fn triangles(&self) -> Result<u64> {
        self.k0
            .checked_mul(self.k1)
            .and_then(|x| x.checked_mul(self.k2))
            .ok_or(Error::Overflow)
    }
}

/// Oriented (`t_plus`) and disoriented (`t_minus`) triangles of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleCount {
    pub t_plus: u64,
    pub t_minus: u64,
}

impl TriangleCount {
    pub fn total(&self) -> u64 {
        self.t_plus + self.t_minus
    }

    /// `-(t+ - t-) / (2 (t+ + t-))`.
    pub fn curvature(&self) -> Rational {
        let diff = self.t_plus as i128 - self.t_minus as i128;
        Rational::new(-diff, 2 * self.total() as i128)
    }
}

/// The word rewritten as alphabet positions 0, 1, 2, with every letter
/// required to occur at least once.
fn encode(word: &CyclicWord, alphabet: &CyclicAlphabet3) -> Result<(Vec<u8>, LetterCounts)> {
    let mut counts = [0u64; 3];
    let codes = word
        .linear()
        .iter()
        .map(|l| match alphabet.index_of(l) {
            Some(i) => {
                counts[i] += 1;
                Ok(i as u8)
            }
            None => Err(Error::ForeignLetter(l.clone())),
        })
        .collect::<Result<Vec<u8>>>()?;
    if let Some(i) = counts.iter().position(|&k| k == 0) {
        return Err(Error::MissingLetter(alphabet.letters()[i].clone()));
    }
    let [k0, k1, k2] = counts;
    Ok((codes, LetterCounts { k0, k1, k2 }))
}

/// Occurrence counts of the alphabet letters in `word`.
pub fn letter_counts(word: &CyclicWord, alphabet: &CyclicAlphabet3) -> Result<LetterCounts> {
    encode(word, alphabet).map(|(_, counts)| counts)
}

/// Pairwise index of a two-letter linear word.
///
/// With `A` the positions of `x` and `B` the positions of `y` in the stored
/// linearization, returns
/// `(#{(i,j) in AxB : i > j} - #{(i,j) in AxB : i < j}) / (2 |A| |B|)`.
/// Not invariant under rotation of `word`.
pub fn ind(word: &CyclicWord, x: &Letter, y: &Letter) -> Result<Rational> {
    let (mut kx, mut ky) = (0i64, 0i64);
    for l in word.linear() {
        if l == x {
            kx += 1;
        } else if l == y {
            ky += 1;
        } else {
            return Err(Error::ForeignLetter(l.clone()));
        }
    }
    if kx == 0 {
        return Err(Error::MissingLetter(x.clone()));
    }
    if ky == 0 {
        return Err(Error::MissingLetter(y.clone()));
    }
    // Sum over pairs of sign(i - j), i an x position and j a y position.
    let mut ys_seen = 0i64;
    let mut signed = 0i64;
    for l in word.linear() {
        if l == y {
            ys_seen += 1;
        } else {
            let later = ky - ys_seen;
            signed = signed.checked_add(ys_seen - later).ok_or(Error::Overflow)?;
        }
    }
    let denom = 2 * (kx as i128) * (ky as i128);
    Ok(Rational::new(signed.into(), denom))
}

/// Curvature as the alternating sum of pairwise indices of the words with one
/// alphabet letter crossed out, evaluated on the linearization cut open at
/// `start`.
pub fn curv_mnev(word: &CyclicWord, alphabet: &CyclicAlphabet3, start: usize) -> Result<Rational> {
    encode(word, alphabet)?;
    let word = word.rotated(start);
    let [a, b, c] = alphabet.letters();
    let without_a = word.delete_letter(a)?;
    let without_b = word.delete_letter(b)?;
    let without_c = word.delete_letter(c)?;
    Ok(ind(&without_a, b, c)? - ind(&without_b, a, c)? + ind(&without_c, a, b)?)
}

/// `sign(k - j) - sign(k - i) + sign(j - i)`: `+1` when `(i, j, k)` is in
/// positive cyclic order, `-1` otherwise.
pub fn sign_table(i: i64, j: i64, k: i64) -> Result<i8> {
    if i == j || j == k || i == k {
        return Err(Error::DegenerateTriple);
    }
    let sign = |d: i64| d.signum() as i8;
    Ok(sign(k - j) - sign(k - i) + sign(j - i))
}

/// `sum over x positions p, y positions q of sign(q - p)`, one pass.
fn pairwise_signed_sum(codes: &[u8], x: u8, y: u8, ky: i64) -> Result<i64> {
    let mut ys_seen = 0i64;
    let mut total = 0i64;
    for &c in codes {
        if c == y {
            ys_seen += 1;
        } else if c == x {
            total = total.checked_add(ky - 2 * ys_seen).ok_or(Error::Overflow)?;
        }
    }
    Ok(total)
}

/// Oriented and disoriented triangles, in linear time.
///
/// `t+ - t-` is the sum of the three-index sign over all triangles, which
/// splits into three pairwise sums weighted by the count of the third letter.
pub fn count_triangles(word: &CyclicWord, alphabet: &CyclicAlphabet3) -> Result<TriangleCount> {
    let (codes, counts) = encode(word, alphabet)?;
    let k0 = i64::try_from(counts.k0).map_err(|_| Error::Overflow)?;
    let k1 = i64::try_from(counts.k1).map_err(|_| Error::Overflow)?;
    let k2 = i64::try_from(counts.k2).map_err(|_| Error::Overflow)?;
    let bc = pairwise_signed_sum(&codes, 1, 2, k2)?;
    let ac = pairwise_signed_sum(&codes, 0, 2, k2)?;
    let ab = pairwise_signed_sum(&codes, 0, 1, k1)?;
    let weighted = |k: i64, s: i64| k.checked_mul(s).ok_or(Error::Overflow);
    let diff = weighted(k0, bc)?
        .checked_sub(weighted(k1, ac)?)
        .and_then(|d| d.checked_add(weighted(k2, ab).ok()?))
        .ok_or(Error::Overflow)?;
    let total = i64::try_from(counts.triangles()?).map_err(|_| Error::Overflow)?;
    debug_assert_eq!((total + diff) % 2, 0);
    Ok(TriangleCount {
        t_plus: ((total + diff) / 2) as u64,
        t_minus: ((total - diff) / 2) as u64,
    })
}

/// Oriented and disoriented triangles by enumerating every occurrence triple.
pub fn count_triangles_enumerated(
    word: &CyclicWord,
    alphabet: &CyclicAlphabet3,
) -> Result<TriangleCount> {
    let (codes, _) = encode(word, alphabet)?;
    let positions = |x: u8| -> Vec<usize> {
        codes
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == x)
            .map(|(p, _)| p)
            .collect()
    };
    let (a, b, c) = (positions(0), positions(1), positions(2));
    let mut count = TriangleCount {
        t_plus: 0,
        t_minus: 0,
    };
    for &i in &a {
        for &j in &b {
            for &k in &c {
                if (i < j && j < k) || (j < k && k < i) || (k < i && i < j) {
                    count.t_plus += 1;
                } else {
                    count.t_minus += 1;
                }
            }
        }
    }
    Ok(count)
}

/// Curvature from the triangle count: `-(t+ - t-) / (2 (t+ + t-))`.
pub fn curv_triangles(word: &CyclicWord, alphabet: &CyclicAlphabet3) -> Result<Rational> {
    count_triangles(word, alphabet).map(|t| t.curvature())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CyclicWord {
        CyclicWord::from_compact(s).unwrap()
    }

    fn alpha(s: &str) -> CyclicAlphabet3 {
        CyclicAlphabet3::parse(s).unwrap()
    }

    fn l(c: char) -> Letter {
        Letter::from(c)
    }

    #[test]
    fn ind_examples() {
        assert_eq!(
            ind(&w("bcbbcccb"), &l('b'), &l('c')).unwrap(),
            Rational::new(-1, 8)
        );
        assert_eq!(ind(&w("caccac"), &l('a'), &l('c')).unwrap(), Rational::ZERO);
        assert_eq!(ind(&w("babbab"), &l('a'), &l('b')).unwrap(), Rational::ZERO);
        assert_eq!(
            ind(&w("xy"), &l('x'), &l('y')).unwrap(),
            Rational::new(-1, 2)
        );
    }

    #[test]
    fn ind_errors() {
        assert_eq!(
            ind(&w("bbb"), &l('a'), &l('b')),
            Err(Error::MissingLetter(l('a')))
        );
        assert_eq!(
            ind(&w("aab"), &l('a'), &l('c')),
            Err(Error::ForeignLetter(l('b')))
        );
    }

    #[test]
    fn ind_depends_on_the_cut() {
        let word = w("aabb");
        assert_eq!(ind(&word, &l('a'), &l('b')).unwrap(), Rational::new(-1, 2));
        assert_eq!(
            ind(&word.rotated(2), &l('a'), &l('b')).unwrap(),
            Rational::new(1, 2)
        );
    }

    #[test]
    fn mnev_examples() {
        let cases = [
            ("bcabbccacb", "abc", Rational::new(-1, 8)),
            ("ddbbccdbc", "cbd", Rational::new(5, 18)),
            ("papaspaspsa", "aps", Rational::new(1, 24)),
        ];
        for (word, a, expected) in cases {
            assert_eq!(
                curv_mnev(&w(word), &alpha(a), 0).unwrap(),
                expected,
                "{word}"
            );
        }
    }

    #[test]
    fn mnev_errors() {
        assert_eq!(
            curv_mnev(&w("abab"), &alpha("abc"), 0),
            Err(Error::MissingLetter(l('c')))
        );
        assert_eq!(
            curv_mnev(&w("abcd"), &alpha("abc"), 0),
            Err(Error::ForeignLetter(l('d')))
        );
    }

    #[test]
    fn triangle_examples() {
        let t = |word: &str| count_triangles(&w(word), &alpha("abc")).unwrap();
        assert_eq!(
            t("abc"),
            TriangleCount {
                t_plus: 1,
                t_minus: 0
            }
        );
        assert_eq!(
            t("bcabbccacb"),
            TriangleCount {
                t_plus: 20,
                t_minus: 12
            }
        );
        assert_eq!(
            t("abcabc"),
            TriangleCount {
                t_plus: 6,
                t_minus: 2
            }
        );
        let c = |word: &str| curv_triangles(&w(word), &alpha("abc")).unwrap();
        assert_eq!(c("abc"), Rational::new(-1, 2));
        assert_eq!(c("bcabbccacb"), Rational::new(-1, 8));
        assert_eq!(c("abcabc"), Rational::new(-1, 4));
    }

    #[test]
    fn enumeration_agrees_on_examples() {
        for word in ["abc", "acb", "bcabbccacb", "abcabc", "ccbbaa", "abacbcab"] {
            assert_eq!(
                count_triangles(&w(word), &alpha("abc")).unwrap(),
                count_triangles_enumerated(&w(word), &alpha("abc")).unwrap(),
                "{word}"
            );
        }
    }

    #[test]
    fn sign_table_rows() {
        assert_eq!(sign_table(1, 2, 3), Ok(1));
        assert_eq!(sign_table(3, 1, 2), Ok(1));
        assert_eq!(sign_table(2, 3, 1), Ok(1));
        assert_eq!(sign_table(1, 3, 2), Ok(-1));
        assert_eq!(sign_table(2, 1, 3), Ok(-1));
        assert_eq!(sign_table(3, 2, 1), Ok(-1));
        assert_eq!(sign_table(1, 1, 2), Err(Error::DegenerateTriple));
    }

    #[test]
    fn alphabet_orientation() {
        let abc = alpha("abc");
        assert_eq!(alpha("bca").orientation_relative_to(&abc), Some(true));
        assert_eq!(alpha("acb").orientation_relative_to(&abc), Some(false));
        assert_eq!(abc.reversed().orientation_relative_to(&abc), Some(false));
        assert_eq!(abc.rotated().orientation_relative_to(&abc), Some(true));
        assert_eq!(alpha("abd").orientation_relative_to(&abc), None);
        assert_eq!(
            CyclicAlphabet3::parse("aba"),
            Err(Error::DuplicateLetter(l('a')))
        );
        assert!(matches!(CyclicAlphabet3::parse("ab"), Err(Error::Parse(_))));
        let long = CyclicAlphabet3::parse("v1 v2 v3").unwrap();
        assert_eq!(long.letters()[2], Letter::new("v3"));
    }

    #[test]
    fn long_words_do_not_overflow() {
        let word = CyclicWord::new(
            std::iter::repeat_n([l('a'), l('b'), l('c')], 200_000)
                .flatten()
                .collect(),
        )
        .unwrap();
        let t = count_triangles(&word, &alpha("abc")).unwrap();
        assert_eq!(t.total(), 200_000u64.pow(3));
        let curv = t.curvature();
        assert!(curv.abs() <= Rational::new(1, 2));
        assert_eq!(curv_mnev(&word, &alpha("abc"), 0).unwrap(), curv);
    }
}
