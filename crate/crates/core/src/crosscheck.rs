//! Seeded randomized agreement suite.
//!
//! Each case draws one word over `a b c` and one over `a b c d`, each letter
//! at least twice, with a ChaCha8 generator seeded by `seed_from_u64(seed)`.
//! Lengths are uniform in `[6, max_len]` and `[8, max(8, max_len)]`; a draw
//! with some letter occurring fewer than twice is thrown away and redrawn.
//! All cases are generated up front, so the transcript does not depend on
//! the execution mode.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curvature::{
    count_triangles, count_triangles_enumerated, curv_mnev, curv_triangles, CyclicAlphabet3,
};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::rational::Rational;
use crate::sections::curv_by_sections;
use crate::shelling::{coboundary_of_word, OrientedSimplex};
use crate::word::{CyclicWord, Letter};

pub const MIN_MAX_LEN: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrosscheckConfig {
    pub count: usize,
    pub max_len: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    MethodsAgree,
    FastCountMatchesEnumeration,
    RotationInvariance,
    Antisymmetry,
    CoboundaryVanishes,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::MethodsAgree => "methods-agree",
            Check::FastCountMatchesEnumeration => "fast-count",
            Check::RotationInvariance => "rotation",
            Check::Antisymmetry => "antisymmetry",
            Check::CoboundaryVanishes => "coboundary",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub case: usize,
    pub check: Check,
    pub word: CyclicWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub total: usize,
    pub failures: Vec<Failure>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> usize {
        let mut failed: Vec<usize> = self.failures.iter().map(|f| f.case).collect();
        failed.dedup();
        self.total - failed.len()
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fail in &self.failures {
            writeln!(f, "FAIL case {} {}: {}", fail.case, fail.check, fail.word)?;
        }
        let verdict = if self.is_ok() { "OK" } else { "FAILED" };
        write!(f, "{}/{} {}", self.passed(), self.total, verdict)
    }
}

/// Uniform random word over `letters` with every letter at least `min_each`
/// times and length uniform in `[min_len, max_len]`, by rejection.
pub fn random_word<R: Rng>(
    rng: &mut R,
    letters: &[Letter],
    min_each: usize,
    min_len: usize,
    max_len: usize,
) -> CyclicWord {
    let min_len = min_len.max(letters.len() * min_each).max(1);
    assert!(
        min_len <= max_len,
        "no word of length <= {max_len} has every letter {min_each} times"
    );
    loop {
        let len = rng.gen_range(min_len..=max_len);
        let word: Vec<Letter> = (0..len)
            .map(|_| letters[rng.gen_range(0..letters.len())].clone())
            .collect();
        if letters
            .iter()
            .all(|l| word.iter().filter(|x| *x == l).count() >= min_each)
        {
            return CyclicWord::new(word).expect("nonempty");
        }
    }
}

fn three_letter_alphabet() -> CyclicAlphabet3 {
    CyclicAlphabet3::parse("abc").expect("distinct")
}

/// First failing check on a three-letter word, if any.
pub fn check_three_letter_word(word: &CyclicWord) -> Result<Option<Check>> {
    let alphabet = three_letter_alphabet();
    let triangles = curv_triangles(word, &alphabet)?;
    let mnev = curv_mnev(word, &alphabet, 0)?;
    let sections = curv_by_sections(word, &alphabet, Execution::Sequential)?;
    if mnev != triangles || sections != triangles {
        return Ok(Some(Check::MethodsAgree));
    }
    if count_triangles(word, &alphabet)? != count_triangles_enumerated(word, &alphabet)? {
        return Ok(Some(Check::FastCountMatchesEnumeration));
    }
    for r in 1..word.len() {
        if curv_triangles(&word.rotated(r), &alphabet)? != triangles
            || curv_mnev(word, &alphabet, r)? != triangles
        {
            return Ok(Some(Check::RotationInvariance));
        }
    }
    if curv_triangles(word, &alphabet.reversed())? != -triangles {
        return Ok(Some(Check::Antisymmetry));
    }
    Ok(None)
}

pub fn check_four_letter_word(word: &CyclicWord) -> Result<Option<Check>> {
    let tau = OrientedSimplex::parse("abcd")?;
    Ok((coboundary_of_word(word, &tau)? != Rational::ZERO).then_some(Check::CoboundaryVanishes))
}

pub fn run(config: CrosscheckConfig, exec: Execution) -> Result<CrosscheckReport> {
    if config.max_len < MIN_MAX_LEN {
        return Err(Error::Parse(format!(
            "max_len must be at least {MIN_MAX_LEN}, got {}",
            config.max_len
        )));
    }
    let abc: Vec<Letter> = "abc".chars().map(Letter::from).collect();
    let abcd: Vec<Letter> = "abcd".chars().map(Letter::from).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let cases: Vec<(CyclicWord, CyclicWord)> = (0..config.count)
        .map(|_| {
            let three = random_word(&mut rng, &abc, 2, MIN_MAX_LEN, config.max_len);
            let four = random_word(&mut rng, &abcd, 2, 8, config.max_len.max(8));
            (three, four)
        })
        .collect();
    let outcomes = exec::map(exec, &cases, |(three, four)| -> Result<Vec<Failure>> {
        let mut failed = Vec::new();
        if let Some(check) = check_three_letter_word(three)? {
            failed.push((check, three.clone()));
        }
        if let Some(check) = check_four_letter_word(four)? {
            failed.push((check, four.clone()));
        }
        Ok(failed
            .into_iter()
            .map(|(check, word)| Failure {
                case: 0,
                check,
                word,
            })
            .collect())
    });
    let mut failures = Vec::new();
    for (case, outcome) in outcomes.into_iter().enumerate() {
        failures.extend(outcome?.into_iter().map(|f| Failure { case, ..f }));
    }
    Ok(CrosscheckReport {
        total: config.count,
        failures,
    })
}
