//! Words in a free group of finite rank.
//!
//! A [`Word`] is stored as a sequence of syllables `(generator, exponent)` and
//! is kept freely reduced: adjacent syllables never share a generator and no
//! exponent is zero.

mod catalog;
mod endo;
mod fox;

pub use catalog::{
    alpha, alpha_plus_f2, beta, beta_plus_f2, delta, epsilon, eta, gamma, kappa_ijk, kappa_jk,
    lambda, nielsen_generators, nu, phi, psi, tau, torelli_generators,
};
pub use catalog::{builtin_automorphism, CatalogParams};
pub use endo::Endomorphism;
pub use fox::{fox_derivative_projected, fox_vector};

use std::fmt;

use crate::error::{Error, Result};

/// A freely reduced element of the free group `F_rank`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            syllables: Vec::new(),
        }
    }

    /// The generator `x_{index}` (0-based).
    pub fn generator(rank: usize, index: usize) -> Self {
        assert!(
            index < rank,
            "generator {index} out of range for rank {rank}"
        );
        Word {
            rank,
            syllables: vec![(index, 1)],
        }
    }

    /// Builds a word from arbitrary syllables, reducing freely.
    pub fn from_syllables(
        rank: usize,
        syllables: impl IntoIterator<Item = (usize, i64)>,
    ) -> Result<Self> {
        let syllables: Vec<_> = syllables.into_iter().collect();
        if let Some(&(g, _)) = syllables.iter().find(|(g, _)| *g >= rank) {
            return Err(Error::GeneratorOutOfRange { index: g, rank });
        }
        Ok(free_reduce_syllables(rank, syllables))
    }

    /// Builds a word from letters `(generator, ±1)`.
    pub fn from_letters(
        rank: usize,
        letters: impl IntoIterator<Item = (usize, i8)>,
    ) -> Result<Self> {
        Self::from_syllables(rank, letters.into_iter().map(|(g, s)| (g, s as i64)))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Length in letters.
    pub fn len(&self) -> usize {
        self.syllables
            .iter()
            .map(|(_, e)| e.unsigned_abs() as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Iterates over single letters `(generator, ±1)`.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.syllables.iter().flat_map(|&(g, e)| {
            let s: i8 = if e > 0 { 1 } else { -1 };
            std::iter::repeat_n((g, s), e.unsigned_abs() as usize)
        })
    }

    pub fn inverse(&self) -> Self {
        Word {
            rank: self.rank,
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Reduced product `self · other`.
    pub fn mul(&self, other: &Word) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch in word product");
        let mut syl = self.syllables.clone();
        for &s in &other.syllables {
            push_syllable(&mut syl, s);
        }
        Word {
            rank: self.rank,
            syllables: syl,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Commutator `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// Whether generator `index` occurs in the word.
    pub fn involves(&self, index: usize) -> bool {
        self.syllables.iter().any(|&(g, _)| g == index)
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for &(g, e) in &self.syllables {
            v[g] += e;
        }
        v
    }

    /// Reinterprets the word in a free group of larger rank.
    pub fn widen(&self, rank: usize) -> Self {
        assert!(rank >= self.rank);
        Word {
            rank,
            syllables: self.syllables.clone(),
        }
    }

    /// Renders the word with the given generator names.
    pub fn display_with(&self, names: &[String]) -> String {
        let atoms: Vec<String> = self
            .syllables
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{}", names[g], e)
                }
            })
            .collect();
        atoms.join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.rank)))
    }
}

/// `x1, …, xN`.
pub fn default_names(rank: usize) -> Vec<String> {
    (1..=rank).map(|i| format!("x{i}")).collect()
}

fn push_syllable(syl: &mut Vec<(usize, i64)>, (g, e): (usize, i64)) {
    if e == 0 {
        return;
    }
    match syl.last_mut() {
        Some(last) if last.0 == g => {
            last.1 += e;
            if last.1 == 0 {
                syl.pop();
            }
        }
        _ => syl.push((g, e)),
    }
}

fn free_reduce_syllables(rank: usize, syllables: Vec<(usize, i64)>) -> Word {
    let mut out = Vec::with_capacity(syllables.len());
    for s in syllables {
        push_syllable(&mut out, s);
    }
    Word {
        rank,
        syllables: out,
    }
}

/// Freely reduces a raw syllable sequence. Idempotent on reduced input.
pub fn free_reduce(w: &Word) -> Word {
    free_reduce_syllables(w.rank, w.syllables.clone())
}

/// Parses a word in the generators `x1 … xN`.
pub fn parse_word(text: &str, rank: usize) -> Result<Word> {
    parse_word_with_names(text, &default_names(rank))
}

/// Parses a word over user supplied generator names.
///
/// Atoms are whitespace separated; each is a generator name optionally
/// followed by `^` and a nonzero signed integer.
pub fn parse_word_with_names(text: &str, names: &[String]) -> Result<Word> {
    let rank = names.len();
    let mut syl = Vec::new();
    let mut pos = 0;
    for atom in text.split_whitespace() {
        let start = text[pos..].find(atom).map(|o| o + pos).unwrap_or(pos);
        pos = start + atom.len();
        let (name, exp) = match atom.split_once('^') {
            Some((n, e)) => {
                let exp: i64 = e.parse().map_err(|_| Error::Syntax {
                    position: start + n.len() + 1,
                    message: format!("bad exponent `{e}`"),
                })?;
                if exp == 0 {
                    return Err(Error::Syntax {
                        position: start + n.len() + 1,
                        message: "exponent must be nonzero".into(),
                    });
                }
                (n, exp)
            }
            None => (atom, 1),
        };
        if name.is_empty() {
            return Err(Error::Syntax {
                position: start,
                message: "missing generator name".into(),
            });
        }
        let index = match names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                // `x7` against rank 3 is a range error, anything else is syntax
                if let Some(k) = name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                    if k >= 1 && names.iter().all(|n| n.starts_with('x')) {
                        return Err(Error::GeneratorOutOfRange { index: k - 1, rank });
                    }
                }
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unknown generator `{name}`"),
                });
            }
        };
        syl.push((index, exp));
    }
    Ok(free_reduce_syllables(rank, syl))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces_repeated_letter() {
        let w = parse_word("x1 x1", 2).unwrap();
        assert_eq!(w.syllables(), &[(0, 2)]);
    }

    #[test]
    fn parse_full_cancellation() {
        let w = parse_word("x1 x2^-1 x2 x1^-1", 2).unwrap();
        assert!(w.is_identity());
    }

    #[test]
    fn parse_reduced_input() {
        let w = parse_word("x1^2 x2^-3", 2).unwrap();
        assert_eq!(w.syllables(), &[(0, 2), (1, -3)]);
    }

    #[test]
    fn parse_empty_is_identity() {
        assert!(parse_word("   ", 3).unwrap().is_identity());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_word("x3", 2),
            Err(Error::GeneratorOutOfRange { index: 2, rank: 2 })
        ));
        assert!(matches!(
            parse_word("x1 q", 2),
            Err(Error::Syntax { position: 3, .. })
        ));
        assert!(matches!(parse_word("x1^0", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("x1^a", 2), Err(Error::Syntax { .. })));
    }

    #[test]
    fn named_generators() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let w = parse_word_with_names("a^2 b^2 a^2 b a b a^2 b^2 a", &names).unwrap();
        assert_eq!(w.len(), 14);
        assert_eq!(w.display_with(&names), "a^2 b^2 a^2 b a b a^2 b^2 a");
    }

    #[test]
    fn reduce_examples() {
        let w = Word {
            rank: 2,
            syllables: vec![(0, 1), (0, -1)],
        };
        assert!(free_reduce(&w).is_identity());
        let w = Word {
            rank: 2,
            syllables: vec![(0, 1), (1, 2), (1, -2), (0, 1)],
        };
        assert_eq!(free_reduce(&w).syllables(), &[(0, 2)]);
        let r = parse_word("x1 x2^3 x1^-1", 2).unwrap();
        assert_eq!(free_reduce(&r), r);
    }

    #[test]
    fn display_round_trip() {
        let w = parse_word("x2^-1 x1 x3^4", 3).unwrap();
        assert_eq!(parse_word(&w.to_string(), 3).unwrap(), w);
    }
}
