use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fingroup::MarkedEpimorphism;
use crate::freewords::{free_reduce, Endomorphism, Word};

use super::orbit::{act, inverses_of};

/// Random words of length `1..=max_len` over the generator alphabet, kept
/// when their automorphism lies in `Γ(G, π)`. `budget` bounds the number of
/// samples drawn; the result may be empty. Membership is decided by acting
/// on the marking letter by letter.
pub fn random_stabilizer_words(
    pi: &MarkedEpimorphism,
    gens: &[Endomorphism],
    seed: u64,
    budget: usize,
    max_len: usize,
) -> Result<Vec<Word>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = gens.len();
    let mut out = Vec::new();
    if k == 0 || max_len == 0 {
        return Ok(out);
    }
    for g in gens {
        if g.rank() != pi.rank() {
            return Err(Error::RankMismatch {
                expected: pi.rank(),
                found: g.rank(),
            });
        }
    }
    let inverses = inverses_of(gens)?;
    let group = pi.group();
    let start = pi.images();
    for _ in 0..budget {
        let len = rng.gen_range(1..=max_len);
        let letters: Vec<(usize, i8)> = (0..len)
            .map(|_| (rng.gen_range(0..k), if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect();
        let w = free_reduce(&Word::from_letters(k, letters)?);
        if w.is_identity() {
            continue;
        }
        let end = w.letters().fold(start.to_vec(), |p, (j, s)| {
            act(group, &p, if s > 0 { &gens[j] } else { &inverses[j] })
        });
        if end == start {
            out.push(w);
        }
    }
    Ok(out)
}

/// Random products of `1..=max_factors` of the given words or their inverses.
pub fn random_products(words: &[Word], seed: u64, count: usize, max_factors: usize) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if words.is_empty() || max_factors == 0 {
        return Vec::new();
    }
    let rank = words[0].rank();
    (0..count)
        .map(|_| {
            let factors = rng.gen_range(1..=max_factors);
            (0..factors).fold(Word::identity(rank), |acc, _| {
                let w = &words[rng.gen_range(0..words.len())];
                if rng.gen_bool(0.5) {
                    acc.mul(w)
                } else {
                    acc.mul(&w.inverse())
                }
            })
        })
        .collect()
}
