use super::{
    abelianization, orbit_stabilizer, random_stabilizer_words, reidemeister_schreier, todd_coxeter,
    Abelianization, Presentation,
};
use crate::error::{Error, Result};
use crate::fingroup::MarkedEpimorphism;
use crate::freewords::{alpha_plus_f2, beta_plus_f2, Endomorphism, Word};

/// The stabilizer of a marking of `F_2` inside `A⁺(F_2)`, computed twice:
/// as an orbit and by coset enumeration over the Schreier generators.
#[derive(Clone, Debug)]
pub struct StabilizerSummary {
    pub orbit_size: usize,
    pub coset_index: usize,
    pub schreier_generators: usize,
    /// Present when requested.
    pub abelianization: Option<Abelianization>,
}

/// `α`, `β` with `A⁺(F_2) = ⟨α, β⟩`, in the order of [`Presentation::a_plus_f2`].
pub fn a_plus_f2_generators() -> Vec<Endomorphism> {
    vec![alpha_plus_f2(), beta_plus_f2()]
}

/// Runs orbit enumeration, Todd–Coxeter and optionally Reidemeister–Schreier
/// with abelian invariants. Fails if the two indices disagree.
pub fn a_plus_f2_stabilizer(
    pi: &MarkedEpimorphism,
    max_cosets: usize,
    abelianize: bool,
) -> Result<StabilizerSummary> {
    if pi.rank() != 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            found: pi.rank(),
        });
    }
    stabilizer_summary(
        &Presentation::a_plus_f2(),
        &a_plus_f2_generators(),
        pi,
        max_cosets,
        abelianize,
    )
}

/// As [`a_plus_f2_stabilizer`] for any presentation `p` of a group acting
/// through `gens`: generator `j` of `p` acts as `gens[j]`. The presentation
/// is trusted; only the orbit and the coset table are compared.
pub fn stabilizer_summary(
    p: &Presentation,
    gens: &[Endomorphism],
    pi: &MarkedEpimorphism,
    max_cosets: usize,
    abelianize: bool,
) -> Result<StabilizerSummary> {
    if gens.len() != p.rank() {
        return Err(Error::RankMismatch {
            expected: p.rank(),
            found: gens.len(),
        });
    }
    let orbit = orbit_stabilizer(pi, gens)?;
    let table = todd_coxeter(p, &orbit.schreier_words, max_cosets)?;
    table.verify(p, &orbit.schreier_words)?;
    if table.index() != orbit.size() {
        return Err(Error::consistency(format!(
            "orbit size {} but coset index {}",
            orbit.size(),
            table.index()
        )));
    }
    let abelianization = if abelianize {
        Some(abelianization(
            &reidemeister_schreier(p, &table)?.presentation,
        ))
    } else {
        None
    };
    Ok(StabilizerSummary {
        orbit_size: orbit.size(),
        coset_index: table.index(),
        schreier_generators: orbit.schreier_words.len(),
        abelianization,
    })
}

/// A subgroup `Δ ≤ Γ(G, π)` generated by random stabilizer elements.
#[derive(Clone, Debug)]
pub struct RandomSubgroup {
    pub words: Vec<Word>,
    /// `[A : Δ]` once coset enumeration completes within the cap.
    pub index: Option<usize>,
    pub rounds: usize,
}

const RANDOM_ROUNDS: usize = 10;
const SAMPLES_PER_POINT: usize = 50;
const SAMPLE_CAP: usize = 100_000;

/// Draws random stabilizer words in rounds of growing length, running coset
/// enumeration within `max_cosets` after each round. Stops once the index
/// reaches `orbit_size`; otherwise reports the last finite index, which may
/// exceed the orbit size. Callers compare the two.
pub fn random_finite_index_subgroup(
    p: &Presentation,
    gens: &[Endomorphism],
    pi: &MarkedEpimorphism,
    orbit_size: usize,
    seed: u64,
    max_cosets: usize,
) -> Result<RandomSubgroup> {
    let budget = orbit_size.saturating_mul(SAMPLES_PER_POINT).min(SAMPLE_CAP);
    let mut words: Vec<Word> = Vec::new();
    let mut best = None;
    for round in 0..RANDOM_ROUNDS {
        let max_len = 8 * (round + 1);
        for w in
            random_stabilizer_words(pi, gens, seed.wrapping_add(round as u64), budget, max_len)?
        {
            if !words.contains(&w) {
                words.push(w);
            }
        }
        if words.is_empty() {
            continue;
        }
        match todd_coxeter(p, &words, max_cosets) {
            Ok(t) => {
                best = Some(t.index());
                // Δ ≤ Γ(G, π), so reaching the orbit size means equality
                if t.index() <= orbit_size {
                    return Ok(RandomSubgroup {
                        words,
                        index: best,
                        rounds: round + 1,
                    });
                }
            }
            Err(Error::CosetCap { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(RandomSubgroup {
        words,
        index: best,
        rounds: RANDOM_ROUNDS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus_entry;

    #[test]
    fn random_subgroups_reach_the_orbit_index() {
        let p = Presentation::a_plus_f2();
        let gens = a_plus_f2_generators();
        for name in ["C2", "C3", "C5", "S3"] {
            let e = corpus_entry(name).unwrap();
            let pi = e.epimorphism(2).unwrap();
            let r = random_finite_index_subgroup(&p, &gens, &pi, e.index, 1, 200_000).unwrap();
            assert_eq!(r.index, Some(e.index), "{name}");
        }
    }
}
