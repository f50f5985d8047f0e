use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fingroup::{FiniteGroup, MarkedEpimorphism};
use crate::freewords::{free_reduce, Endomorphism, Word};

/// The orbit of a marked epimorphism under a set of automorphisms, with
/// Schreier generators of its stabilizer.
#[derive(Clone, Debug)]
pub struct OrbitData {
    /// Image tuples `(π(x_1), …, π(x_n))` in breadth-first order; entry 0 is
    /// the starting point.
    pub points: Vec<Vec<usize>>,
    /// `transversal[p]` carries the start to point `p`.
    pub transversal: Vec<Word>,
    /// Words over the generator alphabet whose automorphisms fix the start.
    pub schreier_words: Vec<Word>,
}

impl OrbitData {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

/// The automorphism `φ_{a_1}∘…∘φ_{a_k}` of the word `a_1…a_k`, inverse
/// letters standing for inverse automorphisms.
pub fn word_to_automorphism(w: &Word, gens: &[Endomorphism]) -> Result<Endomorphism> {
    let rank = gens
        .first()
        .map(Endomorphism::rank)
        .ok_or_else(|| Error::InvalidParameters("no generators".into()))?;
    if w.rank() != gens.len() {
        return Err(Error::RankMismatch {
            expected: gens.len(),
            found: w.rank(),
        });
    }
    let inverses = inverses_of(gens)?;
    let mut f = Endomorphism::identity(rank);
    for (j, s) in w.letters() {
        f = f.compose(if s > 0 { &gens[j] } else { &inverses[j] })?;
    }
    Ok(f)
}

pub(crate) fn inverses_of(gens: &[Endomorphism]) -> Result<Vec<Endomorphism>> {
    gens.iter()
        .map(|g| {
            g.inverse()
                .ok_or_else(|| Error::InvalidParameters("generator without inverse images".into()))
        })
        .collect()
}

// the tuple of π∘φ, given the tuple of π
pub(crate) fn act(group: &FiniteGroup, point: &[usize], phi: &Endomorphism) -> Vec<usize> {
    phi.images()
        .iter()
        .map(|w| {
            w.letters().fold(0, |g, (j, s)| {
                let h = if s > 0 {
                    point[j]
                } else {
                    group.inverse(point[j])
                };
                group.mul(g, h)
            })
        })
        .collect()
}

/// Breadth-first orbit of `π` under `p·φ = p∘φ`; the stabilizer is `Γ(G, π)`
/// restricted to the subgroup generated by `gens`.
pub fn orbit_stabilizer(pi: &MarkedEpimorphism, gens: &[Endomorphism]) -> Result<OrbitData> {
    let group = pi.group();
    let n = pi.rank();
    for g in gens {
        if g.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: g.rank(),
            });
        }
        if g.inverse_images().is_none() {
            return Err(Error::InvalidParameters(
                "generator without inverse images".into(),
            ));
        }
    }
    let k = gens.len();
    let bound = (group.order() as u128)
        .saturating_pow(n as u32)
        .min(usize::MAX as u128) as usize;
    let start = pi.images().to_vec();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut points = vec![start];
    let mut transversal = vec![Word::identity(k)];
    // parent edge of every point but the start
    let mut tree: Vec<Option<(usize, usize)>> = vec![None];
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < points.len() {
        let mut row = Vec::with_capacity(k);
        for (a, g) in gens.iter().enumerate() {
            let q = act(group, &points[head], g);
            let next = points.len();
            let id = *index.entry(q.clone()).or_insert(next);
            if id == next {
                if next >= bound {
                    return Err(Error::OrbitBound { bound });
                }
                points.push(q);
                transversal.push(transversal[head].mul(&Word::generator(k, a)));
                tree.push(Some((head, a)));
            }
            row.push(id);
        }
        edges.push(row);
        head += 1;
    }
    let mut schreier_words = Vec::new();
    for (p, row) in edges.iter().enumerate() {
        for (a, &q) in row.iter().enumerate() {
            if tree[q] == Some((p, a)) {
                continue;
            }
            let w = free_reduce(
                &transversal[p]
                    .mul(&Word::generator(k, a))
                    .mul(&transversal[q].inverse()),
            );
            if !w.is_identity() {
                schreier_words.push(w);
            }
        }
    }
    Ok(OrbitData {
        points,
        transversal,
        schreier_words,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freewords::{alpha_plus_f2, beta_plus_f2, nielsen_generators};
    use crate::relmodule::member_gamma_g_pi;

    fn a_plus() -> Vec<Endomorphism> {
        vec![alpha_plus_f2(), beta_plus_f2()]
    }

    #[test]
    fn c2_orbits() {
        let pi = MarkedEpimorphism::from_cycle_strings(2, &["(1,2)", "()"]).unwrap();
        let o = orbit_stabilizer(&pi, &a_plus()).unwrap();
        assert_eq!(o.size(), 3);
        let gens = a_plus();
        for w in &o.schreier_words {
            assert!(member_gamma_g_pi(
                &word_to_automorphism(w, &gens).unwrap(),
                &pi
            ));
        }
        let pi3 = MarkedEpimorphism::from_cycle_strings(2, &["(1,2)", "()", "()"]).unwrap();
        let o = orbit_stabilizer(&pi3, &nielsen_generators(3).unwrap()).unwrap();
        assert_eq!(o.size(), 7);
    }

    #[test]
    fn c3_orbit() {
        let pi = MarkedEpimorphism::from_cycle_strings(3, &["(1,2,3)", "()"]).unwrap();
        assert_eq!(orbit_stabilizer(&pi, &a_plus()).unwrap().size(), 8);
    }

    #[test]
    fn transversal_reaches_points() {
        let pi = MarkedEpimorphism::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap();
        let gens = a_plus();
        let o = orbit_stabilizer(&pi, &gens).unwrap();
        for (p, w) in o.points.iter().zip(&o.transversal) {
            let f = word_to_automorphism(w, &gens).unwrap();
            let images: Vec<usize> = f.images().iter().map(|x| pi.eval(x)).collect();
            assert_eq!(&images, p);
        }
    }
}
