use std::collections::VecDeque;

use super::{CosetTable, Presentation};
use crate::error::{Error, Result};
use crate::freewords::Word;

/// A presentation of a subgroup on its Schreier generators.
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    pub presentation: Presentation,
    /// Each Schreier generator as a word in the generators of the parent.
    pub generator_words: Vec<Word>,
}

/// Reidemeister–Schreier rewriting over a complete coset table. The
/// transversal is a breadth-first spanning tree from coset 0; edges of the
/// tree give trivial generators and are dropped, leaving `1 + k(g − 1)`
/// generators for index `k` and `g` parent generators.
pub fn reidemeister_schreier(p: &Presentation, t: &CosetTable) -> Result<SubgroupPresentation> {
    if !t.is_complete() || t.rank() != p.rank() {
        return Err(Error::IncompleteTable);
    }
    let k = t.index();
    let g = p.rank();
    // parent edge (coset, column) of each coset in the spanning tree
    let mut tree: Vec<Option<(usize, usize)>> = vec![None; k];
    let mut reps: Vec<Option<Word>> = vec![None; k];
    reps[0] = Some(Word::identity(g));
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for j in 0..g {
            for s in [1i8, -1] {
                let d = t.act(c, j, s);
                if reps[d].is_none() {
                    let letter = Word::from_letters(g, [(j, s)])?;
                    reps[d] = Some(reps[c].as_ref().unwrap().mul(&letter));
                    tree[d] = Some((c, 2 * j + usize::from(s < 0)));
                    queue.push_back(d);
                }
            }
        }
    }
    let reps: Vec<Word> = reps
        .into_iter()
        .map(|w| w.ok_or(Error::IncompleteTable))
        .collect::<Result<_>>()?;
    let is_tree = |c: usize, j: usize| {
        let d = t.act(c, j, 1);
        tree[d] == Some((c, 2 * j)) || tree[c] == Some((d, 2 * j + 1))
    };
    let mut slot = vec![usize::MAX; k * g];
    let mut words = Vec::new();
    for c in 0..k {
        for j in 0..g {
            if !is_tree(c, j) {
                slot[c * g + j] = words.len();
                words.push(
                    reps[c]
                        .mul(&Word::generator(g, j))
                        .mul(&reps[t.act(c, j, 1)].inverse()),
                );
            }
        }
    }
    let expect = 1 + k * g - k;
    if words.len() != expect {
        return Err(Error::consistency(format!(
            "{} Schreier generators, expected {expect}",
            words.len()
        )));
    }
    let rank = words.len();
    let mut relators = Vec::new();
    for c in 0..k {
        for r in p.relators() {
            let mut e = c;
            let mut letters: Vec<(usize, i8)> = Vec::new();
            for (j, s) in r.letters() {
                if s > 0 {
                    if slot[e * g + j] != usize::MAX {
                        letters.push((slot[e * g + j], 1));
                    }
                    e = t.act(e, j, 1);
                } else {
                    e = t.act(e, j, -1);
                    if slot[e * g + j] != usize::MAX {
                        letters.push((slot[e * g + j], -1));
                    }
                }
            }
            if e != c {
                return Err(Error::consistency(
                    "relator does not close in the coset table",
                ));
            }
            let w = Word::from_letters(rank, letters)?;
            if !w.is_identity() {
                relators.push(w);
            }
        }
    }
    let names = (1..=rank).map(|i| format!("s{i}")).collect();
    Ok(SubgroupPresentation {
        presentation: Presentation::new(names, relators)?,
        generator_words: words,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgrp::todd_coxeter;
    use crate::freewords::parse_word_with_names;

    #[test]
    fn index_one_keeps_the_presentation() {
        let p = Presentation::a_plus_f2();
        let sub = vec![
            parse_word_with_names("a", p.names()).unwrap(),
            parse_word_with_names("b", p.names()).unwrap(),
        ];
        let t = todd_coxeter(&p, &sub, 100).unwrap();
        let s = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(s.presentation.rank(), 2);
        assert_eq!(s.presentation.relators().len(), 3);
        assert_eq!(s.presentation.relators()[0].len(), 4);
    }

    #[test]
    fn free_group_index_two() {
        let p = Presentation::free(vec!["a".into(), "b".into()]);
        let names = p.names().to_vec();
        let sub: Vec<Word> = ["a^2", "b", "a b a^-1"]
            .iter()
            .map(|w| parse_word_with_names(w, &names).unwrap())
            .collect();
        let t = todd_coxeter(&p, &sub, 100).unwrap();
        assert_eq!(t.index(), 2);
        let s = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(s.presentation.rank(), 3);
        assert!(s.presentation.relators().is_empty());
        for w in &s.generator_words {
            assert_eq!(t.trace(0, w), 0);
        }
    }
}
