use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fingroup::MarkedEpimorphism;
use crate::freewords::{fox_vector, Word};
use crate::linalg::{inverse_q, rref, QMatrix};

/// Shortlex-minimal coset representatives and the nontrivial Schreier
/// generators `t·x_j·rep(t·g_j)⁻¹` of `R = ker π`.
///
/// Representatives are indexed by group element. Schreier words are ordered
/// by the discovery order of their coset, then by generator.
pub fn schreier_basis(pi: &MarkedEpimorphism) -> Result<(Vec<Word>, Vec<Word>)> {
    let t = SchreierData::new(pi)?;
    Ok((t.transversal, t.words))
}

struct SchreierData {
    transversal: Vec<Word>,
    words: Vec<Word>,
    // index of the Schreier word for (coset, generator), usize::MAX for tree edges
    slot: Vec<usize>,
}

impl SchreierData {
    fn new(pi: &MarkedEpimorphism) -> Result<Self> {
        if !pi.is_epimorphism() {
            return Err(Error::NotSurjective);
        }
        let order = pi.group().order();
        let n = pi.rank();
        let mut reps: Vec<Option<Word>> = vec![None; order];
        reps[0] = Some(Word::identity(n));
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let g = queue[head];
            head += 1;
            for j in 0..n {
                for s in [1i8, -1] {
                    let h = pi.right_mul(g, j, s);
                    if reps[h].is_none() {
                        let letter = Word::from_letters(n, [(j, s)]).expect("generator in range");
                        reps[h] = Some(reps[g].as_ref().unwrap().mul(&letter));
                        queue.push(h);
                    }
                }
            }
        }
        let transversal: Vec<Word> = reps.into_iter().map(|w| w.expect("surjective")).collect();
        let mut words = Vec::new();
        let mut slot = vec![usize::MAX; order * n];
        for &g in &queue {
            for j in 0..n {
                let h = pi.right_mul(g, j, 1);
                let w = transversal[g]
                    .mul(&Word::generator(n, j))
                    .mul(&transversal[h].inverse());
                if !w.is_identity() {
                    slot[g * n + j] = words.len();
                    words.push(w);
                }
            }
        }
        let expect = 1 + order * (n - 1);
        if words.len() != expect {
            return Err(Error::consistency(format!(
                "{} Schreier generators, expected {expect}",
                words.len()
            )));
        }
        Ok(SchreierData {
            transversal,
            words,
            slot,
        })
    }
}

/// The relation module `R̄ = R/R'` embedded in `Z[G]^n` by projected Fox
/// derivatives, with the Schreier words as its basis.
#[derive(Clone, Debug)]
pub struct RelationLattice {
    pi: MarkedEpimorphism,
    transversal: Vec<Word>,
    schreier_words: Vec<Word>,
    slot: Vec<usize>,
    basis: Vec<Vec<i64>>,
    pivots: Vec<usize>,
    // inverse of the pivot-column block, as numerator / denominator
    inv_num: Vec<Vec<BigInt>>,
    inv_den: BigInt,
}

impl RelationLattice {
    pub fn new(pi: &MarkedEpimorphism) -> Result<Self> {
        let data = SchreierData::new(pi)?;
        let basis: Vec<Vec<i64>> = data.words.iter().map(|w| fox_vector(w, pi)).collect();
        let t = basis.len();
        let qbasis: QMatrix = basis
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| num_rational::BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        let (_, pivots) = rref(&qbasis);
        if pivots.len() != t {
            return Err(Error::consistency(format!(
                "lattice rank {} but {t} Schreier words",
                pivots.len()
            )));
        }
        let block: QMatrix = qbasis
            .iter()
            .map(|r| pivots.iter().map(|&c| r[c].clone()).collect())
            .collect();
        let inv = inverse_q(&block).ok_or_else(|| Error::consistency("pivot block is singular"))?;
        let den = inv
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let inv_num = inv
            .iter()
            .map(|r| r.iter().map(|x| x.numer() * (&den / x.denom())).collect())
            .collect();
        let lattice = RelationLattice {
            pi: pi.clone(),
            transversal: data.transversal,
            schreier_words: data.words,
            slot: data.slot,
            basis,
            pivots,
            inv_num,
            inv_den: den,
        };
        for row in &lattice.basis {
            if !lattice.satisfies_kernel_identity(row) {
                return Err(Error::consistency(
                    "lattice row violates the kernel identity",
                ));
            }
        }
        Ok(lattice)
    }

    pub fn epimorphism(&self) -> &MarkedEpimorphism {
        &self.pi
    }

    /// `1 + |G|(n − 1)`.
    pub fn rank(&self) -> usize {
        self.schreier_words.len()
    }

    /// Length of a Fox vector, `n·|G|`.
    pub fn ambient_dimension(&self) -> usize {
        self.pi.rank() * self.pi.group().order()
    }

    pub fn schreier_words(&self) -> &[Word] {
        &self.schreier_words
    }

    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    /// Rows are the Fox vectors of the Schreier words.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// `Σ_i v_i·(g_i − 1) = 0` for the blocks `v_i` of `v`.
    pub fn satisfies_kernel_identity(&self, v: &[i64]) -> bool {
        self.quotient_image(v).iter().all(|&x| x == 0)
    }

    /// The image `Σ_i v_i·(g_i − 1)` in `Z[G]`.
    pub fn quotient_image(&self, v: &[i64]) -> Vec<i64> {
        let order = self.pi.group().order();
        let mut out = vec![0i64; order];
        for i in 0..self.pi.rank() {
            for gamma in 0..order {
                let c = v[i * order + gamma];
                if c != 0 {
                    out[self.pi.right_mul(gamma, i, 1)] += c;
                    out[gamma] -= c;
                }
            }
        }
        out
    }

    /// Integer coordinates `c` with `c · basis = v`, verified exactly.
    pub fn coordinates(&self, v: &[i64]) -> Result<Vec<BigInt>> {
        let t = self.rank();
        let vp: Vec<BigInt> = self.pivots.iter().map(|&c| BigInt::from(v[c])).collect();
        let mut c = vec![BigInt::zero(); t];
        for (i, x) in vp.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in self.inv_num[i].iter().enumerate() {
                if !y.is_zero() {
                    c[j] += x * y;
                }
            }
        }
        for x in c.iter_mut() {
            let (q, r) = x.div_rem(&self.inv_den);
            if !r.is_zero() {
                return Err(Error::consistency("non-integral lattice coordinates"));
            }
            *x = q;
        }
        let mut check = vec![BigInt::zero(); v.len()];
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (j, &b) in self.basis[k].iter().enumerate() {
                if b != 0 {
                    check[j] += ck * b;
                }
            }
        }
        if check.iter().zip(v).any(|(a, &b)| *a != BigInt::from(b)) {
            return Err(Error::consistency("vector is not in the lattice span"));
        }
        Ok(c)
    }

    /// Coordinates of a word of `R`, by Fox vector and exact solve.
    pub fn word_coordinates(&self, w: &Word) -> Result<Vec<BigInt>> {
        self.coordinates(&fox_vector(w, &self.pi))
    }

    /// Coordinates of a word of `R` by Reidemeister–Schreier rewriting: the
    /// exponent sum of each Schreier generator in the rewritten word.
    pub fn rewrite_coordinates(&self, w: &Word) -> Result<Vec<i64>> {
        let n = self.pi.rank();
        let mut c = vec![0i64; self.rank()];
        let mut g = 0usize;
        for (j, s) in w.letters() {
            if s > 0 {
                let k = self.slot[g * n + j];
                if k != usize::MAX {
                    c[k] += 1;
                }
                g = self.pi.right_mul(g, j, 1);
            } else {
                g = self.pi.right_mul(g, j, -1);
                let k = self.slot[g * n + j];
                if k != usize::MAX {
                    c[k] -= 1;
                }
            }
        }
        if g != 0 {
            return Err(Error::consistency("word is not in the kernel"));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freewords::parse_word;

    fn c2() -> MarkedEpimorphism {
        MarkedEpimorphism::from_cycle_strings(2, &["(1,2)", "()"]).unwrap()
    }

    #[test]
    fn c2_basis_words() {
        let (reps, words) = schreier_basis(&c2()).unwrap();
        assert_eq!(reps, vec![Word::identity(2), parse_word("x1", 2).unwrap()]);
        let mut got = words.clone();
        got.sort();
        let mut want = vec![
            parse_word("x1^2", 2).unwrap(),
            parse_word("x2", 2).unwrap(),
            parse_word("x1 x2 x1^-1", 2).unwrap(),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn trivial_group() {
        let pi = MarkedEpimorphism::from_cycle_strings(1, &["()", "()"]).unwrap();
        let l = RelationLattice::new(&pi).unwrap();
        assert_eq!(l.rank(), 2);
        assert_eq!(l.basis(), &[vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn c3_basis_words() {
        let pi = MarkedEpimorphism::from_cycle_strings(3, &["(1,2,3)", "()"]).unwrap();
        let (_, words) = schreier_basis(&pi).unwrap();
        let mut got: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["x1 x2 x1^-1", "x1^-1 x2 x1", "x1^3", "x2"]);
        assert_eq!(RelationLattice::new(&pi).unwrap().rank(), 4);
    }

    #[test]
    fn c2_rows() {
        let l = RelationLattice::new(&c2()).unwrap();
        let pi = c2();
        for (w, row) in l.schreier_words().iter().zip(l.basis()) {
            let expect = match w.to_string().as_str() {
                "x1^2" => vec![1, 1, 0, 0],
                "x2" => vec![0, 0, 1, 0],
                "x1 x2 x1^-1" => vec![0, 0, 0, 1],
                other => panic!("unexpected word {other}"),
            };
            assert_eq!(row, &expect);
            assert_eq!(fox_vector(w, &pi), expect);
        }
    }

    #[test]
    fn coordinates_agree_with_rewriting() {
        let pi = MarkedEpimorphism::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap();
        let l = RelationLattice::new(&pi).unwrap();
        let w = parse_word("x1^3 x2 x1 x2^2 x1^-1 x2^-1 x1^2 x2 x1 x2 x1^-1 x2^2", 2).unwrap();
        assert_eq!(pi.eval(&w), 0);
        let a = l.word_coordinates(&w).unwrap();
        let b = l.rewrite_coordinates(&w).unwrap();
        assert_eq!(a, b.into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert!(l
            .rewrite_coordinates(&parse_word("x1", 2).unwrap())
            .is_err());
        assert!(l.coordinates(&[1; 12]).is_ok());
        let mut e = vec![0; 12];
        e[0] = 1;
        assert!(l.coordinates(&e).is_err());
    }
}
