use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use relmod::cyclo::{verify_steinberg, CycInt, CyclicSetting};
use relmod::fpgrp::{
    a_plus_f2_generators, abelianization, orbit_stabilizer, reidemeister_schreier,
    smith_normal_form, todd_coxeter, word_to_automorphism, Presentation,
};
use relmod::freewords::{
    fox_derivative_projected, fox_vector, lambda, nielsen_generators, nu, tau, torelli_generators,
};
use relmod::grpring::GroupRingElement;
use relmod::linalg::{det_z, i64_to_z, mul_z};
use relmod::relmodule::rho_matrix;
use relmod::{corpus_entry, Endomorphism, MarkedEpimorphism, Permutation, RelationLattice, Word};

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..rank, prop::bool::ANY), 0..=max_len).prop_map(move |ls| {
        Word::from_letters(
            rank,
            ls.into_iter().map(|(j, p)| (j, if p { 1 } else { -1 })),
        )
        .unwrap()
    })
}

fn cyc(d: u64) -> impl Strategy<Value = CycInt> {
    let len = relmod::cyclo::euler_phi(d) as usize;
    prop::collection::vec(-4i64..=4, len)
        .prop_map(move |c| CycInt::from_poly(d, c.into_iter().map(BigInt::from).collect()))
}

fn s3(n: usize) -> MarkedEpimorphism {
    corpus_entry("S3").unwrap().epimorphism(n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn words_form_a_group(u in word(3, 12), v in word(3, 12), w in word(3, 12)) {
        prop_assert!(u.mul(&u.inverse()).is_identity());
        prop_assert_eq!(u.mul(&v).inverse(), v.inverse().mul(&u.inverse()));
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(u in word(2, 15), v in word(2, 15)) {
        let pi = s3(2);
        let g = pi.group();
        prop_assert_eq!(pi.eval(&u.mul(&v)), g.mul(pi.eval(&u), pi.eval(&v)));
        prop_assert_eq!(pi.eval(&u.inverse()), g.inverse(pi.eval(&u)));
    }

    #[test]
    fn fox_rules(u in word(3, 12), v in word(3, 12)) {
        let pi = s3(3);
        let group = pi.group().clone();
        let elem = |w: &Word| GroupRingElement::basis(group.clone(), pi.eval(w));
        for i in 0..3 {
            let du = fox_derivative_projected(&u, i, &pi);
            let dv = fox_derivative_projected(&v, i, &pi);
            prop_assert_eq!(
                fox_derivative_projected(&u.mul(&v), i, &pi),
                du.add(&elem(&u).mul(&dv).unwrap()).unwrap()
            );
            prop_assert_eq!(
                fox_derivative_projected(&u.inverse(), i, &pi),
                elem(&u.inverse()).mul(&du).unwrap().neg()
            );
        }
        // fundamental formula: Σ_i ∂_i(w)(π(x_i) − 1) = π(w) − 1
        let one = GroupRingElement::one(group.clone());
        let mut total = GroupRingElement::zero(group.clone());
        for i in 0..3 {
            let xi = elem(&Word::generator(3, i)).sub(&one).unwrap();
            total = total.add(&fox_derivative_projected(&u, i, &pi).mul(&xi).unwrap()).unwrap();
        }
        prop_assert_eq!(total, elem(&u).sub(&one).unwrap());
    }

    #[test]
    fn smith_form(rows in 1usize..6, cols in 1usize..6, seed in prop::collection::vec(-30i64..=30, 36)) {
        let a: Vec<Vec<i64>> = (0..rows).map(|r| seed[r * 6..r * 6 + cols].to_vec()).collect();
        let a = i64_to_z(&a);
        let s = smith_normal_form(&a);
        prop_assert_eq!(mul_z(&mul_z(&s.u, &a), &s.v), s.d.clone());
        prop_assert!(det_z(&s.u).abs().is_one());
        prop_assert!(det_z(&s.v).abs().is_one());
        let f = s.invariant_factors();
        prop_assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        // rank and the product of the factors agree with the square case
        if rows == cols {
            let prod: BigInt = if s.rank() == rows { f.iter().product() } else { BigInt::zero() };
            prop_assert_eq!(prod, det_z(&a).abs());
        }
    }

    #[test]
    fn steinberg(d in 1u64..=10, s1 in any::<u64>(), idx in (0usize..4, 0usize..4, 0usize..4, 0usize..4)) {
        let (i, j, k, l) = idx;
        prop_assume!(i != j && k != l && !(j == k && i == l));
        let a = cyc_from_seed(d, s1);
        let b = cyc_from_seed(d, s1.rotate_left(17));
        prop_assert!(verify_steinberg(&a, &b, (i, j), (k, l), 4));
    }

    #[test]
    fn cyclotomic_ring_axioms(a in cyc(12), b in cyc(12), c in cyc(12)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b).galois(5), a.galois(5).mul(&b.galois(5)));
    }

    #[test]
    fn permutations_compose_left_first(a in perm(6), b in perm(6)) {
        for i in 0..6 {
            prop_assert_eq!(a.mul(&b).apply(i), b.apply(a.apply(i)));
        }
        prop_assert!(a.mul(&a.inverse()).is_identity());
    }

    #[test]
    fn lattice_coordinates_reconstruct_fox_vectors(u in word(2, 14)) {
        let pi = s3(2);
        let lattice = RelationLattice::new(&pi).unwrap();
        let w = u.mul(&lattice.transversal()[pi.eval(&u)].inverse());
        let c = lattice.word_coordinates(&w).unwrap();
        let mut sum = vec![BigInt::zero(); lattice.ambient_dimension()];
        for (ck, row) in c.iter().zip(lattice.basis()) {
            for (s, &b) in sum.iter_mut().zip(row) {
                *s += ck * b;
            }
        }
        let fox: Vec<BigInt> = fox_vector(&w, &pi).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(sum, fox);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn abelianization_survives_tietze_moves(
        rels in prop::collection::vec(word(2, 8), 1..4),
        conj in word(2, 5),
        pick in 0usize..4,
    ) {
        let rels: Vec<Word> = rels.into_iter().filter(|w| !w.is_identity()).collect();
        prop_assume!(!rels.is_empty());
        let names = vec!["a".to_string(), "b".to_string()];
        let p = Presentation::new(names.clone(), rels.clone()).unwrap();
        let base = abelianization(&p);
        let k = pick % rels.len();
        let mut moved = rels.clone();
        moved[k] = conj.mul(&rels[k]).mul(&conj.inverse());
        let mut inverted = rels.clone();
        inverted[k] = rels[k].inverse();
        let mut extended = rels.clone();
        extended.push(rels[k].mul(&rels[0]).mul(&conj).mul(&rels[k]).mul(&conj.inverse()));
        let mut reversed = rels.clone();
        reversed.reverse();
        for other in [moved, inverted, extended, reversed] {
            let q = Presentation::new(names.clone(), other).unwrap();
            prop_assert_eq!(abelianization(&q), base.clone());
        }
    }

    #[test]
    fn sigma_reverses_composition(choice in prop::collection::vec(0usize..7, 1..4)) {
        let s = CyclicSetting::new(4, 3).unwrap();
        let mut pool: Vec<Endomorphism> = torelli_generators(3).unwrap();
        pool.push(lambda(1, 2, 3).unwrap());
        pool.push(nu(2, 1, 3).unwrap());
        pool.push(tau(2, 1, 3).unwrap());
        let fs: Vec<&Endomorphism> = choice.iter().map(|&c| &pool[c % pool.len()]).collect();
        for d in [2u64, 4] {
            let mut product = Endomorphism::identity(3);
            let mut expected = s.sigma(&product, d).unwrap();
            for f in &fs {
                product = product.compose(f).unwrap();
                expected = s.sigma(f, d).unwrap().mul(&expected);
            }
            prop_assert_eq!(s.sigma(&product, d).unwrap(), expected);
        }
    }

    #[test]
    fn rho_is_multiplicative(i in 0usize..64, j in 0usize..64) {
        let pi = s3(2);
        let lattice = RelationLattice::new(&pi).unwrap();
        let gens = a_plus_f2_generators();
        let words = orbit_stabilizer(&pi, &gens).unwrap().schreier_words;
        let f = word_to_automorphism(&words[i % words.len()], &gens).unwrap();
        let g = word_to_automorphism(&words[j % words.len()], &gens).unwrap();
        let fg = rho_matrix(&f.compose(&g).unwrap(), &lattice).unwrap();
        prop_assert_eq!(fg.entries, mul_z(&rho_matrix(&f, &lattice).unwrap().entries, &rho_matrix(&g, &lattice).unwrap().entries));
    }
}

fn cyc_from_seed(d: u64, seed: u64) -> CycInt {
    let len = relmod::cyclo::euler_phi(d) as usize;
    let coeffs = (0..len)
        .map(|k| BigInt::from(((seed >> (4 * k)) & 7) as i64 - 3))
        .collect();
    CycInt::from_poly(d, coeffs)
}

fn perm(n: u32) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

#[test]
fn coset_index_matches_orbit_size() {
    let gens = a_plus_f2_generators();
    let p = Presentation::a_plus_f2();
    for name in ["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "D5"] {
        let e = corpus_entry(name).unwrap();
        let pi = e.epimorphism(2).unwrap();
        let orbit = orbit_stabilizer(&pi, &gens).unwrap();
        let t = todd_coxeter(&p, &orbit.schreier_words, 100_000).unwrap();
        t.verify(&p, &orbit.schreier_words).unwrap();
        assert_eq!(t.index(), orbit.size(), "{name}");
        // Reidemeister–Schreier generator count 1 + k(g − 1)
        let sub = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(sub.presentation.rank(), 1 + t.index(), "{name}");
        for w in &sub.generator_words {
            assert_eq!(t.trace(0, w), 0, "{name}");
        }
    }
}

#[test]
fn nielsen_generators_are_automorphisms() {
    for n in 2..=4 {
        for f in nielsen_generators(n).unwrap() {
            let inv = f.inverse().expect("inverse images");
            assert!(f.compose(&inv).unwrap().is_identity(), "{f}");
            assert!(inv.compose(&f).unwrap().is_identity(), "{f}");
        }
    }
}
