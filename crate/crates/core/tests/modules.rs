use relmod::fpgrp::{
    a_plus_f2_generators, a_plus_f2_stabilizer, orbit_stabilizer, random_stabilizer_words,
};
use relmod::grpring::rational_central_idempotents;
use relmod::relmodule::{fox_kernel_dimension, isotypic_component, member_gamma_g_pi, rho_matrix};
use relmod::{corpus_entry, RelationLattice};

#[test]
fn isotypic_dimensions() {
    for name in ["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "A4"] {
        let e = corpus_entry(name).unwrap();
        for n in [2, 3] {
            let pi = e.epimorphism(n).unwrap();
            let lattice = RelationLattice::new(&pi).unwrap();
            let family = rational_central_idempotents(pi.group()).unwrap();
            let mut total = 0;
            for idem in &family {
                let (comp, _) = isotypic_component(&lattice, idem, &[]).unwrap();
                total += comp.dimension();
                let kernel = fox_kernel_dimension(&lattice, idem).unwrap();
                if idem.is_trivial() {
                    assert_eq!(comp.dimension(), n, "{name}");
                    assert_eq!(kernel, 0, "{name}");
                } else {
                    assert_eq!(
                        comp.dimension(),
                        (n - 1) * idem.component_dimension,
                        "{name}"
                    );
                    assert_eq!(kernel, idem.component_dimension, "{name}");
                }
            }
            assert_eq!(total, lattice.rank(), "{name}, n={n}");
        }
    }
}

#[test]
fn stabilizer_matrices_preserve_components() {
    let e = corpus_entry("S3").unwrap();
    let pi = e.epimorphism(2).unwrap();
    let lattice = RelationLattice::new(&pi).unwrap();
    let gens = a_plus_f2_generators();
    let orbit = orbit_stabilizer(&pi, &gens).unwrap();
    let mats: Vec<_> = orbit
        .schreier_words
        .iter()
        .take(10)
        .map(|w| {
            rho_matrix(
                &relmod::fpgrp::word_to_automorphism(w, &gens).unwrap(),
                &lattice,
            )
            .unwrap()
        })
        .collect();
    for idem in rational_central_idempotents(pi.group()).unwrap() {
        let (comp, restricted) = isotypic_component(&lattice, &idem, &mats).unwrap();
        assert_eq!(restricted.len(), mats.len());
        assert!(restricted.iter().all(|m| m.len() == comp.dimension()));
    }
}

#[test]
fn random_stabilizer_words_are_members() {
    let pi = corpus_entry("C3").unwrap().epimorphism(2).unwrap();
    let gens = a_plus_f2_generators();
    let words = random_stabilizer_words(&pi, &gens, 7, 200, 12).unwrap();
    assert!(!words.is_empty());
    for w in &words {
        let f = relmod::fpgrp::word_to_automorphism(w, &gens).unwrap();
        assert!(member_gamma_g_pi(&f, &pi));
    }
}

#[test]
fn stabilizer_summaries() {
    for (name, gens) in [("C2", 4), ("C3", 9), ("S3", 19)] {
        let pi = corpus_entry(name).unwrap().epimorphism(2).unwrap();
        let s = a_plus_f2_stabilizer(&pi, 100_000, true).unwrap();
        assert_eq!(s.orbit_size, s.coset_index);
        assert_eq!(s.schreier_generators, gens, "{name}");
        assert!(s.abelianization.is_some());
    }
}
