use criterion::{black_box, criterion_group, criterion_main, Criterion};

use relmod::cyclo::CyclicSetting;
use relmod::fpgrp::{
    a_plus_f2_generators, orbit_stabilizer, todd_coxeter, word_to_automorphism, Presentation,
};
use relmod::freewords::torelli_generators;
use relmod::relmodule::rho_matrix;
use relmod::{corpus_entry, RelationLattice};

fn lattice(c: &mut Criterion) {
    let pi = corpus_entry("A4").unwrap().epimorphism(3).unwrap();
    c.bench_function("lattice A4 n=3", |b| {
        b.iter(|| RelationLattice::new(black_box(&pi)).unwrap())
    });
}

fn coset_enumeration(c: &mut Criterion) {
    let p = Presentation::a_plus_f2();
    let gens = a_plus_f2_generators();
    for name in ["S3", "A4"] {
        let pi = corpus_entry(name).unwrap().epimorphism(2).unwrap();
        let words = orbit_stabilizer(&pi, &gens).unwrap().schreier_words;
        c.bench_function(&format!("orbit {name}"), |b| {
            b.iter(|| orbit_stabilizer(black_box(&pi), &gens).unwrap())
        });
        c.bench_function(&format!("todd-coxeter {name}"), |b| {
            b.iter(|| todd_coxeter(&p, black_box(&words), 1_000_000).unwrap())
        });
    }
}

fn rho(c: &mut Criterion) {
    let pi = corpus_entry("S3").unwrap().epimorphism(2).unwrap();
    let lattice = RelationLattice::new(&pi).unwrap();
    let gens = a_plus_f2_generators();
    let words = orbit_stabilizer(&pi, &gens).unwrap().schreier_words;
    let autos: Vec<_> = words
        .iter()
        .take(8)
        .map(|w| word_to_automorphism(w, &gens).unwrap())
        .collect();
    c.bench_function("rho S3 x8", |b| {
        b.iter(|| {
            autos
                .iter()
                .map(|f| rho_matrix(f, &lattice).unwrap())
                .collect::<Vec<_>>()
        })
    });
}

fn sigma(c: &mut Criterion) {
    let s = CyclicSetting::new(4, 3).unwrap();
    let torelli = torelli_generators(3).unwrap();
    c.bench_function("sigma_4 torelli n=3", |b| {
        b.iter(|| {
            torelli
                .iter()
                .map(|f| s.sigma(black_box(f), 4).unwrap().determinant())
                .collect::<Vec<_>>()
        })
    });
}

criterion_group!(benches, lattice, coset_enumeration, rho, sigma);
criterion_main!(benches);
