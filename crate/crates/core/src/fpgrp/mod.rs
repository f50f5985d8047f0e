//! Finitely presented groups: coset enumeration, orbits of marked
//! epimorphisms, Reidemeister–Schreier rewriting and abelian invariants.

mod abelian;
mod coset;
mod orbit;
mod pipeline;
mod presentation;
mod random;
mod rs;
mod snf;

pub use abelian::{abelianization, Abelianization};
pub use coset::{todd_coxeter, CosetTable, DEFAULT_MAX_COSETS};
pub use orbit::{orbit_stabilizer, word_to_automorphism, OrbitData};
pub use pipeline::{
    a_plus_f2_generators, a_plus_f2_stabilizer, random_finite_index_subgroup, stabilizer_summary,
    RandomSubgroup, StabilizerSummary,
};
pub use presentation::Presentation;
pub use random::{random_products, random_stabilizer_words};
pub use rs::{reidemeister_schreier, SubgroupPresentation};
pub use snf::{smith_normal_form, SmithForm};
