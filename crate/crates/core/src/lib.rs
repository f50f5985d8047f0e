//! Relation modules of marked finite quotients of free groups.
//!
//! For an epimorphism `π : F_n → G` onto a finite group, the kernel `R`
//! abelianizes to a `Z[G]`-lattice `R̄` of rank `1 + |G|(n − 1)`. The
//! automorphisms of `F_n` fixing `π` act on `R̄`; this crate builds those
//! integral representations, splits them along rational central idempotents,
//! and computes the stabilizers themselves by orbit enumeration, coset
//! enumeration and Reidemeister–Schreier rewriting.

pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod fingroup;
pub mod fpgrp;
pub mod freewords;
pub mod grpring;
pub mod linalg;
pub mod relmodule;

pub use corpus::{corpus_entry, CorpusEntry, CORPUS};
pub use cyclo::{CycInt, CycMatrix};
pub use error::{Error, Result};
pub use fingroup::{FiniteGroup, GroupFile, MarkedEpimorphism, Permutation};
pub use fpgrp::{Abelianization, CosetTable, Presentation};
pub use freewords::{Endomorphism, Word};
pub use grpring::{GroupRingElement, RationalIdempotent};
pub use relmodule::{RelationLattice, RepMatrix};
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
