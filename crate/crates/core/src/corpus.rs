//! The built-in marked two-generator groups with their known orbit indices
//! and stabilizer abelianizations.

use crate::error::Result;
use crate::fingroup::MarkedEpimorphism;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub degree: usize,
    pub order: usize,
    /// Images of `x` and `y` in cycle notation.
    pub images: [&'static str; 2],
    /// Index of the stabilizer of the marking in `A⁺(F_2)`.
    pub index: usize,
    pub abelianization: &'static str,
}

impl CorpusEntry {
    /// The marking on `F_n`; generators beyond the second map to the identity.
    pub fn epimorphism(&self, n: usize) -> Result<MarkedEpimorphism> {
        let mut images: Vec<&str> = self.images.to_vec();
        images.resize(n.max(2), "()");
        MarkedEpimorphism::from_cycle_strings(self.degree, &images[..n.max(2)])
    }
}

const fn entry(
    name: &'static str,
    degree: usize,
    order: usize,
    images: [&'static str; 2],
    index: usize,
    abelianization: &'static str,
) -> CorpusEntry {
    CorpusEntry {
        name,
        degree,
        order,
        images,
        index,
        abelianization,
    }
}

pub const CORPUS: [CorpusEntry; 15] = [
    entry("C2", 2, 2, ["(1,2)", "()"], 3, "Z^2 x C2 x C4"),
    entry("C3", 3, 3, ["(1,2,3)", "()"], 8, "Z x C3 x C3"),
    entry("C4", 4, 4, ["(1,2,3,4)", "()"], 12, "Z^2 x C4"),
    entry("C2xC2", 4, 4, ["(1,2)", "(3,4)"], 6, "Z^2 x C2 x C2 x C2"),
    entry("C5", 5, 5, ["(1,2,3,4,5)", "()"], 24, "Z^3 x C5"),
    entry("C6", 6, 6, ["(1,2,3,4,5,6)", "()"], 24, "Z^3 x C6"),
    entry("S3", 3, 6, ["(1,2,3)", "(1,2)"], 18, "Z^2 x C2"),
    entry("C7", 7, 7, ["(1,2,3,4,5,6,7)", "()"], 48, "Z^5 x C7"),
    entry("D4", 4, 8, ["(1,2,3,4)", "(1,4)(2,3)"], 24, "Z^3 x C2"),
    entry(
        "Q8",
        8,
        8,
        ["(1,7,2,8)(3,6,4,5)", "(1,4,2,3)(5,7,6,8)"],
        24,
        "Z^2 x C4",
    ),
    entry("D5", 5, 10, ["(1,2,3,4,5)", "(1,5)(2,4)"], 30, "Z^2 x C2"),
    entry("A4", 4, 12, ["(1,2,3)", "(1,2)(3,4)"], 96, "Z^3"),
    entry("S3xC2", 5, 12, ["(1,3)(4,5)", "(1,2)"], 36, "Z^3 x C2"),
    entry(
        "Sm(12,1)",
        12,
        12,
        [
            "(1,8,4,11)(2,9,5,12)(3,7,6,10)",
            "(1,9,4,12)(2,7,5,10)(3,8,6,11)",
        ],
        72,
        "Z^3 x C2",
    ),
    entry("A5", 5, 60, ["(1,2,3,4,5)", "(1,2,3)"], 1080, "Z^17"),
];

/// Looks up an entry by name, ignoring ASCII case.
pub fn corpus_entry(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_surjectivity() {
        for e in &CORPUS {
            for n in [2, 3] {
                let pi = e.epimorphism(n).unwrap();
                assert_eq!(pi.group().order(), e.order, "{}", e.name);
                assert_eq!(pi.rank(), n);
                assert!(pi.is_epimorphism());
            }
        }
        assert_eq!(corpus_entry("s3").unwrap().index, 18);
        assert!(corpus_entry("nope").is_none());
    }
}
