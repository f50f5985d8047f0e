use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freewords::{free_reduce, parse_word_with_names, Word};

/// A finite presentation `⟨generators | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Serialize, Deserialize)]
struct PresentationFile {
    generators: Vec<String>,
    relators: Vec<String>,
}

impl Presentation {
    /// Relators are freely reduced; trivial relators are rejected.
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let rank = names.len();
        let mut out = Vec::with_capacity(relators.len());
        for r in relators {
            if r.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: r.rank(),
                });
            }
            let r = free_reduce(&r);
            if r.is_identity() {
                return Err(Error::InvalidParameters("empty relator".into()));
            }
            out.push(r);
        }
        Ok(Presentation {
            names,
            relators: out,
        })
    }

    pub fn free(names: Vec<String>) -> Self {
        Presentation {
            names,
            relators: Vec::new(),
        }
    }

    /// Parses relators in the word grammar over the given names.
    pub fn parse(names: &[&str], relators: &[&str]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let rels = relators
            .iter()
            .map(|r| parse_word_with_names(r, &names))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, rels)
    }

    /// `{"generators": [...], "relators": [...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let f: PresentationFile =
            serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        let names: Vec<&str> = f.generators.iter().map(String::as_str).collect();
        let rels: Vec<&str> = f.relators.iter().map(String::as_str).collect();
        Self::parse(&names, &rels)
    }

    pub fn to_json(&self) -> String {
        let f = PresentationFile {
            generators: self.names.clone(),
            relators: self
                .relators
                .iter()
                .map(|r| r.display_with(&self.names))
                .collect(),
        };
        serde_json::to_string(&f).expect("serializable")
    }

    /// `A⁺(F_2) = ⟨a, b | a⁴, b³, a²b²a²baba²b²a⟩`, with `a`, `b` standing for
    /// the catalog entries `alpha_plus_f2` and `beta_plus_f2`.
    pub fn a_plus_f2() -> Self {
        Self::parse(&["a", "b"], &["a^4", "b^3", "a^2 b^2 a^2 b a b a^2 b^2 a"])
            .expect("valid presentation")
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}
