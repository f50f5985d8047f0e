use std::fmt;

use super::Word;
use crate::error::{Error, Result};

/// An endomorphism of `F_rank`, given by the images of the generators.
///
/// Composition follows `(φ∘ψ)(w) = φ(ψ(w))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Endomorphism {
    rank: usize,
    images: Vec<Word>,
    inverse_images: Option<Vec<Word>>,
    label: Option<String>,
}

impl Endomorphism {
    pub fn identity(rank: usize) -> Self {
        Endomorphism {
            rank,
            images: (0..rank).map(|i| Word::generator(rank, i)).collect(),
            inverse_images: Some((0..rank).map(|i| Word::generator(rank, i)).collect()),
            label: Some("id".into()),
        }
    }

    /// Builds an endomorphism from generator images. When inverse images are
    /// supplied they are checked to compose to the identity in both orders.
    pub fn new(
        images: Vec<Word>,
        inverse_images: Option<Vec<Word>>,
        label: Option<String>,
    ) -> Result<Self> {
        let rank = images.len();
        for w in images.iter().chain(inverse_images.iter().flatten()) {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: w.rank(),
                });
            }
        }
        if let Some(inv) = &inverse_images {
            if inv.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: inv.len(),
                });
            }
        }
        let e = Endomorphism {
            rank,
            images,
            inverse_images,
            label,
        };
        if e.inverse_images.is_some() && !e.inverse_is_valid() {
            return Err(Error::InvalidParameters(
                "inverse images do not invert the images".into(),
            ));
        }
        Ok(e)
    }

    pub(crate) fn from_parts_unchecked(
        images: Vec<Word>,
        inverse_images: Option<Vec<Word>>,
        label: Option<String>,
    ) -> Self {
        let rank = images.len();
        Endomorphism {
            rank,
            images,
            inverse_images,
            label,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Word {
        &self.images[i]
    }

    pub fn inverse_images(&self) -> Option<&[Word]> {
        self.inverse_images.as_deref()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Substitutes the generator images into `w` and reduces.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &Word) -> Word {
        let mut out = Word::identity(self.rank);
        for &(g, e) in w.syllables() {
            let img = if e > 0 {
                self.images[g].clone()
            } else {
                self.images[g].inverse()
            };
            for _ in 0..e.unsigned_abs() {
                out = out.mul(&img);
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply_unchecked(w))
            .collect();
        let inverse_images = match (&self.inverse_images, &other.inverse_images) {
            (Some(si), Some(_)) => {
                let oinv = other.inverse().expect("inverse present");
                Some(si.iter().map(|w| oinv.apply_unchecked(w)).collect())
            }
            _ => None,
        };
        let label = match (&self.label, &other.label) {
            (Some(a), Some(b)) => Some(format!("{a}∘{b}")),
            _ => None,
        };
        Ok(Endomorphism {
            rank: self.rank,
            images,
            inverse_images,
            label,
        })
    }

    /// The inverse automorphism, when inverse images are known.
    pub fn inverse(&self) -> Option<Endomorphism> {
        let inv = self.inverse_images.clone()?;
        Some(Endomorphism {
            rank: self.rank,
            images: inv,
            inverse_images: Some(self.images.clone()),
            label: self.label.as_ref().map(|l| format!("({l})⁻¹")),
        })
    }

    /// `self^e`, using the inverse for negative exponents.
    pub fn pow(&self, e: i64) -> Result<Endomorphism> {
        let base = if e < 0 {
            self.inverse()
                .ok_or_else(|| Error::InvalidParameters("negative power without inverse".into()))?
        } else {
            self.clone()
        };
        let mut out = Endomorphism::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            out = out.compose(&base)?;
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| *w == Word::generator(self.rank, i))
    }

    fn inverse_is_valid(&self) -> bool {
        let Some(inv) = self.inverse() else {
            return true;
        };
        let fwd = Endomorphism {
            inverse_images: None,
            ..self.clone()
        };
        let back = Endomorphism {
            inverse_images: None,
            ..inv
        };
        fwd.compose(&back).map(|e| e.is_identity()).unwrap_or(false)
            && back.compose(&fwd).map(|e| e.is_identity()).unwrap_or(false)
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = super::default_names(self.rank);
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .filter(|(i, w)| **w != Word::generator(self.rank, *i))
            .map(|(i, w)| format!("{} ↦ {}", names[i], w.display_with(&names)))
            .collect();
        if parts.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}
