use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::FreeWord;

/// An endomorphism of the free group, given by generator images. Everything
/// built by this crate is an automorphism; the type does not re-check that.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeGroupAutomorphism {
    images: Vec<FreeWord>,
}

impl FreeGroupAutomorphism {
    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        for w in &images {
            if w.is_identity() {
                return Err(Error::domain("a generator maps to the identity"));
            }
            if let Some(l) = w.letters().iter().find(|l| l.index() >= rank) {
                return Err(Error::domain(format!(
                    "image uses generator {} outside rank {rank}",
                    l.index() + 1
                )));
            }
        }
        Ok(FreeGroupAutomorphism { images })
    }

    pub(crate) fn from_images(images: Vec<FreeWord>) -> Self {
        FreeGroupAutomorphism { images }
    }

    pub fn identity(rank: usize) -> Self {
        FreeGroupAutomorphism {
            images: (0..rank).map(FreeWord::generator).collect(),
        }
    }

    /// `w ↦ c·w·c̄`.
    pub fn inner(rank: usize, c: &FreeWord) -> Self {
        FreeGroupAutomorphism {
            images: (0..rank).map(|g| FreeWord::generator(g).conjugate_by(c)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &FreeWord {
        &self.images[gen]
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = Vec::new();
        for l in w.letters() {
            let img = &self.images[l.index()];
            if l.inv {
                crate::letter::extend_reduced(&mut out, img.inverse().letters().iter().copied());
            } else {
                crate::letter::extend_reduced(&mut out, img.letters().iter().copied());
            }
        }
        FreeWord::new(&out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FreeGroupAutomorphism) -> FreeGroupAutomorphism {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        FreeGroupAutomorphism {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// Post-composition with the inner automorphism by `c`.
    pub fn conjugated_by(&self, c: &FreeWord) -> FreeGroupAutomorphism {
        FreeGroupAutomorphism {
            images: self.images.iter().map(|w| w.conjugate_by(c)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(g, w)| *w == FreeWord::generator(g))
    }

    pub fn render(&self, labels: &[String]) -> Vec<(String, String)> {
        self.images
            .iter()
            .enumerate()
            .map(|(g, w)| (FreeWord::generator(g).render(labels), w.render(labels)))
            .collect()
    }
}

impl fmt::Display for FreeGroupAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .render(&[])
            .into_iter()
            .map(|(g, w)| format!("{g} -> {w}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[derive(Serialize)]
struct Row {
    generator: String,
    image: String,
}

impl FreeGroupAutomorphism {
    pub fn to_json(&self, labels: &[String]) -> serde_json::Value {
        let rows: Vec<Row> = self
            .render(labels)
            .into_iter()
            .map(|(generator, image)| Row { generator, image })
            .collect();
        serde_json::to_value(rows).expect("rows serialize")
    }
}
