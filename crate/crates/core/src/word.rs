use std::fmt;

use crate::letter::{self, Letter};

/// A basis generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenLetter {
    pub gen: u32,
    pub inv: bool,
}

impl GenLetter {
    pub fn new(gen: usize, inv: bool) -> Self {
        GenLetter { gen: gen as u32, inv }
    }

    pub fn index(self) -> usize {
        self.gen as usize
    }
}

impl Letter for GenLetter {
    #[inline]
    fn inverse(self) -> Self {
        GenLetter {
            gen: self.gen,
            inv: !self.inv,
        }
    }
}

/// A reduced word in the free group on generators `0..rank`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FreeWord(Vec<GenLetter>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(gen: usize) -> Self {
        FreeWord(vec![GenLetter::new(gen, false)])
    }

    /// Reduces the given letters.
    pub fn new(letters: &[GenLetter]) -> Self {
        FreeWord(letter::reduce(letters))
    }

    /// Shorthand for tests and fixtures: positive integers are generators
    /// `1..`, negative integers their inverses.
    pub fn from_ints(xs: &[i32]) -> Self {
        let letters: Vec<_> = xs
            .iter()
            .map(|&x| {
                assert!(x != 0, "generator indices start at 1");
                GenLetter::new(x.unsigned_abs() as usize - 1, x < 0)
            })
            .collect();
        FreeWord::new(&letters)
    }

    pub fn letters(&self) -> &[GenLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.0.clone();
        letter::extend_reduced(&mut out, other.0.iter().copied());
        FreeWord(out)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(letter::inverse(&self.0))
    }

    pub fn conjugate_by(&self, c: &FreeWord) -> FreeWord {
        c.mul(self).mul(&c.inverse())
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        FreeWord(letter::power(&self.0, k))
    }

    /// Length-lexicographic order key.
    pub fn shortlex_key(&self) -> (usize, &[GenLetter]) {
        (self.0.len(), &self.0)
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|l| {
                let name = labels
                    .get(l.index())
                    .cloned()
                    .unwrap_or_else(|| format!("x{}", l.index() + 1));
                if l.inv {
                    format!("~{name}")
                } else {
                    name
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.shortlex_key().cmp(&other.shortlex_key())
    }
}
