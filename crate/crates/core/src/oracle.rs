//! Brute-force reference procedures: fixed words, conjugacy, primitive
//! roots and outer-class comparison. Tests and the search routes use them.

use serde::Serialize;

use crate::automorphism::FreeGroupAutomorphism;
use crate::error::{Error, Result};
use crate::letter;
use crate::map::FilteredMap;
use crate::path::{spanning_tree_basis, Basis, PathRewriter};
use crate::word::{FreeWord, GenLetter};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Fails { witness: String },
    Inconclusive,
}

/// Result of a bounded check; `bound` is part of the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    #[serde(flatten)]
    pub outcome: Outcome,
    pub bound: usize,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }
}

/// Every reduced word of length at most `max_len`, in shortlex order.
pub fn reduced_words(rank: usize, max_len: usize) -> Vec<FreeWord> {
    let letters: Vec<GenLetter> = (0..rank)
        .flat_map(|g| [GenLetter::new(g, false), GenLetter::new(g, true)])
        .collect();
    let mut out = vec![FreeWord::identity()];
    let mut layer: Vec<Vec<GenLetter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last() == Some(&letter::Letter::inverse(l)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| FreeWord::new(v)));
        layer = next;
    }
    out
}

/// All reduced `w` with `|w| ≤ max_len` and `φ(w) = w`, shortlex ordered.
pub fn brute_fixed_words(phi: &FreeGroupAutomorphism, max_len: usize) -> Vec<FreeWord> {
    reduced_words(phi.rank(), max_len)
        .into_iter()
        .filter(|w| phi.apply(w) == *w)
        .collect()
}

/// Some `c` with `c·u·c̄ = v`.
pub fn conjugate_in_free_group(u: &FreeWord, v: &FreeWord) -> Option<FreeWord> {
    let (tu, cu) = letter::cyclic_split(u.letters());
    let (tv, cv) = letter::cyclic_split(v.letters());
    let r = letter::rotation_to(&cu, &cv)?;
    // rotate(cu, r) = x̄·cu·x with x = cu[..r]
    let x = FreeWord::new(&cu[..r]);
    let tu = FreeWord::new(&tu);
    let tv = FreeWord::new(&tv);
    let c = tv.mul(&x.inverse()).mul(&tu.inverse());
    debug_assert_eq!(u.conjugate_by(&c), *v);
    Some(c)
}

/// `w = τ·ρ^k·τ̄` with `ρ` cyclically reduced and primitive, `k ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveRoot {
    pub conjugator: FreeWord,
    pub root: FreeWord,
    pub exponent: u64,
}

impl PrimitiveRoot {
    /// `τ·ρ·τ̄`.
    pub fn based(&self) -> FreeWord {
        self.root.conjugate_by(&self.conjugator)
    }

    pub fn assemble(&self) -> FreeWord {
        self.root.pow(self.exponent as i64).conjugate_by(&self.conjugator)
    }
}

pub fn primitive_root(w: &FreeWord) -> Result<PrimitiveRoot> {
    if w.is_identity() {
        return Err(Error::domain("the identity has no primitive root"));
    }
    let (t, c) = letter::cyclic_split(w.letters());
    let d = letter::primitive_period(&c);
    Ok(PrimitiveRoot {
        conjugator: FreeWord::new(&t),
        root: FreeWord::new(&c[..d]),
        exponent: (c.len() / d) as u64,
    })
}

pub fn are_conjugate(u: &FreeWord, v: &FreeWord) -> bool {
    let (_, cu) = letter::cyclic_split(u.letters());
    let (_, cv) = letter::cyclic_split(v.letters());
    letter::rotation_to(&cu, &cv).is_some()
}

/// Cyclically reduced words of length `1..=max_len`, one per rotation class.
fn class_representatives(rank: usize, max_len: usize) -> Vec<FreeWord> {
    reduced_words(rank, max_len)
        .into_iter()
        .filter(|w| !w.is_identity() && letter::is_cyclically_reduced(w.letters()))
        .filter(|w| letter::lex_min_rotation(w.letters()) == w.letters())
        .collect()
}

/// Compares `[φ(w)]` with `[ψ(w)]` for all conjugacy classes up to `max_len`.
pub fn same_outer_class_aut(
    phi: &FreeGroupAutomorphism,
    psi: &FreeGroupAutomorphism,
    max_len: usize,
    labels: &[String],
) -> Result<Verdict> {
    if phi.rank() != psi.rank() {
        return Err(Error::domain(format!(
            "rank mismatch: {} vs {}",
            phi.rank(),
            psi.rank()
        )));
    }
    for w in class_representatives(phi.rank(), max_len) {
        if !are_conjugate(&phi.apply(&w), &psi.apply(&w)) {
            return Ok(Verdict {
                outcome: Outcome::Fails {
                    witness: format!("[{}]", w.render(labels)),
                },
                bound: max_len,
            });
        }
    }
    Ok(Verdict {
        outcome: Outcome::Holds,
        bound: max_len,
    })
}

/// Two maps on one graph, compared in its spanning-tree marking.
pub fn same_outer_class(f: &FilteredMap, g: &FilteredMap, max_len: usize) -> Result<Verdict> {
    if !crate::map::same_graph(f.graph(), g.graph()) {
        return Err(Error::GraphMismatch);
    }
    let basis = spanning_tree_basis(f.graph(), f.graph().base())?;
    same_outer_class_aut(
        &f.induced_automorphism(&basis)?,
        &g.induced_automorphism(&basis)?,
        max_len,
        &basis.labels(),
    )
}

/// Maps on two graphs related by a homotopy equivalence `θ: G → G'`
/// (given as a rewriter). Checks `[θ f(w)] = [g θ(w)]` on classes of
/// length at most `max_len` in the basis of `G`.
pub fn same_outer_class_across(
    f: &FilteredMap,
    g: &FilteredMap,
    theta: &PathRewriter,
    max_len: usize,
) -> Result<Verdict> {
    let b_src = spanning_tree_basis(f.graph(), f.graph().base())?;
    let b_dst = spanning_tree_basis(g.graph(), g.graph().base())?;
    if b_src.rank() != b_dst.rank() {
        return Err(Error::domain(format!(
            "rank mismatch: {} vs {}",
            b_src.rank(),
            b_dst.rank()
        )));
    }
    let theta_word = |w: &FreeWord| -> FreeWord { transport_word(theta, &b_src, &b_dst, w) };
    let phi = f.induced_automorphism(&b_src)?;
    let psi = g.induced_automorphism(&b_dst)?;
    for w in class_representatives(b_src.rank(), max_len) {
        let lhs = theta_word(&phi.apply(&w));
        let rhs = psi.apply(&theta_word(&w));
        if !are_conjugate(&lhs, &rhs) {
            return Ok(Verdict {
                outcome: Outcome::Fails {
                    witness: format!("[{}]", w.render(&b_src.labels())),
                },
                bound: max_len,
            });
        }
    }
    Ok(Verdict {
        outcome: Outcome::Holds,
        bound: max_len,
    })
}

/// A basis word pushed through `θ`, read in the target basis up to
/// conjugacy by the image of the base vertex.
fn transport_word(theta: &PathRewriter, src: &Basis, dst: &Basis, w: &FreeWord) -> FreeWord {
    let image = theta.apply(&src.loop_of(w));
    dst.word_of(&image)
}
