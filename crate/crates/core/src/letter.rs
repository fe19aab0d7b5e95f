//! Word algebra shared by edge paths and free-group words.
//!
//! Both oriented edges and generator letters are symbols with a formal
//! inverse. Everything here works on plain slices so the path and word types
//! can stay thin wrappers.

use std::fmt::Debug;
use std::hash::Hash;

pub trait Letter: Copy + Eq + Ord + Hash + Debug {
    fn inverse(self) -> Self;
}

/// Appends `x`, cancelling against the last letter when they are inverse.
#[inline]
pub fn push_reduced<L: Letter>(word: &mut Vec<L>, x: L) {
    if word.last() == Some(&x.inverse()) {
        word.pop();
    } else {
        word.push(x);
    }
}

pub fn extend_reduced<L: Letter>(word: &mut Vec<L>, letters: impl IntoIterator<Item = L>) {
    for x in letters {
        push_reduced(word, x);
    }
}

pub fn reduce<L: Letter>(letters: &[L]) -> Vec<L> {
    let mut out = Vec::with_capacity(letters.len());
    extend_reduced(&mut out, letters.iter().copied());
    out
}

pub fn is_reduced<L: Letter>(letters: &[L]) -> bool {
    letters.windows(2).all(|w| w[1] != w[0].inverse())
}

pub fn inverse<L: Letter>(letters: &[L]) -> Vec<L> {
    letters.iter().rev().map(|x| x.inverse()).collect()
}

/// Length of the conjugating prefix of a reduced word `w = t·c·t⁻¹` where
/// `c` is cyclically reduced.
pub fn peel_len<L: Letter>(w: &[L]) -> usize {
    let n = w.len();
    let mut k = 0;
    while 2 * k + 1 < n && w[n - 1 - k] == w[k].inverse() {
        k += 1;
    }
    k
}

pub fn is_cyclically_reduced<L: Letter>(w: &[L]) -> bool {
    is_reduced(w) && (w.len() < 2 || w[w.len() - 1] != w[0].inverse())
}

/// Splits a reduced word into `(t, c)` with `w = t·c·t⁻¹`, `c` cyclically reduced.
pub fn cyclic_split<L: Letter>(w: &[L]) -> (Vec<L>, Vec<L>) {
    let k = peel_len(w);
    (w[..k].to_vec(), w[k..w.len() - k].to_vec())
}

/// Smallest `d` dividing `len(w)` with `w = (w[..d])^(len/d)`.
pub fn primitive_period<L: Letter>(w: &[L]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .filter(|d| n % d == 0)
        .find(|&d| (d..n).all(|i| w[i] == w[i - d]))
        .unwrap_or(n)
}

pub fn rotate<L: Letter>(w: &[L], by: usize) -> Vec<L> {
    if w.is_empty() {
        return Vec::new();
    }
    let by = by % w.len();
    w[by..].iter().chain(w[..by].iter()).copied().collect()
}

/// The `r` with `rotate(u, r) == v`, if any.
pub fn rotation_to<L: Letter>(u: &[L], v: &[L]) -> Option<usize> {
    if u.len() != v.len() {
        return None;
    }
    if u.is_empty() {
        return Some(0);
    }
    let n = u.len();
    (0..n).find(|&r| (0..n).all(|i| u[(i + r) % n] == v[i]))
}

pub fn lex_min_rotation<L: Letter>(w: &[L]) -> Vec<L> {
    (0..w.len().max(1))
        .map(|r| rotate(w, r))
        .min()
        .unwrap_or_default()
}

/// Canonical representative of a cyclic word up to rotation and inversion.
pub fn cyclic_class<L: Letter>(w: &[L]) -> Vec<L> {
    let fwd = lex_min_rotation(w);
    let bwd = lex_min_rotation(&inverse(w));
    fwd.min(bwd)
}

/// Signed exponent of a power: `Some(k)` if `x = root^k` as plain words
/// (`root` cyclically reduced, nonempty).
pub fn power_exponent<L: Letter>(x: &[L], root: &[L]) -> Option<i64> {
    if x.is_empty() {
        return Some(0);
    }
    let n = root.len();
    if n == 0 || x.len() % n != 0 {
        return None;
    }
    let k = (x.len() / n) as i64;
    if x.chunks(n).all(|c| c == root) {
        return Some(k);
    }
    let inv = inverse(root);
    if x.chunks(n).all(|c| c == inv.as_slice()) {
        return Some(-k);
    }
    None
}

pub fn power<L: Letter>(root: &[L], k: i64) -> Vec<L> {
    let base = if k < 0 { inverse(root) } else { root.to_vec() };
    let mut out = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
    for _ in 0..k.unsigned_abs() {
        extend_reduced(&mut out, base.iter().copied());
    }
    out
}

pub fn common_prefix_len<L: Letter>(a: &[L], b: &[L]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
