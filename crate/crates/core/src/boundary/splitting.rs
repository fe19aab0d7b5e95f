use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FilteredGraph, OrientedEdge};
use crate::letter;
use crate::path::EdgePath;

use super::lift::Lift;
use super::ray::LineSpec;

/// Highest edge splitting of a finite window or of one period of a periodic
/// line. Position `k` is the vertex before edge `k` of the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub level: EdgeId,
    pub positions: Vec<usize>,
}

pub fn highest_edge_splitting(window: &[OrientedEdge]) -> Result<Splitting> {
    split(window, false)
}

/// Positions are taken modulo the period length.
pub fn periodic_splitting(period: &[OrientedEdge]) -> Result<Splitting> {
    if !letter::is_cyclically_reduced(period) {
        return Err(Error::domain("period must be cyclically reduced"));
    }
    split(period, true)
}

fn split(w: &[OrientedEdge], cyclic: bool) -> Result<Splitting> {
    if w.is_empty() {
        return Err(Error::domain("cannot split an empty line"));
    }
    if !letter::is_reduced(w) {
        return Err(Error::domain("line window is not reduced"));
    }
    let level = w.iter().map(|e| e.edge).max().unwrap();
    let n = w.len();
    let mut positions: Vec<usize> = w
        .iter()
        .enumerate()
        .filter(|(_, e)| e.edge == level)
        .map(|(k, e)| if e.reversed { k + 1 } else { k })
        .map(|k| if cyclic { k % n } else { k })
        .collect();
    positions.sort_unstable();
    positions.dedup();
    Ok(Splitting { level, positions })
}

/// The vertex `j` steps along `…ρρ·ρρ…` from the anchor, as a path from the
/// base vertex.
pub fn line_vertex(anchor: &[OrientedEdge], period: &[OrientedEdge], j: i64) -> Vec<OrientedEdge> {
    let mut out = anchor.to_vec();
    let n = period.len();
    if j >= 0 {
        letter::extend_reduced(&mut out, (0..j as usize).map(|i| period[i % n]));
    } else {
        let inv = letter::inverse(period);
        letter::extend_reduced(&mut out, (0..j.unsigned_abs() as usize).map(|i| inv[i % n]));
    }
    out
}

/// Position along the line of the vertex `v`, if it lies on the line.
pub fn position_on_line(anchor: &[OrientedEdge], period: &[OrientedEdge], v: &[OrientedEdge]) -> Option<i64> {
    let mut d = letter::inverse(anchor);
    letter::extend_reduced(&mut d, v.iter().copied());
    let n = period.len();
    if d.iter().enumerate().all(|(i, e)| *e == period[i % n]) {
        return Some(d.len() as i64);
    }
    let inv = letter::inverse(period);
    if d.iter().enumerate().all(|(i, e)| *e == inv[i % n]) {
        return Some(-(d.len() as i64));
    }
    None
}

/// The `r` with `L(σ_j) = σ_{j+r}` on the splitting vertices of an
/// invariant periodic line.
pub fn splitting_translation(lift: &Lift, line: &LineSpec) -> Result<i64> {
    let g: &FilteredGraph = lift.map().graph();
    let (anchor, period) = match line {
        LineSpec::Periodic { anchor, period } => (anchor.clone(), period.clone()),
        LineSpec::Ends(..) => return Err(Error::domain("splitting translation needs a periodic line")),
    };
    let base = g.base();
    let mut based = anchor.clone();
    letter::extend_reduced(&mut based, period.iter().copied());
    letter::extend_reduced(&mut based, letter::inverse(&anchor));
    let axis = EdgePath::from_raw(base, base, based);
    let moved = lift.act_on_deck(&axis);
    if moved != axis {
        let witness = if moved == axis.reverse() {
            format!("line is flipped: {} -> {}", axis.render(g), moved.render(g))
        } else {
            format!("{} -> {}", axis.render(g), moved.render(g))
        };
        return Err(Error::Domain(format!("line is not invariant under the lift ({witness})")));
    }

    let split = periodic_splitting(&period)?;
    let n = period.len() as i64;
    let c = split.positions.len() as i64;
    let index = |x: i64| -> Option<i64> {
        let q = x.div_euclid(n);
        let t = x.rem_euclid(n) as usize;
        split.positions.iter().position(|&s| s == t).map(|k| q * c + k as i64)
    };
    let s0 = split.positions[0] as i64;
    let z0 = line_vertex(&anchor, &period, s0);
    let image = lift.twist().join(&lift.map().image(&EdgePath::from_raw(base, base, z0.clone()))).edges().to_vec();
    let j = position_on_line(&anchor, &period, &image).ok_or_else(|| {
        Error::Domain(format!(
            "image of splitting vertex {} leaves the line",
            EdgePath::from_raw(base, base, z0.clone()).render(g)
        ))
    })?;
    let (i0, i1) = (index(s0).unwrap(), index(j));
    match i1 {
        Some(i1) => Ok(i1 - i0),
        None => Err(Error::Domain(format!(
            "image of a splitting vertex is not a splitting vertex (position {j})"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{dehn_rose, p};

    #[test]
    fn window_splittings() {
        let (g, _) = dehn_rose();
        let w = p(&g, "a b a b");
        let s = highest_edge_splitting(w.edges()).unwrap();
        assert_eq!(s.level, 1);
        assert_eq!(s.positions, vec![1, 3]);
        let s = highest_edge_splitting(p(&g, "a a a").edges()).unwrap();
        assert_eq!(s.positions, vec![0, 1, 2]);
        let bad = [OrientedEdge::forward(1), OrientedEdge::backward(1)];
        assert!(highest_edge_splitting(&bad).is_err());
        let s = highest_edge_splitting(p(&g, "a ~b").edges()).unwrap();
        assert_eq!(s.positions, vec![2]);
    }

    #[test]
    fn translation_on_the_a_axis() {
        let (g, d) = dehn_rose();
        let line = LineSpec::axis_of(&p(&g, "a")).unwrap();
        assert_eq!(splitting_translation(&Lift::base(d.clone()), &line).unwrap(), 0);
        let shifted = Lift::new(d.clone(), p(&g, "a")).unwrap();
        assert_eq!(splitting_translation(&shifted, &line).unwrap(), 1);
        let back = Lift::new(d.clone(), p(&g, "~a ~a")).unwrap();
        assert_eq!(splitting_translation(&back, &line).unwrap(), -2);
        let off = Lift::new(d, p(&g, "b")).unwrap();
        assert!(splitting_translation(&off, &line).is_err());
    }
}
