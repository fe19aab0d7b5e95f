use serde::Serialize;

use crate::boundary::classify::{classify_fixed_points, ClassifyBounds};
use crate::boundary::lift::{lift_fixing_vertex, Lift};
use crate::error::{Error, Result};
use crate::map::FilteredMap;

use super::essential::{coordinate, EssentialData};
use super::group::GroupWord;

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    /// The candidate is `T_α^k ∘ s_α(f)`.
    pub exponent: i64,
    #[serde(skip)]
    pub lift: Lift,
    pub twist: String,
    pub commutes: bool,
    pub fixed_vertices: usize,
    pub witnesses: Vec<String>,
    pub lower_bound: usize,
    pub exactly_two: bool,
    pub interesting: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ILReport {
    pub axis: String,
    pub element: String,
    pub identity: bool,
    pub exp_bound: i64,
    pub candidates: Vec<Candidate>,
    /// Exponents of the candidates with at least three fixed ends.
    pub found: Vec<i64>,
    /// Exponents of `s_i(f)` for edges on the axis, together with `0` for `s_α(f)`.
    pub predicted: Vec<i64>,
    pub matches: bool,
    /// `p(k,l) = k − l` over distinct found exponents.
    pub differences: Vec<i64>,
    /// False when a predicted exponent lies outside the search window.
    pub complete: bool,
}

pub fn interesting_lifts(
    element: &str,
    data: &EssentialData,
    axis: usize,
    exp_bound: i64,
    bounds: ClassifyBounds,
) -> Result<ILReport> {
    let w = GroupWord::parse(element, data.group.labels())?;
    let f = data.group.evaluate(&w);
    interesting_lifts_of(&f, &w.render(data.group.labels()), data, axis, exp_bound, bounds)
}

pub fn interesting_lifts_of(
    f: &FilteredMap,
    element: &str,
    data: &EssentialData,
    axis: usize,
    exp_bound: i64,
    bounds: ClassifyBounds,
) -> Result<ILReport> {
    let g = data.group.graph();
    let a = data.axes.get(axis).ok_or(Error::IndexOutOfRange {
        index: axis + 1,
        len: data.axes.len(),
    })?;
    let mut report = ILReport {
        axis: a.render(g),
        element: element.to_string(),
        identity: f.is_identity(),
        exp_bound,
        candidates: Vec::new(),
        found: Vec::new(),
        predicted: Vec::new(),
        matches: false,
        differences: Vec::new(),
        complete: true,
    };
    if report.identity {
        return Ok(report);
    }

    let mut predicted = vec![0];
    for e in data.edges.iter().filter(|e| e.axis == axis) {
        predicted.push(coordinate(f, &e.anchor, a, &e.label)?);
    }
    predicted.sort_unstable();
    predicted.dedup();

    let s_alpha = lift_fixing_vertex(f, &a.anchor)?;
    let t = &a.translation;
    for k in -exp_bound..=exp_bound {
        let lift = s_alpha.translate(&t.pow(k));
        let commutes = lift.act_on_deck(t) == *t;
        let r = classify_fixed_points(&lift, bounds)?;
        report.candidates.push(Candidate {
            exponent: k,
            twist: lift.twist().render(g),
            commutes,
            fixed_vertices: r.fixed_vertices.len(),
            witnesses: r.witnesses.iter().map(|x| x.render(g)).collect(),
            lower_bound: r.lower_bound,
            exactly_two: r.exactly_two,
            interesting: commutes && r.at_least_three(),
            lift,
        });
    }
    report.found = report.candidates.iter().filter(|c| c.interesting).map(|c| c.exponent).collect();
    report.complete = predicted.iter().all(|k| k.abs() <= exp_bound);
    report.matches = report.found == predicted;
    let mut diffs: Vec<i64> = report
        .found
        .iter()
        .flat_map(|k| report.found.iter().filter(move |l| *l != k).map(move |l| k - l))
        .collect();
    diffs.sort_unstable();
    diffs.dedup();
    report.differences = diffs;
    report.predicted = predicted;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axes::essential::essential_data;
    use crate::axes::group::MapGroup;
    use crate::testutil::dehn_rose;

    #[test]
    fn rose_twist_has_two_interesting_lifts() {
        let (g, d) = dehn_rose();
        let k = MapGroup::new(g, vec![("D".into(), d)]).unwrap();
        let data = essential_data(&k, 6).unwrap();
        let bounds = ClassifyBounds {
            radius: 4,
            ..ClassifyBounds::default()
        };
        let r = interesting_lifts("D", &data, 0, 3, bounds).unwrap();
        assert_eq!(r.found, vec![0, 1]);
        assert_eq!(r.predicted, vec![0, 1]);
        assert!(r.matches && r.complete);
        assert_eq!(r.differences, vec![-1, 1]);
        let two = r.candidates.iter().find(|c| c.exponent == 2).unwrap();
        assert!(two.exactly_two && !two.interesting);

        let id = interesting_lifts("D.~D", &data, 0, 3, bounds).unwrap();
        assert!(id.identity && id.candidates.is_empty());
    }
}
