use crate::error::Result;
use crate::letter::Letter;
use crate::oracle;
use crate::path::{spanning_tree_basis, EdgePath};

use super::lift::Lift;
use super::ray::{fixed_ray, fixed_vertices, LineSpec, RaySpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyBounds {
    pub radius: usize,
    pub depth: usize,
    pub witness_cap: usize,
}

impl Default for ClassifyBounds {
    fn default() -> Self {
        ClassifyBounds {
            radius: 6,
            depth: super::ray::DEFAULT_DEPTH,
            witness_cap: 8,
        }
    }
}

/// Fixed ends of a lift found within bounds. Witnesses are pairwise
/// distinct at `depth`, so `lower_bound` is a certified lower bound.
#[derive(Clone, Debug)]
pub struct FixedPointReport {
    pub identity: bool,
    pub fixed_vertices: Vec<EdgePath>,
    pub witnesses: Vec<RaySpec>,
    pub lower_bound: usize,
    /// No fixed vertex within the radius and exactly two fixed ends found.
    pub exactly_two: bool,
    pub bounds: ClassifyBounds,
}

impl FixedPointReport {
    pub fn at_least_three(&self) -> bool {
        self.lower_bound >= 3
    }
}

fn push_distinct(witnesses: &mut Vec<RaySpec>, r: RaySpec, depth: usize) {
    if !witnesses.iter().any(|w| w.same_end(&r, depth)) {
        witnesses.push(r);
    }
}

pub fn classify_fixed_points(lift: &Lift, bounds: ClassifyBounds) -> Result<FixedPointReport> {
    let g = lift.map().graph().clone();
    let base = g.base();
    let mut witnesses = Vec::new();

    if lift.is_identity() {
        let root = EdgePath::trivial(base);
        for d in g.directions(base) {
            if let Some(r) = fixed_ray(lift, &root, d, bounds.radius)? {
                push_distinct(&mut witnesses, r, bounds.depth);
            }
        }
        return Ok(FixedPointReport {
            identity: true,
            fixed_vertices: Vec::new(),
            lower_bound: witnesses.len(),
            witnesses,
            exactly_two: false,
            bounds,
        });
    }

    let fixed = fixed_vertices(lift, bounds.radius);
    'outer: for p in &fixed {
        for d in g.directions(p.end()) {
            if p.edges().last() == Some(&d.inverse()) {
                continue;
            }
            if let Some(r) = fixed_ray(lift, p, d, bounds.radius)? {
                push_distinct(&mut witnesses, r, bounds.depth);
                if witnesses.len() >= bounds.witness_cap {
                    break 'outer;
                }
            }
        }
    }

    if witnesses.len() < bounds.witness_cap {
        let basis = spanning_tree_basis(&g, base)?;
        let aut = lift.automorphism(&basis)?;
        let mut seen_axes: Vec<LineSpec> = Vec::new();
        for w in oracle::brute_fixed_words(&aut, bounds.radius) {
            if w.is_identity() {
                continue;
            }
            let axis = LineSpec::axis_of(&basis.loop_of(&w))?;
            if seen_axes.contains(&axis) {
                continue;
            }
            let (a, b) = axis.ends()?;
            seen_axes.push(axis);
            push_distinct(&mut witnesses, a, bounds.depth);
            push_distinct(&mut witnesses, b, bounds.depth);
            if witnesses.len() >= bounds.witness_cap {
                break;
            }
        }
    }
    witnesses.truncate(bounds.witness_cap);

    Ok(FixedPointReport {
        identity: false,
        exactly_two: fixed.is_empty() && witnesses.len() == 2,
        lower_bound: witnesses.len(),
        fixed_vertices: fixed,
        witnesses,
        bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::FilteredMap;
    use crate::testutil::{dehn_rose, p};

    fn bounds(radius: usize) -> ClassifyBounds {
        ClassifyBounds {
            radius,
            ..ClassifyBounds::default()
        }
    }

    #[test]
    fn base_lift_of_rose_twist_has_three_ends() {
        let (g, d) = dehn_rose();
        let r = classify_fixed_points(&Lift::base(d), bounds(3)).unwrap();
        assert!(r.at_least_three());
        assert!(!r.exactly_two);
        let rendered: Vec<String> = r.witnesses.iter().map(|w| w.render(&g)).collect();
        assert!(rendered.contains(&"(a)^inf".to_string()));
        assert!(rendered.contains(&"(~a)^inf".to_string()));
        assert!(rendered.contains(&"b [a iterated]".to_string()));
    }

    #[test]
    fn translated_lift_fixes_exactly_two() {
        let (g, d) = dehn_rose();
        let l = Lift::new(d, p(&g, "a a")).unwrap();
        let r = classify_fixed_points(&l, bounds(3)).unwrap();
        assert!(r.fixed_vertices.is_empty());
        assert!(r.exactly_two);
        assert_eq!(r.lower_bound, 2);
    }

    #[test]
    fn identity_is_flagged() {
        let (g, _) = dehn_rose();
        let r = classify_fixed_points(&Lift::base(FilteredMap::identity(g)), bounds(3)).unwrap();
        assert!(r.identity);
        assert_eq!(r.lower_bound, 4);
    }
}
