use crate::error::{Error, Result};
use crate::graph::{FilteredGraph, OrientedEdge};
use crate::letter::{self, Letter};
use crate::map::FilteredMap;
use crate::path::EdgePath;

use super::lift::Lift;

pub const DEFAULT_DEPTH: usize = 64;

/// A ray `p·E·u·f_#(u)·f²_#(u)…` issuing from a fixed cover vertex `p`
/// along an edge `E` whose suffix `u` is nontrivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IteratedRay {
    pub map: FilteredMap,
    pub at: EdgePath,
    pub edge: OrientedEdge,
}

impl IteratedRay {
    /// The stable prefix of length at least `depth`, or as long as could be
    /// certified within the iteration budget.
    pub fn expand(&self, depth: usize) -> Vec<OrientedEdge> {
        let u = self.map.suffix_of(self.edge.edge).clone();
        let seed = {
            let mut s = self.at.edges().to_vec();
            letter::push_reduced(&mut s, self.edge);
            s
        };
        let build = |uk: &EdgePath| {
            let mut s = seed.clone();
            letter::extend_reduced(&mut s, uk.edges().iter().copied());
            s
        };
        let mut uk = u.clone();
        let mut prev = build(&uk);
        let budget = 4 * depth + 16;
        for _ in 0..budget {
            uk = u.join(&self.map.image(&uk));
            let next = build(&uk);
            let stable = letter::common_prefix_len(&prev, &next);
            if stable >= depth {
                return next[..depth].to_vec();
            }
            prev = next;
        }
        prev
    }
}

/// A point at infinity of the universal cover, seen from the base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RaySpec {
    /// `prefix·period^∞` in normal form.
    EvPeriodic {
        prefix: Vec<OrientedEdge>,
        period: Vec<OrientedEdge>,
    },
    Iterated(IteratedRay),
}

impl RaySpec {
    /// Normal form: cyclically reduced primitive period, no cancellation at
    /// the splice, and the shortest possible prefix.
    pub fn periodic(prefix: &[OrientedEdge], period: &[OrientedEdge]) -> Result<RaySpec> {
        let period = letter::reduce(period);
        if period.is_empty() {
            return Err(Error::domain("a periodic ray needs a nontrivial period"));
        }
        let (t, c) = letter::cyclic_split(&period);
        let mut pre = letter::reduce(prefix);
        letter::extend_reduced(&mut pre, t.iter().copied());
        let mut per = c;
        while let Some(&last) = pre.last() {
            if last == per[0].inverse() {
                pre.pop();
                per = letter::rotate(&per, 1);
            } else if last == per[per.len() - 1] {
                pre.pop();
                per = letter::rotate(&per, per.len() - 1);
            } else {
                break;
            }
        }
        per.truncate(letter::primitive_period(&per));
        Ok(RaySpec::EvPeriodic {
            prefix: pre,
            period: per,
        })
    }

    pub fn expand(&self, depth: usize) -> Vec<OrientedEdge> {
        match self {
            RaySpec::EvPeriodic { prefix, period } => {
                let mut out: Vec<OrientedEdge> = prefix.iter().take(depth).copied().collect();
                let mut k = 0;
                while out.len() < depth {
                    out.push(period[k % period.len()]);
                    k += 1;
                }
                out
            }
            RaySpec::Iterated(r) => r.expand(depth),
        }
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self, RaySpec::EvPeriodic { .. })
    }

    /// Exact for two periodic rays; otherwise compares prefixes of length
    /// `depth`, treating a prefix relation as agreement.
    pub fn same_end(&self, other: &RaySpec, depth: usize) -> bool {
        if self.is_periodic() && other.is_periodic() {
            return self == other;
        }
        let (a, b) = (self.expand(depth), other.expand(depth));
        let n = a.len().min(b.len());
        a[..n] == b[..n]
    }

    pub fn render(&self, g: &FilteredGraph) -> String {
        let names = |es: &[OrientedEdge]| -> String {
            es.iter().map(|e| g.oriented_name(*e)).collect::<Vec<_>>().join(" ")
        };
        match self {
            RaySpec::EvPeriodic { prefix, period } => {
                if prefix.is_empty() {
                    format!("({})^inf", names(period))
                } else {
                    format!("{} ({})^inf", names(prefix), names(period))
                }
            }
            RaySpec::Iterated(r) => {
                let mut s = r.at.edges().to_vec();
                letter::push_reduced(&mut s, r.edge);
                format!(
                    "{} [{} iterated]",
                    names(&s),
                    names(r.map.suffix_of(r.edge.edge).edges())
                )
            }
        }
    }
}

/// A bi-infinite line in the universal cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineSpec {
    /// `…ρρ·ρρ…` through the endpoint of `anchor` (a path from the base).
    Periodic {
        anchor: Vec<OrientedEdge>,
        period: Vec<OrientedEdge>,
    },
    Ends(RaySpec, RaySpec),
}

impl LineSpec {
    /// The axis of a deck element `τ·ρ^k·τ̄`.
    pub fn axis_of(w: &EdgePath) -> Result<LineSpec> {
        if w.is_empty() {
            return Err(Error::domain("the trivial deck element has no axis"));
        }
        let (t, c) = letter::cyclic_split(w.edges());
        let d = letter::primitive_period(&c);
        Ok(LineSpec::Periodic {
            anchor: t,
            period: c[..d].to_vec(),
        })
    }

    pub fn ends(&self) -> Result<(RaySpec, RaySpec)> {
        match self {
            LineSpec::Periodic { anchor, period } => Ok((
                RaySpec::periodic(anchor, &letter::inverse(period))?,
                RaySpec::periodic(anchor, period)?,
            )),
            LineSpec::Ends(a, b) => Ok((a.clone(), b.clone())),
        }
    }
}

/// All reduced cover vertices within `radius` of the base fixed by the lift,
/// in shortlex order.
pub fn fixed_vertices(lift: &Lift, radius: usize) -> Vec<EdgePath> {
    let g = lift.map().graph().clone();
    let base = g.base();
    let mut out = Vec::new();
    // (path, its end vertex, image of the path under the lift)
    let mut stack: Vec<(Vec<OrientedEdge>, usize, Vec<OrientedEdge>)> =
        vec![(Vec::new(), base, lift.twist().edges().to_vec())];
    while let Some((p, at, img)) = stack.pop() {
        if p == img {
            out.push(EdgePath::from_raw(base, at, p.clone()));
        }
        if p.len() == radius {
            continue;
        }
        for d in g.directions(at).into_iter().rev() {
            if p.last() == Some(&d.inverse()) {
                continue;
            }
            let mut q = p.clone();
            q.push(d);
            let mut qi = img.clone();
            lift.map().push_edge_image(&mut qi, d);
            stack.push((q, g.term(d), qi));
        }
    }
    out.sort_by(|a, b| (a.len(), a.edges()).cmp(&(b.len(), b.edges())));
    out
}

/// The fixed ray leaving the fixed vertex `p` in `direction`, if there is
/// one of a representable form. Periodic directions are searched among
/// loops of length at most `search_bound`.
pub fn fixed_ray(lift: &Lift, p: &EdgePath, direction: OrientedEdge, search_bound: usize) -> Result<Option<RaySpec>> {
    let g = lift.map().graph();
    if !lift.fixes_vertex(p) {
        return Err(Error::domain("ray must start at a fixed vertex"));
    }
    if direction.edge >= g.edge_count() || g.init(direction) != p.end() {
        return Err(Error::domain("direction does not leave the endpoint of the vertex path"));
    }
    let u = lift.map().suffix_of(direction.edge);
    if !u.is_empty() {
        if direction.reversed {
            return Ok(None);
        }
        return Ok(Some(RaySpec::Iterated(IteratedRay {
            map: lift.map().clone(),
            at: p.clone(),
            edge: direction,
        })));
    }
    match periodic_fixed_loop(lift.map(), g, p.end(), direction, search_bound) {
        Some(x) => Ok(Some(RaySpec::periodic(p.edges(), &x)?)),
        None => Ok(None),
    }
}

/// Shortest (then least) cyclically reduced loop at `v` starting with `first`
/// and fixed by `f_#`.
fn periodic_fixed_loop(
    f: &FilteredMap,
    g: &FilteredGraph,
    v: usize,
    first: OrientedEdge,
    bound: usize,
) -> Option<Vec<OrientedEdge>> {
    let mut layer = vec![vec![first]];
    for _ in 0..bound {
        let mut hits: Vec<Vec<OrientedEdge>> = layer
            .iter()
            .filter(|x| g.term(*x.last().unwrap()) == v && letter::is_cyclically_reduced(x))
            .filter(|x| {
                let path = EdgePath::from_raw(v, v, x.to_vec());
                f.image(&path).edges() == x.as_slice()
            })
            .cloned()
            .collect();
        if !hits.is_empty() {
            hits.sort();
            return Some(hits.swap_remove(0));
        }
        let mut next = Vec::new();
        for x in &layer {
            let at = g.term(*x.last().unwrap());
            for d in g.directions(at) {
                if d == x.last().unwrap().inverse() {
                    continue;
                }
                let mut y = x.clone();
                y.push(d);
                next.push(y);
            }
        }
        layer = next;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{dehn_rose, p};

    fn oe(g: &FilteredGraph, s: &str) -> OrientedEdge {
        g.parse_oriented(s).unwrap()
    }

    #[test]
    fn fixed_vertices_of_rose_lifts() {
        let (g, d) = dehn_rose();
        let base = Lift::base(d.clone());
        let fv: Vec<String> = fixed_vertices(&base, 3).iter().map(|x| x.render(&g)).collect();
        assert_eq!(
            fv,
            vec!["1@v", "a", "~a", "a a", "~a ~a", "a a a", "~a ~a ~a", "b a ~b", "b ~a ~b"]
        );
        // γ = a is the lift fixing the endpoint of ~b
        let shifted = Lift::new(d.clone(), p(&g, "a")).unwrap();
        let fv = fixed_vertices(&shifted, 3);
        assert!(fv.contains(&p(&g, "~b")));
        assert!(!fv.contains(&p(&g, "")));
        let shifted = Lift::new(d, p(&g, "a a")).unwrap();
        assert!(fixed_vertices(&shifted, 3).is_empty());
    }

    #[test]
    fn rays_at_the_base() {
        let (g, d) = dehn_rose();
        let l = Lift::base(d);
        let e = EdgePath::trivial(0);
        let ra = fixed_ray(&l, &e, oe(&g, "a"), 4).unwrap().unwrap();
        assert_eq!(ra, RaySpec::periodic(&[], &[oe(&g, "a")]).unwrap());
        let rb = fixed_ray(&l, &e, oe(&g, "b"), 4).unwrap().unwrap();
        assert!(matches!(rb, RaySpec::Iterated(_)));
        assert_eq!(rb.render(&g), "b [a iterated]");
        let expected = RaySpec::periodic(&[oe(&g, "b")], &[oe(&g, "a")]).unwrap();
        assert!(rb.same_end(&expected, 64));
        assert_eq!(rb.expand(5).len(), 5);
        let rai = fixed_ray(&l, &e, oe(&g, "~a"), 4).unwrap().unwrap();
        assert_eq!(rai.render(&g), "(~a)^inf");
        assert!(fixed_ray(&l, &e, oe(&g, "~b"), 4).unwrap().is_none());
    }

    #[test]
    fn periodic_normal_form() {
        let (g, _) = dehn_rose();
        let a = oe(&g, "a");
        let b = oe(&g, "b");
        let r1 = RaySpec::periodic(&[a, a], &[a]).unwrap();
        assert_eq!(r1, RaySpec::periodic(&[], &[a, a]).unwrap());
        let r2 = RaySpec::periodic(&[b, a.inverse()], &[a, b]).unwrap();
        assert_eq!(r2.render(&g), "b (b a)^inf");
        assert_eq!(RaySpec::periodic(&[a, b], &[a, b]).unwrap().render(&g), "(a b)^inf");
        let r3 = RaySpec::periodic(&[b], &[a.inverse(), b, a]).unwrap();
        assert_eq!(r3.render(&g), "b ~a (b)^inf");
    }

    #[test]
    fn axis_ends() {
        let (g, _) = dehn_rose();
        let (l, r) = LineSpec::axis_of(&p(&g, "b a ~b")).unwrap().ends().unwrap();
        assert_eq!(l.render(&g), "b (~a)^inf");
        assert_eq!(r.render(&g), "b (a)^inf");
    }
}
