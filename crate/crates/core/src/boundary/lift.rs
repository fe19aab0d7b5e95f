use crate::automorphism::FreeGroupAutomorphism;
use crate::error::{Error, Result};
use crate::graph::OrientedEdge;
use crate::letter;
use crate::map::FilteredMap;
use crate::path::{Basis, EdgePath};

/// A covering translation, stored as a reduced loop at the base vertex.
pub type DeckElement = EdgePath;

/// The lift `t_γ ∘ f̃₀` of `f`, where `f̃₀` fixes the base lift of the base
/// vertex. Vertices of the universal cover are reduced paths from the base
/// vertex; the lift sends `p` to `[γ·f_#(p)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    map: FilteredMap,
    twist: DeckElement,
}

impl Lift {
    pub fn new(map: FilteredMap, twist: DeckElement) -> Result<Self> {
        let base = map.graph().base();
        if twist.start() != base || twist.end() != base {
            return Err(Error::domain("deck twist must be a loop at the base vertex"));
        }
        if !twist.is_reduced() {
            return Err(Error::domain("deck twist must be reduced"));
        }
        Ok(Lift { map, twist })
    }

    pub fn base(map: FilteredMap) -> Self {
        let base = map.graph().base();
        Lift {
            map,
            twist: EdgePath::trivial(base),
        }
    }

    pub fn map(&self) -> &FilteredMap {
        &self.map
    }

    pub fn twist(&self) -> &DeckElement {
        &self.twist
    }

    /// Image of the cover vertex `p`.
    pub fn apply_vertex(&self, p: &EdgePath) -> EdgePath {
        self.twist.join(&self.map.image(p))
    }

    pub fn fixes_vertex(&self, p: &EdgePath) -> bool {
        self.apply_vertex(p) == *p
    }

    /// `w ↦ [γ·f_#(w)·γ̄]` on loops at the base vertex.
    pub fn act_on_deck(&self, w: &DeckElement) -> DeckElement {
        self.twist.join(&self.map.image(w)).join(&self.twist.reverse())
    }

    /// `(f,γ)∘(g,δ) = (f∘g, [γ·f_#(δ)])`.
    pub fn compose(&self, other: &Lift) -> Result<Lift> {
        let map = self.map.compose(&other.map)?;
        let twist = self.twist.join(&self.map.image(&other.twist));
        Ok(Lift { map, twist })
    }

    /// `t_δ ∘ self`.
    pub fn translate(&self, delta: &DeckElement) -> Lift {
        Lift {
            map: self.map.clone(),
            twist: delta.join(&self.twist),
        }
    }

    /// The automorphism of `π₁(G, base)` this lift induces, in basis words.
    pub fn automorphism(&self, basis: &Basis) -> Result<FreeGroupAutomorphism> {
        let f = self.map.induced_automorphism(basis)?;
        Ok(f.conjugated_by(&basis.word_of(&self.twist)))
    }

    pub fn is_identity(&self) -> bool {
        self.twist.is_empty() && self.map.is_identity()
    }

    /// Image of an edge leaving the cover vertex `p`, as edges from `L(p)`.
    pub fn edge_image(&self, e: OrientedEdge) -> Vec<OrientedEdge> {
        let mut out = Vec::new();
        self.map.push_edge_image(&mut out, e);
        out
    }
}

/// The unique lift of `f` fixing the cover vertex `p`:
/// `γ = [p · reverse(f_#(p))]`.
pub fn lift_fixing_vertex(f: &FilteredMap, p: &EdgePath) -> Result<Lift> {
    let base = f.graph().base();
    if p.start() != base {
        return Err(Error::domain("vertex path must start at the base vertex"));
    }
    if !p.is_reduced() {
        return Err(Error::domain("vertex path must be reduced"));
    }
    let image = f.apply(p)?;
    Ok(Lift {
        map: f.clone(),
        twist: p.join(&image.reverse()),
    })
}

pub fn fixes_vertex(lift: &Lift, p: &EdgePath) -> bool {
    lift.fixes_vertex(p)
}

/// `δ` with `L1 = t_δ ∘ L2`.
pub fn deck_difference(l1: &Lift, l2: &Lift) -> Result<DeckElement> {
    if l1.map != l2.map {
        return Err(Error::domain("lifts of different maps do not differ by a deck translation"));
    }
    Ok(l1.twist.join(&l2.twist.reverse()))
}

/// The `k` with `δ = τ·ρ^k·τ̄`, where `based = τ·ρ·τ̄`.
pub fn power_of(delta: &DeckElement, based: &DeckElement) -> Result<Option<i64>> {
    let w = based.edges();
    let (t, rho) = letter::cyclic_split(w);
    if rho.is_empty() || letter::primitive_period(&rho) != rho.len() {
        return Err(Error::domain("axis element is not a primitive covering translation"));
    }
    let d = delta.edges();
    if d.is_empty() {
        return Ok(Some(0));
    }
    let k = t.len();
    if d.len() < 2 * k || d[..k] != t[..] || d[d.len() - k..] != letter::inverse(&t)[..] {
        return Ok(None);
    }
    Ok(letter::power_exponent(&d[k..d.len() - k], &rho).filter(|&e| e != 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{dehn_rose, p};

    #[test]
    fn lift_fixing_endpoint_of_b() {
        let (g, d) = dehn_rose();
        let l = lift_fixing_vertex(&d, &p(&g, "b")).unwrap();
        assert_eq!(l.twist(), &p(&g, "b ~a ~b"));
        assert!(l.fixes_vertex(&p(&g, "b")));
        assert!(!Lift::base(d.clone()).fixes_vertex(&p(&g, "b")));
        assert!(Lift::base(FilteredMap::identity(g.clone())).fixes_vertex(&p(&g, "a b ~a")));
    }

    #[test]
    fn deck_difference_of_rose_lifts() {
        let (g, d) = dehn_rose();
        let l1 = Lift::base(d.clone());
        let l2 = lift_fixing_vertex(&d, &p(&g, "b")).unwrap();
        let delta = deck_difference(&l1, &l2).unwrap();
        assert_eq!(delta, p(&g, "b a ~b"));
        assert_eq!(l2.translate(&delta), l1);
        assert!(deck_difference(&l1, &l1).unwrap().is_empty());
    }

    #[test]
    fn powers_of_axis_elements() {
        let (g, _) = dehn_rose();
        let t = p(&g, "b a ~b");
        assert_eq!(power_of(&EdgePath::trivial(0), &t).unwrap(), Some(0));
        assert_eq!(power_of(&p(&g, "b a a ~b"), &t).unwrap(), Some(2));
        assert_eq!(power_of(&p(&g, "b ~a ~b"), &t).unwrap(), Some(-1));
        assert_eq!(power_of(&p(&g, "a"), &t).unwrap(), None);
        assert!(power_of(&p(&g, "a"), &p(&g, "a a")).is_err());
    }
}
