use serde::Serialize;

use super::group::MapGroup;

/// Two generators whose commutator is nontrivial, with the first edge at
/// which `f∘g` and `g∘f` differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonCommuting {
    pub first: String,
    pub second: String,
    pub edge: String,
    pub suffix_fg: String,
    pub suffix_gf: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum AbelianCertificate {
    /// Every pair of generators was checked by suffix normal form.
    Commuting { pairs: usize },
    NonCommuting(NonCommuting),
}

impl AbelianCertificate {
    pub fn is_abelian(&self) -> bool {
        matches!(self, AbelianCertificate::Commuting { .. })
    }

    pub fn witness(&self) -> Option<&NonCommuting> {
        match self {
            AbelianCertificate::NonCommuting(w) => Some(w),
            AbelianCertificate::Commuting { .. } => None,
        }
    }
}

impl NonCommuting {
    pub fn render(&self) -> String {
        format!(
            "{}.{} and {}.{} differ at {}: {} vs {}",
            self.first, self.second, self.second, self.first, self.edge, self.suffix_fg, self.suffix_gf
        )
    }
}

pub fn abelian_certificate(k: &MapGroup) -> AbelianCertificate {
    let g = k.graph();
    let gens = k.generators();
    let labels = k.labels();
    let mut pairs = 0;
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            pairs += 1;
            let fg = gens[a].compose_unchecked(&gens[b]);
            let gf = gens[b].compose_unchecked(&gens[a]);
            if let Some(e) = (0..g.edge_count()).find(|&e| fg.suffix_of(e) != gf.suffix_of(e)) {
                return AbelianCertificate::NonCommuting(NonCommuting {
                    first: labels[a].clone(),
                    second: labels[b].clone(),
                    edge: g.edge_name(e).to_string(),
                    suffix_fg: fg.suffix_of(e).render(g),
                    suffix_gf: gf.suffix_of(e).render(g),
                });
            }
        }
    }
    AbelianCertificate::Commuting { pairs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{dehn_rose, map, rose};

    #[test]
    fn single_generator_and_powers_commute() {
        let (g, d) = dehn_rose();
        let k = MapGroup::new(g.clone(), vec![("D".into(), d.clone())]).unwrap();
        assert!(abelian_certificate(&k).is_abelian());
        let k2 = MapGroup::new(g, vec![("D".into(), d.clone()), ("E".into(), d.pow(2))]).unwrap();
        assert_eq!(abelian_certificate(&k2), AbelianCertificate::Commuting { pairs: 1 });
    }

    #[test]
    fn non_commuting_witness_at_c() {
        let g = rose(&["a", "b", "c"]);
        let f = map(&g, &[("b", "a")]);
        let h = map(&g, &[("c", "b")]);
        let k = MapGroup::new(g, vec![("f".into(), f), ("g".into(), h)]).unwrap();
        let w = abelian_certificate(&k);
        let w = w.witness().unwrap();
        assert_eq!(w.edge, "c");
        assert_eq!(w.suffix_fg, "b a");
        assert_eq!(w.suffix_gf, "b");
    }
}
