use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::FilteredGraph;
use crate::map::{same_graph, FilteredMap};

/// A finitely generated subgroup of FHE(G), given by labelled generators on
/// one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapGroup {
    graph: Arc<FilteredGraph>,
    labels: Vec<String>,
    gens: Vec<FilteredMap>,
}

impl MapGroup {
    pub fn new(graph: Arc<FilteredGraph>, gens: Vec<(String, FilteredMap)>) -> Result<Self> {
        let mut labels = Vec::new();
        let mut maps = Vec::new();
        for (label, f) in gens {
            if !same_graph(f.graph(), &graph) {
                return Err(Error::GraphMismatch);
            }
            if labels.contains(&label) {
                return Err(Error::domain(format!("duplicate generator `{label}`")));
            }
            labels.push(label);
            maps.push(f);
        }
        Ok(MapGroup {
            graph,
            labels,
            gens: maps,
        })
    }

    pub fn graph(&self) -> &Arc<FilteredGraph> {
        &self.graph
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[FilteredMap] {
        &self.gens
    }

    pub fn generator(&self, label: &str) -> Option<&FilteredMap> {
        self.labels.iter().position(|l| l == label).map(|i| &self.gens[i])
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn identity(&self) -> FilteredMap {
        FilteredMap::identity(self.graph.clone())
    }

    /// `x₁^e₁ ∘ x₂^e₂ ∘ …`; the rightmost factor is applied first.
    pub fn evaluate(&self, w: &GroupWord) -> FilteredMap {
        w.factors
            .iter()
            .fold(self.identity(), |acc, &(g, e)| acc.compose_unchecked(&self.gens[g].pow(e)))
    }

    pub fn evaluate_str(&self, text: &str) -> Result<FilteredMap> {
        Ok(self.evaluate(&GroupWord::parse(text, &self.labels)?))
    }

    /// The element `∏ g_j^{n_j}` (order irrelevant for abelian groups).
    pub fn evaluate_exponents(&self, exps: &[i64]) -> FilteredMap {
        let w = GroupWord {
            factors: exps.iter().enumerate().filter(|(_, e)| **e != 0).map(|(g, e)| (g, *e)).collect(),
        };
        self.evaluate(&w)
    }

    /// Same labels, new graph and generators; used by the rewriting passes.
    pub(crate) fn with_generators(&self, graph: Arc<FilteredGraph>, gens: Vec<FilteredMap>) -> MapGroup {
        MapGroup {
            graph,
            labels: self.labels.clone(),
            gens,
        }
    }
}

/// A word in generator labels: `(generator index, exponent)` factors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupWord {
    pub factors: Vec<(usize, i64)>,
}

impl GroupWord {
    /// Tokens are separated by `.`, `*` or whitespace. Each token is a label
    /// with an optional `~` or `'` prefix for the inverse and an optional
    /// `^n` suffix; `1` is the identity. `D.~E` means `D ∘ E⁻¹`.
    pub fn parse(text: &str, labels: &[String]) -> Result<GroupWord> {
        let mut factors = Vec::new();
        for tok in text.split(|c: char| c == '.' || c == '*' || c.is_whitespace()) {
            if tok.is_empty() || tok == "1" {
                continue;
            }
            let (inv, rest) = match tok.strip_prefix('~').or_else(|| tok.strip_prefix('\'')) {
                Some(r) => (true, r),
                None => (false, tok),
            };
            let (name, exp) = match rest.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i64>()
                        .map_err(|_| Error::domain(format!("bad exponent in `{tok}`")))?,
                ),
                None => (rest, 1),
            };
            let g = labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::domain(format!("unknown generator `{name}`")))?;
            let e = if inv { -exp } else { exp };
            if e != 0 {
                factors.push((g, e));
            }
        }
        Ok(GroupWord { factors })
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            factors: self.factors.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GroupWord { factors }
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|&(g, e)| if e == 1 { labels[g].clone() } else { format!("{}^{e}", labels[g]) })
            .collect::<Vec<_>>()
            .join(".")
    }
}

impl fmt::Display for MapGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group on {} with generators {}", self.graph, self.labels.join(", "))
    }
}
