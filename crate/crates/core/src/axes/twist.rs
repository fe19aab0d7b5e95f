use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::map::FilteredMap;

use super::essential::{coordinate, EssentialData};
use super::group::GroupWord;

/// `Φ_K(f)`, one coordinate per essential edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistVector {
    pub labels: Vec<String>,
    pub values: Vec<i64>,
}

impl TwistVector {
    pub fn zero(labels: Vec<String>) -> Self {
        let values = vec![0; labels.len()];
        TwistVector { labels, values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &TwistVector) -> TwistVector {
        assert_eq!(self.labels, other.labels);
        TwistVector {
            labels: self.labels.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn get(&self, label: &str) -> Option<i64> {
        self.labels.iter().position(|l| l == label).map(|i| self.values[i])
    }
}

impl fmt::Display for TwistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(i64::to_string).collect();
        write!(f, "({})", v.join(", "))
    }
}

/// Coordinates of a map on the graph of `data.group`.
pub fn twist_vector(f: &FilteredMap, data: &EssentialData) -> Result<TwistVector> {
    let mut values = Vec::new();
    for e in &data.edges {
        values.push(coordinate(f, &e.anchor, data.axis_of(e), &e.label)?);
    }
    Ok(TwistVector {
        labels: data.labels(),
        values,
    })
}

pub fn twist_coordinates(word: &str, data: &EssentialData) -> Result<TwistVector> {
    let w = GroupWord::parse(word, data.group.labels())?;
    twist_vector(&data.group.evaluate(&w), data)
}
