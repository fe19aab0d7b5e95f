use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::error::{Error, Result};

/// `|GL(n, Z/3)| = ∏_{k<n} (3^n − 3^k)`.
pub fn gl3_order(n: u32) -> BigInt {
    let three = BigInt::from(3);
    let top = Pow::pow(&three, n);
    (0..n).fold(BigInt::one(), |acc, k| acc * (&top - Pow::pow(&three, k)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexBound {
    pub rank: u32,
    #[serde(serialize_with = "as_string")]
    pub d_n: BigInt,
    #[serde(serialize_with = "as_string")]
    pub three_n2: BigInt,
    pub d_n_below: bool,
    pub vcd: u32,
    #[serde(serialize_with = "as_string")]
    pub d_vcd: BigInt,
    #[serde(serialize_with = "as_string")]
    pub index: BigInt,
    #[serde(serialize_with = "as_string")]
    pub three_5n2: BigInt,
    pub index_below: bool,
}

fn as_string<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl IndexBound {
    pub fn holds(&self) -> bool {
        self.d_n_below && self.index_below
    }
}

pub fn index_bound(n: u32) -> Result<IndexBound> {
    if n < 2 {
        return Err(Error::domain(format!("rank must be at least 2, got {n}")));
    }
    let three = BigInt::from(3);
    let d_n = gl3_order(n);
    let three_n2 = Pow::pow(&three, n * n);
    let vcd = 2 * n - 3;
    let d_vcd = gl3_order(vcd);
    let index = &d_n * &d_vcd;
    let three_5n2 = Pow::pow(&three, 5 * n * n);
    Ok(IndexBound {
        rank: n,
        d_n_below: d_n < three_n2,
        index_below: index < three_5n2,
        d_n,
        three_n2,
        vcd,
        d_vcd,
        index,
        three_5n2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(gl3_order(1), BigInt::from(2));
        assert_eq!(gl3_order(2), BigInt::from(48));
        assert_eq!(gl3_order(3), BigInt::from(11232));
        let b = index_bound(2).unwrap();
        assert_eq!(b.three_n2, BigInt::from(81));
        assert_eq!(b.index, BigInt::from(96));
        assert!(b.holds());
        assert_eq!(index_bound(3).unwrap().three_n2, BigInt::from(19683));
        assert!(index_bound(1).is_err());
    }
}
