//! Graded dimension tables.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Sparse map from cohomological degree to dimension; zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomTable(BTreeMap<i64, BigUint>);

impl CohomTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(degree: i64, dim: BigUint) -> Self {
        let mut t = Self::new();
        t.add(degree, &dim);
        t
    }

    pub fn add(&mut self, degree: i64, dim: &BigUint) {
        if dim.is_zero() {
            return;
        }
        *self.0.entry(degree).or_default() += dim;
    }

    pub fn get(&self, degree: i64) -> BigUint {
        self.0.get(&degree).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigUint)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.0.keys().copied().collect()
    }

    pub fn euler(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, (d, v)| {
            let v = BigInt::from(v.clone());
            if d.rem_euclid(2) == 0 {
                acc + v
            } else {
                acc - v
            }
        })
    }

    pub fn scaled(&self, c: &BigUint) -> CohomTable {
        let mut t = CohomTable::new();
        for (d, v) in &self.0 {
            t.add(*d, &(v * c));
        }
        t
    }

    pub fn shifted(&self, by: i64) -> CohomTable {
        CohomTable(self.0.iter().map(|(d, v)| (d + by, v.clone())).collect())
    }

    pub fn merge(&mut self, other: &CohomTable) {
        for (d, v) in &other.0 {
            self.add(*d, v);
        }
    }

    /// True when every nonzero entry sits in degrees `≤ bound`.
    pub fn concentrated_below(&self, bound: i64) -> bool {
        self.0.keys().all(|&d| d <= bound)
    }
}

impl FromIterator<(i64, BigUint)> for CohomTable {
    fn from_iter<I: IntoIterator<Item = (i64, BigUint)>>(iter: I) -> Self {
        let mut t = CohomTable::new();
        for (d, v) in iter {
            t.add(d, &v);
        }
        t
    }
}

impl Serialize for CohomTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (d, v) in &self.0 {
            m.serialize_entry(&d.to_string(), &v.to_string())?;
        }
        m.end()
    }
}

/// Product table of two factors: degrees add, dimensions multiply.
pub fn kunneth(t1: &CohomTable, t2: &CohomTable) -> CohomTable {
    let mut out = CohomTable::new();
    for (a, x) in t1.iter() {
        for (b, y) in t2.iter() {
            out.add(a + b, &(x * y));
        }
    }
    out
}

/// Serde helpers writing big integers as decimal strings.
pub mod dec {
    use num_bigint::{BigInt, BigUint};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn signed<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }
}
