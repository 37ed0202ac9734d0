//! Partitions, highest weights and the index combinatorics built on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

/// A weakly decreasing integer sequence of fixed length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(join(&parts)));
        }
        Ok(Self::trimmed(parts))
    }

    /// Builds from parts already known to be weakly decreasing.
    pub(crate) fn trimmed(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` counted from zero, with zero past the end.
    pub fn at(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.at(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let mut out = vec![0; cols];
        for &p in &self.0 {
            for c in out.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition(out)
    }

    pub fn durfee_rank(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(j, &p)| p > *j)
            .count()
    }

    /// Diagram containment.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Pads with zeros to a weight of length `len`; `None` if there are more parts.
    pub fn to_weight(&self, len: usize) -> Option<Weight> {
        if self.len() > len {
            return None;
        }
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        v.resize(len, 0);
        Some(Weight(v))
    }

    pub fn t_index(&self, t: usize) -> Option<usize> {
        let v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        t_index(&v, t)
    }
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(join(&entries)));
        }
        Ok(Weight(entries))
    }

    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Sum of entries.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// The weight of the dual representation.
    pub fn negate_reverse(&self) -> Weight {
        Weight(self.0.iter().rev().map(|x| -x).collect())
    }

    /// Adds `c` to every entry (a determinant twist).
    pub fn shift(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|x| x + c).collect())
    }

    /// `(γ, 0, …, 0, −δ)` of length `len`.
    pub fn from_signs(gamma: &Partition, delta: &Partition, len: usize) -> Result<Weight> {
        if gamma.len() + delta.len() > len {
            return Err(Error::LengthMismatch { expected: len, got: gamma.len() + delta.len() });
        }
        let mut v = vec![0i64; len];
        for (i, &g) in gamma.parts().iter().enumerate() {
            v[i] = g as i64;
        }
        for (i, &x) in delta.parts().iter().enumerate() {
            v[len - 1 - i] = -(x as i64);
        }
        Ok(Weight(v))
    }

    /// Splits `w = (γ, −δ)` into its positive part γ and negative part δ.
    pub fn split_signs(&self) -> (Partition, Partition) {
        let gamma = self.0.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
        let delta = self
            .0
            .iter()
            .rev()
            .filter(|&&x| x < 0)
            .map(|&x| (-x) as usize)
            .collect();
        (Partition(gamma), Partition(delta))
    }

    /// The partition with these entries, if all are nonnegative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&x| x < 0) {
            return None;
        }
        Some(Partition::trimmed(self.0.iter().map(|&x| x as usize).collect()))
    }

    /// Shifts so the last entry is zero and returns the partition and the shift used.
    pub fn normalize(&self) -> (Partition, i64) {
        let c = -self.min_entry().unwrap_or(0);
        (self.shift(c).to_partition().expect("shifted weight is nonnegative"), c)
    }

    /// Extends with zeros on the right; entries must stay decreasing.
    pub fn pad(&self, len: usize) -> Result<Weight> {
        let mut v = self.0.clone();
        if v.len() > len {
            return Err(Error::LengthMismatch { expected: len, got: v.len() });
        }
        v.resize(len, 0);
        Weight::new(v)
    }

    pub fn t_index(&self, t: usize) -> Option<usize> {
        t_index(&self.0, t)
    }
}

/// The j with `χ_j ≥ j+t` and `χ_{j+1} ≤ j` (1-based entries), if any.
pub fn t_index(chi: &[i64], t: usize) -> Option<usize> {
    let len = chi.len();
    (0..=len).find(|&j| {
        let upper = j == 0 || chi[j - 1] >= (j + t) as i64;
        let lower = j == len || chi[j] <= j as i64;
        upper && lower
    })
}

/// Smallest (t;η)-index of μ.
pub fn t_eta_index(mu: &Partition, t: usize, eta: &Weight) -> Option<usize> {
    t_eta_index_all(mu, t, eta).into_iter().next()
}

/// Every i satisfying the (t;η)-index inequalities, ascending.
pub fn t_eta_index_all(mu: &Partition, t: usize, eta: &Weight) -> Vec<usize> {
    let (gamma, delta) = eta.split_signs();
    let gd = gamma.conjugate();
    let dd = delta.conjugate();
    let top = mu.len().max(mu.first()) + gamma.len() + 1;
    (0..=top)
        .filter(|&i| {
            let upper = (1..=i).all(|s| {
                mu.at(i - s) as i64 >= (i + t) as i64 - gd.at(s - 1) as i64
            });
            let lower = (1..=mu.len().saturating_sub(i)).all(|s| mu.at(i + s - 1) <= i + dd.at(s - 1));
            upper && lower
        })
        .collect()
}

/// All partitions in a `rows × cols` box, optionally of fixed size, in
/// descending lexicographic order.
pub fn partitions_in_box(rows: usize, cols: usize, size: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    box_rec(rows, cols, size, &mut cur, &mut out);
    out
}

fn box_rec(
    rows: usize,
    cap: usize,
    size: Option<usize>,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let used: usize = cur.iter().sum();
    if let Some(s) = size {
        if used == s {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows == cur.len() || cap * (rows - cur.len()) < s - used {
            return;
        }
    } else if cur.len() == rows {
        out.push(Partition(cur.clone()));
        return;
    }
    let hi = match size {
        Some(s) => cap.min(s - used),
        None => cap,
    };
    for p in (1..=hi).rev() {
        cur.push(p);
        box_rec(rows, p, size, cur, out);
        cur.pop();
    }
    if size.is_none() {
        out.push(Partition(cur.clone()));
    }
}

/// All partitions of `n`, descending lexicographic.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_in_box(n, n, Some(n))
}

/// All partitions contained in `outer`, descending lexicographic.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(outer.len());
    sub_rec(outer.parts(), usize::MAX, &mut cur, &mut out);
    out
}

fn sub_rec(outer: &[usize], cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let row = cur.len();
    if row < outer.len() {
        let hi = cap.min(outer[row]);
        for p in (1..=hi).rev() {
            cur.push(p);
            sub_rec(outer, p, cur, out);
            cur.pop();
        }
    }
    out.push(Partition(cur.clone()));
}

/// Result of the beta-set comparison between two partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AbacusCheck {
    pub length: usize,
    pub bound_holds: bool,
}

/// Sorts `(α_i, α_{i−1}+1, …, α₁+i−1, λ_q, …, λ₁+q−1)`; `None` on a repetition.
pub fn abacus_check(alpha: &Partition, i: usize, lambda: &Partition, q: usize) -> Option<AbacusCheck> {
    if alpha.len() > i || lambda.len() > q {
        return None;
    }
    let a: Vec<usize> = (0..i).map(|s| alpha.at(i - 1 - s) + s).collect();
    let l: Vec<usize> = (0..q).map(|s| lambda.at(q - 1 - s) + s).collect();
    if a.iter().any(|x| l.contains(x)) {
        return None;
    }
    let length = a.iter().map(|x| l.iter().filter(|y| *y < x).count()).sum();
    let lc = lambda.conjugate();
    let ineq = (0..i).all(|s| {
        let ld = if s == 0 { q } else { lc.at(s - 1) };
        alpha.at(i - s - 1) as i64 >= q as i64 - ld as i64
    });
    Some(AbacusCheck { length, bound_holds: length <= alpha.size() && ineq })
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| Error::Parse(s.to_string())))
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.split(',').any(|x| x.trim().starts_with('-')) {
            return Err(Error::NegativePart(s.to_string()));
        }
        Partition::new(parse_list(s)?)
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        Weight::new(
            s.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(s.to_string())))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("5,4,2,1").conjugate(), p("4,3,2,2,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("10,10,4").conjugate(), p("3,3,3,3,2,2,2,2,2,2"));
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p("5,4,2,1").durfee_rank(), 2);
        assert_eq!(Partition::empty().durfee_rank(), 0);
        assert_eq!(p("3,3,3").durfee_rank(), 3);
    }

    #[test]
    fn t_index_examples() {
        assert_eq!(p("6,5,2,1").t_index(3), Some(2));
        assert_eq!(p("7,4,2,2").t_index(3), None);
        assert_eq!(p("5,1").t_index(3), Some(1));
        assert_eq!(w("0,-2").t_index(2), Some(0));
    }

    #[test]
    fn t_eta_index_examples() {
        assert_eq!(t_eta_index(&p("6,4,3,1"), 3, &w("1,-1,-1")), Some(2));
        assert_eq!(t_eta_index(&p("6,5,2,1"), 3, &Weight::zero(3)), Some(2));
        assert_eq!(t_eta_index(&p("7,4,2,2"), 3, &Weight::zero(3)), None);
    }

    #[test]
    fn sign_helpers() {
        assert_eq!(w("2,0,-1").negate_reverse(), w("1,0,-2"));
        assert_eq!(w("1,0,-2").shift(2), w("3,2,0"));
        assert_eq!(w("1,-1,-1").split_signs(), (p("1"), p("1,1")));
        assert_eq!(w("2,0,-1,-3").split_signs(), (p("2"), p("3,1")));
    }

    #[test]
    fn box_listing() {
        assert_eq!(partitions_in_box(2, 2, Some(2)), vec![p("2"), p("1,1")]);
        assert_eq!(partitions_in_box(3, 16, Some(0)), vec![Partition::empty()]);
        assert_eq!(partitions_in_box(3, 16, None).len(), 969);
        assert_eq!(partitions_in_box(0, 5, None), vec![Partition::empty()]);
        assert_eq!(subpartitions(&p("2,1")).len(), 5);
    }

    #[test]
    fn abacus_examples() {
        let e = Partition::empty();
        assert_eq!(abacus_check(&e, 0, &e, 0), Some(AbacusCheck { length: 0, bound_holds: true }));
        assert_eq!(abacus_check(&p("1"), 1, &e, 0), Some(AbacusCheck { length: 0, bound_holds: true }));
        assert_eq!(abacus_check(&e, 1, &e, 1), None);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("2,1").to_string(), "2,1");
        assert_eq!(p("").to_string(), "");
        assert_eq!(p("3,0,0"), p("3"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,-2".parse::<Partition>().is_err());
        assert_eq!(w("0,0").len(), 2);
    }
}
