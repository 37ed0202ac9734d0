//! The Strømme embedding, Koszul scans and spectral-sequence assembly.

mod koszul;
mod page;
mod spectral;
mod verify;

use serde::Serialize;

use crate::bwb::GrSpec;
use crate::error::{Error, Result};
use crate::partition::Weight;

pub use koszul::{koszul_mults, koszul_terms, KoszulTerm};
pub use page::{e1_page, E1Contribution, E1Entry, E1Page, ScanOptions};
pub use spectral::{assemble, assemble_entries, Bounds, QuotReport, Relation, SsEntry, SsInput};
pub use verify::{
    closed_form_multi, euler, ext_table, verify_prop47, verify_thm41, ClosedForm, ExtReport, Prop47Report,
    Thm41Report, Verdict,
};

/// Rank `n` bundle `V = ⊕ O(−b_i)` on ℙ¹, quotient rank `r`, degree `d`, twist `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuotSetup {
    pub n: usize,
    pub r: usize,
    pub d: usize,
    pub splitting: Vec<usize>,
    pub m: usize,
}

impl QuotSetup {
    /// Trivial `V` with the given twist.
    pub fn trivial(n: usize, r: usize, d: usize, m: usize) -> Result<Self> {
        Self::new(n, r, d, vec![0; n], m)
    }

    pub fn new(n: usize, r: usize, d: usize, splitting: Vec<usize>, m: usize) -> Result<Self> {
        let s = QuotSetup { n, r, d, splitting, m };
        s.validate()?;
        Ok(s)
    }

    /// Trivial `V` at the smallest admissible twist.
    pub fn minimal(n: usize, r: usize, d: usize) -> Result<Self> {
        Self::trivial(n, r, d, d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.r == 0 || self.r >= self.n {
            return Err(Error::InvalidSetup(format!("need 1 ≤ r < n, got n={} r={}", self.n, self.r)));
        }
        if self.splitting.len() != self.n {
            return Err(Error::InvalidSetup(format!(
                "splitting has {} entries, expected n={}",
                self.splitting.len(),
                self.n
            )));
        }
        if self.splitting[0] != 0 || self.splitting.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidSetup("splitting must be nondecreasing with b₁ = 0".into()));
        }
        if self.m < self.b() + self.d {
            return Err(Error::InvalidSetup(format!("m = {} < b + d = {}", self.m, self.b() + self.d)));
        }
        Ok(())
    }

    pub fn b(&self) -> usize {
        self.splitting.iter().sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.splitting.iter().all(|&x| x == 0)
    }

    pub fn with_m(&self, m: usize) -> Result<Self> {
        Self::new(self.n, self.r, self.d, self.splitting.clone(), m)
    }

    /// `(h⁰, h¹)` of `V ⊗ O(e)`.
    pub fn twisted_coh(&self, e: i64) -> (usize, usize) {
        self.splitting.iter().fold((0, 0), |(h0, h1), &b| {
            let (a, c) = line_coh(e - b as i64);
            (h0 + a, h1 + c)
        })
    }

    /// Right-hand side `nd + rb + n` of the size hypotheses.
    pub fn size_budget(&self) -> usize {
        self.n * self.d + self.r * self.b() + self.n
    }

    pub fn quot_dim(&self) -> usize {
        self.n * self.d + self.r * self.b() + self.r * (self.n - self.r)
    }
}

/// `(h⁰, h¹)` of `O(e)` on ℙ¹.
pub fn line_coh(e: i64) -> (usize, usize) {
    ((e + 1).max(0) as usize, (-e - 1).max(0) as usize)
}

/// Dimensions of the two Grassmannians and the Koszul bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StrommeParams {
    #[serde(rename = "N1")]
    pub n1: usize,
    pub k1: usize,
    pub r1: usize,
    #[serde(rename = "N2")]
    pub n2: usize,
    pub k2: usize,
    pub r2: usize,
    #[serde(rename = "rankK")]
    pub rank_k: usize,
    #[serde(rename = "quotDim")]
    pub quot_dim: usize,
}

impl StrommeParams {
    pub fn gr1(&self) -> GrSpec {
        GrSpec { k: self.k1, n: self.n1 }
    }

    pub fn gr2(&self) -> GrSpec {
        GrSpec { k: self.k2, n: self.n2 }
    }
}

pub fn stromme(setup: &QuotSetup) -> Result<StrommeParams> {
    setup.validate()?;
    let (n, r, d, m, b) = (setup.n as i64, setup.r as i64, setup.d as i64, setup.m as i64, setup.b() as i64);
    let k1 = (n - r) * m - b - d;
    if k1 < 0 {
        return Err(Error::InvalidSetup(format!("k₁ = {k1} is negative")));
    }
    let p = StrommeParams {
        n1: (n * m - b) as usize,
        k1: k1 as usize,
        r1: (r * m + d) as usize,
        n2: (n * (m + 1) - b) as usize,
        k2: ((n - r) * (m + 1) - b - d) as usize,
        r2: (r * (m + 1) + d) as usize,
        rank_k: 2 * k1 as usize * (r * (m + 1) + d) as usize,
        quot_dim: setup.quot_dim(),
    };
    let ok = p.n1 == p.k1 + p.r1
        && p.n2 == p.k2 + p.r2
        && p.k1 * p.r1 + p.k2 * p.r2 == p.rank_k + p.quot_dim;
    if !ok {
        return Err(Error::InvalidSetup(format!("parameter identities fail for {p:?}")));
    }
    Ok(p)
}

/// Schur functor weights applied to `A₁`, `B₁`, `A₂`, `B₂` (bundle weights, not duals).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InsertionSpec {
    pub a1: Vec<Weight>,
    pub b1: Vec<Weight>,
    pub a2: Vec<Weight>,
    pub b2: Vec<Weight>,
}

impl InsertionSpec {
    pub fn validate(&self, p: &StrommeParams) -> Result<()> {
        for (list, len) in [(&self.a1, p.k1), (&self.b1, p.r1), (&self.a2, p.k2), (&self.b2, p.r2)] {
            for w in list {
                if w.len() != len {
                    return Err(Error::LengthMismatch { expected: len, got: w.len() });
                }
            }
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.a1.is_empty() && self.b1.is_empty() && self.a2.is_empty() && self.b2.is_empty()
    }

    /// Sorted lists, so equal bundles compare equal.
    pub fn canonical(mut self) -> Self {
        for l in [&mut self.a1, &mut self.b1, &mut self.a2, &mut self.b2] {
            l.retain(|w| !w.is_zero());
            l.sort();
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stromme_examples() {
        let p = stromme(&QuotSetup::trivial(2, 1, 2, 5).unwrap()).unwrap();
        assert_eq!((p.n1, p.k1, p.r1, p.n2, p.k2, p.r2), (10, 3, 7, 12, 4, 8));
        assert_eq!(p.rank_k, 48);
        let p = stromme(&QuotSetup::trivial(3, 1, 3, 3).unwrap()).unwrap();
        assert_eq!((p.n1, p.k1, p.r1, p.n2, p.k2, p.r2), (9, 3, 6, 12, 5, 7));
        let p = stromme(&QuotSetup::trivial(2, 1, 1, 1).unwrap()).unwrap();
        assert_eq!((p.k1, p.n1, p.k2, p.n2), (0, 2, 1, 4));
    }

    #[test]
    fn setup_validation() {
        assert!(QuotSetup::trivial(2, 1, 2, 1).is_err());
        assert!(QuotSetup::trivial(2, 2, 0, 0).is_err());
        assert!(QuotSetup::new(2, 1, 0, vec![1, 1], 5).is_err());
        assert!(QuotSetup::new(3, 1, 1, vec![0, 2, 1], 5).is_err());
        let s = QuotSetup::new(2, 1, 1, vec![0, 2], 3).unwrap();
        assert_eq!(s.twisted_coh(-1), (0, 2));
        assert_eq!(s.twisted_coh(0), (1, 1));
    }

    #[test]
    fn line_bundles() {
        assert_eq!(line_coh(0), (1, 0));
        assert_eq!(line_coh(-1), (0, 0));
        assert_eq!(line_coh(-4), (0, 3));
    }
}
