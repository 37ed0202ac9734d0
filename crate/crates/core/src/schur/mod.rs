//! Schur functor dimensions and Littlewood–Richardson decompositions.

mod lr;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, subpartitions, Partition, Weight};

pub use lr::{canonical_key as lr_key, clear as lr_cache_clear, seed as lr_cache_seed, snapshot as lr_cache_snapshot};

/// Partition-indexed decomposition with positive multiplicities.
pub type Expansion = BTreeMap<Partition, BigUint>;

/// Weight-indexed decomposition with positive multiplicities.
pub type WeightExpansion = BTreeMap<Weight, BigUint>;

/// Dimension of `S^λ(ℂⁿ)` by the hook-content formula.
pub fn schur_dim(lambda: &Partition, n: usize) -> BigUint {
    if lambda.len() > n {
        return BigUint::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            num *= (n + j - i) as u64;
            den *= (row - j + conj.at(j) - i - 1) as u64;
        }
    }
    num / den
}

/// Dimension of `S^w(ℂⁿ)` for a weight of length at most `n`.
pub fn weight_dim(w: &Weight, n: usize) -> BigUint {
    if w.len() > n {
        return BigUint::zero();
    }
    if w.len() == n {
        return weyl_dim(w.entries());
    }
    schur_dim(&w.normalize().0, n)
}

fn weyl_dim(e: &[i64]) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            num *= (e[i] - e[j] + (j - i) as i64) as u64;
            den *= (j - i) as u64;
        }
    }
    num / den
}

/// The coefficient `c^γ_{α,β}`.
pub fn lr(alpha: &Partition, beta: &Partition, gamma: &Partition) -> BigUint {
    BigUint::from(lr_u64(alpha, beta, gamma))
}

pub(crate) fn lr_u64(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if alpha.size() + beta.size() != gamma.size() || !gamma.contains(alpha) || !gamma.contains(beta) {
        return 0;
    }
    let h = horn_parts(alpha, beta, gamma);
    if !(h.weyl && h.dominance1 && h.dominance2) {
        return 0;
    }
    lr::coefficient(alpha, beta, gamma)
}

/// `S^α ⊗ S^β` decomposed.
pub fn lr_expand(alpha: &Partition, beta: &Partition) -> Expansion {
    lr_expand_capped(alpha, beta, usize::MAX)
}

/// `S^α ⊗ S^β` restricted to constituents with at most `rows` rows.
pub fn lr_expand_capped(alpha: &Partition, beta: &Partition, rows: usize) -> Expansion {
    lr::product(alpha, beta, rows)
        .iter()
        .map(|(g, c)| (g.clone(), BigUint::from(*c)))
        .collect()
}

/// Borrowed view of a capped product with machine-size multiplicities.
pub(crate) fn lr_product(alpha: &Partition, beta: &Partition, rows: usize) -> std::sync::Arc<Vec<(Partition, u64)>> {
    lr::product(alpha, beta, rows)
}

/// Tensor product of two weights of length `len`.
pub fn weight_tensor_expand(eta: &Weight, rho: &Weight, len: usize) -> Result<WeightExpansion> {
    for w in [eta, rho] {
        if w.len() != len {
            return Err(Error::LengthMismatch { expected: len, got: w.len() });
        }
    }
    let (p, a) = eta.normalize();
    let (q, b) = rho.normalize();
    Ok(lr::product(&p, &q, len)
        .iter()
        .map(|(g, c)| {
            let w = g.to_weight(len).expect("row cap respected").shift(-a - b);
            (w, BigUint::from(*c))
        })
        .collect())
}

/// Tensor product of a list of weights of common length; empty gives the trivial weight.
pub fn weight_product(weights: &[Weight], len: usize) -> Result<WeightExpansion> {
    let mut acc = WeightExpansion::new();
    acc.insert(Weight::zero(len), BigUint::one());
    for w in weights {
        let mut next = WeightExpansion::new();
        for (x, m) in &acc {
            for (y, c) in weight_tensor_expand(x, w, len)? {
                *next.entry(y).or_default() += m * c;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Partitions indexing the summands of `∧ᵗ(U ⊗ W)`.
pub fn cauchy_terms(t: usize) -> Vec<Partition> {
    partitions_of(t)
}

/// Triples `(α, β, c^γ_{α,β})` with positive coefficient.
pub fn direct_sum_expand(gamma: &Partition) -> Vec<(Partition, Partition, BigUint)> {
    if gamma.len() > gamma.first() {
        let mut v: Vec<_> = direct_sum_raw(&gamma.conjugate())
            .into_iter()
            .map(|(a, b, c)| (a.conjugate(), b.conjugate(), BigUint::from(c)))
            .collect();
        v.sort_by(|x, y| (&y.0, &y.1).cmp(&(&x.0, &x.1)));
        return v;
    }
    direct_sum_raw(gamma)
        .into_iter()
        .map(|(a, b, c)| (a, b, BigUint::from(c)))
        .collect()
}

fn direct_sum_raw(gamma: &Partition) -> Vec<(Partition, Partition, u64)> {
    let mut out = Vec::new();
    for alpha in subpartitions(gamma) {
        let mut part: Vec<_> = lr::skew_fillings(gamma, &alpha)
            .into_iter()
            .map(|(b, c)| (Partition::trimmed(b), c))
            .collect();
        part.sort_by(|x, y| y.0.cmp(&x.0));
        out.extend(part.into_iter().map(|(b, c)| (alpha.clone(), b, c)));
    }
    out
}

/// `S^{λ/ν}` as a sum of Schur functors.
pub fn skew_expand(lambda: &Partition, nu: &Partition) -> Result<Expansion> {
    if !lambda.contains(nu) {
        return Err(Error::NotContained { inner: nu.to_string(), outer: lambda.to_string() });
    }
    Ok(lr::skew_fillings(lambda, nu)
        .into_iter()
        .map(|(b, c)| (Partition::trimmed(b), BigUint::from(c)))
        .collect())
}

/// Necessary conditions for `c^γ_{α,β} > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HornReport {
    pub size: bool,
    pub weyl: bool,
    pub dominance1: bool,
    pub dominance2: bool,
}

impl HornReport {
    pub fn all(&self) -> bool {
        self.size && self.weyl && self.dominance1 && self.dominance2
    }
}

/// Either a partition or a weight, read as an integer sequence.
pub trait Entries {
    fn entries_i64(&self) -> Vec<i64>;
    fn is_partition(&self) -> bool;
}

impl Entries for Partition {
    fn entries_i64(&self) -> Vec<i64> {
        self.parts().iter().map(|&x| x as i64).collect()
    }

    fn is_partition(&self) -> bool {
        true
    }
}

impl Entries for Weight {
    fn entries_i64(&self) -> Vec<i64> {
        self.entries().to_vec()
    }

    fn is_partition(&self) -> bool {
        false
    }
}

/// Size, Weyl and dominance checks; the second dominance inequality is
/// evaluated for partitions only and reported true for weights.
pub fn horn_predicates<T: Entries>(alpha: &T, beta: &T, gamma: &T) -> HornReport {
    let (a, b, c) = (alpha.entries_i64(), beta.entries_i64(), gamma.entries_i64());
    let mut h = horn_raw(&a, &b, &c, alpha.is_partition());
    h.size = a.iter().sum::<i64>() + b.iter().sum::<i64>() == c.iter().sum::<i64>();
    h
}

fn horn_parts(alpha: &Partition, beta: &Partition, gamma: &Partition) -> HornReport {
    horn_raw(&alpha.entries_i64(), &beta.entries_i64(), &gamma.entries_i64(), true)
}

fn horn_raw(a: &[i64], b: &[i64], c: &[i64], partitions: bool) -> HornReport {
    let n = a.len().max(b.len()).max(c.len());
    let at = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
    let mut weyl = true;
    'outer: for i in 0..n {
        for j in 0..n - i {
            if at(a, i) + at(b, j) < at(c, i + j) {
                weyl = false;
                break 'outer;
            }
        }
    }
    let prefix = |v: &[i64], s: usize| (0..s).map(|i| at(v, i)).sum::<i64>();
    let dominance1 = (1..=n).all(|s| prefix(c, s) <= prefix(a, s) + prefix(b, s));
    let dominance2 = !partitions || (1..=n).all(|t| prefix(a, t) + prefix(b, t) <= prefix(c, 2 * t));
    HornReport { size: true, weyl, dominance1, dominance2 }
}

/// The inequality `Σ_{j≤s} σ†_j − |λ| ≤ Σ_{j≤s} χ†_j`.
pub fn lemma45_check(sigma: &Partition, _nu: &Partition, lambda: &Partition, chi: &Weight, s: usize) -> bool {
    let sc = sigma.conjugate();
    let left: i64 = (0..s).map(|j| sc.at(j) as i64).sum::<i64>() - lambda.size() as i64;
    let right: i64 = (1..=s as i64)
        .map(|j| chi.entries().iter().filter(|&&x| x >= j).count() as i64)
        .sum();
    left <= right
}
