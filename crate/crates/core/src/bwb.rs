//! Borel–Weil–Bott on a single Grassmannian.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{t_eta_index_all, t_index, Partition, Weight};
use crate::schur::{weight_dim, weight_product};
use crate::table::CohomTable;

/// `Gr(k, N)` with universal sub `A` of rank `k` and quotient `B` of rank `N−k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GrSpec {
    pub k: usize,
    #[serde(rename = "N")]
    pub n: usize,
}

impl GrSpec {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::OutOfRange(format!("Gr({k},{n}) needs k ≤ N")));
        }
        Ok(GrSpec { k, n })
    }

    pub fn quotient_rank(&self) -> usize {
        self.n - self.k
    }

    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }
}

/// The single cohomology group of an irreducible homogeneous bundle, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BwbOutcome {
    Vanishes,
    Nonzero {
        degree: usize,
        /// Sorted weight: the group is the dual of `S^gamma(ℂᴺ)`.
        gamma: Weight,
        /// Highest weight of the group itself.
        weight: Weight,
        #[serde(serialize_with = "crate::table::dec::serialize")]
        dim: BigUint,
    },
}

impl BwbOutcome {
    pub fn degree(&self) -> Option<usize> {
        match self {
            BwbOutcome::Vanishes => None,
            BwbOutcome::Nonzero { degree, .. } => Some(*degree),
        }
    }

    pub fn dim(&self) -> BigUint {
        match self {
            BwbOutcome::Vanishes => BigUint::default(),
            BwbOutcome::Nonzero { dim, .. } => dim.clone(),
        }
    }
}

/// Cohomology of `S^ρ A^∨ ⊗ S^χ B^∨`.
pub fn bwb_dual_weights(gr: GrSpec, rho: &Weight, chi: &Weight) -> Result<BwbOutcome> {
    check_len(rho, gr.k)?;
    check_len(chi, gr.quotient_rank())?;
    match sort_shifted(rho.entries(), chi.entries(), gr.n) {
        None => Ok(BwbOutcome::Vanishes),
        Some((degree, gamma)) => {
            let gamma = Weight::new(gamma).expect("sorted");
            let weight = gamma.negate_reverse();
            let dim = weight_dim(&weight, gr.n);
            Ok(BwbOutcome::Nonzero { degree, gamma, weight, dim })
        }
    }
}

/// Degree and sorted weight only, skipping the dimension.
pub(crate) fn sort_shifted(rho: &[i64], chi: &[i64], n: usize) -> Option<(usize, Vec<i64>)> {
    let mut omega: Vec<i64> = rho
        .iter()
        .chain(chi)
        .enumerate()
        .map(|(i, x)| x + (n - 1 - i) as i64)
        .collect();
    let degree = ascending_pairs(&mut omega.clone());
    omega.sort_unstable_by(|a, b| b.cmp(a));
    if omega.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let gamma = omega.iter().enumerate().map(|(i, x)| x - (n - 1 - i) as i64).collect();
    Some((degree, gamma))
}

/// Number of pairs `i < j` with `v_i < v_j`, by merge sort.
fn ascending_pairs(v: &mut [i64]) -> usize {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = ascending_pairs(&mut v[..mid]) + ascending_pairs(&mut v[mid..]);
    let mut merged = Vec::with_capacity(n);
    let (mut i, mut j) = (0, mid);
    while i < mid && j < n {
        if v[i] >= v[j] {
            merged.push(v[i]);
            i += 1;
        } else {
            count += mid - i;
            merged.push(v[j]);
            j += 1;
        }
    }
    merged.extend_from_slice(&v[i..mid]);
    merged.extend_from_slice(&v[j..n]);
    v.copy_from_slice(&merged);
    count
}

fn check_len(w: &Weight, len: usize) -> Result<()> {
    if w.len() != len {
        return Err(Error::LengthMismatch { expected: len, got: w.len() });
    }
    Ok(())
}

/// Cohomology of `(⊗ S^{a_i} A) ⊗ (⊗ S^{b_j} B)`.
pub fn coh_bundle(gr: GrSpec, a_weights: &[Weight], b_weights: &[Weight]) -> Result<CohomTable> {
    for w in a_weights {
        check_len(w, gr.k)?;
    }
    for w in b_weights {
        check_len(w, gr.quotient_rank())?;
    }
    let a = weight_product(a_weights, gr.k)?;
    let b = weight_product(b_weights, gr.quotient_rank())?;
    let mut out = CohomTable::new();
    for (wa, ma) in &a {
        let rho = wa.negate_reverse();
        for (wb, mb) in &b {
            if let BwbOutcome::Nonzero { degree, dim, .. } = bwb_dual_weights(gr, &rho, &wb.negate_reverse())? {
                out.add(degree as i64, &(dim * ma * mb));
            }
        }
    }
    Ok(out)
}

/// The k-index criterion for `S^χ B^∨`: `(j, k·j)` when the bundle has cohomology.
pub fn index_nonvanish(chi: &Weight, k: usize) -> Option<(usize, usize)> {
    t_index(chi.entries(), k).map(|j| (j, k * j))
}

/// The (N−k; η)-index of μ and the degree bound `|δ| + μ₁+…+μ_i − i²`,
/// present when `S^μ A ⊗ S^η B` has cohomology.
pub fn index_degree_bound(mu: &Partition, eta: &Weight, gr: GrSpec) -> Option<(usize, i64)> {
    degree_bound_detail(mu, eta, gr).and_then(|d| d.index.map(|i| (i, d.bound_at(mu, i))))
}

/// Everything the degree-bound check looks at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBound {
    pub degree: usize,
    pub index: Option<usize>,
    pub all_indices: Vec<usize>,
    delta_size: usize,
}

impl DegreeBound {
    pub fn bound_at(&self, mu: &Partition, i: usize) -> i64 {
        let head: usize = (0..i).map(|s| mu.at(s)).sum();
        self.delta_size as i64 + head as i64 - (i * i) as i64
    }

    /// The bound holds at the smallest index.
    pub fn holds(&self, mu: &Partition) -> bool {
        self.index.is_some_and(|i| self.degree as i64 <= self.bound_at(mu, i))
    }

    /// The bound holds at some qualifying index.
    pub fn holds_somewhere(&self, mu: &Partition) -> bool {
        self.all_indices.iter().any(|&i| self.degree as i64 <= self.bound_at(mu, i))
    }
}

/// Cohomological degree together with the index data, or `None` when the bundle is acyclic.
pub fn degree_bound_detail(mu: &Partition, eta: &Weight, gr: GrSpec) -> Option<DegreeBound> {
    let rho = mu.to_weight(gr.k)?.negate_reverse();
    let chi = eta.negate_reverse();
    let degree = bwb_dual_weights(gr, &rho, &chi).ok()?.degree()?;
    let all_indices = t_eta_index_all(mu, gr.quotient_rank(), eta);
    Some(DegreeBound {
        degree,
        index: all_indices.first().copied(),
        all_indices,
        delta_size: eta.split_signs().1.size(),
    })
}
