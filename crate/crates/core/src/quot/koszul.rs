use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use once_cell::sync::Lazy;
use serde::Serialize;

use super::StrommeParams;
use crate::error::{Error, Result};
use crate::partition::{partitions_in_box, Partition};
use crate::schur::{direct_sum_expand, lr_product};

/// A summand `S^μ A₁ ⊠ S^σ B₂^∨` of `∧ᵗ K^∨`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulTerm {
    pub t: usize,
    pub mu: Partition,
    pub sigma: Partition,
    #[serde(serialize_with = "crate::table::dec::serialize")]
    pub mult: BigUint,
}

type MultList = Arc<Vec<(Partition, BigUint)>>;

static MULTS: Lazy<RwLock<HashMap<(Partition, usize), MultList>>> = Lazy::new(Default::default);

/// All σ with at most `r2` rows and `Σ_{α,β} c^{μ†}_{α,β} c^σ_{α,β} > 0`, sorted descending.
pub fn koszul_mults(mu: &Partition, r2: usize) -> MultList {
    let key = (mu.clone(), r2);
    if let Some(v) = MULTS.read().unwrap().get(&key) {
        return v.clone();
    }
    let mut acc: BTreeMap<Partition, BigUint> = BTreeMap::new();
    for (alpha, beta, c) in direct_sum_expand(&mu.conjugate()) {
        if alpha.len() > r2 || beta.len() > r2 {
            continue;
        }
        for (sigma, c2) in lr_product(&alpha, &beta, r2).iter() {
            *acc.entry(sigma.clone()).or_default() += &c * *c2;
        }
    }
    let v: Vec<_> = acc.into_iter().rev().collect();
    let v = Arc::new(v);
    MULTS.write().unwrap().insert(key, v.clone());
    v
}

/// The summands of `∧ᵗ K^∨`, with μ in the `k₁ × 2r₂` box.
pub fn koszul_terms(p: &StrommeParams, t: usize) -> Result<Vec<KoszulTerm>> {
    if t > p.rank_k {
        return Err(Error::OutOfRange(format!("t = {t} exceeds rank K = {}", p.rank_k)));
    }
    let mut out = Vec::new();
    for mu in partitions_in_box(p.k1, 2 * p.r2, Some(t)) {
        for (sigma, mult) in koszul_mults(&mu, p.r2).iter() {
            out.push(KoszulTerm { t, mu: mu.clone(), sigma: sigma.clone(), mult: mult.clone() });
        }
    }
    Ok(out)
}
