use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use serde::Serialize;

use super::koszul::koszul_mults;
use super::{InsertionSpec, StrommeParams};
use crate::bwb::sort_shifted;
use crate::error::Result;
use crate::partition::{partitions_in_box, Partition, Weight};
use crate::schur::{weight_dim, weight_product, weight_tensor_expand, WeightExpansion};
use crate::table::CohomTable;

/// Scan controls.
#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Worker threads; 0 uses every available core.
    pub jobs: usize,
    /// Inclusive range of exterior powers to scan; `None` scans all.
    pub t_range: Option<(usize, usize)>,
    /// Keep per-entry contributing terms.
    pub diagnostics: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { jobs: 0, t_range: None, diagnostics: true }
    }
}

/// One `(μ, σ)` summand feeding an E1 entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E1Contribution {
    pub mu: Partition,
    pub sigma: Partition,
    #[serde(serialize_with = "crate::table::dec::serialize")]
    pub mult: BigUint,
    pub gr1_degree: i64,
    pub gr2_degree: i64,
    #[serde(serialize_with = "crate::table::dec::serialize")]
    pub dim: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E1Entry {
    pub t: usize,
    pub q: i64,
    #[serde(serialize_with = "crate::table::dec::serialize")]
    pub dim: BigUint,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<E1Contribution>,
}

/// Nonzero `H^q(V_t)` dimensions, sorted by `(t, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E1Page {
    pub params: StrommeParams,
    pub entries: Vec<E1Entry>,
}

impl E1Page {
    pub fn get(&self, t: usize, q: i64) -> BigUint {
        self.entries
            .iter()
            .find(|e| e.t == t && e.q == q)
            .map(|e| e.dim.clone())
            .unwrap_or_default()
    }

    /// `Σ (−1)^{q−t} E1[t,q]`.
    pub fn euler(&self) -> BigInt {
        self.entries.iter().fold(BigInt::zero(), |acc, e| {
            let v = BigInt::from(e.dim.clone());
            if (e.q - e.t as i64).rem_euclid(2) == 0 {
                acc + v
            } else {
                acc - v
            }
        })
    }

    /// `(t, q, dim)` triples.
    pub fn nonzero(&self) -> Vec<(usize, i64, BigUint)> {
        self.entries.iter().map(|e| (e.t, e.q, e.dim.clone())).collect()
    }
}

static POOLS: Lazy<Mutex<HashMap<usize, Arc<ThreadPool>>>> = Lazy::new(Default::default);

pub(crate) fn pool(jobs: usize) -> Arc<ThreadPool> {
    let jobs = if jobs == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        jobs
    };
    POOLS
        .lock()
        .unwrap()
        .entry(jobs)
        .or_insert_with(|| Arc::new(ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool")))
        .clone()
}

struct Scanner<'a> {
    p: &'a StrommeParams,
    a1: Vec<(Weight, BigUint)>,
    b1_dual: Vec<(Weight, BigUint)>,
    a2_dual: Vec<(Weight, BigUint)>,
    b2: Vec<(Weight, BigUint)>,
    gr2_tables: RwLock<HashMap<Partition, Arc<CohomTable>>>,
    diagnostics: bool,
}

type Partial = Vec<((usize, i64), BigUint, Option<E1Contribution>)>;

impl Scanner<'_> {
    fn gr1(&self, mu: &Partition) -> Result<CohomTable> {
        let p = self.p;
        let mu_w = mu.to_weight(p.k1).expect("μ fits the box");
        let mut t = CohomTable::new();
        for (wa, ma) in &self.a1 {
            for (w, c) in tensor(&mu_w, wa, p.k1)? {
                let rho = w.negate_reverse();
                for (chi, mb) in &self.b1_dual {
                    if let Some((deg, gamma)) = sort_shifted(rho.entries(), chi.entries(), p.n1) {
                        let dim = weight_dim(&Weight::new(gamma).unwrap().negate_reverse(), p.n1);
                        t.add(deg as i64, &(dim * ma * &c * mb));
                    }
                }
            }
        }
        Ok(t)
    }

    fn gr2(&self, sigma: &Partition) -> Result<Arc<CohomTable>> {
        if let Some(t) = self.gr2_tables.read().unwrap().get(sigma) {
            return Ok(t.clone());
        }
        let p = self.p;
        let sig_w = sigma.to_weight(p.r2).expect("σ has at most r₂ rows").negate_reverse();
        let mut t = CohomTable::new();
        for (wb, mb) in &self.b2 {
            for (w, c) in tensor(&sig_w, wb, p.r2)? {
                let chi = w.negate_reverse();
                for (rho, ma) in &self.a2_dual {
                    if let Some((deg, gamma)) = sort_shifted(rho.entries(), chi.entries(), p.n2) {
                        let dim = weight_dim(&Weight::new(gamma).unwrap().negate_reverse(), p.n2);
                        t.add(deg as i64, &(dim * ma * &c * mb));
                    }
                }
            }
        }
        let t = Arc::new(t);
        self.gr2_tables.write().unwrap().insert(sigma.clone(), t.clone());
        Ok(t)
    }

    fn scan_mu(&self, mu: &Partition) -> Result<Partial> {
        let t1 = self.gr1(mu)?;
        let mut out = Vec::new();
        if t1.is_zero() {
            return Ok(out);
        }
        let t = mu.size();
        for (sigma, mult) in koszul_mults(mu, self.p.r2).iter() {
            let t2 = self.gr2(sigma)?;
            for (d1, x) in t1.iter() {
                for (d2, y) in t2.iter() {
                    let dim = mult * x * y;
                    let diag = self.diagnostics.then(|| E1Contribution {
                        mu: mu.clone(),
                        sigma: sigma.clone(),
                        mult: mult.clone(),
                        gr1_degree: *d1,
                        gr2_degree: *d2,
                        dim: dim.clone(),
                    });
                    out.push(((t, d1 + d2), dim, diag));
                }
            }
        }
        Ok(out)
    }
}

fn tensor(a: &Weight, b: &Weight, len: usize) -> Result<WeightExpansion> {
    if b.is_zero() {
        return Ok([(a.clone(), BigUint::one())].into_iter().collect());
    }
    weight_tensor_expand(a, b, len)
}

fn expand(list: &[Weight], len: usize, dual: bool) -> Result<Vec<(Weight, BigUint)>> {
    Ok(weight_product(list, len)?
        .into_iter()
        .map(|(w, c)| (if dual { w.negate_reverse() } else { w }, c))
        .collect())
}

/// E1 page of the Koszul spectral sequence for the given insertion.
pub fn e1_page(p: &StrommeParams, ins: &InsertionSpec, opts: &ScanOptions) -> Result<E1Page> {
    ins.validate(p)?;
    let scanner = Scanner {
        p,
        a1: expand(&ins.a1, p.k1, false)?,
        b1_dual: expand(&ins.b1, p.r1, true)?,
        a2_dual: expand(&ins.a2, p.k2, true)?,
        b2: expand(&ins.b2, p.r2, false)?,
        gr2_tables: RwLock::new(HashMap::new()),
        diagnostics: opts.diagnostics,
    };
    let (lo, hi) = opts.t_range.unwrap_or((0, p.rank_k));
    let hi = hi.min(p.rank_k);
    let mus: Vec<Partition> = (lo..=hi)
        .flat_map(|t| partitions_in_box(p.k1, 2 * p.r2, Some(t)))
        .collect();
    let partials: Vec<Result<Partial>> =
        pool(opts.jobs).install(|| mus.par_iter().map(|mu| scanner.scan_mu(mu)).collect());
    let mut acc: BTreeMap<(usize, i64), E1Entry> = BTreeMap::new();
    for part in partials {
        for ((t, q), dim, diag) in part? {
            let e = acc.entry((t, q)).or_insert_with(|| E1Entry { t, q, dim: BigUint::zero(), terms: Vec::new() });
            e.dim += dim;
            e.terms.extend(diag);
        }
    }
    Ok(E1Page { params: *p, entries: acc.into_values().filter(|e| !e.dim.is_zero()).collect() })
}
