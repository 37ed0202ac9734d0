//! Schur complexes of two-term complexes and hypercohomology of their tensor products.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, Weight};
use crate::quot::{
    assemble, assemble_entries, e1_page, stromme, InsertionSpec, QuotReport, QuotSetup, ScanOptions, SsEntry,
    SsInput, StrommeParams,
};
use crate::schur::{direct_sum_expand, lr_expand_capped, schur_dim, skew_expand};

pub use crate::quot::line_coh;

/// Which universal bundles a two-term complex is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `B₁ → B₂`, representing `M^{[d]}`.
    Quotient,
    /// `A₁ → A₂`, representing `M^{{d}}`.
    Sub,
}

/// Degree placement of a two-term complex and of its Schur complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Degrees `[0, 1]`; Schur terms in degrees `0..=|λ|`.
    Cohomological,
    /// Degrees `[−1, 0]`; Schur terms in degrees `−|λ|..=0`.
    Homological,
}

/// Twist labels for the left multiplicity space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// `O(e−m−1)`, which passes the rank check.
    #[default]
    Corrected,
    /// `O(e−m+1)`, as the triangle is printed.
    Printed,
}

/// `E₁ ⊗ H_left → E₂ ⊗ H_right` with `H = (h⁰, h¹)` of a line bundle on ℙ¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwoTermComplex {
    pub left_mults: (usize, usize),
    pub right_mults: (usize, usize),
    pub side: Side,
    pub window: Orientation,
}

impl TwoTermComplex {
    /// Copies of the left and right bundles actually present.
    pub fn counts(&self) -> (usize, usize) {
        match self.window {
            Orientation::Homological => (self.left_mults.0, self.right_mults.0),
            Orientation::Cohomological => (self.left_mults.1, self.right_mults.1),
        }
    }

    /// Alternating rank with the degree-0 term counted positively.
    pub fn virtual_rank(&self, p: &StrommeParams) -> i64 {
        let (l, r) = self.counts();
        let (rk1, rk2) = match self.side {
            Side::Quotient => (p.r1, p.r2),
            Side::Sub => (p.k1, p.k2),
        };
        let (l, r) = ((l * rk1) as i64, (r * rk2) as i64);
        match self.window {
            Orientation::Homological => r - l,
            Orientation::Cohomological => l - r,
        }
    }

    fn slots(&self) -> (Slot, Slot) {
        match self.side {
            Side::Quotient => (Slot::B1, Slot::B2),
            Side::Sub => (Slot::A1, Slot::A2),
        }
    }

    pub fn source(&self) -> Source {
        let (l, r) = self.counts();
        let (s1, s2) = self.slots();
        Source::Complex {
            left: Box::new(Source::Bundle(s1, l)),
            right: Box::new(Source::Bundle(s2, r)),
            window: self.window,
        }
    }
}

/// Two-term representation of `M^{[d]}` or `M^{{d}}` for `deg M = e`.
pub fn m_bracket_rep(setup: &QuotSetup, e: i64, side: Side) -> Result<TwoTermComplex> {
    m_bracket_rep_with(setup, e, side, Convention::Corrected)
}

pub fn m_bracket_rep_with(setup: &QuotSetup, e: i64, side: Side, conv: Convention) -> Result<TwoTermComplex> {
    let p = stromme(setup)?;
    let m = setup.m as i64;
    let left_twist = match conv {
        Convention::Corrected => e - m - 1,
        Convention::Printed => e - m + 1,
    };
    let window = if e - m >= 0 { Orientation::Homological } else { Orientation::Cohomological };
    let c = TwoTermComplex { left_mults: line_coh(left_twist), right_mults: line_coh(e - m), side, window };
    let (n, r, d, b) = (setup.n as i64, setup.r as i64, setup.d as i64, setup.b() as i64);
    let expected = match side {
        Side::Quotient => r * (e + 1) + d,
        Side::Sub => (n - r) * (e + 1) - b - d,
    };
    let got = c.virtual_rank(&p);
    if got != expected {
        return Err(Error::RankMismatch(format!(
            "two-term complex for e={e} has rank {got}, expected {expected}"
        )));
    }
    Ok(c)
}

/// Def-5.1 terms by degree: `(left partition, right partition, multiplicity)`.
pub type ComplexTermDecomp = BTreeMap<i64, Vec<(Partition, Partition, BigUint)>>;

/// Terms of `S^λ(E₁ → E₂)` in the given orientation.
pub fn schur_complex_terms(lambda: &Partition, orientation: Orientation) -> ComplexTermDecomp {
    let mut out: ComplexTermDecomp = BTreeMap::new();
    for q in 0..=lambda.size() {
        for nu in crate::partition::subpartitions(lambda).into_iter().filter(|nu| nu.size() == q) {
            let skew = skew_expand(lambda, &nu).expect("ν ⊆ λ");
            let dagger = nu.conjugate();
            for (kappa, c) in skew {
                let (deg, l, r) = match orientation {
                    Orientation::Cohomological => (q as i64, kappa, dagger.clone()),
                    Orientation::Homological => (-(q as i64), dagger.clone(), kappa),
                };
                out.entry(deg).or_default().push((l, r, c));
            }
        }
    }
    for v in out.values_mut() {
        v.sort_by(|x, y| (&y.0, &y.1).cmp(&(&x.0, &x.1)));
    }
    out
}

/// `S^λ S_x` through `S^λ(A₁ → A₂)` in homological degrees.
pub fn sx_resolution(lambda: &Partition) -> ComplexTermDecomp {
    schur_complex_terms(lambda, Orientation::Homological)
}

/// One of the four universal bundles on `Gr(k₁,N₁) × Gr(k₂,N₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Slot {
    A1,
    B1,
    A2,
    B2,
}

impl Slot {
    fn index(self) -> usize {
        self as usize
    }

    fn rank(self, p: &StrommeParams) -> usize {
        match self {
            Slot::A1 => p.k1,
            Slot::B1 => p.r1,
            Slot::A2 => p.k2,
            Slot::B2 => p.r2,
        }
    }
}

/// An object built from the universal bundles and trivial bundles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Source {
    /// `slot ⊗ ℂ^copies`.
    Bundle(Slot, usize),
    /// `O^h`.
    Trivial(usize),
    Sum(Vec<Source>),
    /// A two-term complex whose terms may themselves be complexes one level down.
    Complex { left: Box<Source>, right: Box<Source>, window: Orientation },
}

/// Where a resolved object's hypercohomology may be nonzero: `[lo·|λ|, hi·|λ| + dim]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Amplitude {
    pub lo: i64,
    pub hi: i64,
}

/// What a hypercohomology insert applies its Schur functor to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HyperObject {
    /// `M^{[d]}` or `M^{{d}}` with `M = O(e)`.
    Tautological { e: i64, side: Side },
    /// The restriction `S_x` of the universal subsheaf to a point.
    PointSub,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HyperInsert {
    pub object: HyperObject,
    pub lambda: Partition,
}

impl HyperInsert {
    pub fn quotient(e: i64, lambda: Partition) -> Self {
        HyperInsert { object: HyperObject::Tautological { e, side: Side::Quotient }, lambda }
    }

    pub fn sub(e: i64, lambda: Partition) -> Self {
        HyperInsert { object: HyperObject::Tautological { e, side: Side::Sub }, lambda }
    }

    pub fn point_sub(lambda: Partition) -> Self {
        HyperInsert { object: HyperObject::PointSub, lambda }
    }

    /// Cohomological amplitude of the underlying object.
    pub fn amplitude(&self, setup: &QuotSetup) -> Amplitude {
        let bmax = *setup.splitting.iter().max().unwrap_or(&0) as i64;
        let (d, b) = (setup.d as i64, setup.b() as i64);
        match self.object {
            HyperObject::PointSub => Amplitude { lo: 0, hi: 0 },
            HyperObject::Tautological { e, side: Side::Quotient } => {
                Amplitude { lo: 0, hi: if e >= bmax - 1 { 0 } else { 1 } }
            }
            HyperObject::Tautological { e, side: Side::Sub } => Amplitude {
                lo: if e < 0 { 1 } else { 0 },
                hi: if e >= d + b - 1 && e >= 0 { 0 } else { 1 },
            },
        }
    }
}

/// Key of a resolved piece: outer degree, inner degree, partitions per slot.
type PieceKey = (i64, i64, [Vec<Partition>; 4]);
type Pieces = BTreeMap<PieceKey, BigUint>;

fn unit() -> Pieces {
    let mut p = Pieces::new();
    p.insert((0, 0, Default::default()), BigUint::one());
    p
}

fn tensor(a: &Pieces, b: &Pieces) -> Pieces {
    let mut out = Pieces::new();
    for ((o1, i1, s1), x) in a {
        for ((o2, i2, s2), y) in b {
            let mut slots = s1.clone();
            for (k, list) in slots.iter_mut().enumerate() {
                list.extend(s2[k].iter().cloned());
                list.sort();
            }
            *out.entry((o1 + o2, i1 + i2, slots)).or_default() += x * y;
        }
    }
    out
}

fn add_into(acc: &mut Pieces, other: Pieces, scale: &BigUint) {
    for (k, v) in other {
        *acc.entry(k).or_default() += v * scale;
    }
}

type PowerList = Arc<Vec<(Partition, BigUint)>>;

static POWERS: Lazy<RwLock<HashMap<(Partition, usize, usize), PowerList>>> = Lazy::new(Default::default);

/// `S^κ(X^{⊕a}) = ⊕ m_π S^π X` for `X` of rank `rank`.
pub fn power_sum_expand(kappa: &Partition, copies: usize, rank: usize) -> PowerList {
    let key = (kappa.clone(), copies, rank);
    if let Some(v) = POWERS.read().unwrap().get(&key) {
        return v.clone();
    }
    let mut acc: BTreeMap<Partition, BigUint> = BTreeMap::new();
    if copies == 0 {
        if kappa.is_empty() {
            acc.insert(Partition::empty(), BigUint::one());
        }
    } else if copies == 1 {
        if kappa.len() <= rank {
            acc.insert(kappa.clone(), BigUint::one());
        }
    } else {
        for (alpha, beta, c) in direct_sum_expand(kappa) {
            if alpha.len() > rank {
                continue;
            }
            for (pi, m) in power_sum_expand(&beta, copies - 1, rank).iter() {
                for (sigma, c2) in lr_expand_capped(&alpha, pi, rank) {
                    *acc.entry(sigma).or_default() += &c * m * c2;
                }
            }
        }
    }
    let v = Arc::new(acc.into_iter().rev().collect::<Vec<_>>());
    POWERS.write().unwrap().insert(key, v.clone());
    v
}

struct Expander<'a> {
    params: &'a StrommeParams,
}

impl Expander<'_> {
    /// `S^κ(src)`; complexes at `depth` 0 grade the outer degree, at depth 1 the inner one.
    fn schur(&self, src: &Source, kappa: &Partition, depth: usize) -> Result<Pieces> {
        if kappa.is_empty() {
            return Ok(unit());
        }
        match src {
            Source::Trivial(h) => {
                let dim = schur_dim(kappa, *h);
                let mut out = Pieces::new();
                if !dim.is_zero() {
                    out.insert((0, 0, Default::default()), dim);
                }
                Ok(out)
            }
            Source::Bundle(slot, copies) => {
                let mut out = Pieces::new();
                for (pi, m) in power_sum_expand(kappa, *copies, slot.rank(self.params)).iter() {
                    let mut slots: [Vec<Partition>; 4] = Default::default();
                    if !pi.is_empty() {
                        slots[slot.index()].push(pi.clone());
                    }
                    *out.entry((0, 0, slots)).or_default() += m;
                }
                Ok(out)
            }
            Source::Sum(parts) => match parts.split_first() {
                None => Ok(Pieces::new()),
                Some((head, [])) => self.schur(head, kappa, depth),
                Some((head, rest)) => {
                    let rest = Source::Sum(rest.to_vec());
                    let mut out = Pieces::new();
                    for (alpha, beta, c) in direct_sum_expand(kappa) {
                        let t = tensor(&self.schur(head, &alpha, depth)?, &self.schur(&rest, &beta, depth)?);
                        add_into(&mut out, t, &c);
                    }
                    Ok(out)
                }
            },
            Source::Complex { left, right, window } => {
                if depth > 1 {
                    return Err(Error::InvalidSetup("complexes nest at most two levels".into()));
                }
                let mut out = Pieces::new();
                for (deg, terms) in schur_complex_terms(kappa, *window) {
                    for (l, r, c) in terms {
                        let t = tensor(&self.schur(left, &l, depth + 1)?, &self.schur(right, &r, depth + 1)?);
                        for ((o, i, s), v) in t {
                            let key = if depth == 0 { (o + deg, i, s) } else { (o, i + deg, s) };
                            *out.entry(key).or_default() += v * &c;
                        }
                    }
                }
                Ok(out)
            }
        }
    }
}

static SCANS: Lazy<RwLock<HashMap<(StrommeParams, InsertionSpec), Arc<QuotReport>>>> =
    Lazy::new(Default::default);

/// Assembled scan of one bundle, memoised.
pub fn scan_report(p: &StrommeParams, ins: &InsertionSpec, jobs: usize) -> Result<Arc<QuotReport>> {
    let ins = ins.clone().canonical();
    let key = (*p, ins);
    if let Some(r) = SCANS.read().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let opts = ScanOptions { jobs, t_range: None, diagnostics: false };
    let r = Arc::new(assemble(&e1_page(p, &key.1, &opts)?));
    SCANS.write().unwrap().insert(key, r.clone());
    Ok(r)
}

fn spec_of(p: &StrommeParams, slots: &[Vec<Partition>; 4]) -> Option<InsertionSpec> {
    let w = |list: &Vec<Partition>, len: usize| -> Option<Vec<Weight>> {
        list.iter().map(|x| x.to_weight(len)).collect()
    };
    Some(InsertionSpec {
        a1: w(&slots[0], p.k1)?,
        b1: w(&slots[1], p.r1)?,
        a2: w(&slots[2], p.k2)?,
        b2: w(&slots[3], p.r2)?,
    })
}

/// Adds a report as first-page entries at filtration `p`, shifted by `p`.
fn push_report(input: &mut SsInput, p: i64, r: &QuotReport, mult: &BigUint) {
    if r.exact {
        for (d, v) in r.table.as_ref().expect("exact report has a table").iter() {
            input.entries.push(SsEntry::exact(p, p + d, v * mult));
        }
        return;
    }
    let g = input.group_euler.len();
    input.group_euler.push(&r.euler * BigInt::from(mult.clone()));
    for (d, b) in &r.bounds {
        input.entries.push(SsEntry {
            p,
            total: p + d,
            lower: &b.lower * mult,
            upper: &b.upper * mult,
            group: Some(g),
        });
    }
}

/// Evaluates resolved pieces: inner spectral sequences first, then the outer one.
fn evaluate(p: &StrommeParams, pieces: &Pieces, floor: i64, ceiling: i64, jobs: usize) -> Result<QuotReport> {
    let mut by_outer: BTreeMap<i64, Vec<(i64, InsertionSpec, BigUint)>> = BTreeMap::new();
    for ((o, i, slots), m) in pieces {
        if m.is_zero() {
            continue;
        }
        if let Some(spec) = spec_of(p, slots) {
            by_outer.entry(*o).or_default().push((*i, spec, m.clone()));
        }
    }
    let mut outer = SsInput { floor: Some(floor), ceiling: Some(ceiling), ..Default::default() };
    for (o, list) in by_outer {
        let mut inner = SsInput { floor: Some(0), ceiling: Some(p.quot_dim as i64), ..Default::default() };
        for (i, spec, m) in &list {
            let r = scan_report(p, spec, jobs)?;
            push_report(&mut inner, *i, &r, m);
        }
        let r = assemble_entries(&inner);
        push_report(&mut outer, o, &r, &BigUint::one());
    }
    Ok(assemble_entries(&outer))
}

/// Sources for each insert under the Φ/Ψ representation.
fn phi_sources(setup: &QuotSetup, inserts: &[HyperInsert]) -> Result<Vec<Source>> {
    inserts
        .iter()
        .map(|ins| match ins.object {
            HyperObject::PointSub => Ok(Source::Complex {
                left: Box::new(Source::Bundle(Slot::A1, 1)),
                right: Box::new(Source::Bundle(Slot::A2, 1)),
                window: Orientation::Homological,
            }),
            HyperObject::Tautological { e, side } => Ok(m_bracket_rep(setup, e, side)?.source()),
        })
        .collect()
}

/// Representation through `M^{{d}} → H•(V⊗M) ⊗ O → M^{[d]}`, when one of `h⁰, h¹` vanishes.
pub fn theta_source(setup: &QuotSetup, e: i64) -> Result<Option<Source>> {
    let (h0, h1) = setup.twisted_coh(e);
    let m = setup.m as i64;
    let sub = |e| -> Result<Source> {
        let c = m_bracket_rep(setup, e, Side::Sub)?;
        let (l, r) = c.counts();
        Ok(Source::Complex {
            left: Box::new(Source::Bundle(Slot::A1, l)),
            right: Box::new(Source::Bundle(Slot::A2, r)),
            window: Orientation::Homological,
        })
    };
    if h1 == 0 && e >= m {
        return Ok(Some(Source::Complex {
            left: Box::new(sub(e)?),
            right: Box::new(Source::Trivial(h0)),
            window: Orientation::Homological,
        }));
    }
    if h1 == 0 {
        let c = m_bracket_rep(setup, e, Side::Sub)?;
        let (l, r) = c.counts();
        return Ok(Some(Source::Complex {
            left: Box::new(Source::Bundle(Slot::A1, l)),
            right: Box::new(Source::Sum(vec![Source::Bundle(Slot::A2, r), Source::Trivial(h0)])),
            window: Orientation::Homological,
        }));
    }
    if h0 == 0 {
        return Ok(Some(Source::Complex {
            left: Box::new(sub(e)?),
            right: Box::new(Source::Trivial(h1)),
            window: Orientation::Cohomological,
        }));
    }
    Ok(None)
}

fn theta_sources(setup: &QuotSetup, inserts: &[HyperInsert]) -> Result<Option<Vec<Source>>> {
    let phi = phi_sources(setup, inserts)?;
    let mut out = Vec::new();
    let mut changed = false;
    for (ins, fallback) in inserts.iter().zip(phi) {
        match ins.object {
            HyperObject::Tautological { e, side: Side::Quotient } if !ins.lambda.is_empty() => {
                match theta_source(setup, e)? {
                    Some(s) => {
                        changed = true;
                        out.push(s);
                    }
                    None => out.push(fallback),
                }
            }
            _ => out.push(fallback),
        }
    }
    Ok(changed.then_some(out))
}

fn resolve(p: &StrommeParams, sources: &[Source], inserts: &[HyperInsert]) -> Result<Pieces> {
    let ex = Expander { params: p };
    let mut acc = unit();
    for (src, ins) in sources.iter().zip(inserts) {
        acc = tensor(&acc, &ex.schur(src, &ins.lambda, 0)?);
    }
    Ok(acc)
}

fn window(setup: &QuotSetup, p: &StrommeParams, inserts: &[HyperInsert]) -> (i64, i64) {
    inserts.iter().fold((0, p.quot_dim as i64), |(lo, hi), ins| {
        let a = ins.amplitude(setup);
        let s = ins.lambda.size() as i64;
        (lo + a.lo * s, hi + a.hi * s)
    })
}

/// `Σ (−1)^D` over the resolved terms, from first pages only.
pub fn hyper_euler(setup: &QuotSetup, inserts: &[HyperInsert]) -> Result<BigInt> {
    let p = stromme(setup)?;
    let pieces = resolve(&p, &phi_sources(setup, inserts)?, inserts)?;
    let mut total = BigInt::zero();
    for ((o, i, slots), m) in &pieces {
        let Some(spec) = spec_of(&p, slots) else { continue };
        let chi = &scan_report(&p, &spec, 0)?.euler * BigInt::from(m.clone());
        if (o + i).rem_euclid(2) == 0 {
            total += chi;
        } else {
            total -= chi;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, Serialize)]
pub struct RouteReport {
    pub route: &'static str,
    pub report: QuotReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct HyperReport {
    pub setup: QuotSetup,
    pub params: StrommeParams,
    pub inserts: Vec<HyperInsert>,
    pub routes: Vec<RouteReport>,
    pub report: QuotReport,
}

/// Per-degree intersection of bounds from independent computations.
pub fn intersect(reports: &[&QuotReport]) -> QuotReport {
    let mut degrees: Vec<i64> = reports.iter().flat_map(|r| r.bounds.keys().copied()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut notes = Vec::new();
    let mut bounds = BTreeMap::new();
    for d in degrees {
        let zero = crate::quot::Bounds { lower: BigUint::zero(), upper: BigUint::zero() };
        let mut lo = BigUint::zero();
        let mut hi: Option<BigUint> = None;
        for r in reports {
            let b = r.bounds.get(&d).unwrap_or(&zero);
            lo = lo.max(b.lower.clone());
            hi = Some(hi.map_or(b.upper.clone(), |h| h.min(b.upper.clone())));
        }
        let hi = hi.unwrap_or_default();
        if lo > hi {
            notes.push(format!("routes disagree at degree {d}"));
        }
        if !hi.is_zero() {
            bounds.insert(d, crate::quot::Bounds { lower: lo.clone().min(hi.clone()), upper: hi });
        }
    }
    let euler = reports[0].euler.clone();
    if reports.iter().any(|r| r.euler != euler) {
        notes.push("routes disagree on the Euler characteristic".into());
    }
    let exact = notes.is_empty() && bounds.values().all(|b| b.lower == b.upper);
    let table = exact.then(|| bounds.iter().map(|(d, b)| (*d, b.upper.clone())).collect());
    let relations = if exact { Vec::new() } else { reports.iter().flat_map(|r| r.relations.clone()).collect() };
    for r in reports {
        notes.extend(r.notes.iter().cloned());
    }
    notes.dedup();
    QuotReport {
        euler,
        exact,
        degenerate: reports.iter().any(|r| r.degenerate && r.exact),
        table,
        bounds,
        relations,
        notes,
    }
}

/// Hypercohomology of `⊗ S^{λʲ}(object_j)` at the setup's twist `m`.
pub fn hyper_cohomology(setup: &QuotSetup, inserts: &[HyperInsert], jobs: usize) -> Result<HyperReport> {
    let p = stromme(setup)?;
    let (floor, ceiling) = window(setup, &p, inserts);
    let phi = evaluate(&p, &resolve(&p, &phi_sources(setup, inserts)?, inserts)?, floor, ceiling, jobs)?;
    let mut routes = vec![RouteReport { route: "phi", report: phi }];
    if !routes[0].report.exact {
        if let Some(theta) = theta_sources(setup, inserts)? {
            let r = evaluate(&p, &resolve(&p, &theta, inserts)?, floor, ceiling, jobs)?;
            routes.push(RouteReport { route: "theta", report: r });
        }
    }
    let report = intersect(&routes.iter().map(|r| &r.report).collect::<Vec<_>>());
    Ok(HyperReport { setup: setup.clone(), params: p, inserts: inserts.to_vec(), routes, report })
}

/// Raises `m` from the setup's value until the answer is exact or `m_max` is passed.
pub fn hyper_sweep(
    setup: &QuotSetup,
    inserts: &[HyperInsert],
    m_max: usize,
    jobs: usize,
) -> Result<Vec<HyperReport>> {
    let mut out = Vec::new();
    for m in setup.m..=m_max.max(setup.m) {
        let r = hyper_cohomology(&setup.with_m(m)?, inserts, jobs)?;
        let done = r.report.exact;
        out.push(r);
        if done {
            break;
        }
    }
    Ok(out)
}
