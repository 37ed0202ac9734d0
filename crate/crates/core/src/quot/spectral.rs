use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use serde::Serialize;

use super::page::E1Page;
use crate::table::CohomTable;

/// One first-page group: filtration `p`, total degree, dimension bounds.
///
/// Entries sharing `group` come from one inexact inner computation whose
/// Euler characteristic is `SsInput::group_euler[group]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsEntry {
    pub p: i64,
    pub total: i64,
    pub lower: BigUint,
    pub upper: BigUint,
    pub group: Option<usize>,
}

impl SsEntry {
    pub fn exact(p: i64, total: i64, dim: BigUint) -> Self {
        SsEntry { p, total, lower: dim.clone(), upper: dim, group: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SsInput {
    pub entries: Vec<SsEntry>,
    pub group_euler: Vec<BigInt>,
    /// Abutment vanishes below this degree.
    pub floor: Option<i64>,
    /// Abutment vanishes above this degree.
    pub ceiling: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    #[serde(serialize_with = "crate::table::dec::serialize")]
    pub lower: BigUint,
    #[serde(serialize_with = "crate::table::dec::serialize")]
    pub upper: BigUint,
}

impl Bounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// `Σ_{D ∈ degrees} (−1)^D H^D = euler` inside one linked component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub degrees: Vec<i64>,
    #[serde(serialize_with = "crate::table::dec::signed")]
    pub euler: BigInt,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotReport {
    #[serde(serialize_with = "crate::table::dec::signed")]
    pub euler: BigInt,
    /// Every degree pinned.
    pub exact: bool,
    /// No differential can be nonzero on the first page.
    pub degenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<CohomTable>,
    pub bounds: BTreeMap<i64, Bounds>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<Relation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl QuotReport {
    pub fn is_zero(&self) -> bool {
        self.bounds.values().all(|b| b.upper.is_zero())
    }

    /// Largest degree that may be nonzero.
    pub fn top_degree(&self) -> Option<i64> {
        self.bounds.iter().rev().find(|(_, b)| !b.upper.is_zero()).map(|(d, _)| *d)
    }

    /// Upper bounds as a table.
    pub fn upper_table(&self) -> CohomTable {
        self.bounds.iter().map(|(d, b)| (*d, b.upper.clone())).collect()
    }
}

fn signed(d: i64, v: &BigUint) -> BigInt {
    let v = BigInt::from(v.clone());
    if d.rem_euclid(2) == 0 {
        v
    } else {
        -v
    }
}

fn find(parent: &mut BTreeMap<i64, i64>, x: i64) -> i64 {
    let p = parent[&x];
    if p == x {
        return x;
    }
    let r = find(parent, p);
    parent.insert(x, r);
    r
}

fn union(parent: &mut BTreeMap<i64, i64>, a: i64, b: i64) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent.insert(ra.max(rb), ra.min(rb));
    }
}

fn clamp_sub(a: BigInt) -> BigUint {
    a.to_biguint().unwrap_or_default()
}

fn relation_text(degrees: &[i64], euler: &BigInt) -> String {
    let top = *degrees.last().unwrap();
    let flip = top.rem_euclid(2) == 1;
    let mut s = String::new();
    for (i, d) in degrees.iter().rev().enumerate() {
        let plus = (d.rem_euclid(2) == 0) != flip;
        match (i, plus) {
            (0, true) => {}
            (0, false) => s.push('-'),
            (_, true) => s.push_str(" + "),
            (_, false) => s.push_str(" - "),
        }
        s.push_str(&format!("H^{d}"));
    }
    let rhs = if flip { -euler.clone() } else { euler.clone() };
    format!("{s} = {rhs}")
}

/// Bound the abutment of a first-quadrant-free spectral sequence whose
/// differentials raise total degree by one and strictly raise `p`.
pub fn assemble_entries(input: &SsInput) -> QuotReport {
    let in_range = |d: i64| input.floor.is_none_or(|f| d >= f) && input.ceiling.is_none_or(|c| d <= c);
    let live: Vec<&SsEntry> = input.entries.iter().filter(|e| !e.upper.is_zero()).collect();
    let mut parent: BTreeMap<i64, i64> = live.iter().map(|e| (e.total, e.total)).collect();
    let mut degenerate = true;
    for x in &live {
        for y in &live {
            if y.total == x.total + 1 && y.p > x.p {
                union(&mut parent, x.total, y.total);
                degenerate = false;
            }
        }
    }
    let mut by_group: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    for e in &live {
        if let Some(g) = e.group {
            by_group.entry(g).or_default().push(e.total);
        }
    }
    for degs in by_group.values() {
        for w in degs.windows(2) {
            union(&mut parent, w[0], w[1]);
        }
    }
    let inexact_entries = live.iter().any(|e| e.group.is_some() || e.lower != e.upper);
    if inexact_entries {
        degenerate = false;
    }

    let mut euler = BigInt::zero();
    let mut comp_euler: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut upper: BTreeMap<i64, BigUint> = BTreeMap::new();
    let mut counted_groups: BTreeSet<usize> = BTreeSet::new();
    for e in &live {
        let root = find(&mut parent, e.total);
        let chi = match e.group {
            None => signed(e.total, &e.upper),
            Some(g) if counted_groups.insert(g) => input.group_euler[g].clone(),
            Some(_) => BigInt::zero(),
        };
        euler += &chi;
        *comp_euler.entry(root).or_default() += chi;
        if in_range(e.total) {
            *upper.entry(e.total).or_default() += &e.upper;
        }
    }
    for (g, chi) in input.group_euler.iter().enumerate() {
        if !counted_groups.contains(&g) {
            euler += chi;
        }
    }

    let mut components: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &d in parent.clone().keys() {
        let r = find(&mut parent, d);
        components.entry(r).or_default().push(d);
    }

    let mut bounds = BTreeMap::new();
    let mut relations = Vec::new();
    let mut notes = Vec::new();
    let mut exact = true;
    for (root, degs) in &components {
        let chi = comp_euler.get(root).cloned().unwrap_or_default();
        let alive: Vec<i64> = degs.iter().copied().filter(|d| upper.contains_key(d)).collect();
        let dropped: Vec<i64> = degs.iter().copied().filter(|d| !in_range(*d)).collect();
        match alive.len() {
            0 => {
                if !chi.is_zero() {
                    notes.push(format!("inconsistent page: degrees {degs:?} carry Euler {chi} outside the allowed range"));
                    exact = false;
                }
            }
            1 => {
                let d = alive[0];
                let v = if d.rem_euclid(2) == 0 { chi.clone() } else { -chi.clone() };
                if v.sign() == Sign::Minus || v > BigInt::from(upper[&d].clone()) {
                    notes.push(format!("inconsistent page at degree {d}: forced value {v}"));
                    exact = false;
                }
                let v = clamp_sub(v);
                if !dropped.is_empty() {
                    notes.push(format!(
                        "entries in degrees {dropped:?} must cancel against degree {d}; forced H^{d} = {v}"
                    ));
                }
                bounds.insert(d, Bounds { lower: v.clone(), upper: v });
            }
            _ => {
                exact = false;
                let sum_par = |even: bool, skip: Option<i64>| -> BigInt {
                    alive
                        .iter()
                        .filter(|&&d| (d.rem_euclid(2) == 0) == even && Some(d) != skip)
                        .map(|d| BigInt::from(upper[d].clone()))
                        .sum()
                };
                for &d in &alive {
                    let u = BigInt::from(upper[&d].clone());
                    let (lo, hi) = if d.rem_euclid(2) == 0 {
                        (&chi - sum_par(true, Some(d)), &chi + sum_par(false, None))
                    } else {
                        (-&chi - sum_par(false, Some(d)), -&chi + sum_par(true, None))
                    };
                    let lower = clamp_sub(lo);
                    let upper_b = clamp_sub(hi.min(u));
                    if lower > BigUint::zero() {
                        notes.push(format!(
                            "H^{d} ≥ {lower}: must be nonzero for dimension reasons"
                        ));
                    }
                    bounds.insert(d, Bounds { lower, upper: upper_b });
                }
                relations.push(Relation { text: relation_text(&alive, &chi), degrees: alive.clone(), euler: chi });
            }
        }
    }
    bounds.retain(|_, b| !b.upper.is_zero());
    let table = exact.then(|| bounds.iter().map(|(d, b)| (*d, b.upper.clone())).collect());
    if !degenerate && exact && !live.is_empty() && notes.is_empty() {
        notes.push("differentials pinned by nonnegativity and range".into());
    }
    QuotReport { euler, exact, degenerate, table, bounds, relations, notes }
}

/// Abutment of the Koszul spectral sequence `E1[t,q] ⇒ H^{q−t}`.
pub fn assemble(page: &E1Page) -> QuotReport {
    let input = SsInput {
        entries: page
            .entries
            .iter()
            .map(|e| SsEntry::exact(-(e.t as i64), e.q - e.t as i64, e.dim.clone()))
            .collect(),
        group_euler: Vec::new(),
        floor: Some(0),
        ceiling: Some(page.params.quot_dim as i64),
    };
    assemble_entries(&input)
}
