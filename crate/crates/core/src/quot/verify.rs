use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use super::page::{e1_page, ScanOptions};
use super::spectral::{assemble, QuotReport};
use super::{stromme, InsertionSpec, QuotSetup, StrommeParams};
use crate::bwb::{coh_bundle, GrSpec};
use crate::error::{Error, Result};
use crate::partition::{Partition, Weight};
use crate::schur::{direct_sum_expand, schur_dim};
use crate::table::{kunneth, CohomTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    /// The hypotheses fail, or the spectral sequence leaves the answer open.
    Inconclusive,
}

/// Compares an assembled report against an expected table.
fn judge(report: &QuotReport, expected: &CohomTable) -> Verdict {
    if report.exact {
        return if report.table.as_ref() == Some(expected) { Verdict::Holds } else { Verdict::Fails };
    }
    let fits = report.bounds.iter().all(|(d, b)| {
        let v = expected.get(*d);
        b.lower <= v && v <= b.upper
    }) && expected.iter().all(|(d, _)| report.bounds.contains_key(d));
    if fits {
        Verdict::Inconclusive
    } else {
        Verdict::Fails
    }
}

fn scan(p: &StrommeParams, ins: &InsertionSpec, jobs: usize) -> Result<QuotReport> {
    let opts = ScanOptions { jobs, t_range: None, diagnostics: false };
    Ok(assemble(&e1_page(p, ins, &opts)?))
}

/// `Σ (−1)^{q−t} E1[t,q]`.
pub fn euler(p: &StrommeParams, ins: &InsertionSpec) -> Result<BigInt> {
    let opts = ScanOptions { diagnostics: false, ..Default::default() };
    Ok(e1_page(p, ins, &opts)?.euler())
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm41Report {
    pub setup: QuotSetup,
    pub params: StrommeParams,
    pub eta: Weight,
    pub rho: Weight,
    pub size_lhs: usize,
    pub size_rhs: usize,
    pub size_ok: bool,
    pub columns_ok: bool,
    pub hypotheses: bool,
    /// `"vanishing"` when δ or ν is nonzero, `"closed_form"` otherwise.
    pub case: &'static str,
    pub expected: CohomTable,
    pub report: QuotReport,
    pub verdict: Verdict,
}

/// Checks `S^η L_{m−1} ⊗ S^ρ L_m` against the vanishing or closed-form statement.
pub fn verify_thm41(setup: &QuotSetup, eta: &Weight, rho: &Weight, jobs: usize) -> Result<Thm41Report> {
    let p = stromme(setup)?;
    let (gamma, delta) = eta.split_signs();
    let (lambda, nu) = rho.split_signs();
    let (n, r) = (setup.n, setup.r);
    let size_lhs = (n - r) * (lambda.size() + gamma.size()) + r * (nu.size() + delta.size());
    let size_rhs = setup.size_budget();
    let size_ok = size_lhs < size_rhs;
    let columns_ok = nu.first() + delta.first() < n - r;
    let ins = InsertionSpec { b1: vec![eta.clone()], b2: vec![rho.clone()], ..Default::default() };
    let report = scan(&p, &ins, jobs)?;
    let vanishing = !delta.is_empty() || !nu.is_empty();
    let expected = if vanishing {
        CohomTable::new()
    } else {
        CohomTable::single(0, schur_dim(&gamma, p.n1) * schur_dim(&lambda, p.n2))
    };
    let hypotheses = size_ok && columns_ok;
    let verdict = match judge(&report, &expected) {
        Verdict::Holds => Verdict::Holds,
        _ if !hypotheses => Verdict::Inconclusive,
        v => v,
    };
    Ok(Thm41Report {
        setup: setup.clone(),
        params: p,
        eta: eta.clone(),
        rho: rho.clone(),
        size_lhs,
        size_rhs,
        size_ok,
        columns_ok,
        hypotheses,
        case: if vanishing { "vanishing" } else { "closed_form" },
        expected,
        report,
        verdict,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop47Report {
    pub setup: QuotSetup,
    pub eta: Weight,
    pub rho: Weight,
    /// `|δ| + |ν|`.
    pub bound: i64,
    pub top_degree: Option<i64>,
    pub report: QuotReport,
    pub verdict: Verdict,
}

/// Checks that no cohomology sits above degree `|δ| + |ν|`.
pub fn verify_prop47(setup: &QuotSetup, eta: &Weight, rho: &Weight, jobs: usize) -> Result<Prop47Report> {
    let p = stromme(setup)?;
    let bound = (eta.split_signs().1.size() + rho.split_signs().1.size()) as i64;
    let ins = InsertionSpec { b1: vec![eta.clone()], b2: vec![rho.clone()], ..Default::default() };
    let report = scan(&p, &ins, jobs)?;
    let top_degree = report.top_degree();
    let verdict = match top_degree {
        Some(t) if t > bound => {
            let forced = report.bounds.iter().any(|(d, b)| *d > bound && !b.lower.is_zero());
            if forced {
                Verdict::Fails
            } else {
                Verdict::Inconclusive
            }
        }
        _ => Verdict::Holds,
    };
    Ok(Prop47Report { setup: setup.clone(), eta: eta.clone(), rho: rho.clone(), bound, top_degree, report, verdict })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtReport {
    pub setup: QuotSetup,
    pub nu: Partition,
    pub lambda: Partition,
    pub size_ok: bool,
    pub columns_ok: bool,
    /// `deg L_{m−1} ≥ d + b`.
    pub degree_ok: bool,
    /// `Ext^i(S^ν B₁, S^λ B₁)` on the first Grassmannian.
    pub grassmannian: CohomTable,
    pub report: QuotReport,
    pub agree: bool,
}

impl ExtReport {
    pub fn hypotheses(&self) -> bool {
        self.size_ok && self.columns_ok && self.degree_ok
    }
}

/// `Ext^i(S^ν L, S^λ L)` for `L = L_{m−1}`, on the Grassmannian and by scan.
pub fn ext_table(setup: &QuotSetup, nu: &Partition, lambda: &Partition, jobs: usize) -> Result<ExtReport> {
    let p = stromme(setup)?;
    let (n, r) = (setup.n, setup.r);
    let too_long = |x: &Partition| Error::LengthMismatch { expected: p.r1, got: x.len() };
    let nu_dual = nu.to_weight(p.r1).ok_or_else(|| too_long(nu))?.negate_reverse();
    let lam = lambda.to_weight(p.r1).ok_or_else(|| too_long(lambda))?;
    let b_side = vec![nu_dual, lam];
    let grassmannian = coh_bundle(GrSpec { k: p.k1, n: p.n1 }, &[], &b_side)?;
    let ins = InsertionSpec { b1: b_side, ..Default::default() };
    let report = scan(&p, &ins, jobs)?;
    let agree = report.exact && report.table.as_ref() == Some(&grassmannian);
    Ok(ExtReport {
        setup: setup.clone(),
        nu: nu.clone(),
        lambda: lambda.clone(),
        size_ok: r * nu.size() + (n - r) * lambda.size() < setup.size_budget(),
        columns_ok: nu.first() < n - r,
        degree_ok: setup.m > setup.d + setup.b(),
        grassmannian,
        report,
        agree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub table: CohomTable,
    /// `(n−r)·Σ|λʲ| < nd + rb + n`.
    pub hypothesis: bool,
}

/// Predicted cohomology of `⊗ S^{λʲ} M_j^{[d]}` with `deg M_j = e_j`.
///
/// Each insert contributes `Σ c^λ_{α,β} S^α H⁰ ⊗ S^{β†} H¹` in degree `|β|`,
/// where `H^i = H^i(V ⊗ M_j)`; the inserts combine by Künneth.
pub fn closed_form_multi(setup: &QuotSetup, inserts: &[(i64, Partition)]) -> ClosedForm {
    let mut table = CohomTable::single(0, BigUint::one());
    let mut total = 0;
    for (e, lambda) in inserts {
        total += lambda.size();
        let (h0, h1) = setup.twisted_coh(*e);
        let mut one = CohomTable::new();
        for (alpha, beta, c) in direct_sum_expand(lambda) {
            let dim = schur_dim(&alpha, h0) * schur_dim(&beta.conjugate(), h1) * c;
            one.add(beta.size() as i64, &dim);
        }
        table = kunneth(&table, &one);
    }
    ClosedForm { table, hypothesis: (setup.n - setup.r) * total < setup.size_budget() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn b(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn closed_form_examples() {
        let s = QuotSetup::trivial(2, 1, 1, 1).unwrap();
        assert_eq!(closed_form_multi(&s, &[(-2, part("1"))]).table, CohomTable::single(1, b(2)));
        assert_eq!(closed_form_multi(&s, &[(0, part("1"))]).table, CohomTable::single(0, b(2)));
        assert_eq!(closed_form_multi(&s, &[]).table, CohomTable::single(0, b(1)));
        assert_eq!(closed_form_multi(&s, &[(-1, part("2"))]).table, CohomTable::new());
    }

    #[test]
    fn thm41_examples() {
        let s = QuotSetup::trivial(3, 1, 1, 1).unwrap();
        let p = stromme(&s).unwrap();
        let eta = Weight::from_signs(&Partition::empty(), &part("1"), p.r1).unwrap();
        let r = verify_thm41(&s, &eta, &Weight::zero(p.r2), 1).unwrap();
        assert!(r.hypotheses);
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.report.is_zero());

        let s = QuotSetup::trivial(2, 1, 1, 2).unwrap();
        let p = stromme(&s).unwrap();
        let one = |len| part("1").to_weight(len).unwrap();
        let r = verify_thm41(&s, &one(p.r1), &one(p.r2), 1).unwrap();
        assert_eq!(r.report.table, Some(CohomTable::single(0, b(24))));
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[test]
    fn empty_insertion_is_one() {
        for (n, r, d, m) in [(2, 1, 1, 1), (2, 1, 2, 2), (3, 1, 1, 1), (3, 2, 1, 2)] {
            let p = stromme(&QuotSetup::trivial(n, r, d, m).unwrap()).unwrap();
            assert_eq!(euler(&p, &InsertionSpec::default()).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn ext_examples() {
        let s = QuotSetup::trivial(3, 1, 1, 2).unwrap();
        let r = ext_table(&s, &part("1"), &part("1"), 1).unwrap();
        assert_eq!(r.grassmannian, CohomTable::single(0, b(1)));
        assert!(r.agree);
        let r = ext_table(&s, &part("1"), &Partition::empty(), 1).unwrap();
        assert!(r.grassmannian.is_zero() && r.agree);
        let r = ext_table(&s, &Partition::empty(), &part("1"), 1).unwrap();
        assert_eq!(r.grassmannian, CohomTable::single(0, b(6)));
    }

    #[test]
    fn prop47_examples() {
        let s = QuotSetup::trivial(2, 1, 1, 1).unwrap();
        let p = stromme(&s).unwrap();
        let r = verify_prop47(&s, &part("2").to_weight(p.r1).unwrap(), &part("1").to_weight(p.r2).unwrap(), 1).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
    }
}
