mod common;

use std::time::Instant;

use common::{big, binomial, part, random_boxed, random_partition};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use quotbwb_core::bwb::{bwb_dual_weights, coh_bundle, index_nonvanish, GrSpec};
use quotbwb_core::complex::{hyper_cohomology, hyper_sweep, line_coh, HyperInsert};
use quotbwb_core::partition::{partitions_of, subpartitions};
use quotbwb_core::quot::{
    assemble, closed_form_multi, e1_page, ext_table, euler, koszul_terms, stromme, verify_thm41, InsertionSpec,
    QuotSetup, ScanOptions,
};
use quotbwb_core::schur::{horn_predicates, lr, lr_expand, schur_dim};
use quotbwb_core::{CohomTable, Partition, Weight};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn weight(s: &str) -> Weight {
    s.parse().unwrap()
}

fn sharpness() -> Outcome {
    let p = stromme(&QuotSetup::trivial(2, 1, 2, 5).unwrap()).map_err(|e| e.to_string())?;
    let ins = InsertionSpec { b1: vec![weight("1,1,1,1,1,1,0")], ..Default::default() };
    let opts = ScanOptions { jobs: 4, t_range: Some((0, 48)), diagnostics: false };
    let page = e1_page(&p, &ins, &opts).map_err(|e| e.to_string())?;
    check(page.nonzero() == vec![(0, 0, big(210)), (24, 23, big(28))], format!("entries {:?}", page.nonzero()))?;
    let r = assemble(&page);
    check(r.exact && r.table == Some(CohomTable::single(0, big(182))), "table is not {0: 182}")?;
    Ok("E1 entries (0,0)=210, (24,23)=28; table {0: 182}".into())
}

fn sym2() -> Outcome {
    let p = stromme(&QuotSetup::trivial(3, 1, 3, 3).unwrap()).map_err(|e| e.to_string())?;
    let ins = InsertionSpec { b1: vec![weight("0,0,0,0,0,-2")], ..Default::default() };
    let page = e1_page(&p, &ins, &ScanOptions::default()).map_err(|e| e.to_string())?;
    check(page.nonzero() == vec![(11, 13, big(72)), (12, 13, big(63))], format!("entries {:?}", page.nonzero()))?;
    for (t, mu, mult) in [(12, "8,2,2", 7u64), (11, "7,2,2", 6)] {
        let entry = page.entries.iter().find(|e| e.t == t).unwrap();
        let ok = !entry.terms.is_empty()
            && entry.terms.iter().all(|c| c.mu == part(mu) && c.mult == big(mult));
        check(ok, format!("terms at t={t} are not μ=({mu}) with multiplicity {mult}"))?;
    }
    let r = assemble(&page);
    check(!r.exact && !r.degenerate, "report should be inexact and non-degenerate")?;
    check(
        r.relations.iter().any(|rel| rel.text == "H^2 - H^1 = 9"),
        format!("relations {:?}", r.relations.iter().map(|x| &x.text).collect::<Vec<_>>()),
    )?;
    Ok("E1 entries (11,13)=72, (12,13)=63; H^2 - H^1 = 9".into())
}

fn koszul_anchor() -> Outcome {
    let p = stromme(&QuotSetup::trivial(2, 1, 2, 5).unwrap()).map_err(|e| e.to_string())?;
    let (mu, sigma) = (part("10,10,4"), part("6,6,2,2,2,2,2,2"));
    let terms = koszul_terms(&p, 24).map_err(|e| e.to_string())?;
    let t = terms.iter().find(|k| k.mu == mu && k.sigma == sigma).ok_or("term missing")?;
    check(t.mult == big(28), format!("multiplicity {}", t.mult))?;
    let (a, b) = (part("3,3"), part("3,3,2,2,2,2,2,2"));
    let prod = lr(&a, &b, &mu.conjugate()) * lr(&a, &b, &sigma);
    check(prod == big(1), format!("product {prod}"))?;
    Ok("multiplicity 28, product 1".into())
}

fn koszul_conservation() -> Outcome {
    let cases = [((2, 1, 1, 1), None), ((2, 1, 2, 5), Some(3))];
    let mut checked = 0;
    for ((n, r, d, m), cap) in cases {
        let p = stromme(&QuotSetup::trivial(n, r, d, m).unwrap()).map_err(|e| e.to_string())?;
        for t in 0..=cap.unwrap_or(p.rank_k) {
            let total: BigUint = koszul_terms(&p, t)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|k| &k.mult * schur_dim(&k.mu, p.k1) * schur_dim(&k.sigma, p.r2))
                .sum();
            check(total == binomial(p.rank_k, t), format!("t={t} on ({n},{r},{d},{m})"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} exterior powers"))
}

fn thm41_closed_form() -> Outcome {
    for m in 2..=4 {
        let s = QuotSetup::trivial(2, 1, 1, m).unwrap();
        let p = stromme(&s).map_err(|e| e.to_string())?;
        let one = |len| part("1").to_weight(len).unwrap();
        let r = verify_thm41(&s, &one(p.r1), &one(p.r2), 0).map_err(|e| e.to_string())?;
        let want = CohomTable::single(0, big((p.n1 * p.n2) as u64));
        check(r.report.table == Some(want), format!("m={m}: {:?}", r.report.table))?;
    }
    Ok("m = 2, 3, 4".into())
}

/// Instances of the vanishing statement on `(3,1,1,m)`: `(η, ρ, λ, δ, report table)`.
fn vanishing_instances(m: usize) -> Vec<(Weight, Weight, Partition, Partition, Option<CohomTable>)> {
    let s = QuotSetup::trivial(3, 1, 1, m).unwrap();
    let p = stromme(&s).unwrap();
    let small: Vec<Partition> = (0..=5).flat_map(partitions_of).collect();
    let mut pairs = Vec::new();
    for a in 1..=5 {
        let c = Partition::new(vec![1; a]).unwrap();
        pairs.push((c.clone(), Partition::empty()));
        pairs.push((Partition::empty(), c));
    }
    let mut out = Vec::new();
    for (delta, nu) in &pairs {
        for gamma in &small {
            for lambda in &small {
                let lhs = 2 * (lambda.size() + gamma.size()) + nu.size() + delta.size();
                if lhs >= s.size_budget() || gamma.len() + delta.len() > p.r1 || lambda.len() + nu.len() > p.r2 {
                    continue;
                }
                let eta = Weight::from_signs(gamma, delta, p.r1).unwrap();
                let rho = Weight::from_signs(lambda, nu, p.r2).unwrap();
                let r = verify_thm41(&s, &eta, &rho, 0).unwrap();
                assert!(r.hypotheses && r.report.exact);
                out.push((eta, rho, lambda.clone(), delta.clone(), r.report.table));
            }
        }
    }
    out
}

fn thm41_vanishing() -> Outcome {
    let all = vanishing_instances(1);
    let bad: Vec<String> = all
        .iter()
        .filter(|x| !x.4.as_ref().unwrap().is_zero())
        .map(|(eta, rho, .., t)| format!("η=({eta}) ρ=({rho}) gives {t:?}"))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} instances vanish", all.len()))
    } else {
        Err(format!("{} of {} instances do not vanish: {}", bad.len(), all.len(), bad.join("; ")))
    }
}

fn bwb_oracle() -> Outcome {
    let gr = GrSpec::new(1, 2).unwrap();
    for e in -8i64..=8 {
        let t = coh_bundle(gr, &[], &[Weight::new(vec![e]).unwrap()]).map_err(|e| e.to_string())?;
        let (h0, h1) = line_coh(e);
        let mut want = CohomTable::new();
        want.add(0, &big(h0 as u64));
        want.add(1, &big(h1 as u64));
        check(t == want, format!("O({e})"))?;
    }
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8);
        let k = rng.gen_range(0..=n);
        let chi = random_boxed(&mut rng, n - k, 8);
        let chi_w = chi.to_weight(n - k).unwrap();
        let gr = GrSpec::new(k, n).unwrap();
        let core = bwb_dual_weights(gr, &Weight::zero(k), &chi_w).map_err(|e| e.to_string())?.degree();
        let lemma = index_nonvanish(&chi_w, k).map(|(_, deg)| deg);
        check(core == lemma, format!("χ={chi} on Gr({k},{n}): {core:?} vs {lemma:?}"))?;
    }
    Ok("17 line bundles, 1000 index instances".into())
}

fn lr_check(a: &Partition, b: &Partition, g: &Partition) -> Result<(), String> {
    let c = lr(a, b, g);
    check(lr(b, a, g) == c, format!("symmetry at ({a},{b},{g})"))?;
    check(lr(&a.conjugate(), &b.conjugate(), &g.conjugate()) == c, format!("conjugation at ({a},{b},{g})"))?;
    check(c.is_zero() || horn_predicates(a, b, g).all(), format!("Horn at ({a},{b},{g})"))
}

fn dim_check(a: &Partition, b: &Partition) -> Result<(), String> {
    let ex = lr_expand(a, b);
    for n in 1..=4 {
        let total: BigUint = ex.iter().map(|(g, c)| schur_dim(g, n) * c).sum();
        check(total == schur_dim(a, n) * schur_dim(b, n), format!("dimension at ({a},{b}) n={n}"))?;
    }
    Ok(())
}

fn lr_suite() -> Outcome {
    let mut triples = 0;
    for size in 0..=8 {
        for g in partitions_of(size) {
            for a in subpartitions(&g) {
                for b in partitions_of(size - a.size()) {
                    lr_check(&a, &b, &g)?;
                    triples += 1;
                }
            }
        }
        for sa in 0..=size {
            for a in partitions_of(sa) {
                for b in partitions_of(size - sa) {
                    dim_check(&a, &b)?;
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..500 {
        let (sa, sb) = (rng.gen_range(4..=8), rng.gen_range(4..=8));
        let a = random_partition(&mut rng, sa);
        let b = random_partition(&mut rng, sb);
        let ex = lr_expand(&a, &b);
        let g = if rng.gen_bool(0.5) && !ex.is_empty() {
            ex.keys().nth(rng.gen_range(0..ex.len())).unwrap().clone()
        } else {
            random_partition(&mut rng, a.size() + b.size())
        };
        lr_check(&a, &b, &g)?;
        dim_check(&a, &b)?;
    }
    Ok(format!("{triples} exhaustive triples, 500 random"))
}

fn rationality() -> Outcome {
    let setups = [(2, 1, 1, 1), (2, 1, 1, 2), (2, 1, 2, 2), (3, 1, 1, 1), (3, 2, 1, 1)];
    for (n, r, d, m) in setups {
        let p = stromme(&QuotSetup::trivial(n, r, d, m).unwrap()).map_err(|e| e.to_string())?;
        let chi = euler(&p, &InsertionSpec::default()).map_err(|e| e.to_string())?;
        check(chi == BigInt::from(1), format!("χ = {chi} on ({n},{r},{d},{m})"))?;
    }
    Ok("five setups".into())
}

fn hyper_agreement() -> Outcome {
    let mut rng = StdRng::seed_from_u64(10);
    let mut done = 0;
    let mut raised = 0;
    while done < 50 {
        let n = rng.gen_range(2..=3);
        let r = rng.gen_range(1..n);
        let d = rng.gen_range(0..=2);
        let s = QuotSetup::minimal(n, r, d).unwrap();
        let count = rng.gen_range(1..=2);
        let total = rng.gen_range(1..=3);
        let mut inserts = Vec::new();
        let mut left = total;
        for i in 0..count {
            let size = if i + 1 == count { left } else { rng.gen_range(0..=left) };
            left -= size;
            if size > 0 {
                inserts.push((rng.gen_range(-3..=3), random_partition(&mut rng, size)));
            }
        }
        let cf = closed_form_multi(&s, &inserts);
        if !cf.hypothesis {
            continue;
        }
        let hyper: Vec<HyperInsert> = inserts.iter().map(|(e, l)| HyperInsert::quotient(*e, l.clone())).collect();
        let sweep = hyper_sweep(&s, &hyper, s.m + 2, 0).map_err(|e| e.to_string())?;
        let last = sweep.last().unwrap();
        raised += sweep.len() - 1;
        check(
            last.report.exact && last.report.table.as_ref() == Some(&cf.table),
            format!("({n},{r},{d}) inserts {inserts:?}: {:?} vs {:?}", last.report.table, cf.table),
        )?;
        done += 1;
    }
    Ok(format!("50 instances, twist raised {raised} times"))
}

fn ext_anchor() -> Outcome {
    let s = QuotSetup::trivial(3, 1, 1, 2).unwrap();
    let r = ext_table(&s, &part("1"), &part("1"), 0).map_err(|e| e.to_string())?;
    check(r.agree && r.report.table == Some(CohomTable::single(0, big(1))), "Ext((1),(1)) is not {0: 1}")?;
    let r = ext_table(&s, &part("1"), &Partition::empty(), 0).map_err(|e| e.to_string())?;
    check(r.report.exact && r.report.is_zero(), "Ext((1),∅) does not vanish")?;
    Ok("Ext((1),(1)) = {0: 1}; Ext((1),∅) = 0".into())
}

fn concentration() -> Outcome {
    let cases: Vec<(QuotSetup, Vec<HyperInsert>)> = vec![
        (QuotSetup::trivial(2, 1, 1, 1).unwrap(), vec![HyperInsert::quotient(1, part("1"))]),
        (QuotSetup::trivial(2, 1, 1, 1).unwrap(), vec![HyperInsert::quotient(2, part("2"))]),
        (QuotSetup::trivial(3, 1, 1, 1).unwrap(), vec![HyperInsert::quotient(1, part("1,1"))]),
        (QuotSetup::new(2, 1, 1, vec![0, 1], 2).unwrap(), vec![HyperInsert::quotient(2, part("1"))]),
        (
            QuotSetup::trivial(3, 2, 1, 1).unwrap(),
            vec![HyperInsert::quotient(1, part("1")), HyperInsert::quotient(2, part("1"))],
        ),
    ];
    for (s, ins) in &cases {
        let r = hyper_cohomology(s, ins, 0).map_err(|e| e.to_string())?;
        let t = r.report.table.as_ref().ok_or_else(|| format!("inexact on {s:?}"))?;
        check(t.degrees().iter().all(|&d| d == 0) && !t.is_zero(), format!("{t:?} on {s:?}"))?;
    }
    Ok("five instances in degree 0".into())
}

fn point_vanishing() -> Outcome {
    let s = QuotSetup::minimal(2, 1, 1).unwrap();
    for l in ["1", "2"] {
        let r = hyper_cohomology(&s, &[HyperInsert::point_sub(part(l))], 0).map_err(|e| e.to_string())?;
        check(r.report.exact && r.report.is_zero(), format!("λ=({l}) not zero"))?;
    }
    Ok("λ = (1), (2) vanish".into())
}

fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("sharpness example", sharpness),
        ("symmetric square example", sym2),
        ("Koszul multiplicity anchor", koszul_anchor),
        ("Koszul binomial conservation", koszul_conservation),
        ("closed form for γ = λ = (1)", thm41_closed_form),
        ("vanishing for δ₁ + ν₁ = 1", thm41_vanishing),
        ("BWB oracle equivalence", bwb_oracle),
        ("LR property suite", lr_suite),
        ("χ(O) = 1", rationality),
        ("hypercohomology vs closed form", hyper_agreement),
        ("Ext anchor", ext_anchor),
        ("concentration in degree 0", concentration),
        ("point restriction vanishing", point_vanishing),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name} ({why}; {secs:.2}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.iter().all(|&c| c == UNATTAINABLE), "failed criteria: {failed:?}");
}

/// Criterion 6 cannot hold as stated: multiplication by sections of `O(1)` gives nonzero maps
/// `L_{m−1}^{[d]} → L_m^{[d]}`, so `(L_{m−1}^{[d]})^∨ ⊗ S^λ L_m^{[d]}` has sections.
/// The nonvanishing instances are exactly those with `δ = (1)` and `λ ≠ ∅`, all in degree 0.
const UNATTAINABLE: usize = 6;

fn vanishing_counterexamples_are_multiplication_maps() {
    for m in 1..=2 {
        let all = vanishing_instances(m);
        for (eta, rho, lambda, delta, table) in &all {
            let t = table.as_ref().unwrap();
            let expect_nonzero = *delta == part("1") && !lambda.is_empty();
            assert_eq!(!t.is_zero(), expect_nonzero, "η=({eta}) ρ=({rho}) at m={m}");
            if expect_nonzero {
                assert_eq!(t.degrees(), vec![0]);
            }
            if *delta == part("1") && *lambda == part("1") && eta.split_signs().0.is_empty() {
                let (h0, _) = line_coh(1);
                assert_eq!(t.get(0), big(h0 as u64), "Hom(L_{{m-1}}, L_m) at m={m}");
            }
        }
    }
}

fn main() {
    acceptance();
    vanishing_counterexamples_are_multiplication_maps();
    println!("criterion {UNATTAINABLE} counterexamples: nonzero exactly for δ = (1), λ ≠ ∅, in degree 0");
}
