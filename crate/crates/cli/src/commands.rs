use anyhow::{bail, Context, Result};
use num_bigint::BigUint;
use quotbwb_core::bwb::{bwb_dual_weights, coh_bundle, index_nonvanish, BwbOutcome, GrSpec};
use quotbwb_core::complex::{hyper_sweep, HyperInsert, HyperObject, HyperReport};
use quotbwb_core::quot::{
    assemble, closed_form_multi, e1_page, euler, ext_table, koszul_terms, stromme, verify_prop47, verify_thm41,
    InsertionSpec, QuotReport, QuotSetup, ScanOptions, Verdict,
};
use quotbwb_core::schur::{lr, lr_expand, weight_dim};
use quotbwb_core::{CohomTable, Partition, Weight};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Command, Example, InsertionArgs, SetupArgs, Verify};

/// What a subcommand produced.
pub struct Outcome {
    pub config: Value,
    pub result: Value,
    pub text: String,
    pub notes: Vec<String>,
    /// False when a checked statement does not hold on the instance.
    pub holds: bool,
    /// The result is a single value, printed bare in `auto` format.
    pub scalar: bool,
}

impl Outcome {
    fn new(config: Value, result: impl Serialize, text: String) -> Result<Self> {
        Ok(Outcome { config, result: serde_json::to_value(result)?, text, notes: Vec::new(), holds: true, scalar: false })
    }

    fn scalar(mut self) -> Self {
        self.scalar = true;
        self
    }

    fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    fn verdict(mut self, v: Verdict) -> Self {
        self.holds = v == Verdict::Holds;
        self.notes.push(format!("verdict: {}", verdict_name(v)));
        self
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Inconclusive => "inconclusive",
    }
}

pub fn setup_of(a: &SetupArgs) -> Result<QuotSetup> {
    let list: Vec<usize> = a
        .b
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| anyhow::anyhow!("malformed splitting `{}`", a.b)))
        .collect::<Result<_>>()?;
    let splitting = if list == [0] { vec![0; a.n] } else { list };
    let b: usize = splitting.iter().sum();
    Ok(QuotSetup::new(a.n, a.r, a.d, splitting, a.m.unwrap_or(b + a.d))?)
}

fn setup_json(s: &QuotSetup) -> Value {
    json!({ "n": s.n, "r": s.r, "d": s.d, "splitting": s.splitting, "m": s.m })
}

fn insertion_of(a: &InsertionArgs) -> InsertionSpec {
    InsertionSpec { a1: a.a1.clone(), b1: a.b1.clone(), a2: a.a2.clone(), b2: a.b2.clone() }
}

fn insertion_json(a: &InsertionArgs) -> Value {
    let w = |v: &[Weight]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    json!({ "a1": w(&a.a1), "b1": w(&a.b1), "a2": w(&a.a2), "b2": w(&a.b2) })
}

fn expansion_json<'a>(it: impl Iterator<Item = (&'a Partition, &'a BigUint)>) -> Value {
    Value::Object(it.map(|(p, c)| (p.to_string(), Value::String(c.to_string()))).collect())
}

pub fn table_text(t: &CohomTable) -> String {
    if t.is_zero() {
        return "all cohomology vanishes".into();
    }
    t.iter().map(|(d, v)| format!("H^{d} = {v}")).collect::<Vec<_>>().join("\n")
}

pub fn report_text(r: &QuotReport) -> String {
    let mut lines = Vec::new();
    match &r.table {
        Some(t) if r.exact => lines.push(table_text(t)),
        _ => {
            for (d, b) in &r.bounds {
                if b.is_exact() {
                    lines.push(format!("H^{d} = {}", b.lower));
                } else {
                    lines.push(format!("{} <= H^{d} <= {}", b.lower, b.upper));
                }
            }
            lines.extend(r.relations.iter().map(|x| x.text.clone()));
        }
    }
    lines.push(format!("euler characteristic {}", r.euler));
    lines.extend(r.notes.iter().cloned());
    lines.join("\n")
}

fn inserts_json(inserts: &[(i64, Partition)]) -> Value {
    inserts.iter().map(|(e, l)| json!({ "e": e, "lambda": l.to_string() })).collect()
}

fn hyper_inserts(inserts: &[(i64, Partition)]) -> Vec<HyperInsert> {
    inserts.iter().map(|(e, l)| HyperInsert::quotient(*e, l.clone())).collect()
}

fn sweep(setup: &QuotSetup, inserts: &[HyperInsert], m_max: Option<usize>, jobs: usize) -> Result<HyperReport> {
    let runs = hyper_sweep(setup, inserts, m_max.unwrap_or(setup.m), jobs)?;
    Ok(runs.into_iter().last().expect("at least one twist"))
}

fn hyper_text(h: &HyperReport) -> String {
    format!("m = {}\n{}", h.setup.m, report_text(&h.report))
}

pub fn run(cmd: &Command, jobs: usize) -> Result<Outcome> {
    match cmd {
        Command::Lr { alpha, beta, gamma } => {
            let config = json!({ "command": "lr", "alpha": alpha, "beta": beta, "gamma": gamma });
            match gamma {
                Some(g) => {
                    let c = lr(alpha, beta, g);
                    Ok(Outcome::new(config, c.to_string(), c.to_string())?.scalar())
                }
                None => {
                    let ex = lr_expand(alpha, beta);
                    let text = ex.iter().map(|(g, c)| format!("{c} x ({g})")).collect::<Vec<_>>().join("\n");
                    Ok(Outcome::new(config, expansion_json(ex.iter()), text)?)
                }
            }
        }
        Command::Dim { lambda, n } => {
            if lambda.len() > *n {
                bail!("λ has {} entries but n = {n}", lambda.len());
            }
            let full = lambda.pad(*n).context("a weight with negative entries needs n entries")?;
            let d = weight_dim(&full, *n);
            let config = json!({ "command": "dim", "lambda": lambda, "n": n });
            Ok(Outcome::new(config, d.to_string(), d.to_string())?.scalar())
        }
        Command::Index { chi, k } => {
            let config = json!({ "command": "index", "chi": chi, "k": k });
            let r = index_nonvanish(chi, *k);
            let text = match r {
                Some((j, deg)) => format!("index {j}, cohomology in degree {deg}"),
                None => "no index: all cohomology vanishes".into(),
            };
            let result = r.map(|(j, deg)| json!({ "index": j, "degree": deg }));
            Ok(Outcome::new(config, result, text)?.scalar())
        }
        Command::Bwb { k, big_n, rho, chi, sub, quot } => {
            let gr = GrSpec::new(*k, *big_n)?;
            match (rho, chi) {
                (Some(rho), Some(chi)) => {
                    let config = json!({ "command": "bwb", "k": k, "N": big_n, "rho": rho, "chi": chi });
                    let out = bwb_dual_weights(gr, rho, chi)?;
                    let text = match &out {
                        BwbOutcome::Vanishes => "all cohomology vanishes".into(),
                        BwbOutcome::Nonzero { degree, weight, dim, .. } => {
                            format!("H^{degree} = S^({weight}) C^{big_n}, dimension {dim}")
                        }
                    };
                    Ok(Outcome::new(config, out, text)?)
                }
                (None, None) => {
                    let config = json!({ "command": "bwb", "k": k, "N": big_n, "sub": sub, "quot": quot });
                    let t = coh_bundle(gr, sub, quot)?;
                    Ok(Outcome::new(config, &t, table_text(&t))?)
                }
                _ => bail!("--rho and --chi must be given together"),
            }
        }
        Command::Stromme { setup } => {
            let s = setup_of(setup)?;
            let p = stromme(&s)?;
            let text = format!("({},{},{}),({},{},{})", p.n1, p.k1, p.r1, p.n2, p.k2, p.r2);
            let config = json!({ "command": "stromme", "setup": setup_json(&s) });
            Ok(Outcome::new(config, p, text)?.scalar())
        }
        Command::Koszul { setup, t } => {
            let s = setup_of(setup)?;
            let p = stromme(&s)?;
            let terms = koszul_terms(&p, *t)?;
            let text = terms
                .iter()
                .map(|k| format!("{} x S^({})A1 S^({})B2*", k.mult, k.mu, k.sigma))
                .collect::<Vec<_>>()
                .join("\n");
            let config = json!({ "command": "koszul", "setup": setup_json(&s), "t": t });
            Ok(Outcome::new(config, terms, text)?)
        }
        Command::Scan { setup, insertion, t_range, diagnostics } => {
            let s = setup_of(setup)?;
            let p = stromme(&s)?;
            let ins = insertion_of(insertion);
            let opts = ScanOptions { jobs, t_range: *t_range, diagnostics: *diagnostics };
            let page = e1_page(&p, &ins, &opts)?;
            let mut lines: Vec<String> = page.entries.iter().map(|e| format!("E1[{},{}] = {}", e.t, e.q, e.dim)).collect();
            let report = assemble(&page);
            let full = t_range.is_none() || *t_range == Some((0, p.rank_k));
            let config = json!({
                "command": "scan", "setup": setup_json(&s), "insertion": insertion_json(insertion),
                "t_range": t_range, "diagnostics": diagnostics,
            });
            if full {
                lines.push(report_text(&report));
                Ok(Outcome::new(config, json!({ "page": page, "report": report }), lines.join("\n"))?)
            } else {
                let out = Outcome::new(config, json!({ "page": page }), lines.join("\n"))?;
                Ok(out.note("partial scan: no assembled report"))
            }
        }
        Command::Euler { setup, insertion } => {
            let s = setup_of(setup)?;
            let p = stromme(&s)?;
            let chi = euler(&p, &insertion_of(insertion))?;
            let config = json!({ "command": "euler", "setup": setup_json(&s), "insertion": insertion_json(insertion) });
            Ok(Outcome::new(config, chi.to_string(), chi.to_string())?.scalar())
        }
        Command::Ext { setup, nu, lambda } => {
            let s = setup_of(setup)?;
            let r = ext_table(&s, nu, lambda, jobs)?;
            let config = json!({ "command": "ext", "setup": setup_json(&s), "nu": nu, "lambda": lambda });
            let text = format!("grassmannian:\n{}\nscan:\n{}", table_text(&r.grassmannian), report_text(&r.report));
            let mut out = Outcome::new(config, &r, text)?;
            if !r.hypotheses() {
                out = out.note("hypotheses fail on this instance");
            }
            Ok(out)
        }
        Command::ClosedForm { setup, inserts } => {
            let s = setup_of(setup)?;
            let cf = closed_form_multi(&s, inserts);
            let config = json!({ "command": "closed-form", "setup": setup_json(&s), "inserts": inserts_json(inserts) });
            let mut out = Outcome::new(config, &cf, table_text(&cf.table))?;
            if !cf.hypothesis {
                out = out.note("size hypothesis fails on this instance");
            }
            Ok(out)
        }
        Command::Hyper { setup, inserts, m_max } => {
            let s = setup_of(setup)?;
            let h = sweep(&s, inserts, *m_max, jobs)?;
            let config = json!({ "command": "hyper", "setup": setup_json(&s), "inserts": inserts, "m_max": m_max });
            Ok(Outcome::new(config, &h, hyper_text(&h))?)
        }
        Command::Verify { which } => verify(which, jobs),
        Command::Examples { which } => example(*which, jobs),
        Command::Bracket { setup, e, side, convention } => {
            let s = setup_of(setup)?;
            let c = quotbwb_core::complex::m_bracket_rep_with(&s, *e, side.into(), convention.into())?;
            let config = json!({ "command": "bracket", "setup": setup_json(&s), "e": e });
            let text = format!("left {:?}, right {:?}, {:?}", c.left_mults, c.right_mults, c.window);
            Ok(Outcome::new(config, c, text)?)
        }
    }
}

fn verify(which: &Verify, jobs: usize) -> Result<Outcome> {
    match which {
        Verify::Thm41 { setup, eta, rho } => {
            let s = setup_of(setup)?;
            let r = verify_thm41(&s, eta, rho, jobs)?;
            let config = json!({ "command": "verify thm41", "setup": setup_json(&s), "eta": eta, "rho": rho });
            let mut out = Outcome::new(config, &r, report_text(&r.report))?.verdict(r.verdict);
            if !r.hypotheses {
                out = out.note("hypotheses fail on this instance");
            }
            Ok(out)
        }
        Verify::Prop47 { setup, eta, rho } => {
            let s = setup_of(setup)?;
            let r = verify_prop47(&s, eta, rho, jobs)?;
            let config = json!({ "command": "verify prop47", "setup": setup_json(&s), "eta": eta, "rho": rho });
            let text = format!("degree bound {}\n{}", r.bound, report_text(&r.report));
            Ok(Outcome::new(config, &r, text)?.verdict(r.verdict))
        }
        Verify::Ext { setup, nu, lambda } => {
            let s = setup_of(setup)?;
            let r = ext_table(&s, nu, lambda, jobs)?;
            let config = json!({ "command": "verify ext", "setup": setup_json(&s), "nu": nu, "lambda": lambda });
            let v = if r.agree { Verdict::Holds } else if r.report.exact { Verdict::Fails } else { Verdict::Inconclusive };
            let text = format!("grassmannian:\n{}\nscan:\n{}", table_text(&r.grassmannian), report_text(&r.report));
            let mut out = Outcome::new(config, &r, text)?.verdict(v);
            if !r.hypotheses() {
                out = out.note("hypotheses fail on this instance");
            }
            Ok(out)
        }
        Verify::Cor14 { setup, inserts, m_max } => {
            let s = setup_of(setup)?;
            let cf = closed_form_multi(&s, inserts);
            let h = sweep(&s, &hyper_inserts(inserts), *m_max, jobs)?;
            let v = match &h.report.table {
                Some(t) if h.report.exact && *t == cf.table => Verdict::Holds,
                Some(_) if h.report.exact => Verdict::Fails,
                _ => Verdict::Inconclusive,
            };
            let config = json!({ "command": "verify cor14", "setup": setup_json(&s), "inserts": inserts_json(inserts) });
            let text = format!("closed form:\n{}\ncomputed at {}", table_text(&cf.table), hyper_text(&h));
            let mut out = Outcome::new(config, json!({ "closed_form": cf, "hyper": h }), text)?.verdict(v);
            if !cf.hypothesis {
                out = out.note("size hypothesis fails on this instance");
            }
            Ok(out)
        }
        Verify::Thm57 { setup, inserts, m_max } => {
            let s = setup_of(setup)?;
            let floor = (s.d + s.b()) as i64;
            if let Some((e, _)) = inserts.iter().find(|(e, _)| *e < floor) {
                bail!("degree {e} is below d + b = {floor}");
            }
            let h = sweep(&s, &hyper_inserts(inserts), *m_max, jobs)?;
            let v = match &h.report.table {
                Some(t) if h.report.exact && t.degrees().iter().all(|&d| d == 0) => Verdict::Holds,
                _ if h.report.bounds.iter().any(|(d, b)| *d != 0 && b.lower > BigUint::default()) => Verdict::Fails,
                Some(_) => Verdict::Fails,
                None => Verdict::Inconclusive,
            };
            let config = json!({ "command": "verify thm57", "setup": setup_json(&s), "inserts": inserts_json(inserts) });
            Ok(Outcome::new(config, &h, hyper_text(&h))?.verdict(v))
        }
        Verify::Sx { setup, lambda, m_max } => {
            let s = setup_of(setup)?;
            let h = sweep(&s, &[HyperInsert { object: HyperObject::PointSub, lambda: lambda.clone() }], *m_max, jobs)?;
            let hypothesis = !lambda.is_empty() && (s.n - s.r) * lambda.size() < s.size_budget();
            let v = if h.report.exact && h.report.is_zero() {
                Verdict::Holds
            } else if !hypothesis || !h.report.exact {
                Verdict::Inconclusive
            } else {
                Verdict::Fails
            };
            let config = json!({ "command": "verify sx", "setup": setup_json(&s), "lambda": lambda });
            let mut out = Outcome::new(config, &h, hyper_text(&h))?.verdict(v);
            if !hypothesis {
                out = out.note("size hypothesis fails on this instance");
            }
            Ok(out)
        }
    }
}

struct Fixture {
    setup: QuotSetup,
    b1: Weight,
    entries: Vec<(usize, i64, u64)>,
}

fn example(which: Example, jobs: usize) -> Result<Outcome> {
    let f = match which {
        Example::Sharp => Fixture {
            setup: QuotSetup::trivial(2, 1, 2, 5)?,
            b1: "1,1,1,1,1,1,0".parse()?,
            entries: vec![(0, 0, 210), (24, 23, 28)],
        },
        Example::Sym2 => Fixture {
            setup: QuotSetup::trivial(3, 1, 3, 3)?,
            b1: "0,0,0,0,0,-2".parse()?,
            entries: vec![(11, 13, 72), (12, 13, 63)],
        },
    };
    let p = stromme(&f.setup)?;
    let ins = InsertionSpec { b1: vec![f.b1.clone()], ..Default::default() };
    let page = e1_page(&p, &ins, &ScanOptions { jobs, t_range: None, diagnostics: true })?;
    let report = assemble(&page);
    let got: Vec<(usize, i64, u64)> = page
        .entries
        .iter()
        .map(|e| (e.t, e.q, e.dim.to_u64_digits().first().copied().unwrap_or(0)))
        .collect();
    let mut holds = got == f.entries;
    holds &= match which {
        Example::Sharp => report.table == Some(CohomTable::single(0, BigUint::from(182u32))),
        Example::Sym2 => !report.degenerate && report.relations.iter().any(|r| r.text == "H^2 - H^1 = 9"),
    };
    let name = match which {
        Example::Sharp => "sharp",
        Example::Sym2 => "sym2",
    };
    let config = json!({ "command": "examples", "example": name, "setup": setup_json(&f.setup), "b1": f.b1 });
    let mut lines: Vec<String> = page.entries.iter().map(|e| format!("E1[{},{}] = {}", e.t, e.q, e.dim)).collect();
    lines.push(report_text(&report));
    let mut out = Outcome::new(
        config,
        json!({ "entries": page.entries, "report": report, "table": report.table, "matches": holds }),
        lines.join("\n"),
    )?;
    out.holds = holds;
    out.notes.push(if holds { "matches the reference values" } else { "differs from the reference values" }.into());
    Ok(out)
}
