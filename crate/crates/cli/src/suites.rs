//! Verification suites run by `dfunctor verify`.

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Value};

use dfunctor::combinat::{admissible_weights, bruhat_leq, is_admissible, Permutation, Weight};
use dfunctor::dfun::{drinfeld_image, glN_decomposition, verify_tensor_compat};
use dfunctor::hecke::{one_dim, simple_quotient, standard_module, verify_hecke, StandardParams};
use dfunctor::kl::{kl_oracle, kl_polynomial, kl_table};
use dfunctor::scalar::rat;
use dfunctor::yangian::{composition_factors, standard_tensor_module, verify_yangian};
use dfunctor::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Hecke,
    Yangian,
    Kl,
    Functor,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Hecke => "hecke",
            Suite::Yangian => "yangian",
            Suite::Kl => "kl",
            Suite::Functor => "functor",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
enum Case {
    Hecke { lambda: Weight, mu: Weight },
    Yangian { lambda: Weight, mu: Weight, n: usize },
    Kl { rank: usize },
    Interval { a: i64, ell: usize, n: usize },
    Standard { lambda: Weight, mu: Weight, n: usize },
    Tensor { a: (i64, i64), ell: (i64, i64), n: usize },
}

impl Case {
    fn suite(&self) -> Suite {
        match self {
            Case::Hecke { .. } => Suite::Hecke,
            Case::Yangian { .. } => Suite::Yangian,
            Case::Kl { .. } => Suite::Kl,
            _ => Suite::Functor,
        }
    }

    fn label(&self) -> String {
        match self {
            Case::Hecke { lambda, mu } => format!("K(λ={lambda}, μ={mu})"),
            Case::Yangian { lambda, mu, n } => format!("M(λ={lambda}, μ={mu}) n={n}"),
            Case::Kl { rank } => format!("S_{rank}"),
            Case::Interval { a, ell, n } => format!("D(C[{a},{}]) n={n}", a + *ell as i64 - 1),
            Case::Standard { lambda, mu, n } => format!("D(K(λ={lambda}, μ={mu})) n={n}"),
            Case::Tensor { a, ell, n } => format!("C[{},{}] ⊗ C[{},{}] n={n}", a.0, a.0 + ell.0 - 1, a.1, a.1 + ell.1 - 1),
        }
    }

    /// `Ok(None)` on success, `Ok(Some(reason))` on a failed check.
    fn check(&self, seed: u64) -> Result<Option<String>> {
        let fail = |cond: bool, msg: String| if cond { None } else { Some(msg) };
        match self {
            Case::Hecke { lambda, mu } => {
                let k = standard_module(&StandardParams::new(lambda, mu)?)?;
                let l = simple_quotient(&k)?;
                let (rk, rl) = (verify_hecke(&k), verify_hecke(&l));
                Ok(fail(rk.ok() && rl.ok(), format!("{} + {} relation violations", rk.violations.len(), rl.violations.len())))
            }
            Case::Yangian { lambda, mu, n } => {
                let y = standard_tensor_module(lambda, mu, *n)?;
                let r = verify_yangian(&y, 3, 3);
                Ok(fail(r.ok(), format!("{} relation violations", r.violation_count)))
            }
            Case::Kl { rank } => {
                let all = Permutation::all(*rank)?;
                for x in &all {
                    for w in &all {
                        if bruhat_leq(x, w)? && kl_polynomial(x, w)? != kl_oracle(x, w)? {
                            return Ok(Some(format!("P_{{{x},{w}}} disagrees with the oracle")));
                        }
                    }
                }
                let bad = kl_table(*rank)?.invariant_violations()?;
                Ok(fail(bad.is_empty(), bad.join("; ")))
            }
            Case::Interval { a, ell, n } => {
                let y = drinfeld_image(&one_dim(&rat(*a), &rat(a + *ell as i64 - 1))?, *n)?;
                let want = if ell <= n { (0..*ell).fold(1usize, |acc, i| acc * (n - i) / (i + 1)) } else { 0 };
                Ok(fail(y.dim == want, format!("dim {} ≠ {want}", y.dim)))
            }
            Case::Standard { lambda, mu, n } => {
                let k = standard_module(&StandardParams::new(lambda, mu)?)?;
                glN_decomposition(&k, *n)?;
                let l = drinfeld_image(&simple_quotient(&k)?, *n)?;
                let series = composition_factors(&l, seed)?;
                Ok(fail(series.factors.len() == 1 && series.factors[0].multiplicity == 1, format!("D(L) has factors {:?}", series.factors)))
            }
            Case::Tensor { a, ell, n } => {
                let m1 = one_dim(&rat(a.0), &rat(a.0 + ell.0 - 1))?;
                let m2 = one_dim(&rat(a.1), &rat(a.1 + ell.1 - 1))?;
                let rep = verify_tensor_compat(&m1, &m2, *n)?;
                Ok(fail(rep.agree, format!("dims {} vs {}", rep.dim_left, rep.dim_right)))
            }
        }
    }
}

fn dominant_weights(r: usize, top: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out.into_iter().flat_map(|v: Vec<i64>| (0..=v.last().copied().unwrap_or(top)).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.iter().map(|v| Weight::from_ints(v)).collect()
}

fn standard_pairs(ranks: std::ops::RangeInclusive<usize>, top: i64, max_ell: usize) -> Vec<(Weight, Weight)> {
    let mut out = Vec::new();
    for r in ranks {
        for lambda in dominant_weights(r, top) {
            for ell in 0..=max_ell {
                out.extend(admissible_weights(&lambda, ell, None).into_iter().map(|mu| (lambda.clone(), mu)));
            }
        }
    }
    out
}

fn cases(suite: Suite) -> Vec<Case> {
    let want = |s: Suite| suite == Suite::All || suite == s;
    let mut out = Vec::new();
    if want(Suite::Hecke) {
        out.extend(standard_pairs(1..=3, 3, 3).into_iter().map(|(lambda, mu)| Case::Hecke { lambda, mu }));
    }
    if want(Suite::Yangian) {
        for n in 2..=3 {
            for (lambda, mu) in standard_pairs(2..=2, 2, 3) {
                if is_admissible(&lambda, &mu, Some(n)) {
                    out.push(Case::Yangian { lambda, mu, n });
                }
            }
        }
    }
    if want(Suite::Kl) {
        out.extend((1..=4).map(|rank| Case::Kl { rank }));
    }
    if want(Suite::Functor) {
        for n in 2..=3 {
            for ell in 0..=n + 1 {
                out.extend((-1..=1).map(|a| Case::Interval { a, ell, n }));
            }
            for (lambda, mu) in standard_pairs(2..=2, 2, 3) {
                if is_admissible(&lambda, &mu, Some(n)) {
                    out.push(Case::Standard { lambda, mu, n });
                }
            }
            for l1 in 0..=2 {
                for l2 in 0..=2 {
                    out.push(Case::Tensor { a: (0, 1), ell: (l1, l2), n });
                }
            }
        }
    }
    out
}

/// Runs every case of `suite` in parallel; the summary is sorted by suite and case label.
pub fn run_suites(suite: Suite, seed: u64) -> Value {
    let mut results: Vec<(Suite, String, Option<String>)> = cases(suite)
        .into_par_iter()
        .map(|c| {
            let outcome = match c.check(seed) {
                Ok(r) => r,
                Err(e) => Some(format!("{}: {e}", e.code())),
            };
            (c.suite(), c.label(), outcome)
        })
        .collect();
    results.sort();
    let mut summary = serde_json::Map::new();
    let mut failures = Vec::new();
    for s in [Suite::Hecke, Suite::Yangian, Suite::Kl, Suite::Functor] {
        let mine: Vec<_> = results.iter().filter(|r| r.0 == s).collect();
        if mine.is_empty() {
            continue;
        }
        let failed: Vec<Value> = mine.iter().filter_map(|r| r.2.as_ref().map(|why| json!({"case": r.1, "reason": why}))).collect();
        summary.insert(s.name().into(), json!({"cases": mine.len(), "passed": mine.len() - failed.len()}));
        failures.extend(failed);
    }
    json!({"suite": suite.name(), "suites": summary, "failures": failures, "ok": failures.is_empty()})
}
