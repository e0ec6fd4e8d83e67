use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use dfunctor::combinat::{admissible_weights, bruhat_leq, is_admissible, segment_lengths, wset_n, Permutation, Weight};
use dfunctor::dfun::{drinfeld_image, product_dimension, verify_tensor_compat};
use dfunctor::hecke::{one_dim, simple_quotient, standard_module, StandardParams};
use dfunctor::kl::{kl_oracle, kl_polynomial, kl_table, multiplicity_table, yangian_character};
use dfunctor::poly::Poly;
use dfunctor::scalar::rat;
use dfunctor::yangian::{
    composition_factors, drinfeld_closed_form, drinfeld_polys, gln_character, highest_weight_data, qdet_scalar, standard_tensor_module,
    verify_yangian, GlnCharacter, HighestWeightData, YangianModule,
};
use dfunctor::{RatFun, UniPoly};

const SEED: u64 = 7;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn ok<T>(r: dfunctor::Result<T>, what: impl Fn() -> String) -> Result<T, String> {
    r.map_err(|e| format!("{}: {e}", what()))
}

/// `1 + 1/(u - c)`.
fn pole(c: i64) -> RatFun {
    RatFun::new(Poly::new(vec![rat(1 - c), rat(1)]), Poly::new(vec![rat(-c), rat(1)]))
}

fn product(fs: impl IntoIterator<Item = RatFun>) -> RatFun {
    fs.into_iter().fold(RatFun::one(), |a, b| &a * &b)
}

fn zeta_key(hw: &[HighestWeightData]) -> Vec<(Vec<String>, usize)> {
    let mut v: Vec<_> = hw.iter().map(|h| (h.zeta.iter().map(|z| z.to_string()).collect(), h.multiplicity)).collect();
    v.sort();
    v
}

fn from_roots(roots: &[i64]) -> UniPoly {
    roots.iter().fold(UniPoly::one(), |acc, &a| &acc * &Poly::new(vec![rat(-a), rat(1)]))
}

/// Dominant integral weights of rank `r` with entries in `[0, top]`.
fn dominant_weights(r: usize, top: i64) -> Vec<Weight> {
    fn go(r: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == r {
            out.push(Weight::from_ints(cur));
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            go(r, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, top, &mut Vec::new(), &mut out);
    out
}

struct StandardCase {
    n: usize,
    lambda: Weight,
    mu: Weight,
    image: YangianModule,
    explicit: YangianModule,
    simple_image: Option<YangianModule>,
}

#[derive(Default)]
struct Corpus {
    intervals: Vec<YangianModule>,
    standards: Vec<StandardCase>,
}

fn interval_suite(corpus: &mut Corpus) -> Outcome {
    let mut count = 0;
    for n in 2..=4usize {
        for ell in 0..=n + 2 {
            for a in -2..=2i64 {
                let c = ok(one_dim(&rat(a), &rat(a + ell as i64 - 1)), || format!("C[{a},{}]", a + ell as i64 - 1))?;
                let y = ok(drinfeld_image(&c, n), || format!("D(C) n={n} ℓ={ell} a={a}"))?;
                let expected_dim = if ell <= n { (0..ell).fold(1usize, |acc, i| acc * (n - i) / (i + 1)) } else { 0 };
                ensure!(y.dim == expected_dim, "n={n} ℓ={ell} a={a}: dim {} ≠ {expected_dim}", y.dim);
                if ell <= n {
                    let hw = ok(highest_weight_data(&y), || "highest weights".into())?;
                    ensure!(hw.len() == 1 && hw[0].multiplicity == 1, "n={n} ℓ={ell} a={a}: {} highest weights", hw.len());
                    for (i, z) in hw[0].zeta.iter().enumerate() {
                        let i = i as i64 + 1;
                        let want = if i as usize <= ell { pole(i + a) } else { RatFun::one() };
                        ensure!(*z == want, "n={n} ℓ={ell} a={a}: ζ_{i} = {z}, expected {want}");
                    }
                }
                corpus.intervals.push(y);
                count += 1;
            }
        }
    }
    Ok(format!("{count} interval modules"))
}

fn standard_suite(corpus: &mut Corpus) -> Outcome {
    let (mut admissible, mut zero) = (0, 0);
    for n in 2..=3usize {
        for r in 2..=3usize {
            for lambda in dominant_weights(r, 4) {
                for ell in 0..=4 {
                    for mu in admissible_weights(&lambda, ell, None) {
                        let tag = || format!("n={n} λ={lambda} μ={mu}");
                        let params = ok(StandardParams::new(&lambda, &mu), tag)?;
                        let k = ok(standard_module(&params), tag)?;
                        let image = ok(drinfeld_image(&k, n), tag)?;
                        if !is_admissible(&lambda, &mu, Some(n)) {
                            ensure!(image.dim == 0, "{}: inadmissible μ gives dim {}", tag(), image.dim);
                            zero += 1;
                            continue;
                        }
                        let explicit = ok(standard_tensor_module(&lambda, &mu, n), tag)?;
                        let lengths = segment_lengths(&lambda, &mu).expect("admissible");
                        ensure!(image.dim == explicit.dim, "{}: dim {} vs {}", tag(), image.dim, explicit.dim);
                        ensure!(image.dim == product_dimension(&lengths, n), "{}: dim {} ≠ Π binom", tag(), image.dim);
                        let (ci, ce) = (ok(gln_character(&image), tag)?, ok(gln_character(&explicit), tag)?);
                        ensure!(ci == ce, "{}: characters {:?} vs {:?}", tag(), ci.schur_mult, ce.schur_mult);
                        let (hi, he) = (ok(highest_weight_data(&image), tag)?, ok(highest_weight_data(&explicit), tag)?);
                        ensure!(zeta_key(&hi) == zeta_key(&he), "{}: ζ-series differ", tag());
                        let want: Vec<RatFun> = (1..=n as i64)
                            .map(|i| {
                                product(lengths.iter().zip(mu.to_ints().expect("integral")).filter(|(l, _)| **l as i64 >= i).map(|(_, m)| pole(i + m)))
                            })
                            .collect();
                        let top = hi.iter().find(|h| h.zeta == want).ok_or_else(|| format!("{}: no highest weight {want:?}", tag()))?;
                        ensure!(top.generates && top.multiplicity == 1, "{}: top vector does not generate", tag());
                        let q = ok(drinfeld_polys(top), tag)?;
                        let expected: Vec<UniPoly> = (1..n)
                            .map(|k| {
                                let roots: Vec<i64> =
                                    lengths.iter().zip(lambda.to_ints().expect("integral")).filter(|(l, _)| **l == k).map(|(_, x)| x).collect();
                                from_roots(&roots)
                            })
                            .collect();
                        ensure!(q.q == expected, "{}: Drinfeld polynomials {q} vs {expected:?}", tag());
                        ensure!(q == ok(drinfeld_closed_form(&lambda, &mu, n), tag)?, "{}: closed form disagrees", tag());
                        let simple_image = if image.dim <= 64 {
                            let l = ok(simple_quotient(&k), tag)?;
                            Some(ok(drinfeld_image(&l, n), tag)?)
                        } else {
                            None
                        };
                        corpus.standards.push(StandardCase { n, lambda: lambda.clone(), mu, image, explicit, simple_image });
                        admissible += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{admissible} admissible cases, {zero} zero images"))
}

fn simple_suite(corpus: &Corpus) -> Outcome {
    let mut count = 0;
    for case in &corpus.standards {
        let Some(simple) = &case.simple_image else { continue };
        let tag = || format!("n={} λ={} μ={}", case.n, case.lambda, case.mu);
        let series = ok(composition_factors(simple, SEED), tag)?;
        ensure!(
            series.factors.len() == 1 && series.factors[0].multiplicity == 1 && series.factors[0].dim == simple.dim,
            "{}: D(L) is not simple: {:?}",
            tag(),
            series.factors
        );
        let head = ok(highest_weight_data(&case.image), tag)?
            .into_iter()
            .find(|h| h.generates)
            .ok_or_else(|| format!("{}: D(K) has no generating vector", tag()))?;
        ensure!(series.factors[0].drinfeld == ok(drinfeld_polys(&head), tag)?, "{}: head Drinfeld polynomials differ", tag());
        count += 1;
    }
    Ok(format!("{count} simple images certified"))
}

fn relation_suite(corpus: &Corpus) -> Outcome {
    let mut modules: Vec<&YangianModule> = corpus.intervals.iter().collect();
    for c in &corpus.standards {
        modules.extend([&c.image, &c.explicit]);
        modules.extend(c.simple_image.as_ref());
    }
    for (k, y) in modules.iter().enumerate() {
        let report = verify_yangian(y, 3, 3);
        ensure!(report.ok(), "module {k} (n={}, dim {}): {} violations", y.n, y.dim, report.violation_count);
    }
    let case = corpus.standards.iter().find(|c| c.image.dim >= 3 && c.image.degree_bound >= 2).ok_or("no mutation target")?;
    let mut bad = case.image.clone();
    let (a, b) = (1, 2);
    let entry = bad.stored(a, b, 1).get(0, 0).clone();
    bad.stored_mut(a, b, 1).set(0, 0, entry + rat(1));
    let report = verify_yangian(&bad, 3, 3);
    ensure!(!report.ok(), "perturbed module passes the relation check");
    Ok(format!("{} modules satisfy the relations; mutation caught with {} violations", modules.len(), report.violation_count))
}

fn kl_suite() -> Outcome {
    let mut pairs = 0;
    for r in 1..=4 {
        let all = ok(Permutation::all(r), || "enumeration".into())?;
        for x in &all {
            for w in &all {
                if !bruhat_leq(x, w).map_err(|e| e.to_string())? {
                    continue;
                }
                let (p, o) = (ok(kl_polynomial(x, w), || "kl".into())?, ok(kl_oracle(x, w), || "oracle".into())?);
                ensure!(p == o, "P_{{{x},{w}}}: {p} vs oracle {o}");
                if r <= 3 {
                    ensure!(p == UniPoly::one(), "S_{r}: P_{{{x},{w}}} = {p}");
                }
                pairs += 1;
            }
        }
        let table = ok(kl_table(r), || "table".into())?;
        let bad = ok(table.invariant_violations(), || "invariants".into())?;
        ensure!(bad.is_empty(), "S_{r} table: {bad:?}");
    }
    let x = Permutation::simple(4, 2);
    let w = Permutation::from_word(4, &[2, 1, 3, 2]);
    let want = Poly::new(vec![rat(1), rat(1)]);
    ensure!(kl_polynomial(&x, &w).ok() == Some(want.clone()) && kl_oracle(&x, &w).ok() == Some(want), "P_{{s2, s2s1s3s2}} ≠ 1 + q");
    Ok(format!("{pairs} comparable pairs agree"))
}

struct RowCase {
    lambda: Weight,
    mu: Weight,
    w: Permutation,
    module: YangianModule,
    row: usize,
}

fn end_to_end_cases() -> Result<(Vec<dfunctor::kl::MultiplicityReport>, Vec<RowCase>), String> {
    let n = 2;
    let mut reports = Vec::new();
    let mut rows = Vec::new();
    for r in 2..=4usize {
        let weights = dominant_weights(r, 4);
        for lambda in &weights {
            for mu in &weights {
                let ws = ok(wset_n(lambda, mu, n), || "wset".into())?;
                if ws.is_empty() {
                    continue;
                }
                let report = ok(multiplicity_table(lambda, mu, n), || format!("table λ={lambda} μ={mu}"))?;
                let cosets = ok(dfunctor::combinat::wset_n_cosets(lambda, mu, n), || "cosets".into())?;
                for w in ws {
                    let weight = mu.permuted(&w);
                    let lengths = segment_lengths(lambda, &weight).expect("admissible");
                    if product_dimension(&lengths, n) > 64 {
                        continue;
                    }
                    let module = ok(standard_tensor_module(lambda, &weight, n), || format!("M(λ={lambda}, {weight})"))?;
                    let coset = cosets.iter().find(|c| c.contains(&w)).expect("w lies in a coset");
                    let row = report.cosets.iter().position(|c| c.w_lr == coset.w_lr).expect("coset in report");
                    rows.push(RowCase { lambda: lambda.clone(), mu: mu.clone(), w, module, row });
                }
                reports.push(report);
            }
        }
    }
    Ok((reports, rows))
}

fn report_for<'a>(reports: &'a [dfunctor::kl::MultiplicityReport], c: &RowCase) -> &'a dfunctor::kl::MultiplicityReport {
    reports.iter().find(|r| r.lambda == c.lambda && r.mu == c.mu).expect("report exists")
}

fn multiplicity_suite(reports: &[dfunctor::kl::MultiplicityReport], rows: &[RowCase]) -> Outcome {
    for c in rows {
        let tag = || format!("λ={} μ={} w={}", c.lambda, c.mu, c.w);
        let report = report_for(reports, c);
        ensure!(report.predicates_agree && report.representative_independent && report.oracle_agrees, "{}: report self-checks fail", tag());
        let predicted = ok(report.predicted_factors(c.row), tag)?;
        let observed = ok(composition_factors(&c.module, SEED), tag)?;
        ensure!(predicted == observed.by_drinfeld(), "{}: predicted {predicted:?} observed {:?}", tag(), observed.by_drinfeld());
        let mut total = 0u64;
        for (x, label) in report.cosets.iter().enumerate() {
            let m = report.matrix[c.row][x];
            if m > 0 {
                total += m as u64 * ok(yangian_character(&c.lambda, &label.w_lr, &c.mu, 2), tag)?.dim();
            }
        }
        ensure!(total == c.module.dim as u64 && observed.total_dim() == c.module.dim, "{}: Σ mult·dim V = {total} ≠ {}", tag(), c.module.dim);
    }
    Ok(format!("{} rows over {} reports", rows.len(), reports.len()))
}

fn inversion_suite(reports: &[dfunctor::kl::MultiplicityReport]) -> Outcome {
    for r in reports {
        let k = r.matrix.len();
        for i in 0..k {
            for j in 0..k {
                let v: i64 = (0..k).map(|l| r.matrix[i][l] * r.inverse[l][j]).sum();
                ensure!(v == i64::from(i == j), "λ={} μ={}: product entry ({i},{j}) = {v}", r.lambda, r.mu);
            }
            ensure!(r.matrix[i][i] == 1, "λ={} μ={}: diagonal entry {i} ≠ 1", r.lambda, r.mu);
        }
        ensure!(r.inverse_is_inverse, "λ={} μ={}: report flags inversion failure", r.lambda, r.mu);
    }
    Ok(format!("{} reports invert", reports.len()))
}

fn character_suite(reports: &[dfunctor::kl::MultiplicityReport], rows: &[RowCase]) -> Outcome {
    for c in rows {
        let tag = || format!("λ={} μ={} w={}", c.lambda, c.mu, c.w);
        let report = report_for(reports, c);
        let mut sum: BTreeMap<_, usize> = BTreeMap::new();
        for (x, label) in report.cosets.iter().enumerate() {
            let m = report.matrix[c.row][x] as usize;
            if m == 0 {
                continue;
            }
            let ch = ok(yangian_character(&c.lambda, &label.w_lr, &c.mu, 2), tag)?;
            for (p, v) in ch.schur_mult {
                *sum.entry(p).or_insert(0) += m * v;
            }
        }
        let resummed = GlnCharacter { n: 2, schur_mult: sum };
        let explicit = ok(gln_character(&c.module), tag)?;
        ensure!(resummed == explicit, "{}: {:?} vs {:?}", tag(), resummed.schur_mult, explicit.schur_mult);
    }
    Ok(format!("{} characters re-summed", rows.len()))
}

fn tensor_suite() -> Outcome {
    let mut count = 0;
    for n in 2..=3usize {
        for l1 in 0..=4i64 {
            for l2 in 0..=4 - l1 {
                for a1 in -1..=1i64 {
                    for a2 in -1..=1i64 {
                        let m1 = ok(one_dim(&rat(a1), &rat(a1 + l1 - 1)), || "C".into())?;
                        let m2 = ok(one_dim(&rat(a2), &rat(a2 + l2 - 1)), || "C".into())?;
                        let rep = ok(verify_tensor_compat(&m1, &m2, n), || format!("n={n} [{a1},{l1}] [{a2},{l2}]"))?;
                        ensure!(rep.agree, "n={n} C[{a1},{}] ⊗ C[{a2},{}]: dims {} vs {}", a1 + l1 - 1, a2 + l2 - 1, rep.dim_left, rep.dim_right);
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} pairs compatible"))
}

fn qdet_suite(corpus: &Corpus) -> Outcome {
    let mut count = 0;
    let modules = corpus.intervals.iter().chain(corpus.standards.iter().flat_map(|c| [&c.image, &c.explicit]));
    for y in modules {
        for hw in ok(highest_weight_data(y), || "highest weights".into())? {
            if !hw.generates {
                continue;
            }
            let scalar = ok(qdet_scalar(y, &hw), || format!("qdet on n={} dim {}", y.n, y.dim))?;
            let want = product(hw.zeta.iter().map(|z| z.shift(&rat(1))));
            ensure!(scalar == want, "n={} dim {}: qdet {scalar} vs Π ζ_k(u+1) = {want}", y.n, y.dim);
            count += 1;
        }
    }
    Ok(format!("{count} highest-weight modules"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |k: usize, name: &str, start: Instant, out: Outcome| {
        let ms = start.elapsed().as_millis();
        match out {
            Ok(msg) => println!("PASS {k:>2} {name}: {msg} ({ms} ms)"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {k:>2} {name}: {msg} ({ms} ms)");
            }
        }
    };
    let mut corpus = Corpus::default();
    let t = Instant::now();
    report(1, "interval images", t, interval_suite(&mut corpus));
    let t = Instant::now();
    report(2, "standard module images", t, standard_suite(&mut corpus));
    let t = Instant::now();
    report(3, "simple quotient images", t, simple_suite(&corpus));
    let t = Instant::now();
    report(4, "Yangian relations", t, relation_suite(&corpus));
    let t = Instant::now();
    report(5, "Kazhdan-Lusztig polynomials", t, kl_suite());
    let t = Instant::now();
    match end_to_end_cases() {
        Ok((reports, rows)) => {
            report(6, "multiplicities vs composition factors", t, multiplicity_suite(&reports, &rows));
            let t = Instant::now();
            report(7, "inversion", t, inversion_suite(&reports));
            let t = Instant::now();
            report(8, "characters", t, character_suite(&reports, &rows));
        }
        Err(e) => {
            for (k, name) in [(6, "multiplicities vs composition factors"), (7, "inversion"), (8, "characters")] {
                report(k, name, t, Err(e.clone()));
            }
        }
    }
    let t = Instant::now();
    report(9, "tensor compatibility", t, tensor_suite());
    let t = Instant::now();
    report(10, "quantum determinant", t, qdet_suite(&corpus));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
