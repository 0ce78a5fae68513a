//! The acceptance suite: ten criteria at fixed desk-scale budgets, each
//! returning a [`Report`]. Used by `rook-harmonics selftest` and by the
//! `acceptance` integration test.

use num_bigint::BigInt;
use num_integer::binomial;
use rayon::prelude::*;

use crate::conjectures::{check_log_concavity, check_surj_to_isom, check_surjection_chain, check_uz_identity, star_pattern};
use crate::error::Result;
use crate::formulas::{grfrob_bad, grfrob_good, grfrob_involution, grfrob_signed, hilbert};
use crate::lattice::{certify_ls, certify_phi, hori_set, lattice_path, phi, phi_pivot, StripPairContext};
use crate::loci::Locus;
use crate::partitions::{partitions_of, pieri_h, Partition};
use crate::repr::{oracle_graded_frobenius, oracle_hilbert, oracle_hilbert_full, verify_ideal_equality, verify_involution_ideal};
use crate::report::Report;
use crate::symfunc::{coef_closed_form, filtered_pieri_sum, sf, verify_refinement, verify_schur_interchange, verify_schur_sum, QPoly};

/// Largest board side for the formula agreement sweep.
pub const FORMULA_MAX: usize = 5;
/// Boards checked against the brute-force oracle beyond all `n, m ≤ 3`.
pub const ORACLE_EXTRA: [(usize, usize); 3] = [(4, 3), (3, 4), (4, 4)];
pub const HILBERT_COUNT_MAX: usize = 6;
pub const HILBERT_ORACLE_MAX: usize = 4;
pub const INTERCHANGE_MAX: usize = 4;
pub const IDENTITY_MAX: usize = 7;
pub const CLOSED_FORM_MAX: usize = 6;
pub const BIJECTION_MAX: usize = 5;
pub const IDEAL_MAX: usize = 3;
pub const INVOLUTION_IDEAL_MAX: usize = 4;
pub const INVOLUTION_ORACLE_MAX: usize = 5;
pub const PROPOSITION_MAX: usize = 5;
pub const STAR_SIDE: usize = 6;
pub const LOG_CONCAVITY_MAX: usize = 5;
pub const PROPERTY_MAX: usize = 6;

pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub run: fn() -> Result<Report>,
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "triple-formula agreement", run: triple_formula },
        Criterion { id: 2, title: "oracle agreement", run: oracle_agreement },
        Criterion { id: 3, title: "hilbert series", run: hilbert_checks },
        Criterion { id: 4, title: "symmetric function identities", run: identities },
        Criterion { id: 5, title: "bijection certification", run: bijections },
        Criterion { id: 6, title: "ideal equality", run: ideals },
        Criterion { id: 7, title: "involution formula", run: involutions },
        Criterion { id: 8, title: "proposition checks", run: propositions },
        Criterion { id: 9, title: "log-concavity", run: log_concavity },
        Criterion { id: 10, title: "property suites", run: properties },
    ]
}

fn boards(max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 0..=max {
        for m in 0..=max {
            for r in 0..=n.min(m) {
                out.push((n, m, r));
            }
        }
    }
    out
}

fn summarize(report: &mut Report, name: &str, failures: Vec<String>, total: usize) {
    let detail = if failures.is_empty() {
        format!("cases={total}")
    } else {
        format!("cases={total} failed={}", failures.join("; "))
    };
    report.push(name, failures.is_empty(), detail);
}

fn triple_formula() -> Result<Report> {
    let cases = boards(FORMULA_MAX);
    let failures: Vec<String> = cases
        .par_iter()
        .map(|&(n, m, r)| -> Result<Option<String>> {
            let s = grfrob_signed(n, m, r)?;
            let ok = s == grfrob_bad(n, m, r)? && s == grfrob_good(n, m, r)?;
            Ok((!ok).then(|| format!("({n},{m},{r})")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut report = Report::new();
    summarize(&mut report, "signed=bad=good", failures, cases.len());
    Ok(report)
}

fn oracle_cases() -> Vec<(usize, usize, usize)> {
    let mut cases = boards(3);
    for (n, m) in ORACLE_EXTRA {
        for r in 0..=n.min(m) {
            cases.push((n, m, r));
        }
    }
    cases
}

fn oracle_agreement() -> Result<Report> {
    let cases = oracle_cases();
    let failures: Vec<String> = cases
        .par_iter()
        .map(|&(n, m, r)| -> Result<Option<String>> {
            let got = oracle_graded_frobenius(&Locus::Rook { n, m, r }, None)?;
            let ok = got.as_product() == Some(&grfrob_signed(n, m, r)?);
            Ok((!ok).then(|| format!("({n},{m},{r})")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut report = Report::new();
    summarize(&mut report, "oracle=signed", failures, cases.len());
    Ok(report)
}

fn hilbert_checks() -> Result<Report> {
    let mut report = Report::new();
    let mut failures = Vec::new();
    let cases = boards(HILBERT_COUNT_MAX);
    for &(n, m, r) in &cases {
        let h = hilbert(&grfrob_signed(n, m, r)?);
        let fact: BigInt = (1..=r).map(BigInt::from).product();
        let want = BigInt::from(binomial(n, r)) * BigInt::from(binomial(m, r)) * fact;
        if h.eval_one() != want {
            failures.push(format!("({n},{m},{r})"));
        }
    }
    summarize(&mut report, "hilbert-at-one", failures, cases.len());

    let cases = boards(HILBERT_ORACLE_MAX);
    let failures: Vec<String> = cases
        .par_iter()
        .map(|&(n, m, r)| -> Result<Option<String>> {
            let h = hilbert(&grfrob_signed(n, m, r)?);
            let dims = oracle_hilbert(&Locus::Rook { n, m, r }, r + 1);
            let ok = dims.iter().enumerate().all(|(d, &k)| h.coeff(d as u32) == BigInt::from(k));
            Ok((!ok).then(|| format!("({n},{m},{r})")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    summarize(&mut report, "hilbert-oracle", failures, cases.len());

    // spanning by rook-shaped supports agrees with the full monomial basis
    let failures: Vec<String> = cases
        .par_iter()
        .filter(|&&(n, m, _)| n * m <= 16)
        .filter_map(|&(n, m, r)| {
            let locus = Locus::Rook { n, m, r };
            (oracle_hilbert(&locus, r) != oracle_hilbert_full(&locus, r)).then(|| format!("({n},{m},{r})"))
        })
        .collect();
    summarize(&mut report, "hilbert-full-basis", failures, cases.len());

    let anchors = [((2, 2, 1), "1 + 3q"), ((3, 3, 2), "1 + 8q + 9q^2")];
    for ((n, m, r), want) in anchors {
        let got = hilbert(&grfrob_signed(n, m, r)?).to_string();
        let oracle = oracle_hilbert(&Locus::Rook { n, m, r }, r);
        let from_oracle = QPoly::from_coeffs(oracle.iter().map(|&k| BigInt::from(k))).to_string();
        report.push(
            "hilbert-anchor",
            got == want && from_oracle == want,
            format!("n={n} m={m} r={r} formula={got} oracle={from_oracle}"),
        );
    }
    Ok(report)
}

fn identities() -> Result<Report> {
    let mut report = Report::new();
    let k = INTERCHANGE_MAX;
    let mut failures = Vec::new();
    let mut total = 0;
    for d in 0..=k {
        for a in 0..=k {
            for b in 0..=k {
                for p in 0..=k {
                    for q in 0..=k {
                        total += 1;
                        if !verify_schur_interchange(d, a, b, p, q).holds {
                            failures.push(format!("({d},{a},{b},{p},{q})"));
                        }
                    }
                }
            }
        }
    }
    summarize(&mut report, "schur-interchange", failures, total);

    let mut failures = Vec::new();
    let cases = boards(IDENTITY_MAX);
    for &(n, m, r) in &cases {
        if !verify_refinement(n, m, r)? {
            failures.push(format!("({n},{m},{r})"));
        }
    }
    summarize(&mut report, "refinement", failures, cases.len());

    let mut failures = Vec::new();
    let mut total = 0;
    for n in 0..=IDENTITY_MAX {
        for m in 0..=IDENTITY_MAX {
            total += 1;
            if !verify_schur_sum(n, m)? {
                failures.push(format!("({n},{m})"));
            }
        }
    }
    summarize(&mut report, "schur-sum", failures, total);

    let mut failures = Vec::new();
    let mut total = 0;
    for n in 0..=CLOSED_FORM_MAX {
        for m in 0..=CLOSED_FORM_MAX {
            for d in 0..=n.min(m) {
                let (a, b) = (n - d, m - d);
                for p in 0..=n {
                    for q in 0..=m {
                        let brute = filtered_pieri_sum(d, a, b, p, q);
                        for l1 in partitions_of(n) {
                            for l2 in partitions_of(m) {
                                total += 1;
                                let want = brute.coefficient(&l1, &l2).coeff(0);
                                if coef_closed_form(d, a, b, p, q, &l1, &l2)? != want {
                                    failures.push(format!("d={d} a={a} b={b} p={p} q={q} {l1} {l2}"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    summarize(&mut report, "closed-form", failures, total);
    Ok(report)
}

fn bijections() -> Result<Report> {
    let mut report = Report::new();
    let pairs: Vec<(usize, usize)> =
        (0..=BIJECTION_MAX).flat_map(|n| (0..=BIJECTION_MAX).map(move |m| (n, m))).collect();
    for (name, certify) in [("phi", certify_phi as fn(usize, usize) -> _), ("ls", certify_ls)] {
        let results: Vec<_> = pairs.par_iter().map(|&(n, m)| certify(n, m)).collect();
        let contexts: usize = results.iter().map(|r| r.contexts).sum();
        let elements: usize = results.iter().map(|r| r.elements).sum();
        let failures: Vec<String> = results.into_iter().flat_map(|r| r.failures).take(5).collect();
        report.push(
            name,
            failures.is_empty(),
            format!("contexts={contexts} elements={elements}{}", if failures.is_empty() { String::new() } else { format!(" failed={}", failures.join("; ")) }),
        );
    }
    let mu = Partition::new(vec![13, 8, 6, 5, 2, 2])?;
    let ctx = StripPairContext::new(
        Partition::new(vec![13, 12, 7, 6, 2, 2, 1])?,
        Partition::new(vec![13, 13, 7, 5, 2, 2, 2])?,
        43,
        44,
        36,
        36,
    )?;
    let x0 = phi_pivot(&mu, &ctx)?;
    let nu = phi(&mu, &ctx)?;
    report.push(
        "phi-example",
        x0 == 5 && nu == Partition::new(vec![13, 8, 6, 4, 2, 2])?,
        format!("x0={x0} image={nu}"),
    );
    Ok(report)
}

fn ideals() -> Result<Report> {
    let mut report = Report::new();
    let cases = boards(IDEAL_MAX);
    let results: Vec<Report> = cases
        .par_iter()
        .map(|&(n, m, r)| verify_ideal_equality(n, m, r, r + 1))
        .collect::<Result<_>>()?;
    let failures: Vec<String> = results.iter().flat_map(|r| r.failures().map(|c| c.detail.clone())).collect();
    summarize(&mut report, "rook-ideal", failures, cases.len());

    let mut cases = Vec::new();
    for n in 0..=INVOLUTION_IDEAL_MAX {
        for a in (n % 2..=n).step_by(2) {
            cases.push((n, a));
        }
    }
    let results: Vec<Report> = cases
        .par_iter()
        .map(|&(n, a)| verify_involution_ideal(n, a, (n - a) / 2 + 1))
        .collect::<Result<_>>()?;
    let failures: Vec<String> = results.iter().flat_map(|r| r.failures().map(|c| c.detail.clone())).collect();
    summarize(&mut report, "involution-ideal", failures, cases.len());
    Ok(report)
}

fn involutions() -> Result<Report> {
    let mut report = Report::new();
    let mut cases = Vec::new();
    for n in 0..=INVOLUTION_ORACLE_MAX {
        for a in (n % 2..=n).step_by(2) {
            cases.push((n, a));
        }
    }
    let failures: Vec<String> = cases
        .par_iter()
        .map(|&(n, a)| -> Result<Option<String>> {
            let got = oracle_graded_frobenius(&Locus::Involution { n, a }, None)?;
            let ok = got.as_single() == Some(&grfrob_involution(n, a)?);
            Ok((!ok).then(|| format!("({n},{a})")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    summarize(&mut report, "involution-oracle", failures, cases.len());
    let anchor = grfrob_involution(3, 1)?.to_lines().join(" | ");
    report.push("involution-anchor", anchor == "q^0  s[3]  1 | q^1  s[2,1]  1", format!("M(3,1): {anchor}"));
    Ok(report)
}

fn propositions() -> Result<Report> {
    let mut report = Report::new();
    let pairs: Vec<(usize, usize)> =
        (0..=PROPOSITION_MAX).flat_map(|n| (0..=PROPOSITION_MAX).map(move |m| (n, m))).collect();
    for (name, check) in [
        ("surjection-chain", check_surjection_chain as fn(usize, usize) -> Result<Report>),
        ("surj-to-isom", check_surj_to_isom),
        ("uz-identity", check_uz_identity),
    ] {
        let results: Vec<Report> = pairs.par_iter().map(|&(n, m)| check(n, m)).collect::<Result<_>>()?;
        let total: usize = results.iter().map(|r| r.checks().len()).sum();
        let failures: Vec<String> = results.iter().flat_map(|r| r.failures().map(|c| c.to_string())).collect();
        summarize(&mut report, name, failures, total);
    }
    let pattern = star_pattern(STAR_SIDE, STAR_SIDE)?;
    let matches = pattern
        .stars
        .iter()
        .enumerate()
        .all(|(r, row)| row.iter().enumerate().all(|(d, &s)| s == (d + r <= STAR_SIDE)));
    report.push(
        "star-pattern",
        matches && pattern.broken.is_empty(),
        format!("n=m={STAR_SIDE} stars where d<=min-r"),
    );
    Ok(report)
}

fn log_concavity() -> Result<Report> {
    let cases = boards(LOG_CONCAVITY_MAX);
    let results: Vec<Report> = cases
        .par_iter()
        .map(|&(n, m, r)| check_log_concavity(n, m, r))
        .collect::<Result<_>>()?;
    let total: usize = results.iter().map(|r| r.checks().len()).sum();
    let failures: Vec<String> = results.iter().flat_map(|r| r.failures().map(|c| c.detail.clone())).collect();
    let mut report = Report::new();
    summarize(&mut report, "log-concavity", failures, total);
    Ok(report)
}

fn properties() -> Result<Report> {
    let mut report = Report::new();
    let cases = boards(PROPERTY_MAX);
    let mut positivity = Vec::new();
    let mut top = Vec::new();
    let mut idempotent = Vec::new();
    for &(n, m, r) in &cases {
        let f = grfrob_signed(n, m, r)?;
        if !f.is_schur_positive() {
            positivity.push(format!("({n},{m},{r})"));
        }
        if f.max_q_degree().unwrap_or(0) > r as u32 {
            top.push(format!("({n},{m},{r})"));
        }
        let s = sf(n, m, r)?;
        for bound in 0..=n.max(m) {
            let once = s.truncate(bound);
            if once.truncate(bound) != once {
                idempotent.push(format!("({n},{m},{r}) bound={bound}"));
            }
        }
    }
    summarize(&mut report, "schur-positivity", positivity, cases.len());
    summarize(&mut report, "top-degree-vanishing", top, cases.len());
    summarize(&mut report, "truncate-idempotence", idempotent, cases.len());

    // oracle output obeys λ₁ ≤ n+m−d−r in each degree
    let failures: Vec<String> = oracle_cases()
        .par_iter()
        .map(|&(n, m, r)| -> Result<Option<String>> {
            let got = oracle_graded_frobenius(&Locus::Rook { n, m, r }, None)?;
            let f = got.as_product().expect("rook loci give product-group images");
            let ok = f.terms().all(|((l1, l2), c)| {
                c.terms().all(|(d, _)| {
                    let bound = n + m - r - d as usize;
                    l1.first() <= bound && l2.first() <= bound
                })
            });
            Ok((!ok).then(|| format!("({n},{m},{r})")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    summarize(&mut report, "oracle-upper-bound", failures, oracle_cases().len());

    let mut failures = Vec::new();
    let mut total = 0;
    for n in 0..=PROPERTY_MAX {
        for m in 0..=PROPERTY_MAX {
            for l1 in partitions_of(n) {
                for l2 in partitions_of(m) {
                    let ell = l1.first().max(l2.first());
                    for d in 0..=n.min(m) {
                        for mu in hori_set(d, &l1, &l2) {
                            total += 1;
                            let path = lattice_path(&mu, &l1, &l2, ell + 2)?;
                            let ok = (ell..=ell + 2).all(|x| path.height(x) == (n + m) as i64 - 2 * d as i64 - x as i64);
                            if !ok {
                                failures.push(format!("{mu} in {l1},{l2}"));
                            }
                        }
                    }
                }
            }
        }
    }
    summarize(&mut report, "height-formula", failures, total);

    // Pieri products land in the right degree and commute
    let mut failures = Vec::new();
    for lam in (0..=5).flat_map(partitions_of) {
        for (j, k) in [(1, 2), (2, 3), (0, 4)] {
            let mut a: Vec<_> = pieri_h(&lam, j).iter().flat_map(|x| pieri_h(x, k)).collect();
            let mut b: Vec<_> = pieri_h(&lam, k).iter().flat_map(|x| pieri_h(x, j)).collect();
            a.sort();
            b.sort();
            if a != b {
                failures.push(format!("{lam} h{j}h{k}"));
            }
        }
    }
    let total = (0..=5).map(|k| partitions_of(k).len()).sum::<usize>() * 3;
    summarize(&mut report, "pieri-commutation", failures, total);
    Ok(report)
}
