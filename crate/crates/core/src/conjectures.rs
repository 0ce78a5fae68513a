//! Desk-scale checks of the module relationships between the graded pieces
//! `R(Z_{n,m,r})_d`: surjection chains, where they become isomorphisms, the
//! upper-rook identity, and equivariant log-concavity.

use rayon::prelude::*;

use crate::error::Result;
use crate::formulas::{grfrob_signed, grfrob_uz};
use crate::lattice::{hori_set, lattice_path};
use crate::partitions::partitions_of;
use crate::repr::{frobenius_with_tables, pair_character_with_tables, IrrepTable, PairClassFunction};
use crate::report::Report;
use crate::symfunc::{DoublySchurExpansion, QPoly};

fn signed_table(n: usize, m: usize) -> Result<Vec<DoublySchurExpansion>> {
    (0..=n.min(m)).into_par_iter().map(|r| grfrob_signed(n, m, r)).collect()
}

fn pointwise(a: &PairClassFunction, b: &PairClassFunction) -> PairClassFunction {
    a.iter().map(|(k, x)| (k.clone(), x * &b[k])).collect()
}

/// For each interior `0 < d < r`, checks that `V_{d−1} ⊗ V_{d+1}` embeds in
/// `V_d ⊗ V_d` (internal tensor products), i.e. that every irreducible
/// multiplicity of the former is at most that of the latter.
pub fn check_log_concavity(n: usize, m: usize, r: usize) -> Result<Report> {
    let f = grfrob_signed(n, m, r)?;
    let (left, right) = (IrrepTable::new(n), IrrepTable::new(m));
    let chars: Vec<PairClassFunction> = (0..=r)
        .map(|d| pair_character_with_tables(&f.graded_part(d as u32), &left, &right))
        .collect();
    let mut report = Report::new();
    if r < 2 {
        report.push("log-concavity", true, format!("n={n} m={m} r={r} no-interior-degree"));
        return Ok(report);
    }
    for d in 1..r {
        let square = frobenius_with_tables(&pointwise(&chars[d], &chars[d]), &left, &right)?;
        let outer = frobenius_with_tables(&pointwise(&chars[d - 1], &chars[d + 1]), &left, &right)?;
        let nonneg = square.is_schur_positive() && outer.is_schur_positive();
        let holds = nonneg && square.dominates(&outer)?;
        report.push(
            "log-concavity",
            holds,
            format!(
                "n={n} m={m} r={r} d={d} square={} outer={}",
                square.total_multiplicity(),
                outer.total_multiplicity()
            ),
        );
    }
    Ok(report)
}

/// `Frob(R(Z_{n,m,r})_d) ≥ Frob(R(Z_{n,m,r+1})_d)` for `0 ≤ d ≤ r < min(n,m)`.
pub fn check_surjection_chain(n: usize, m: usize) -> Result<Report> {
    let table = signed_table(n, m)?;
    let mut report = Report::new();
    for r in 0..n.min(m) {
        for d in 0..=r {
            let upper = table[r].graded_part(d as u32);
            let lower = table[r + 1].graded_part(d as u32);
            let holds = upper.dominates(&lower)?;
            report.push("surjection", holds, format!("n={n} m={m} d={d} r={r}->{}", r + 1));
        }
    }
    Ok(report)
}

/// The `r`-independent sum over strip pairs whose path never dips below the
/// axis, with no bound on first parts. It agrees with degree `d` of
/// `R(Z_{n,m,r})` whenever `d ≤ min(n,m) − r`.
pub fn positive_strip_sum(n: usize, m: usize, d: usize) -> DoublySchurExpansion {
    let mut out = DoublySchurExpansion::zero(n, m);
    for l1 in partitions_of(n) {
        for l2 in partitions_of(m) {
            let ell = l1.first().max(l2.first());
            let count = hori_set(d, &l1, &l2)
                .iter()
                .filter(|mu| {
                    let path = lattice_path(mu, &l1, &l2, ell).expect("strip pair");
                    path.heights(ell).iter().all(|&h| h >= 0)
                })
                .count();
            if count > 0 {
                out.add_term(l1.clone(), l2, &QPoly::monomial(0, count)).expect("degrees agree");
            }
        }
    }
    out
}

/// Star diagram of the degree pieces `R(Z_{n,m,r})_d`, `0 ≤ d ≤ r ≤ min(n,m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPattern {
    /// `stars[r][d]`: `d ≤ min(n,m) − r` and the piece was verified to equal
    /// the `r`-independent positive strip sum.
    pub stars: Vec<Vec<bool>>,
    /// Positions `(d, r)` where the condition holds but equality failed.
    pub broken: Vec<(usize, usize)>,
    /// Positions above the line where the piece happens to equal the sum.
    pub coincidences: Vec<(usize, usize)>,
}

pub fn star_pattern(n: usize, m: usize) -> Result<StarPattern> {
    let table = signed_table(n, m)?;
    let k = n.min(m);
    let sums: Vec<DoublySchurExpansion> = (0..=k).map(|d| positive_strip_sum(n, m, d)).collect();
    let mut pattern = StarPattern { stars: Vec::new(), broken: Vec::new(), coincidences: Vec::new() };
    for r in 0..=k {
        let mut row = Vec::with_capacity(r + 1);
        for d in 0..=r {
            let piece = table[r].graded_part(d as u32);
            let equal = !piece.is_zero() && piece == sums[d];
            let below = d + r <= k;
            match (below, equal) {
                (true, false) => pattern.broken.push((d, r)),
                (false, true) => pattern.coincidences.push((d, r)),
                _ => {}
            }
            row.push(below && equal);
        }
        pattern.stars.push(row);
    }
    Ok(pattern)
}

/// Text rendering of [`star_pattern`]: one line per `d`, top degree first,
/// `*` for a star, `o` otherwise, columns `r = 0..=min(n,m)`.
pub fn render_star_pattern(pattern: &StarPattern) -> Vec<String> {
    let pattern = &pattern.stars;
    let k = pattern.len().saturating_sub(1);
    (0..=k)
        .rev()
        .map(|d| {
            let cells: Vec<&str> = (0..=k)
                .map(|r| match pattern[r].get(d) {
                    Some(true) => "*",
                    Some(false) => "o",
                    None => " ",
                })
                .collect();
            format!("d={d} {}", cells.join(" ").trim_end())
        })
        .collect()
}

/// Isomorphisms `R(Z_{n,m,r})_d ≅ R(Z_{n,m,r+1})_d` below the line
/// `d = min(n,m) − r`, proper surjections reported above it, and the star
/// pattern matching `d ≤ min(n,m) − r`.
pub fn check_surj_to_isom(n: usize, m: usize) -> Result<Report> {
    let table = signed_table(n, m)?;
    let k = n.min(m);
    let mut report = Report::new();
    let mut strict = Vec::new();
    for r in 0..k {
        for d in 0..=r {
            let same = table[r].graded_part(d as u32) == table[r + 1].graded_part(d as u32);
            if d + r < k {
                report.push("isomorphism", same, format!("n={n} m={m} d={d} r={r}->{}", r + 1));
            } else if !same {
                strict.push(format!("({d},{r})"));
            }
        }
    }
    report.push("proper-surjections", true, format!("n={n} m={m} count={} at={}", strict.len(), strict.join(",")));
    let pattern = star_pattern(n, m)?;
    let fmt_cells = |cells: &[(usize, usize)]| -> String {
        cells.iter().map(|(d, r)| format!("({d},{r})")).collect::<Vec<_>>().join(",")
    };
    let stars: usize = pattern.stars.iter().flatten().filter(|&&s| s).count();
    report.push(
        "star-pattern",
        pattern.broken.is_empty(),
        if pattern.broken.is_empty() {
            format!("n={n} m={m} stars={stars} coincidences={}", fmt_cells(&pattern.coincidences))
        } else {
            format!("n={n} m={m} broken={}", fmt_cells(&pattern.broken))
        },
    );
    Ok(report)
}

/// `UZ(r)_{d+1} − UZ(r+1)_d = Z(r)_{d+1}` and the difference is
/// Schur-positive, for `0 ≤ d < r < min(n,m)`.
pub fn check_uz_identity(n: usize, m: usize) -> Result<Report> {
    let k = n.min(m);
    let uz: Vec<DoublySchurExpansion> = (0..=k).map(|r| grfrob_uz(n, m, r)).collect::<Result<_>>()?;
    let signed = signed_table(n, m)?;
    let mut report = Report::new();
    for r in 0..k {
        for d in 0..r {
            let diff = uz[r].graded_part(d as u32 + 1).sub(&uz[r + 1].graded_part(d as u32))?;
            let want = signed[r].graded_part(d as u32 + 1);
            let holds = diff == want && diff.is_schur_positive();
            report.push("uz-identity", holds, format!("n={n} m={m} d={d} r={r}"));
        }
    }
    if report.checks().is_empty() {
        report.push("uz-identity", true, format!("n={n} m={m} vacuous"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_concavity_examples() {
        assert!(check_log_concavity(2, 2, 2).unwrap().passed());
        assert!(check_log_concavity(3, 3, 2).unwrap().passed());
        assert_eq!(check_log_concavity(3, 3, 3).unwrap().checks().len(), 2);
    }

    #[test]
    fn chains_and_isomorphisms() {
        for (n, m) in [(2, 2), (3, 3), (4, 4), (4, 5), (2, 3)] {
            assert!(check_surjection_chain(n, m).unwrap().passed(), "chain ({n},{m})");
            assert!(check_surj_to_isom(n, m).unwrap().passed(), "isom ({n},{m})");
            assert!(check_uz_identity(n, m).unwrap().passed(), "uz ({n},{m})");
        }
    }

    #[test]
    fn star_rendering() {
        let pattern = star_pattern(2, 2).unwrap();
        assert_eq!(pattern.stars, vec![vec![true], vec![true, true], vec![true, false, false]]);
        assert!(pattern.broken.is_empty());
        assert_eq!(render_star_pattern(&pattern), vec!["d=2     o", "d=1   * o", "d=0 * * *"]);
    }

    #[test]
    fn six_by_six_diagram() {
        let pattern = star_pattern(6, 6).unwrap();
        assert!(pattern.broken.is_empty());
        for (r, row) in pattern.stars.iter().enumerate() {
            for (d, &star) in row.iter().enumerate() {
                assert_eq!(star, d + r <= 6, "(d={d}, r={r})");
            }
        }
        assert_eq!(render_star_pattern(&pattern)[6], "d=0 * * * * * * *");
    }

    #[test]
    fn uz_small_identity() {
        // d = 0, r = 1 on the 2 × 2 board
        let uz1 = grfrob_uz(2, 2, 1).unwrap().graded_part(1);
        let uz2 = grfrob_uz(2, 2, 2).unwrap().graded_part(0);
        let want = grfrob_signed(2, 2, 1).unwrap().graded_part(1);
        assert_eq!(uz1.sub(&uz2).unwrap(), want);
    }
}
