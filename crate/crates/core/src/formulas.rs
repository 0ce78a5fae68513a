//! Closed-form graded Frobenius images: the signed truncation formula, the
//! two sign-free lattice-path formulas, the upper-rook locus, and the
//! involution locus. Each degree is computed independently.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::lattice::{hori_positive, hori_set, width};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{plethysm_h_h2, sf, sf_signed, DoublySchurExpansion, QPoly, SchurExpansion};

fn check_rook_args(n: usize, m: usize, r: usize) -> Result<()> {
    if r > n.min(m) {
        return domain(format!("need 0 ≤ r ≤ min(n,m); got n={n}, m={m}, r={r}"));
    }
    Ok(())
}

fn sum_graded(n: usize, m: usize, parts: Vec<(u32, DoublySchurExpansion)>) -> Result<DoublySchurExpansion> {
    let mut total = DoublySchurExpansion::zero(n, m);
    for (d, part) in parts {
        total = total.add(&part.scale(&QPoly::monomial(d, 1)))?;
    }
    Ok(total)
}

/// `Σ_{d=0}^{r} q^d {SF_d − SF_{d−1}}_{λ₁ ≤ n+m−d−r}`.
pub fn grfrob_signed(n: usize, m: usize, r: usize) -> Result<DoublySchurExpansion> {
    check_rook_args(n, m, r)?;
    let parts = (0..=r)
        .into_par_iter()
        .map(|d| {
            let diff = sf_signed(n, m, d as isize)?.sub(&sf_signed(n, m, d as isize - 1)?)?;
            Ok((d as u32, diff.truncate(n + m - d - r)))
        })
        .collect::<Result<Vec<_>>>()?;
    sum_graded(n, m, parts)
}

/// Sign-free form counting strip pairs whose path stays above the axis.
pub fn grfrob_bad(n: usize, m: usize, r: usize) -> Result<DoublySchurExpansion> {
    check_rook_args(n, m, r)?;
    let shapes = shape_pairs(n, m);
    let parts = (0..=r)
        .into_par_iter()
        .map(|d| {
            let window = n + m - d - r;
            let mut part = DoublySchurExpansion::zero(n, m);
            for (l1, l2) in &shapes {
                if l1.first() > window || l2.first() > window {
                    continue;
                }
                let count = hori_positive(d, l1, l2, n, m, r)?.len();
                if count > 0 {
                    part.add_term(l1.clone(), l2.clone(), &QPoly::monomial(0, count))?;
                }
            }
            Ok((d as u32, part))
        })
        .collect::<Result<Vec<_>>>()?;
    sum_graded(n, m, parts)
}

/// Sign-free form `Σ_{λ1,λ2} Σ_{μ ∈ H(r,λ1,λ2)} q^{n+m−r−width(μ)} s_{λ1}⊗s_{λ2}`.
pub fn grfrob_good(n: usize, m: usize, r: usize) -> Result<DoublySchurExpansion> {
    check_rook_args(n, m, r)?;
    let terms = shape_pairs(n, m)
        .into_par_iter()
        .map(|(l1, l2)| {
            let mut c = QPoly::zero();
            for mu in hori_set(r, &l1, &l2) {
                let w = width(&mu, &l1, &l2)?;
                // width ≤ n+m−r always; a violation would be a bug upstream
                let e = (n + m - r).checked_sub(w).ok_or_else(|| {
                    Error::Consistency(format!("width {w} of {mu} exceeds n+m−r"))
                })?;
                c.add_term(e as u32, BigInt::from(1));
            }
            Ok((l1, l2, c))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = DoublySchurExpansion::zero(n, m);
    for (l1, l2, c) in terms {
        total.add_term(l1, l2, &c)?;
    }
    Ok(total)
}

/// Upper-rook locus: `Σ_{d=0}^{min(n,m)} q^d {SF_d}_{λ₁ ≤ n+m−d−r}`.
pub fn grfrob_uz(n: usize, m: usize, r: usize) -> Result<DoublySchurExpansion> {
    check_rook_args(n, m, r)?;
    let parts = (0..=n.min(m))
        .into_par_iter()
        .map(|d| {
            // once the window drops below both first parts nothing survives
            let window = (n + m).saturating_sub(d + r);
            Ok((d as u32, sf(n, m, d)?.truncate(window)))
        })
        .collect::<Result<Vec<_>>>()?;
    sum_graded(n, m, parts)
}

/// Involutions of `[n]` with `a` fixed points under conjugation:
/// `Σ_d q^d {h_d[h_2]·h_{n−2d} − h_{d−1}[h_2]·h_{n−2d+2}}_{λ₁ ≤ n−2d+a}`.
pub fn grfrob_involution(n: usize, a: usize) -> Result<SchurExpansion> {
    if a > n || (n - a) % 2 != 0 {
        return domain(format!("need 0 ≤ a ≤ n with a ≡ n (mod 2); got n={n}, a={a}"));
    }
    let mut total = SchurExpansion::zero(n);
    for d in 0..=(n - a) / 2 {
        let mut part = plethysm_h_h2(d).mul_h(n - 2 * d);
        if d > 0 {
            part = part.sub(&plethysm_h_h2(d - 1).mul_h(n - 2 * d + 2))?;
        }
        let part = part.truncate(n - 2 * d + a);
        total = total.add(&part.scale(&QPoly::monomial(d as u32, 1)))?;
    }
    Ok(total)
}

fn shape_pairs(n: usize, m: usize) -> Vec<(Partition, Partition)> {
    let ms = partitions_of(m);
    partitions_of(n)
        .into_iter()
        .flat_map(|l1| ms.iter().map(move |l2| (l1.clone(), l2.clone())))
        .collect()
}

/// Hilbert series of a graded `S_n × S_m`-module given by its Frobenius image.
pub fn hilbert(f: &DoublySchurExpansion) -> QPoly {
    let mut out = QPoly::zero();
    for ((l1, l2), c) in f.terms() {
        let dim = BigInt::from(l1.hook_dimension() * l2.hook_dimension());
        out += &c.scale(&dim);
    }
    out
}

/// Hilbert series of a graded `S_n`-module given by its Frobenius image.
pub fn hilbert_single(f: &SchurExpansion) -> QPoly {
    let mut out = QPoly::zero();
    for (l, c) in f.terms() {
        out += &c.scale(&BigInt::from(l.hook_dimension()));
    }
    out
}

/// All four rook-locus formulas are evaluated through one dispatcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Signed,
    Bad,
    Good,
    Uz,
}

pub fn grfrob(method: Method, n: usize, m: usize, r: usize) -> Result<DoublySchurExpansion> {
    match method {
        Method::Signed => grfrob_signed(n, m, r),
        Method::Bad => grfrob_bad(n, m, r),
        Method::Good => grfrob_good(n, m, r),
        Method::Uz => grfrob_uz(n, m, r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pair(l1: &str, l2: &str, c: QPoly) -> DoublySchurExpansion {
        DoublySchurExpansion::schur_pair(p(l1), p(l2)).scale(&c)
    }

    fn q(e: u32) -> QPoly {
        QPoly::monomial(e, 1)
    }

    #[test]
    fn signed_examples() {
        let f = grfrob_signed(2, 2, 1).unwrap();
        let mut want = pair("2", "2", QPoly::one());
        for (a, b) in [("2", "1,1"), ("1,1", "2"), ("1,1", "1,1")] {
            want = want.add(&pair(a, b, q(1))).unwrap();
        }
        assert_eq!(f, want);
        let f = grfrob_signed(2, 2, 2).unwrap();
        let want = pair("2", "2", QPoly::one()).add(&pair("1,1", "1,1", q(1))).unwrap();
        assert_eq!(f, want);
        assert_eq!(grfrob_signed(4, 3, 0).unwrap(), pair("4", "3", QPoly::one()));
        assert!(grfrob_signed(2, 3, 3).is_err());
    }

    #[test]
    fn bad_example() {
        let f = grfrob_bad(3, 3, 2).unwrap();
        let mut want = pair("3", "3", QPoly::one());
        for (a, b) in [("3", "2,1"), ("2,1", "3"), ("2,1", "2,1")] {
            want = want.add(&pair(a, b, q(1))).unwrap();
        }
        for (a, b) in [("2,1", "2,1"), ("2,1", "1,1,1"), ("1,1,1", "2,1"), ("1,1,1", "1,1,1")] {
            want = want.add(&pair(a, b, q(2))).unwrap();
        }
        assert_eq!(f, want);
        assert_eq!(f, grfrob_signed(3, 3, 2).unwrap());
    }

    #[test]
    fn three_formulas_agree() {
        for n in 0..=4 {
            for m in 0..=4 {
                for r in 0..=n.min(m) {
                    let s = grfrob_signed(n, m, r).unwrap();
                    assert!(s.is_schur_positive(), "({n},{m},{r})");
                    assert_eq!(s, grfrob_bad(n, m, r).unwrap(), "bad ({n},{m},{r})");
                    assert_eq!(s, grfrob_good(n, m, r).unwrap(), "good ({n},{m},{r})");
                    assert_eq!(s.eval_one(), sf(n, m, r).unwrap().eval_one());
                    assert!(s.max_q_degree().unwrap_or(0) <= r as u32);
                }
            }
        }
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert(&grfrob_signed(2, 2, 1).unwrap()).to_string(), "1 + 3q");
        assert_eq!(hilbert(&grfrob_signed(3, 3, 2).unwrap()).to_string(), "1 + 8q + 9q^2");
        for n in 0..=5u64 {
            for m in 0..=5u64 {
                for r in 0..=n.min(m) {
                    let h = hilbert(&grfrob_signed(n as usize, m as usize, r as usize).unwrap());
                    let fact: u64 = (1..=r).product();
                    let want = binomial(n, r) * binomial(m, r) * fact;
                    assert_eq!(h.eval_one(), BigInt::from(want));
                }
            }
        }
    }

    #[test]
    fn uz_examples() {
        assert_eq!(grfrob_uz(2, 2, 2).unwrap(), grfrob_signed(2, 2, 2).unwrap());
        for n in 0..=4u64 {
            for m in 0..=4u64 {
                for r in 0..=n.min(m) {
                    let h = hilbert(&grfrob_uz(n as usize, m as usize, r as usize).unwrap());
                    let want: u64 = (r..=n.min(m))
                        .map(|k| binomial(n, k) * binomial(m, k) * (1..=k).product::<u64>())
                        .sum();
                    assert_eq!(h.eval_one(), BigInt::from(want), "({n},{m},{r})");
                }
            }
        }
    }

    #[test]
    fn involution_examples() {
        let f = grfrob_involution(3, 1).unwrap();
        let want = SchurExpansion::schur(p("3"))
            .add(&SchurExpansion::schur(p("2,1")).scale(&q(1)))
            .unwrap();
        assert_eq!(f, want);
        let f = grfrob_involution(4, 0).unwrap();
        let want = SchurExpansion::schur(p("4"))
            .add(&SchurExpansion::schur(p("2,2")).scale(&q(1)))
            .unwrap();
        assert_eq!(f, want);
        assert_eq!(grfrob_involution(5, 5).unwrap(), SchurExpansion::schur(p("5")));
        assert!(grfrob_involution(4, 1).is_err());
        // total dimension is the number of involutions with a fixed points
        for n in 0..=7usize {
            for a in (n % 2..=n).step_by(2) {
                let k = (n - a) / 2;
                let pairs: u64 = (0..k).map(|i| (2 * i + 1) as u64).product();
                let want = binomial(n as u64, 2 * k as u64) * pairs;
                let h = hilbert_single(&grfrob_involution(n, a).unwrap());
                assert_eq!(h.eval_one(), BigInt::from(want), "({n},{a})");
                assert!(grfrob_involution(n, a).unwrap().is_schur_positive());
            }
        }
    }

    #[test]
    fn truncation_chain() {
        for n in 0..=5 {
            for m in 0..=5 {
                for r in 0..n.min(m) {
                    let lo = grfrob_signed(n, m, r).unwrap();
                    let hi = grfrob_signed(n, m, r + 1).unwrap();
                    for d in 0..=r {
                        let want = lo.graded_part(d as u32).truncate(n + m - d - r - 1);
                        assert_eq!(hi.graded_part(d as u32), want, "({n},{m},{r}) d={d}");
                    }
                }
            }
        }
    }

    #[test]
    fn one_is_trivial() {
        let f = grfrob_signed(1, 1, 1).unwrap();
        assert_eq!(hilbert(&f), QPoly::one());
    }
}
