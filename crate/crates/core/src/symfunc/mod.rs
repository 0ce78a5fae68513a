//! Symmetric functions in the Schur basis.
//!
//! Besides the expansion types this module builds the doubly symmetric
//! functions `SF_d = Σ_{μ⊢d} (s_μ h_{n−d}) ⊗ (s_μ h_{m−d})` and checks the
//! coefficient, interchange, refinement and summation identities they obey.

mod expansion;
mod qpoly;

pub use expansion::{DoublySchurExpansion, SchurExpansion, Side};
pub use qpoly::QPoly;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{domain, Result};
use crate::partitions::{even_partitions, partitions_of, pieri_h, Partition};

/// `SF_d ∈ Λ_n ⊗ Λ_m`, all coefficients constant.
pub fn sf(n: usize, m: usize, d: usize) -> Result<DoublySchurExpansion> {
    if d > n.min(m) {
        return domain(format!("SF_{d} needs d ≤ min(n,m) = {}", n.min(m)));
    }
    let mut out = DoublySchurExpansion::zero(n, m);
    let one = QPoly::one();
    for mu in partitions_of(d) {
        let left = pieri_h(&mu, n - d);
        let right = pieri_h(&mu, m - d);
        for a in &left {
            for b in &right {
                out.add_term_unchecked(a.clone(), b.clone(), &one);
            }
        }
    }
    Ok(out)
}

/// `SF_d` with the convention `SF_{-1} = 0`.
pub(crate) fn sf_signed(n: usize, m: usize, d: isize) -> Result<DoublySchurExpansion> {
    if d < 0 {
        Ok(DoublySchurExpansion::zero(n, m))
    } else {
        sf(n, m, d as usize)
    }
}

/// `h_d[h_2] = Σ_{λ ⊢ 2d, λ even} s_λ`.
pub fn plethysm_h_h2(d: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero(2 * d);
    for lam in even_partitions(2 * d) {
        out.add_term(lam, &QPoly::one()).expect("even partitions have size 2d");
    }
    out
}

/// `⟨s_{λ1} ⊗ s_{λ2}⟩ F`.
pub fn coefficient(f: &DoublySchurExpansion, l1: &Partition, l2: &Partition) -> QPoly {
    f.coefficient(l1, l2)
}

/// `Σ_{μ⊢d} {s_μ h_a}_{λ₁=p} ⊗ {s_μ h_b}_{λ₁=q}` by direct Pieri expansion.
pub fn filtered_pieri_sum(d: usize, a: usize, b: usize, p: usize, q: usize) -> DoublySchurExpansion {
    let mut out = DoublySchurExpansion::zero(a + d, b + d);
    let one = QPoly::one();
    for mu in partitions_of(d) {
        let left: Vec<_> = pieri_h(&mu, a).into_iter().filter(|l| l.first() == p).collect();
        if left.is_empty() {
            continue;
        }
        let right: Vec<_> = pieri_h(&mu, b).into_iter().filter(|l| l.first() == q).collect();
        for l1 in &left {
            for l2 in &right {
                out.add_term_unchecked(l1.clone(), l2.clone(), &one);
            }
        }
    }
    out
}

/// Closed form for the coefficient of `s_{λ1} ⊗ s_{λ2}` in
/// [`filtered_pieri_sum`]`(d, a, b, p, q)`: zero unless `λ1₁ = p`, `λ2₁ = q`
/// and the rows interlace (`min(λ1_i, λ2_i) ≥ max(λ1_{i+1}, λ2_{i+1})`);
/// otherwise the coefficient of `q^{d − Σ max(λ1_{i+1}, λ2_{i+1})}` in
/// `Π_i [min(λ1_i, λ2_i) − max(λ1_{i+1}, λ2_{i+1}) + 1]_q`.
pub fn coef_closed_form(
    d: usize,
    a: usize,
    b: usize,
    p: usize,
    q: usize,
    l1: &Partition,
    l2: &Partition,
) -> Result<BigInt> {
    if l1.size() != a + d || l2.size() != b + d {
        return domain(format!(
            "need |λ1| = a+d = {} and |λ2| = b+d = {}, got {} and {}",
            a + d,
            b + d,
            l1.size(),
            l2.size()
        ));
    }
    if l1.first() != p || l2.first() != q {
        return Ok(BigInt::zero());
    }
    let rows = l1.len().max(l2.len());
    let mut product = QPoly::one();
    let mut lower_sum = 0usize;
    for i in 0..rows {
        let hi = l1.part(i).min(l2.part(i));
        let lo = l1.part(i + 1).max(l2.part(i + 1));
        if hi < lo {
            return Ok(BigInt::zero());
        }
        lower_sum += lo;
        product = &product * &QPoly::q_integer((hi - lo) as u32);
    }
    if lower_sum > d {
        return Ok(BigInt::zero());
    }
    Ok(product.coeff((d - lower_sum) as u32))
}

/// Outcome of comparing both sides of the Schur interchange identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InterchangeOutcome {
    pub holds: bool,
    /// The right-hand side has a negative index, so it is zero by convention.
    pub vacuous: bool,
}

/// Compares `Σ_{μ⊢d} {s_μ h_a}_{λ₁=p} ⊗ {s_μ h_b}_{λ₁=q}` with
/// `Σ_{μ⊢d+a+b−M} {s_μ h_{M−b}}_{λ₁=p} ⊗ {s_μ h_{M−a}}_{λ₁=q}`, `M = max(p,q)`.
///
/// When an index on the right is negative the right side is taken as zero and
/// the outcome is flagged vacuous; the left side is still expanded and must
/// vanish.
pub fn verify_schur_interchange(d: usize, a: usize, b: usize, p: usize, q: usize) -> InterchangeOutcome {
    let lhs = filtered_pieri_sum(d, a, b, p, q);
    let big = p.max(q);
    if big < a || big < b || d + a + b < big {
        return InterchangeOutcome { holds: lhs.is_zero(), vacuous: true };
    }
    let rhs = filtered_pieri_sum(d + a + b - big, big - b, big - a, p, q);
    InterchangeOutcome { holds: lhs == rhs, vacuous: false }
}

/// `SF_r = Σ_{d=0}^{r} {SF_d − SF_{d−1}}_{λ₁ ≤ n+m−d−r}`.
pub fn verify_refinement(n: usize, m: usize, r: usize) -> Result<bool> {
    let lhs = sf(n, m, r)?;
    let mut rhs = DoublySchurExpansion::zero(n, m);
    for d in 0..=r {
        let diff = sf(n, m, d)?.sub(&sf_signed(n, m, d as isize - 1)?)?;
        rhs = rhs.add(&diff.truncate(n + m - d - r))?;
    }
    Ok(lhs == rhs)
}

/// `Σ_d {SF_d}_{λ₁≤n+m−2d} + Σ_{d<min} {SF_d}_{λ₁≤n+m−2d−1} = Σ_r SF_r`.
pub fn verify_schur_sum(n: usize, m: usize) -> Result<bool> {
    let top = n.min(m);
    let mut lhs = DoublySchurExpansion::zero(n, m);
    let mut rhs = DoublySchurExpansion::zero(n, m);
    for d in 0..=top {
        let f = sf(n, m, d)?;
        lhs = lhs.add(&f.truncate(n + m - 2 * d))?;
        if d < top {
            lhs = lhs.add(&f.truncate(n + m - 2 * d - 1))?;
        }
        rhs = rhs.add(&f)?;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn pair_set(f: &DoublySchurExpansion) -> Vec<(Partition, Partition, QPoly)> {
        f.terms().map(|((a, b), c)| (a.clone(), b.clone(), c.clone())).collect()
    }

    #[test]
    fn sf_small_cases() {
        assert_eq!(sf(2, 2, 0).unwrap(), DoublySchurExpansion::schur_pair(p(&[2]), p(&[2])));
        let f = sf(2, 2, 1).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.terms().all(|(_, c)| *c == QPoly::one()));
        let g = sf(3, 3, 2).unwrap();
        assert_eq!(g.coefficient(&p(&[2, 1]), &p(&[2, 1])), QPoly::monomial(0, 2));
        assert_eq!(g.coefficient(&p(&[3]), &p(&[3])), QPoly::one());
        assert_eq!(g.coefficient(&p(&[3]), &p(&[1, 1, 1])), QPoly::zero());
        assert_eq!(g.len(), 7);
        assert!(sf(2, 3, 3).is_err());
    }

    #[test]
    fn sf_difference_and_truncation() {
        let diff = sf(2, 2, 1).unwrap().sub(&sf(2, 2, 0).unwrap()).unwrap();
        let one = QPoly::one();
        assert_eq!(
            pair_set(&diff),
            vec![
                (p(&[2]), p(&[1, 1]), one.clone()),
                (p(&[1, 1]), p(&[2]), one.clone()),
                (p(&[1, 1]), p(&[1, 1]), one.clone()),
            ]
        );
        assert_eq!(
            sf(2, 2, 1).unwrap().truncate(1),
            DoublySchurExpansion::schur_pair(p(&[1, 1]), p(&[1, 1]))
        );
        assert_eq!(coefficient(&sf(2, 2, 0).unwrap(), &p(&[1, 1]), &p(&[2])), QPoly::zero());
    }

    #[test]
    fn plethysm_examples() {
        assert_eq!(plethysm_h_h2(0), SchurExpansion::schur(Partition::empty()));
        assert_eq!(plethysm_h_h2(1), SchurExpansion::schur(p(&[2])));
        let h2 = plethysm_h_h2(2);
        assert_eq!(h2.terms().map(|(k, _)| k.clone()).collect::<Vec<_>>(), vec![p(&[4]), p(&[2, 2])]);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(coef_closed_form(1, 1, 1, 2, 2, &p(&[2]), &p(&[2])).unwrap(), BigInt::from(1));
        assert_eq!(coef_closed_form(1, 1, 1, 1, 2, &p(&[2]), &p(&[2])).unwrap(), BigInt::zero());
        assert_eq!(
            coef_closed_form(2, 0, 0, 1, 1, &p(&[1, 1]), &p(&[1, 1])).unwrap(),
            BigInt::from(1)
        );
        assert!(coef_closed_form(1, 1, 1, 2, 2, &p(&[3]), &p(&[2])).is_err());
    }

    #[test]
    fn interchange_examples() {
        assert_eq!(
            verify_schur_interchange(1, 1, 1, 2, 2),
            InterchangeOutcome { holds: true, vacuous: false }
        );
        let vac = verify_schur_interchange(0, 3, 0, 1, 1);
        assert!(vac.vacuous && vac.holds);
    }

    #[test]
    fn refinement_and_sum_small() {
        assert!(verify_refinement(2, 2, 1).unwrap());
        assert!(verify_refinement(4, 3, 0).unwrap());
        assert!(verify_schur_sum(3, 3).unwrap());
    }
}
