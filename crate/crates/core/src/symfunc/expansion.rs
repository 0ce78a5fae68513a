//! Sparse Schur-basis expansions over `Z[q]` in one tensor factor (`Λ`) and
//! two (`Λ ⊗ Λ`).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::qpoly::QPoly;
use crate::error::{Error, Result};
use crate::partitions::{pieri_h, Partition};

/// Which tensor factor an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn accumulate<K: Ord>(terms: &mut BTreeMap<K, QPoly>, key: K, val: &QPoly) {
    if val.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(val.clone());
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += val;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

/// Element of `Λ_n` with `q`-polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, QPoly>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion { degree, terms: BTreeMap::new() }
    }

    /// The single term `s_λ` with coefficient 1.
    pub fn schur(lam: Partition) -> Self {
        let mut out = Self::zero(lam.size());
        out.terms.insert(lam, QPoly::one());
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lam: Partition, c: &QPoly) -> Result<()> {
        if lam.size() != self.degree {
            return Err(Error::Contract(format!(
                "term {lam} does not have degree {}",
                self.degree
            )));
        }
        accumulate(&mut self.terms, lam, c);
        Ok(())
    }

    pub fn coefficient(&self, lam: &Partition) -> QPoly {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::Contract(format!(
                "degree mismatch: {} vs {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            accumulate(&mut out.terms, k.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            accumulate(&mut out.terms, k.clone(), &-v);
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QPoly) -> Self {
        let mut out = Self::zero(self.degree);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, k.clone(), &(v * c));
        }
        out
    }

    /// Keeps the terms with `λ₁ ≤ bound`.
    pub fn truncate(&self, bound: usize) -> Self {
        SchurExpansion {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.first() <= bound)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Product with `h_k` by the Pieri rule.
    pub fn mul_h(&self, k: usize) -> Self {
        let mut out = Self::zero(self.degree + k);
        for (lam, c) in &self.terms {
            for nu in pieri_h(lam, k) {
                accumulate(&mut out.terms, nu, c);
            }
        }
        out
    }

    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(QPoly::is_nonnegative)
    }

    /// Coefficient of `q^e`, as an ungraded expansion.
    pub fn graded_part(&self, e: u32) -> Self {
        let mut out = Self::zero(self.degree);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, k.clone(), &QPoly::monomial(0, v.coeff(e)));
        }
        out
    }

    pub fn eval_one(&self) -> Self {
        let mut out = Self::zero(self.degree);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, k.clone(), &QPoly::monomial(0, v.eval_one()));
        }
        out
    }

    pub fn max_q_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(QPoly::degree).max()
    }

    /// One line per `(λ, q-exponent)`: `q^<e>  s[<λ>]  <coeff>`.
    pub fn to_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (lam, c) in &self.terms {
            for (e, v) in c.terms() {
                out.push(format!("q^{e}  s{lam}  {v}"));
            }
        }
        out
    }

    pub fn to_records(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (lam, c) in &self.terms {
            for (e, v) in c.terms() {
                out.push(format!("kind=term q={e} l={lam} c={v}"));
            }
        }
        out
    }
}

/// Element of `Λ_n ⊗ Λ_m` with `q`-polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoublySchurExpansion {
    degrees: (usize, usize),
    terms: BTreeMap<(Partition, Partition), QPoly>,
}

impl DoublySchurExpansion {
    pub fn zero(n: usize, m: usize) -> Self {
        DoublySchurExpansion { degrees: (n, m), terms: BTreeMap::new() }
    }

    /// `s_λ ⊗ s_μ` with coefficient 1.
    pub fn schur_pair(l1: Partition, l2: Partition) -> Self {
        let mut out = Self::zero(l1.size(), l2.size());
        out.terms.insert((l1, l2), QPoly::one());
        out
    }

    /// `F ⊗ G` for single expansions.
    pub fn tensor(f: &SchurExpansion, g: &SchurExpansion) -> Self {
        let mut out = Self::zero(f.degree(), g.degree());
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                accumulate(&mut out.terms, (a.clone(), b.clone()), &(ca * cb));
            }
        }
        out
    }

    pub fn degrees(&self) -> (usize, usize) {
        self.degrees
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &QPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, l1: Partition, l2: Partition, c: &QPoly) -> Result<()> {
        if (l1.size(), l2.size()) != self.degrees {
            return Err(Error::Contract(format!(
                "term {l1}⊗{l2} does not have degrees {:?}",
                self.degrees
            )));
        }
        accumulate(&mut self.terms, (l1, l2), c);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, l1: Partition, l2: Partition, c: &QPoly) {
        debug_assert_eq!((l1.size(), l2.size()), self.degrees);
        accumulate(&mut self.terms, (l1, l2), c);
    }

    /// `⟨s_{λ1} ⊗ s_{λ2}⟩ F`.
    pub fn coefficient(&self, l1: &Partition, l2: &Partition) -> QPoly {
        self.terms
            .get(&(l1.clone(), l2.clone()))
            .cloned()
            .unwrap_or_default()
    }

    fn check_degrees(&self, other: &Self) -> Result<()> {
        if self.degrees != other.degrees {
            return Err(Error::Contract(format!(
                "degree mismatch: {:?} vs {:?}",
                self.degrees, other.degrees
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degrees(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            accumulate(&mut out.terms, k.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_degrees(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            accumulate(&mut out.terms, k.clone(), &-v);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QPoly) -> Self {
        let mut out = Self::zero(self.degrees.0, self.degrees.1);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, k.clone(), &(v * c));
        }
        out
    }

    /// `{F}_{λ₁ ≤ bound}`: keeps terms whose index partitions both have first
    /// part at most `bound`.
    pub fn truncate(&self, bound: usize) -> Self {
        self.filter(|l1, l2| l1.first() <= bound && l2.first() <= bound)
    }

    pub fn filter(&self, keep: impl Fn(&Partition, &Partition) -> bool) -> Self {
        DoublySchurExpansion {
            degrees: self.degrees,
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| keep(a, b))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Multiplies the chosen tensor factor by `h_k`.
    pub fn mul_h(&self, k: usize, side: Side) -> Self {
        let (n, m) = self.degrees;
        let mut out = match side {
            Side::Left => Self::zero(n + k, m),
            Side::Right => Self::zero(n, m + k),
        };
        for ((a, b), c) in &self.terms {
            match side {
                Side::Left => {
                    for nu in pieri_h(a, k) {
                        accumulate(&mut out.terms, (nu, b.clone()), c);
                    }
                }
                Side::Right => {
                    for nu in pieri_h(b, k) {
                        accumulate(&mut out.terms, (a.clone(), nu), c);
                    }
                }
            }
        }
        out
    }

    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(QPoly::is_nonnegative)
    }

    /// `self − other` is Schur-positive.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        Ok(self.sub(other)?.is_schur_positive())
    }

    /// Coefficient of `q^e` as an ungraded expansion.
    pub fn graded_part(&self, e: u32) -> Self {
        let mut out = Self::zero(self.degrees.0, self.degrees.1);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, k.clone(), &QPoly::monomial(0, v.coeff(e)));
        }
        out
    }

    pub fn eval_one(&self) -> Self {
        let mut out = Self::zero(self.degrees.0, self.degrees.1);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, k.clone(), &QPoly::monomial(0, v.eval_one()));
        }
        out
    }

    pub fn max_q_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(QPoly::degree).max()
    }

    /// Sum of all integer coefficients, evaluated at q = 1.
    pub fn total_multiplicity(&self) -> BigInt {
        self.terms.values().map(QPoly::eval_one).fold(BigInt::zero(), |a, b| a + b)
    }

    /// One line per `(λ1, λ2, q-exponent)`: `q^<e>  s[<λ1>]*s[<λ2>]  <coeff>`,
    /// in canonical order.
    pub fn to_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for ((a, b), c) in &self.terms {
            for (e, v) in c.terms() {
                out.push(format!("q^{e}  s{a}*s{b}  {v}"));
            }
        }
        out
    }

    /// Self-describing record lines: `kind=term q=1 l1=[1,1] l2=[1,1] c=1`.
    pub fn to_records(&self) -> Vec<String> {
        let mut out = Vec::new();
        for ((a, b), c) in &self.terms {
            for (e, v) in c.terms() {
                out.push(format!("kind=term q={e} l1={a} l2={b} c={v}"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn self_difference_is_zero() {
        let f = DoublySchurExpansion::schur_pair(p(&[2]), p(&[1, 1]));
        assert!(f.sub(&f).unwrap().is_zero());
        let two = f.add(&f).unwrap();
        assert_eq!(two.coefficient(&p(&[2]), &p(&[1, 1])), QPoly::monomial(0, 2));
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let f = DoublySchurExpansion::schur_pair(p(&[2]), p(&[2]));
        let g = DoublySchurExpansion::schur_pair(p(&[3]), p(&[2]));
        assert!(matches!(f.add(&g), Err(Error::Contract(_))));
        let mut h = DoublySchurExpansion::zero(2, 2);
        assert!(h.add_term(p(&[3]), p(&[2]), &QPoly::one()).is_err());
    }

    #[test]
    fn mul_h_pieri() {
        let f = SchurExpansion::schur(p(&[2, 1]));
        let g = f.mul_h(2);
        let keys: Vec<_> = g.terms().map(|(k, _)| k.clone()).collect();
        assert_eq!(keys, vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])]);
        assert_eq!(f.mul_h(0), f);
        assert_eq!(SchurExpansion::schur(Partition::empty()).mul_h(3), SchurExpansion::schur(p(&[3])));
    }

    #[test]
    fn h_products_commute() {
        for lam in partitions_of(3) {
            for mu in partitions_of(2) {
                let f = DoublySchurExpansion::schur_pair(lam.clone(), mu.clone());
                for j in 0..=3 {
                    for k in 0..=3 {
                        let a = f.mul_h(j, Side::Left).mul_h(k, Side::Left);
                        let b = f.mul_h(k, Side::Left).mul_h(j, Side::Left);
                        assert_eq!(a, b);
                        let a = f.mul_h(j, Side::Right).mul_h(k, Side::Left);
                        let b = f.mul_h(k, Side::Left).mul_h(j, Side::Right);
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn truncation_drops_large_first_parts() {
        let f = DoublySchurExpansion::schur_pair(p(&[3]), p(&[3]));
        assert!(f.truncate(2).is_zero());
        assert_eq!(f.truncate(3), f);
    }

    #[test]
    fn rendering_lines() {
        let mut f = DoublySchurExpansion::zero(2, 2);
        f.add_term(p(&[1, 1]), p(&[2]), &QPoly::monomial(1, 1)).unwrap();
        f.add_term(p(&[2]), p(&[2]), &QPoly::one()).unwrap();
        assert_eq!(f.to_lines(), vec!["q^0  s[2]*s[2]  1", "q^1  s[1,1]*s[2]  1"]);
        assert_eq!(f.to_records()[1], "kind=term q=1 l1=[1,1] l2=[2] c=1");
    }
}
