//! Exact linear algebra over `ℚ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// Sparse vector: column index → nonzero entry.
pub type SparseVec = BTreeMap<usize, Rational>;

pub fn rational(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

fn axpy(target: &mut SparseVec, scale: &Rational, src: &SparseVec) {
    for (k, a) in src {
        let prod = scale * a;
        match target.get_mut(k) {
            Some(x) => {
                *x -= prod;
                if x.is_zero() {
                    target.remove(k);
                }
            }
            None => {
                target.insert(*k, -prod);
            }
        }
    }
}

#[derive(Debug, Clone)]
struct EchelonRow {
    entries: SparseVec,
    /// Expression of this row in the inserted vectors.
    combo: SparseVec,
}

/// Incremental row echelon form. Each stored row has leading entry 1 at its
/// pivot column, and every inserted vector is remembered by index so that
/// vectors in the span can be written in terms of the inserted ones.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, EchelonRow>,
    inserted: usize,
    track: bool,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Keeps coordinates relative to the accepted vectors; see [`Echelon::coordinates`].
    pub fn tracking() -> Self {
        Echelon { track: true, ..Self::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v`; returns the residual and, when tracking, the accumulated
    /// combination of accepted vectors that was subtracted.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, SparseVec) {
        let mut acc = SparseVec::new();
        let mut from = 0;
        loop {
            let hit = v
                .range(from..)
                .find(|(c, _)| self.rows.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            let Some((col, x)) = hit else {
                return (v, acc);
            };
            let row = &self.rows[&col];
            axpy(&mut v, &x, &row.entries);
            if self.track {
                axpy(&mut acc, &-x, &row.combo);
            }
            from = col + 1;
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).0.is_empty()
    }

    /// Adds `v`; returns its index among accepted vectors if it was
    /// independent of those before it.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let (mut residual, mut acc) = self.reduce(v);
        let (&pivot, lead) = residual.iter().next()?;
        let inv = lead.recip();
        let index = self.inserted;
        self.inserted += 1;
        for x in residual.values_mut() {
            *x *= &inv;
        }
        let combo = if self.track {
            // residual = v − acc, with v the new accepted vector
            let mut c = SparseVec::new();
            c.insert(index, Rational::one());
            axpy(&mut c, &Rational::one(), &acc);
            for x in c.values_mut() {
                *x *= &inv;
            }
            c
        } else {
            acc.clear();
            acc
        };
        self.rows.insert(pivot, EchelonRow { entries: residual, combo });
        Some(index)
    }

    /// Coordinates of `v` in the accepted vectors, or `None` outside the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.track, "coordinates need a tracking echelon");
        let (residual, acc) = self.reduce(v.clone());
        residual.is_empty().then_some(acc)
    }
}

pub fn sparse_from_dense(row: &[Rational]) -> SparseVec {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Rational>>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![vec![Rational::zero(); cols]; rows] }
    }

    /// Panics on ragged input.
    pub fn from_rows(entries: Vec<Vec<Rational>>) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        assert!(entries.iter().all(|r| r.len() == cols), "ragged matrix");
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_integers(entries: &[Vec<i64>]) -> Self {
        Self::from_rows(entries.iter().map(|r| r.iter().map(|&x| rational(x)).collect()).collect())
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.entries[i][j] = x;
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for row in &self.entries {
            ech.insert(sparse_from_dense(row));
        }
        ech.rank()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.entries[i][i].clone()).sum()
    }

    /// Some `x` with `A x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        // columns of A are the vectors; b must be in their span
        let mut ech = Echelon::tracking();
        let mut accepted = Vec::new();
        for j in 0..self.cols {
            let col: Vec<Rational> = (0..self.rows).map(|i| self.entries[i][j].clone()).collect();
            if ech.insert(sparse_from_dense(&col)).is_some() {
                accepted.push(j);
            }
        }
        let coords = ech.coordinates(&sparse_from_dense(b))?;
        let mut x = vec![Rational::zero(); self.cols];
        for (k, c) in coords {
            x[accepted[k]] = c;
        }
        Some(x)
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_and_solve() {
        let a = ExactMatrix::from_integers(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let b = vec![rational(4), rational(8), rational(2)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(a.solve(&[rational(1), rational(0), rational(0)]).is_none());
        assert_eq!(ExactMatrix::zeros(3, 2).rank(), 0);
        assert_eq!(a.trace(), rational(6));
    }

    #[test]
    fn coordinates_follow_insertion_order() {
        let mut e = Echelon::tracking();
        let v0 = sparse_from_dense(&[rational(1), rational(1)]);
        let v1 = sparse_from_dense(&[rational(1), rational(-1)]);
        assert_eq!(e.insert(v0.clone()), Some(0));
        assert_eq!(e.insert(v0.clone()), None);
        assert_eq!(e.insert(v1), Some(1));
        let c = e.coordinates(&sparse_from_dense(&[rational(3), rational(1)])).unwrap();
        assert_eq!(c.get(&0), Some(&rational(2)));
        assert_eq!(c.get(&1), Some(&rational(1)));
    }

    proptest! {
        #[test]
        fn rank_is_row_order_independent(
            rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..6)
        ) {
            let a = ExactMatrix::from_integers(&rows);
            let mut rev = rows.clone();
            rev.reverse();
            prop_assert_eq!(a.rank(), ExactMatrix::from_integers(&rev).rank());
            // and equals the rank of the transpose
            let t: Vec<Vec<i64>> = (0..4).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
            if !rows.is_empty() {
                prop_assert_eq!(a.rank(), ExactMatrix::from_integers(&t).rank());
            }
        }

        #[test]
        fn solve_reproduces_rhs(
            rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..5),
            x in prop::collection::vec(-3i64..=3, 3)
        ) {
            let a = ExactMatrix::from_integers(&rows);
            let x: Vec<Rational> = x.into_iter().map(rational).collect();
            let b = a.mul_vec(&x);
            let y = a.solve(&b).expect("b is in the column space");
            prop_assert_eq!(a.mul_vec(&y), b);
        }
    }
}
