//! Brute-force orbit harmonics: graded dimensions and graded Frobenius
//! images of `R(Z)` computed directly from evaluation matrices, with no use
//! of the closed-form formulas.
//!
//! The evaluation vector of a monomial at 0/1 points depends only on its
//! support, and vanishes on every locus here unless the support is itself a
//! partial permutation. So `E_{≤d}` is spanned by the evaluation vectors of
//! rook-shaped supports of size at most `d`; [`oracle_hilbert_full`] checks
//! this against all monomials.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use super::characters::{frobenius_from_character, frobenius_from_pair_character, ClassFunction, PairClassFunction};
use super::linalg::{rational, Echelon, Rational, SparseVec};
use crate::error::{Error, Result};
use crate::loci::{Cell, Locus, Permutation};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{DoublySchurExpansion, QPoly, SchurExpansion};

/// Rook-shaped supports on an `rows × cols` board of each size `0..=dmax`,
/// ordered by size and then lexicographically.
pub fn rook_supports(rows: usize, cols: usize, dmax: usize) -> Vec<Vec<Cell>> {
    let mut out = Vec::new();
    for size in 0..=dmax.min(rows).min(cols) {
        let mut level = Vec::new();
        let mut cur = Vec::new();
        supports_rec(1, rows, cols, size, &mut vec![false; cols + 1], &mut cur, &mut level);
        level.sort();
        out.extend(level);
    }
    out
}

fn supports_rec(
    row: usize,
    rows: usize,
    cols: usize,
    left: usize,
    used: &mut Vec<bool>,
    cur: &mut Vec<Cell>,
    out: &mut Vec<Vec<Cell>>,
) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    if row > rows || rows - row + 1 < left {
        return;
    }
    for c in 1..=cols {
        if !used[c] {
            used[c] = true;
            cur.push((row, c));
            supports_rec(row + 1, rows, cols, left - 1, used, cur, out);
            cur.pop();
            used[c] = false;
        }
    }
    supports_rec(row + 1, rows, cols, left, used, cur, out);
}

/// Points of a locus, indexed for evaluation.
struct Points {
    cells: Vec<Vec<Cell>>,
}

impl Points {
    fn new(locus: &Locus) -> Self {
        Points { cells: locus.point_cells() }
    }

    fn len(&self) -> usize {
        self.cells.len()
    }

    /// Evaluation vector of the monomial with this support.
    fn eval(&self, support: &[Cell]) -> SparseVec {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, pt)| support.iter().all(|c| pt.binary_search(c).is_ok()))
            .map(|(k, _)| (k, rational(1)))
            .collect()
    }
}

/// Largest degree that can be nonzero for the locus.
fn natural_dmax(locus: &Locus) -> usize {
    match *locus {
        Locus::Rook { r, .. } => r,
        Locus::UpperRook { n, m, .. } => n.min(m),
        Locus::Involution { n, a } => (n - a) / 2,
    }
}

/// `dim R(Z)_d` for `d = 0..=dmax`.
pub fn oracle_hilbert(locus: &Locus, dmax: usize) -> Vec<usize> {
    let pts = Points::new(locus);
    let (rows, cols) = locus.board();
    let mut ech = Echelon::new();
    let mut dims = vec![0; dmax + 1];
    for support in rook_supports(rows, cols, dmax) {
        if ech.rank() == pts.len() {
            break;
        }
        if ech.insert(pts.eval(&support)).is_some() {
            dims[support.len()] += 1;
        }
    }
    dims
}

/// [`oracle_hilbert`] computed from every monomial of degree `≤ dmax`
/// rather than the rook-shaped supports. Exponential; desk sizes only.
pub fn oracle_hilbert_full(locus: &Locus, dmax: usize) -> Vec<usize> {
    let pts = Points::new(locus);
    let (rows, cols) = locus.board();
    let vars: Vec<Cell> = (1..=rows).flat_map(|i| (1..=cols).map(move |j| (i, j))).collect();
    let mut ech = Echelon::new();
    let mut dims = vec![0; dmax + 1];
    let mut seen: BTreeSet<SparseVec> = BTreeSet::new();
    for deg in 0..=dmax {
        for exps in super::ideals::exponent_vectors(vars.len(), deg) {
            let support: Vec<Cell> = exps
                .iter()
                .zip(&vars)
                .filter(|(e, _)| **e > 0)
                .map(|(_, c)| *c)
                .collect();
            let v = pts.eval(&support);
            if !seen.insert(v.clone()) {
                continue;
            }
            if ech.insert(v).is_some() {
                dims[deg] += 1;
            }
        }
    }
    dims
}

/// How a group element moves the coordinates `x_{ij}`.
#[derive(Debug, Clone)]
enum Mover {
    Pair(Permutation, Permutation),
    Conjugate(Permutation),
}

impl Mover {
    fn apply(&self, support: &[Cell]) -> Vec<Cell> {
        let mut out: Vec<Cell> = support
            .iter()
            .map(|&(i, j)| match self {
                Mover::Pair(g, h) => (g.apply(i), h.apply(j)),
                Mover::Conjugate(g) => (g.apply(i), g.apply(j)),
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Basis of `V_{≤dmax}` chosen greedily in support order, with the degree of
/// each basis vector.
struct GradedBasis {
    echelon: Echelon,
    supports: Vec<Vec<Cell>>,
}

fn graded_basis(pts: &Points, rows: usize, cols: usize, dmax: usize) -> GradedBasis {
    let mut echelon = Echelon::tracking();
    let mut supports = Vec::new();
    for support in rook_supports(rows, cols, dmax) {
        if echelon.rank() == pts.len() {
            break;
        }
        if echelon.insert(pts.eval(&support)).is_some() {
            supports.push(support);
        }
    }
    GradedBasis { echelon, supports }
}

/// `tr(g | V_d)` for `d = 0..=dmax`. Each `V_{≤d}` is `g`-stable, so the
/// diagonal coefficient of `g·b_k` in the full basis is the same as in the
/// basis of `V_{≤deg b_k}`, and the traces split by degree.
fn graded_trace(basis: &GradedBasis, pts: &Points, mover: &Mover, dmax: usize) -> Result<Vec<Rational>> {
    let mut traces = vec![rational(0); dmax + 1];
    for (k, support) in basis.supports.iter().enumerate() {
        let image = pts.eval(&mover.apply(support));
        let coords = basis
            .echelon
            .coordinates(&image)
            .ok_or_else(|| Error::Consistency("group action leaves the span of the basis".into()))?;
        if let Some(c) = coords.get(&k) {
            traces[support.len()] += c;
        }
    }
    Ok(traces)
}

/// Graded Frobenius image computed by the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradedFrobenius {
    Product(DoublySchurExpansion),
    Single(SchurExpansion),
}

impl GradedFrobenius {
    pub fn to_lines(&self) -> Vec<String> {
        match self {
            GradedFrobenius::Product(f) => f.to_lines(),
            GradedFrobenius::Single(f) => f.to_lines(),
        }
    }

    pub fn to_records(&self) -> Vec<String> {
        match self {
            GradedFrobenius::Product(f) => f.to_records(),
            GradedFrobenius::Single(f) => f.to_records(),
        }
    }

    pub fn as_product(&self) -> Option<&DoublySchurExpansion> {
        match self {
            GradedFrobenius::Product(f) => Some(f),
            GradedFrobenius::Single(_) => None,
        }
    }

    pub fn as_single(&self) -> Option<&SchurExpansion> {
        match self {
            GradedFrobenius::Single(f) => Some(f),
            GradedFrobenius::Product(_) => None,
        }
    }
}

/// Graded Frobenius image of `R(Z)` in degrees `0..=dmax` (all nonzero
/// degrees when `dmax` is `None`).
pub fn oracle_graded_frobenius(locus: &Locus, dmax: Option<usize>) -> Result<GradedFrobenius> {
    let dmax = dmax.unwrap_or_else(|| natural_dmax(locus));
    let pts = Points::new(locus);
    let (rows, cols) = locus.board();
    let basis = graded_basis(&pts, rows, cols, dmax);
    match *locus {
        Locus::Rook { n, m, .. } | Locus::UpperRook { n, m, .. } => {
            let classes: Vec<(Partition, Partition)> = partitions_of(n)
                .into_iter()
                .flat_map(|a| partitions_of(m).into_iter().map(move |b| (a.clone(), b)))
                .collect();
            let traces = classes
                .par_iter()
                .map(|(a, b)| {
                    let mover = Mover::Pair(Permutation::of_cycle_type(a), Permutation::of_cycle_type(b));
                    graded_trace(&basis, &pts, &mover, dmax)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut total = DoublySchurExpansion::zero(n, m);
            for d in 0..=dmax {
                let chi: PairClassFunction = classes
                    .iter()
                    .zip(&traces)
                    .map(|(cls, t)| (cls.clone(), t[d].clone()))
                    .collect();
                let part = frobenius_from_pair_character(&chi, n, m)?;
                if !part.is_schur_positive() {
                    return Err(Error::Consistency(format!("negative multiplicity in degree {d}")));
                }
                total = total.add(&part.scale(&QPoly::monomial(d as u32, 1)))?;
            }
            Ok(GradedFrobenius::Product(total))
        }
        Locus::Involution { n, .. } => {
            let classes = partitions_of(n);
            let traces = classes
                .par_iter()
                .map(|a| graded_trace(&basis, &pts, &Mover::Conjugate(Permutation::of_cycle_type(a)), dmax))
                .collect::<Result<Vec<_>>>()?;
            let mut total = SchurExpansion::zero(n);
            for d in 0..=dmax {
                let chi: ClassFunction = classes
                    .iter()
                    .zip(&traces)
                    .map(|(cls, t)| (cls.clone(), t[d].clone()))
                    .collect();
                let part = frobenius_from_character(&chi, n)?;
                if !part.is_schur_positive() {
                    return Err(Error::Consistency(format!("negative multiplicity in degree {d}")));
                }
                total = total.add(&part.scale(&QPoly::monomial(d as u32, 1)))?;
            }
            Ok(GradedFrobenius::Single(total))
        }
    }
}

/// Evaluation data reused across membership queries on one locus.
pub struct EvaluationSpace {
    pts: Points,
    board: (usize, usize),
    /// `E_{≤d}` for each `d` built so far.
    filtrations: HashMap<usize, Echelon>,
}

impl EvaluationSpace {
    pub fn new(locus: &Locus) -> Self {
        EvaluationSpace { pts: Points::new(locus), board: locus.board(), filtrations: HashMap::new() }
    }

    pub fn point_count(&self) -> usize {
        self.pts.len()
    }

    /// Span of evaluation vectors of monomials of degree `≤ d`.
    pub fn filtration(&mut self, d: usize) -> &Echelon {
        let (rows, cols) = self.board;
        let pts = &self.pts;
        self.filtrations.entry(d).or_insert_with(|| {
            let mut ech = Echelon::new();
            for s in rook_supports(rows, cols, d) {
                if ech.rank() == pts.len() {
                    break;
                }
                ech.insert(pts.eval(&s));
            }
            ech
        })
    }

    /// Evaluation vector of `Σ c_α x^α`, given as (support, coefficient) pairs.
    pub fn eval_terms<'a>(&self, terms: impl Iterator<Item = (Vec<Cell>, &'a Rational)>) -> SparseVec {
        let mut dense: BTreeMap<usize, Rational> = BTreeMap::new();
        for (support, c) in terms {
            for (k, _) in self.pts.eval(&support) {
                *dense.entry(k).or_insert_with(|| rational(0)) += c;
            }
        }
        dense.retain(|_, v| *v != rational(0));
        dense
    }
}
