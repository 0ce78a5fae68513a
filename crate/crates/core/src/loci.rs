//! The finite matrix loci: rook placements (`Z_{n,m,r}`), upper rook
//! placements (`UZ_{n,m,r}`), and involutions with a fixed number of fixed
//! points (`M_{n,a}`), together with their group actions.
//!
//! Points are stored combinatorially as sorted cell lists; rows and columns
//! are 1-indexed.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{domain, Result};
use crate::partitions::Partition;

pub type Cell = (usize, usize);

/// A permutation of `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// From the one-line notation `w(1) w(2) … w(n)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return domain(format!("{images:?} is not a permutation of 1..={n}"));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i j)` in `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    /// A standard element of cycle type `shape`: consecutive blocks
    /// `(1 2 … λ₁)(λ₁+1 …)…`.
    pub fn of_cycle_type(shape: &Partition) -> Self {
        let mut images = Vec::with_capacity(shape.size());
        let mut start = 1;
        for &len in shape.parts() {
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.apply(i)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n + 1];
        let mut lens = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("sorted cycle lengths")
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

/// A 0/1 matrix given by its set of one-entries.
pub trait ZeroOneMatrix {
    fn is_one(&self, cell: Cell) -> bool;
}

/// Non-attacking rooks on the `n × m` board.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookPlacement {
    n: usize,
    m: usize,
    cells: Vec<Cell>,
}

impl RookPlacement {
    pub fn new(n: usize, m: usize, mut cells: Vec<Cell>) -> Result<Self> {
        cells.sort_unstable();
        cells.dedup();
        let mut rows = vec![false; n + 1];
        let mut cols = vec![false; m + 1];
        for &(i, j) in &cells {
            if i == 0 || i > n || j == 0 || j > m {
                return domain(format!("cell ({i},{j}) is off the {n}×{m} board"));
            }
            if rows[i] || cols[j] {
                return domain(format!("two rooks share row {i} or column {j}"));
            }
            rows[i] = true;
            cols[j] = true;
        }
        Ok(RookPlacement { n, m, cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    /// `support ⊆ self`, both sorted.
    pub fn contains_all(&self, support: &[Cell]) -> bool {
        support.iter().all(|c| self.cells.binary_search(c).is_ok())
    }
}

impl ZeroOneMatrix for RookPlacement {
    fn is_one(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }
}

fn fmt_cells(cells: &[Cell], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str("{")?;
    for (k, (i, j)) in cells.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "({i},{j})")?;
    }
    f.write_str("}")
}

impl fmt::Display for RookPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_cells(&self.cells, f)
    }
}

/// An involution of `[n]`, stored as its 2-cycles `{i, j}` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvolutionPoint {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl InvolutionPoint {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut used = vec![false; n + 1];
        let mut norm = Vec::with_capacity(pairs.len());
        for (i, j) in pairs {
            let (i, j) = (i.min(j), i.max(j));
            if i == 0 || j > n || i == j || used[i] || used[j] {
                return domain(format!("pairs do not form an involution of [{n}]"));
            }
            used[i] = true;
            used[j] = true;
            norm.push((i, j));
        }
        norm.sort_unstable();
        Ok(InvolutionPoint { n, pairs: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn fixed_points(&self) -> usize {
        self.n - 2 * self.pairs.len()
    }

    pub fn image(&self, i: usize) -> usize {
        for &(a, b) in &self.pairs {
            if a == i {
                return b;
            }
            if b == i {
                return a;
            }
        }
        i
    }

    /// The one-entries `(i, w(i))` of the permutation matrix.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.n).map(|i| (i, self.image(i))).collect()
    }
}

impl ZeroOneMatrix for InvolutionPoint {
    fn is_one(&self, (i, j): Cell) -> bool {
        i >= 1 && i <= self.n && self.image(i) == j
    }
}

impl fmt::Display for InvolutionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, j)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{i},{j}}}")?;
        }
        f.write_str("}")
    }
}

/// Placements of exactly `r` rooks, in sorted order.
pub fn enumerate_rook(n: usize, m: usize, r: usize) -> Vec<RookPlacement> {
    let mut out = Vec::new();
    let mut cells = Vec::with_capacity(r);
    let mut used = vec![false; m + 1];
    place_rooks(1, n, m, r, &mut cells, &mut used, &mut out);
    out.sort();
    out
}

fn place_rooks(
    row: usize,
    n: usize,
    m: usize,
    left: usize,
    cells: &mut Vec<Cell>,
    used: &mut [bool],
    out: &mut Vec<RookPlacement>,
) {
    if left == 0 {
        out.push(RookPlacement { n, m, cells: cells.clone() });
        return;
    }
    if row > n || n - row + 1 < left {
        return;
    }
    for col in 1..=m {
        if !used[col] {
            used[col] = true;
            cells.push((row, col));
            place_rooks(row + 1, n, m, left - 1, cells, used, out);
            cells.pop();
            used[col] = false;
        }
    }
    place_rooks(row + 1, n, m, left, cells, used, out);
}

/// Placements of at least `r` rooks.
pub fn enumerate_uz(n: usize, m: usize, r: usize) -> Vec<RookPlacement> {
    let mut out: Vec<_> = (r..=n.min(m)).flat_map(|k| enumerate_rook(n, m, k)).collect();
    out.sort();
    out
}

/// Involutions of `[n]` with exactly `a` fixed points.
pub fn enumerate_involutions(n: usize, a: usize) -> Vec<InvolutionPoint> {
    if a > n || (n - a) % 2 != 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pairs = Vec::new();
    let mut used = vec![false; n + 1];
    match_pairs(1, n, (n - a) / 2, a, &mut pairs, &mut used, &mut out);
    out.sort();
    out
}

fn match_pairs(
    from: usize,
    n: usize,
    pairs_left: usize,
    fixed_left: usize,
    pairs: &mut Vec<(usize, usize)>,
    used: &mut [bool],
    out: &mut Vec<InvolutionPoint>,
) {
    let Some(i) = (from..=n).find(|&i| !used[i]) else {
        if pairs_left == 0 {
            out.push(InvolutionPoint { n, pairs: pairs.clone() });
        }
        return;
    };
    if fixed_left > 0 {
        used[i] = true;
        match_pairs(i + 1, n, pairs_left, fixed_left - 1, pairs, used, out);
        used[i] = false;
    }
    if pairs_left > 0 {
        used[i] = true;
        for j in i + 1..=n {
            if !used[j] {
                used[j] = true;
                pairs.push((i, j));
                match_pairs(i + 1, n, pairs_left - 1, fixed_left, pairs, used, out);
                pairs.pop();
                used[j] = false;
            }
        }
        used[i] = false;
    }
}

/// Row and column relabeling `(i, j) ↦ (g(i), h(j))`.
pub fn act_rook(g: &Permutation, h: &Permutation, p: &RookPlacement) -> RookPlacement {
    let mut cells: Vec<Cell> = p.cells.iter().map(|&(i, j)| (g.apply(i), h.apply(j))).collect();
    cells.sort_unstable();
    RookPlacement { n: p.n, m: p.m, cells }
}

/// Conjugation `w ↦ g w g⁻¹`.
pub fn act_involution(g: &Permutation, w: &InvolutionPoint) -> InvolutionPoint {
    let mut pairs: Vec<_> = w
        .pairs
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (g.apply(i), g.apply(j));
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    InvolutionPoint { n: w.n, pairs }
}

/// `m(R)` evaluated at a placement: 1 iff `R ⊆ point`.
pub fn eval_rook_monomial(support: &RookPlacement, point: &RookPlacement) -> u8 {
    u8::from(point.contains_all(&support.cells))
}

/// A monomial `Π x_{ij}^{e_ij}` evaluated at a 0/1 matrix.
pub fn eval_general_monomial(exponents: &BTreeMap<Cell, u32>, point: &impl ZeroOneMatrix) -> u8 {
    u8::from(exponents.iter().all(|(&c, &e)| e == 0 || point.is_one(c)))
}

/// One of the three loci, with the data needed to enumerate it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Locus {
    Rook { n: usize, m: usize, r: usize },
    UpperRook { n: usize, m: usize, r: usize },
    Involution { n: usize, a: usize },
}

impl Locus {
    pub fn count(&self) -> usize {
        match *self {
            Locus::Rook { n, m, r } => enumerate_rook(n, m, r).len(),
            Locus::UpperRook { n, m, r } => enumerate_uz(n, m, r).len(),
            Locus::Involution { n, a } => enumerate_involutions(n, a).len(),
        }
    }

    /// Shape of the coordinate matrix.
    pub fn board(&self) -> (usize, usize) {
        match *self {
            Locus::Rook { n, m, .. } | Locus::UpperRook { n, m, .. } => (n, m),
            Locus::Involution { n, .. } => (n, n),
        }
    }

    /// The points as sorted cell lists of their 0/1 matrices.
    pub fn point_cells(&self) -> Vec<Vec<Cell>> {
        match *self {
            Locus::Rook { n, m, r } => enumerate_rook(n, m, r).into_iter().map(|p| p.cells).collect(),
            Locus::UpperRook { n, m, r } => enumerate_uz(n, m, r).into_iter().map(|p| p.cells).collect(),
            Locus::Involution { n, a } => enumerate_involutions(n, a).iter().map(|w| w.cells()).collect(),
        }
    }

    pub fn dump(&self) -> Vec<String> {
        match *self {
            Locus::Rook { n, m, r } => enumerate_rook(n, m, r).iter().map(|p| p.to_string()).collect(),
            Locus::UpperRook { n, m, r } => enumerate_uz(n, m, r).iter().map(|p| p.to_string()).collect(),
            Locus::Involution { n, a } => enumerate_involutions(n, a).iter().map(|w| w.to_string()).collect(),
        }
    }
}
