//! Integer partitions, Young-diagram containment, horizontal strips and
//! Pieri-rule strip enumeration.
//!
//! Partitions are kept in normal form: weakly decreasing, no zero parts.
//! The derived ordering is *reverse lexicographic* on the part sequence, so
//! `(3) < (2,1) < (1,1,1)`; every sorted collection in the crate iterates in
//! this canonical order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing sequence; trailing zeros
    /// are stripped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees normal form.
    pub(crate) fn from_normal(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(k)`; empty for `k = 0`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part, zero-indexed, with implicit zero padding.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part (`λ₁`), zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Number of cells in column `col` (1-indexed).
    pub fn column_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn conjugate(&self) -> Partition {
        Partition::from_normal((1..=self.first()).map(|c| self.column_len(c)).collect())
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        contains(inner, self)
    }

    /// Removes the lowest cell of column `col` (1-indexed); `None` unless the
    /// result is a partition.
    pub fn remove_from_column(&self, col: usize) -> Option<Partition> {
        let h = self.column_len(col);
        if h == 0 || self.part(h - 1) != col {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[h - 1] -= 1;
        if parts[h - 1] == 0 {
            parts.pop();
        }
        Some(Partition::from_normal(parts))
    }

    /// Appends a cell at the bottom of column `col` (1-indexed); `None` unless
    /// the result is a partition.
    pub fn add_to_column(&self, col: usize) -> Option<Partition> {
        if col == 0 {
            return None;
        }
        let h = self.column_len(col);
        if self.part(h) != col - 1 {
            return None;
        }
        if h > 0 && self.part(h - 1) < col {
            return None;
        }
        let mut parts = self.parts.clone();
        if h == parts.len() {
            parts.push(1);
        } else {
            parts[h] += 1;
        }
        Some(Partition::from_normal(parts))
    }

    /// Dimension of the irreducible symmetric-group module indexed by `self`
    /// (hook length formula).
    pub fn hook_dimension(&self) -> BigUint {
        let n = self.size();
        let mut num = BigUint::one();
        for k in 2..=n {
            num *= k;
        }
        let mut den = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 1..=row {
                let arm = row - j;
                let leg = self.column_len(j) - (i + 1);
                den *= arm + leg + 1;
            }
        }
        num / den
    }

    /// Cells as `(row, col)`, both 1-indexed.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `[3,2,1]`, `3,2,1`, `[]` and the empty string.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in canonical (reverse lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(n, n, &mut cur, &mut out, &|_| true);
    out
}

/// Partitions of `n` with largest part at most `max_part`.
pub fn partitions_bounded(n: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(n, max_part.min(n), &mut cur, &mut out, &|_| true);
    out
}

fn fill_partitions(
    rest: usize,
    max: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
    allow: &dyn Fn(usize) -> bool,
) {
    if rest == 0 {
        out.push(Partition::from_normal(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        if !allow(p) {
            continue;
        }
        cur.push(p);
        fill_partitions(rest - p, p, cur, out, allow);
        cur.pop();
    }
}

/// True iff `inner ⊆ outer` as Young diagrams.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
}

/// True iff `outer/inner` is a horizontal strip.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    contains(inner, outer) && (0..outer.len()).all(|i| outer.part(i + 1) <= inner.part(i))
}

/// All `λ ⊇ base` with `λ/base` a horizontal strip of size `k`, i.e. the
/// Schur support of `s_base · h_k`, in canonical order.
pub fn pieri_h(base: &Partition, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(base.len() + 1);
    pieri_fill(base, 0, k, &mut cur, &mut out);
    out
}

fn pieri_fill(base: &Partition, row: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let lo = base.part(row);
    if row > base.len() {
        if rest == 0 {
            out.push(Partition::from_normal(cur.clone()));
        }
        return;
    }
    // row 0 is unbounded above; row i is bounded by base_{i-1}
    let hi = if row == 0 { lo + rest } else { base.part(row - 1).min(lo + rest) };
    for v in (lo..=hi).rev() {
        let added = v - lo;
        if v == 0 {
            // the remaining rows are empty
            if rest == 0 {
                out.push(Partition::from_normal(cur.clone()));
            }
            continue;
        }
        cur.push(v);
        pieri_fill(base, row + 1, rest - added, cur, out);
        cur.pop();
    }
}

/// Partitions of `n` with all parts even; empty when `n` is odd.
pub fn even_partitions(n: usize) -> Vec<Partition> {
    if n % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(n, n, &mut cur, &mut out, &|p| p % 2 == 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn normal_form_strips_zeros() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[0]), Partition::empty());
    }

    #[test]
    fn partitions_of_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(4).len(), 5);
    }

    #[test]
    fn partition_numbers_match_composition_dedup() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n).len(), e, "p({n})");
        }
        // independent route: sort every composition of n
        for n in 0..=10usize {
            let mut seen = BTreeSet::new();
            for mask in 0..(1u32 << n.saturating_sub(1)) {
                if n == 0 {
                    seen.insert(Vec::new());
                    break;
                }
                let mut parts = Vec::new();
                let mut run = 1;
                for bit in 0..n - 1 {
                    if mask & (1 << bit) != 0 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                parts.sort_unstable_by(|a, b| b.cmp(a));
                seen.insert(parts);
            }
            assert_eq!(seen.len(), partitions_of(n).len());
        }
    }

    #[test]
    fn containment() {
        assert!(contains(&p(&[3, 3, 1, 1]), &p(&[4, 3, 3, 1])));
        assert!(contains(&p(&[2, 1]), &p(&[2, 1])));
        assert!(!contains(&p(&[2, 2]), &p(&[3, 1])));
    }

    #[test]
    fn horizontal_strips() {
        assert!(is_horizontal_strip(&p(&[3, 3, 1, 1]), &p(&[4, 3, 3, 1])));
        assert!(is_horizontal_strip(&p(&[2, 1]), &p(&[2, 1])));
        assert!(!is_horizontal_strip(&p(&[1]), &p(&[3, 2])));
        assert!(!is_horizontal_strip(&Partition::empty(), &p(&[1, 1])));
    }

    #[test]
    fn horizontal_strip_matches_cell_definition() {
        for size in 0..=10 {
            for outer in partitions_of(size) {
                for k in 0..=size {
                    for inner in partitions_of(k) {
                        if !contains(&inner, &outer) {
                            assert!(!is_horizontal_strip(&inner, &outer));
                            continue;
                        }
                        let inner_cells: BTreeSet<_> = inner.cells().collect();
                        let mut per_col = std::collections::BTreeMap::new();
                        for c in outer.cells().filter(|c| !inner_cells.contains(c)) {
                            *per_col.entry(c.1).or_insert(0) += 1;
                        }
                        let by_cells = per_col.values().all(|&v| v <= 1);
                        assert_eq!(is_horizontal_strip(&inner, &outer), by_cells, "{inner}/{outer}");
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            pieri_h(&p(&[2, 1]), 2),
            vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])]
        );
        assert_eq!(pieri_h(&p(&[3, 1]), 0), vec![p(&[3, 1])]);
        assert_eq!(pieri_h(&Partition::empty(), 3), vec![p(&[3])]);
    }

    #[test]
    fn pieri_agrees_with_filter() {
        for size in 0..=6 {
            for base in partitions_of(size) {
                for k in 0..=4 {
                    let got = pieri_h(&base, k);
                    let want: Vec<_> = partitions_of(size + k)
                        .into_iter()
                        .filter(|l| is_horizontal_strip(&base, l))
                        .collect();
                    assert_eq!(got, want, "{base} + {k}");
                }
            }
        }
    }

    #[test]
    fn even_partition_examples() {
        assert_eq!(even_partitions(2), vec![p(&[2])]);
        assert_eq!(even_partitions(4), vec![p(&[4]), p(&[2, 2])]);
        assert!(even_partitions(3).is_empty());
        assert_eq!(even_partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn column_edits() {
        let mu = p(&[13, 8, 6, 5, 2, 2]);
        assert_eq!(mu.remove_from_column(5), Some(p(&[13, 8, 6, 4, 2, 2])));
        assert_eq!(mu.remove_from_column(4), None);
        assert_eq!(p(&[13, 8, 6, 4, 2, 2]).add_to_column(5), Some(mu));
        assert_eq!(Partition::empty().add_to_column(1), Some(p(&[1])));
        assert_eq!(Partition::empty().add_to_column(2), None);
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(p(&[2, 1]).hook_dimension(), BigUint::from(2u32));
        assert_eq!(p(&[3, 2]).hook_dimension(), BigUint::from(5u32));
        assert_eq!(Partition::empty().hook_dimension(), BigUint::one());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,3]".parse::<Partition>().is_err());
    }
}
