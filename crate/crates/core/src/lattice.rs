//! Lattice paths attached to pairs of horizontal strips over a common inner
//! partition, the width statistic, and the two bijections that turn the
//! signed graded character into sign-free sums.
//!
//! Columns and steps are 1-indexed: step `i` describes column `i`, and
//! `height(x)` is the y-coordinate after `x` steps.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{domain, Error, Result};
use crate::partitions::{is_horizontal_strip, partitions_of, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// `(1, 1)`: the column meets both strips.
    NE,
    /// `(1, 0)`: the column meets exactly one strip.
    HE,
    /// `(1, −1)`: the column meets neither strip.
    SE,
}

impl Step {
    pub fn value(self) -> i64 {
        match self {
            Step::NE => 1,
            Step::HE => 0,
            Step::SE => -1,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Step::NE => "NE",
            Step::HE => "HE",
            Step::SE => "SE",
        };
        f.write_str(s)
    }
}

/// A stored prefix of a path from the origin; every step past the prefix is SE.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn from_steps(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Step `i` (1-indexed), SE past the stored prefix.
    pub fn step(&self, i: usize) -> Step {
        assert!(i >= 1, "steps are 1-indexed");
        self.steps.get(i - 1).copied().unwrap_or(Step::SE)
    }

    pub fn height(&self, x: usize) -> i64 {
        let stored: i64 = self.steps.iter().take(x).map(|s| s.value()).sum();
        stored - x.saturating_sub(self.steps.len()) as i64
    }

    /// Heights at `x = 0, 1, …, upto`.
    pub fn heights(&self, upto: usize) -> Vec<i64> {
        let mut out = Vec::with_capacity(upto + 1);
        let mut h = 0;
        out.push(h);
        for i in 1..=upto {
            h += self.step(i).value();
            out.push(h);
        }
        out
    }

    /// Debug dump, one `x=<i> step=<NE|HE|SE> h=<height>` line per stored step.
    pub fn dump(&self) -> Vec<String> {
        let hs = self.heights(self.steps.len());
        self.steps
            .iter()
            .enumerate()
            .map(|(i, s)| format!("x={} step={} h={}", i + 1, s, hs[i + 1]))
            .collect()
    }
}

fn meets_strip(inner: &Partition, outer: &Partition, col: usize) -> bool {
    outer.column_len(col) > inner.column_len(col)
}

fn check_strips(mu: &Partition, lam1: &Partition, lam2: &Partition) -> Result<()> {
    if !is_horizontal_strip(mu, lam1) || !is_horizontal_strip(mu, lam2) {
        return domain(format!("{lam1}/{mu} and {lam2}/{mu} must both be horizontal strips"));
    }
    Ok(())
}

/// The path of `(μ, λ1, λ2)` stored to length `len`.
pub fn lattice_path(mu: &Partition, lam1: &Partition, lam2: &Partition, len: usize) -> Result<LatticePath> {
    check_strips(mu, lam1, lam2)?;
    Ok(path_unchecked(mu, lam1, lam2, len))
}

fn path_unchecked(mu: &Partition, lam1: &Partition, lam2: &Partition, len: usize) -> LatticePath {
    let steps = (1..=len)
        .map(|col| match (meets_strip(mu, lam1, col), meets_strip(mu, lam2, col)) {
            (true, true) => Step::NE,
            (false, false) => Step::SE,
            _ => Step::HE,
        })
        .collect();
    LatticePath { steps }
}

/// All `(i, j)`, `i < j`, within the stored prefix, with step `i` NE, step
/// `j` SE and `height(i−1) = height(j)`.
pub fn reflection_pairs(path: &LatticePath) -> BTreeSet<(usize, usize)> {
    reflection_pairs_within(path, path.len())
}

fn reflection_pairs_within(path: &LatticePath, upto: usize) -> BTreeSet<(usize, usize)> {
    let hs = path.heights(upto);
    let mut out = BTreeSet::new();
    for i in 1..=upto {
        if path.step(i) != Step::NE {
            continue;
        }
        for j in i + 1..=upto {
            if path.step(j) == Step::SE && hs[i - 1] == hs[j] {
                out.insert((i, j));
            }
        }
    }
    out
}

/// `max{M, λ1₁, λ2₁}` where `M` is the largest right index of a reflection
/// pair of the infinite path (0 when there is none).
pub fn width(mu: &Partition, lam1: &Partition, lam2: &Partition) -> Result<usize> {
    check_strips(mu, lam1, lam2)?;
    Ok(width_unchecked(mu, lam1, lam2))
}

fn width_unchecked(mu: &Partition, lam1: &Partition, lam2: &Partition) -> usize {
    let ell = lam1.first().max(lam2.first());
    let prefix = path_unchecked(mu, lam1, lam2, ell);
    let hs = prefix.heights(ell);
    // past `ell` the path only descends; once it is below every height it has
    // visited no further pair can close
    let lowest = *hs.iter().min().expect("nonempty");
    let reach = ell + (hs[ell] - lowest).max(0) as usize + 1;
    let max_j = reflection_pairs_within(&prefix, reach)
        .into_iter()
        .map(|(_, j)| j)
        .max()
        .unwrap_or(0);
    max_j.max(ell)
}

/// Parameters shared by the strip-pair sets and bijections: `λ1 ⊢ n`,
/// `λ2 ⊢ m`, and `0 ≤ d ≤ r ≤ min(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripPairContext {
    pub lam1: Partition,
    pub lam2: Partition,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub d: usize,
}

impl StripPairContext {
    pub fn new(lam1: Partition, lam2: Partition, n: usize, m: usize, r: usize, d: usize) -> Result<Self> {
        if lam1.size() != n || lam2.size() != m {
            return domain(format!("need λ1 ⊢ {n} and λ2 ⊢ {m}, got {lam1} and {lam2}"));
        }
        if d > r || r > n.min(m) {
            return domain(format!("need 0 ≤ d ≤ r ≤ min(n,m); got d={d}, r={r}, n={n}, m={m}"));
        }
        Ok(StripPairContext { lam1, lam2, n, m, r, d })
    }

    /// `n + m − d − r`.
    pub fn window(&self) -> usize {
        self.n + self.m - self.d - self.r
    }

    /// Both first parts fit inside the window, so `H⁺` and `Φ` are defined.
    pub fn is_admissible(&self) -> bool {
        self.lam1.first().max(self.lam2.first()) <= self.window()
    }

    fn require_admissible(&self) -> Result<()> {
        if !self.is_admissible() {
            return domain(format!(
                "first parts of {} and {} exceed the window {}",
                self.lam1,
                self.lam2,
                self.window()
            ));
        }
        Ok(())
    }

    fn path(&self, mu: &Partition) -> LatticePath {
        path_unchecked(mu, &self.lam1, &self.lam2, self.window())
    }
}

/// `H(d, λ1, λ2)`: all `μ ⊢ d` with `λ1/μ` and `λ2/μ` horizontal strips.
pub fn hori_set(d: usize, lam1: &Partition, lam2: &Partition) -> Vec<Partition> {
    let rows = lam1.len().max(lam2.len());
    let lo: Vec<usize> = (0..rows).map(|i| lam1.part(i + 1).max(lam2.part(i + 1))).collect();
    let hi: Vec<usize> = (0..rows).map(|i| lam1.part(i).min(lam2.part(i))).collect();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Vec::new();
    }
    let min_total: usize = lo.iter().sum();
    let mut room_after = vec![0usize; rows + 1];
    for i in (0..rows).rev() {
        room_after[i] = room_after[i + 1] + (hi[i] - lo[i]);
    }
    if d < min_total || d > min_total + room_after[0] {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    interlace(0, d - min_total, &lo, &hi, &room_after, &mut cur, &mut out);
    out
}

fn interlace(
    row: usize,
    extra: usize,
    lo: &[usize],
    hi: &[usize],
    room_after: &[usize],
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == lo.len() {
        if extra == 0 {
            let mut parts = cur.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition::new(parts).expect("interlacing rows decrease"));
        }
        return;
    }
    let span = hi[row] - lo[row];
    let need_min = extra.saturating_sub(room_after[row + 1]);
    for take in (need_min..=span.min(extra)).rev() {
        cur.push(lo[row] + take);
        interlace(row + 1, extra - take, lo, hi, room_after, cur, out);
        cur.pop();
    }
}

fn in_hori_set(mu: &Partition, lam1: &Partition, lam2: &Partition) -> bool {
    is_horizontal_strip(mu, lam1) && is_horizontal_strip(mu, lam2)
}

fn is_positive(mu: &Partition, ctx: &StripPairContext) -> bool {
    ctx.path(mu).heights(ctx.window()).iter().all(|&h| h >= 0)
}

/// `H⁺(d, λ1, λ2)`: members of `H(d, λ1, λ2)` whose path stays weakly above
/// the x-axis for the first `n + m − d − r` steps.
pub fn hori_positive(
    d: usize,
    lam1: &Partition,
    lam2: &Partition,
    n: usize,
    m: usize,
    r: usize,
) -> Result<Vec<Partition>> {
    let ctx = StripPairContext::new(lam1.clone(), lam2.clone(), n, m, r, d)?;
    ctx.require_admissible()?;
    Ok(hori_set(d, lam1, lam2)
        .into_iter()
        .filter(|mu| is_positive(mu, &ctx))
        .collect())
}

/// `H^wid(d, λ1, λ2)`: members of `H(r, λ1, λ2)` of width `n + m − d − r`.
pub fn hori_wid(
    d: usize,
    lam1: &Partition,
    lam2: &Partition,
    n: usize,
    m: usize,
    r: usize,
) -> Result<Vec<Partition>> {
    let ctx = StripPairContext::new(lam1.clone(), lam2.clone(), n, m, r, d)?;
    let w = ctx.window();
    Ok(hori_set(r, lam1, lam2)
        .into_iter()
        .filter(|mu| width_unchecked(mu, lam1, lam2) == w)
        .collect())
}

fn first_min(hs: &[i64]) -> usize {
    let low = *hs.iter().min().expect("nonempty");
    hs.iter().position(|&h| h == low).expect("present")
}

fn last_min(hs: &[i64]) -> usize {
    let low = *hs.iter().min().expect("nonempty");
    hs.iter().rposition(|&h| h == low).expect("present")
}

/// Column `x₀` whose lowest cell `Φ` removes: the first position where the
/// windowed path of `μ` attains its minimum.
pub fn phi_pivot(mu: &Partition, ctx: &StripPairContext) -> Result<usize> {
    ctx.require_admissible()?;
    if ctx.d == 0 {
        return domain("Φ is defined only for d > 0");
    }
    if mu.size() != ctx.d || !in_hori_set(mu, &ctx.lam1, &ctx.lam2) {
        return domain(format!("{mu} is not in H({}, {}, {})", ctx.d, ctx.lam1, ctx.lam2));
    }
    if is_positive(mu, ctx) {
        return domain(format!("{mu} lies in H⁺, outside the domain of Φ"));
    }
    Ok(first_min(&ctx.path(mu).heights(ctx.window())))
}

/// `Φ : H(d) \ H⁺(d) → H(d−1)`.
pub fn phi(mu: &Partition, ctx: &StripPairContext) -> Result<Partition> {
    let x0 = phi_pivot(mu, ctx)?;
    mu.remove_from_column(x0)
        .ok_or_else(|| Error::Consistency(format!("column {x0} of {mu} has no removable cell")))
}

/// Inverse of [`phi`]: adds a cell to column `x₀′ + 1`, where `x₀′` is the
/// last position where the windowed path of `ν` attains its minimum.
pub fn phi_inverse(nu: &Partition, ctx: &StripPairContext) -> Result<Partition> {
    ctx.require_admissible()?;
    if ctx.d == 0 || nu.size() + 1 != ctx.d || !in_hori_set(nu, &ctx.lam1, &ctx.lam2) {
        return domain(format!("{nu} is not in H({}, {}, {})", ctx.d as isize - 1, ctx.lam1, ctx.lam2));
    }
    let x0 = last_min(&ctx.path(nu).heights(ctx.window()));
    nu.add_to_column(x0 + 1)
        .ok_or_else(|| Error::Consistency(format!("cannot add a cell to column {} of {nu}", x0 + 1)))
}

fn shift_columns(p: &Partition, cols: &[usize], delta: i64) -> Option<Partition> {
    let reach = p.first().max(cols.iter().copied().max().unwrap_or(0));
    let mut conj: Vec<i64> = (1..=reach).map(|c| p.column_len(c) as i64).collect();
    for &c in cols {
        conj[c - 1] += delta;
    }
    if conj.iter().any(|&v| v < 0) {
        return None;
    }
    let conj: Vec<usize> = conj.into_iter().map(|v| v as usize).collect();
    Partition::new(conj).ok().map(|q| q.conjugate())
}

/// Left shadow map `LS : H⁺(d) → H^wid(d)`: adds a cell to every column `i`
/// in the window whose step is NE and is not the left end of a reflection
/// pair closing inside the window.
pub fn ls(mu: &Partition, ctx: &StripPairContext) -> Result<Partition> {
    ctx.require_admissible()?;
    if mu.size() != ctx.d || !in_hori_set(mu, &ctx.lam1, &ctx.lam2) || !is_positive(mu, ctx) {
        return domain(format!("{mu} is not in H⁺({}, {}, {})", ctx.d, ctx.lam1, ctx.lam2));
    }
    let w = ctx.window();
    let path = ctx.path(mu);
    let lefts: BTreeSet<usize> = reflection_pairs_within(&path, w).into_iter().map(|(i, _)| i).collect();
    let cols: Vec<usize> = (1..=w)
        .filter(|&i| path.step(i) == Step::NE && !lefts.contains(&i))
        .collect();
    shift_columns(mu, &cols, 1)
        .ok_or_else(|| Error::Consistency(format!("left shadow of {mu} is not a partition")))
}

/// Inverse of [`ls`]: removes the lowest cell of every column `j` in the
/// window whose step is SE and is not the right end of a reflection pair.
pub fn ls_inverse(nu: &Partition, ctx: &StripPairContext) -> Result<Partition> {
    ctx.require_admissible()?;
    let w = ctx.window();
    if nu.size() != ctx.r
        || !in_hori_set(nu, &ctx.lam1, &ctx.lam2)
        || width_unchecked(nu, &ctx.lam1, &ctx.lam2) != w
    {
        return domain(format!("{nu} is not in H^wid({}, {}, {})", ctx.d, ctx.lam1, ctx.lam2));
    }
    let path = ctx.path(nu);
    let rights: BTreeSet<usize> = reflection_pairs_within(&path, w).into_iter().map(|(_, j)| j).collect();
    let cols: Vec<usize> = (1..=w)
        .filter(|&j| path.step(j) == Step::SE && !rights.contains(&j))
        .collect();
    shift_columns(nu, &cols, -1)
        .ok_or_else(|| Error::Consistency(format!("right shadow of {nu} is not a partition")))
}

/// Summary of an exhaustive bijection check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BijectionReport {
    pub contexts: usize,
    pub elements: usize,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn admissible_contexts(n: usize, m: usize) -> Vec<StripPairContext> {
    let mut out = Vec::new();
    for lam1 in partitions_of(n) {
        for lam2 in partitions_of(m) {
            for r in 0..=n.min(m) {
                for d in 0..=r {
                    let ctx = StripPairContext::new(lam1.clone(), lam2.clone(), n, m, r, d)
                        .expect("parameters in range");
                    if ctx.is_admissible() {
                        out.push(ctx);
                    }
                }
            }
        }
    }
    out
}

/// Checks that `Φ` maps `H(d) \ H⁺(d)` bijectively onto `H(d−1)` with
/// [`phi_inverse`] as two-sided inverse and `0 < x₀ < n+m−d−r`, for every
/// `λ1 ⊢ n`, `λ2 ⊢ m` and admissible `(d, r)` with `d > 0`.
pub fn certify_phi(n: usize, m: usize) -> BijectionReport {
    let mut report = BijectionReport::default();
    for ctx in admissible_contexts(n, m).into_iter().filter(|c| c.d > 0) {
        report.contexts += 1;
        let tag = format!("λ1={} λ2={} d={} r={}", ctx.lam1, ctx.lam2, ctx.d, ctx.r);
        let domain_set: Vec<_> = hori_set(ctx.d, &ctx.lam1, &ctx.lam2)
            .into_iter()
            .filter(|mu| !is_positive(mu, &ctx))
            .collect();
        let codomain: BTreeSet<_> = hori_set(ctx.d - 1, &ctx.lam1, &ctx.lam2).into_iter().collect();
        let mut images = BTreeSet::new();
        for mu in &domain_set {
            report.elements += 1;
            let x0 = match phi_pivot(mu, &ctx) {
                Ok(x) => x,
                Err(e) => {
                    report.failures.push(format!("{tag}: {e}"));
                    continue;
                }
            };
            if !(0 < x0 && x0 < ctx.window()) {
                report.failures.push(format!("{tag}: x0={x0} outside (0, {})", ctx.window()));
            }
            match phi(mu, &ctx) {
                Ok(nu) => {
                    if !codomain.contains(&nu) {
                        report.failures.push(format!("{tag}: Φ({mu})={nu} outside H(d−1)"));
                    }
                    match phi_inverse(&nu, &ctx) {
                        Ok(back) if &back == mu => {}
                        other => report.failures.push(format!("{tag}: Φ⁻¹(Φ({mu})) = {other:?}")),
                    }
                    if !images.insert(nu.clone()) {
                        report.failures.push(format!("{tag}: Φ not injective at {nu}"));
                    }
                }
                Err(e) => report.failures.push(format!("{tag}: {e}")),
            }
        }
        if images != codomain {
            report.failures.push(format!(
                "{tag}: image has {} elements, H(d−1) has {}",
                images.len(),
                codomain.len()
            ));
        }
        for nu in &codomain {
            match phi_inverse(nu, &ctx).and_then(|mu| phi(&mu, &ctx)) {
                Ok(again) if &again == nu => {}
                other => report.failures.push(format!("{tag}: Φ(Φ⁻¹({nu})) = {other:?}")),
            }
        }
    }
    report
}

/// Checks that `LS` maps `H⁺(d)` bijectively onto `H^wid(d)` with
/// [`ls_inverse`] as two-sided inverse, over the same parameter range as
/// [`certify_phi`] (including `d = 0`).
pub fn certify_ls(n: usize, m: usize) -> BijectionReport {
    let mut report = BijectionReport::default();
    for ctx in admissible_contexts(n, m) {
        report.contexts += 1;
        let tag = format!("λ1={} λ2={} d={} r={}", ctx.lam1, ctx.lam2, ctx.d, ctx.r);
        let pos = hori_positive(ctx.d, &ctx.lam1, &ctx.lam2, n, m, ctx.r).expect("admissible");
        let wid: BTreeSet<_> = hori_wid(ctx.d, &ctx.lam1, &ctx.lam2, n, m, ctx.r)
            .expect("in range")
            .into_iter()
            .collect();
        let mut images = BTreeSet::new();
        for mu in &pos {
            report.elements += 1;
            match ls(mu, &ctx) {
                Ok(nu) => {
                    if !wid.contains(&nu) {
                        report.failures.push(format!("{tag}: LS({mu})={nu} outside H^wid"));
                    }
                    match ls_inverse(&nu, &ctx) {
                        Ok(back) if &back == mu => {}
                        other => report.failures.push(format!("{tag}: LS⁻¹(LS({mu})) = {other:?}")),
                    }
                    if !images.insert(nu.clone()) {
                        report.failures.push(format!("{tag}: LS not injective at {nu}"));
                    }
                }
                Err(e) => report.failures.push(format!("{tag}: {e}")),
            }
        }
        if images != wid {
            report.failures.push(format!(
                "{tag}: image has {} elements, H^wid has {}",
                images.len(),
                wid.len()
            ));
        }
        for nu in &wid {
            match ls_inverse(nu, &ctx).and_then(|mu| ls(&mu, &ctx)) {
                Ok(again) if &again == nu => {}
                other => report.failures.push(format!("{tag}: LS(LS⁻¹({nu})) = {other:?}")),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use Step::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn example() -> (Partition, Partition, Partition) {
        (p(&[6, 3, 1]), p(&[6, 5, 2]), p(&[6, 4, 3]))
    }

    #[test]
    fn worked_path_and_pairs() {
        let (mu, l1, l2) = example();
        let path = lattice_path(&mu, &l1, &l2, 7).unwrap();
        assert_eq!(path.steps(), &[SE, NE, HE, NE, HE, SE, SE]);
        let pairs: Vec<_> = reflection_pairs(&path).into_iter().collect();
        assert_eq!(pairs, vec![(2, 7), (4, 6)]);
        assert_eq!(width(&mu, &l1, &l2).unwrap(), 7);
    }

    #[test]
    fn degenerate_paths() {
        let k = p(&[3]);
        let path = lattice_path(&k, &k, &k, 4).unwrap();
        assert!(path.steps().iter().all(|&s| s == SE));
        assert_eq!(width(&k, &k, &k).unwrap(), 3);
        let path = lattice_path(&Partition::empty(), &k, &k, 4).unwrap();
        assert_eq!(path.steps(), &[NE, NE, NE, SE]);
        assert!(reflection_pairs(&LatticePath::from_steps(vec![NE, NE])).is_empty());
        let pairs: Vec<_> = reflection_pairs(&LatticePath::from_steps(vec![NE, SE])).into_iter().collect();
        assert_eq!(pairs, vec![(1, 2)]);
        assert_eq!(width(&Partition::empty(), &p(&[1]), &p(&[1])).unwrap(), 2);
        assert!(lattice_path(&p(&[1]), &p(&[3, 2]), &p(&[3, 2]), 3).is_err());
    }

    #[test]
    fn strip_sets() {
        assert_eq!(hori_set(1, &p(&[2]), &p(&[2])), vec![p(&[1])]);
        assert!(hori_set(0, &p(&[1, 1]), &p(&[1, 1])).is_empty());
        let l = p(&[3, 1]);
        assert_eq!(hori_set(4, &l, &l), vec![l.clone()]);
        assert!(hori_positive(1, &p(&[2]), &p(&[2]), 2, 2, 2).is_err());
        assert!(hori_positive(1, &p(&[2]), &p(&[2]), 2, 2, 1).unwrap().is_empty());
        assert_eq!(
            hori_positive(0, &p(&[2]), &p(&[2]), 2, 2, 1).unwrap(),
            vec![Partition::empty()]
        );
        assert_eq!(hori_wid(0, &p(&[2]), &p(&[2]), 2, 2, 1).unwrap(), vec![p(&[1])]);
        assert!(hori_wid(1, &p(&[2]), &p(&[2]), 2, 2, 1).unwrap().is_empty());
        assert!(hori_wid(1, &p(&[3]), &p(&[3]), 3, 3, 3).unwrap().is_empty());
    }

    #[test]
    fn hori_set_matches_filter() {
        for n in 0..=6 {
            for m in 0..=6 {
                for l1 in partitions_of(n) {
                    for l2 in partitions_of(m) {
                        for d in 0..=n.min(m) {
                            let want: Vec<_> = partitions_of(d)
                                .into_iter()
                                .filter(|mu| in_hori_set(mu, &l1, &l2))
                                .collect();
                            assert_eq!(hori_set(d, &l1, &l2), want);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn worked_example_below_axis() {
        let (mu, l1, l2) = example();
        // n = 13, m = 13, d = 10; the path dips at step 1 for any window
        let pos = hori_positive(10, &l1, &l2, 13, 13, 10).unwrap();
        assert!(!pos.contains(&mu));
        assert!(hori_set(10, &l1, &l2).contains(&mu));
    }

    #[test]
    fn phi_worked_example() {
        let mu = p(&[13, 8, 6, 5, 2, 2]);
        let l1 = p(&[13, 12, 7, 6, 2, 2, 1]);
        let l2 = p(&[13, 13, 7, 5, 2, 2, 2]);
        let ctx = StripPairContext::new(l1, l2, 43, 44, 36, 36).unwrap();
        assert_eq!(phi_pivot(&mu, &ctx).unwrap(), 5);
        let nu = phi(&mu, &ctx).unwrap();
        assert_eq!(nu, p(&[13, 8, 6, 4, 2, 2]));
        assert_eq!(phi_inverse(&nu, &ctx).unwrap(), mu);
    }

    #[test]
    fn phi_small_example() {
        let ctx = StripPairContext::new(p(&[2]), p(&[2]), 2, 2, 1, 1).unwrap();
        assert_eq!(phi_pivot(&p(&[1]), &ctx).unwrap(), 1);
        assert_eq!(phi(&p(&[1]), &ctx).unwrap(), Partition::empty());
        assert_eq!(phi_inverse(&Partition::empty(), &ctx).unwrap(), p(&[1]));
        let wrong = StripPairContext::new(p(&[2]), p(&[2]), 2, 2, 1, 0).unwrap();
        assert!(phi(&Partition::empty(), &wrong).is_err());
    }

    #[test]
    fn ls_small_example() {
        let ctx = StripPairContext::new(p(&[2]), p(&[2]), 2, 2, 1, 0).unwrap();
        assert_eq!(ls(&Partition::empty(), &ctx).unwrap(), p(&[1]));
        assert_eq!(ls_inverse(&p(&[1]), &ctx).unwrap(), Partition::empty());
        assert!(ls(&p(&[1]), &ctx).is_err());
    }

    #[test]
    fn height_formula_law() {
        for n in 0..=8 {
            for m in 0..=8 {
                for l1 in partitions_of(n) {
                    for l2 in partitions_of(m) {
                        let ell = l1.first().max(l2.first());
                        for d in 0..=n.min(m) {
                            for mu in hori_set(d, &l1, &l2) {
                                let path = lattice_path(&mu, &l1, &l2, ell).unwrap();
                                for extra in 0..3 {
                                    let x = ell + extra;
                                    let want = n as i64 + m as i64 - 2 * d as i64 - x as i64;
                                    assert_eq!(path.height(x), want);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bijections_small() {
        for n in 0..=3 {
            for m in 0..=3 {
                let r = certify_phi(n, m);
                assert!(r.passed(), "{:?}", r.failures);
                let r = certify_ls(n, m);
                assert!(r.passed(), "{:?}", r.failures);
            }
        }
    }

    #[test]
    fn dump_format() {
        let path = LatticePath::from_steps(vec![NE, SE]);
        assert_eq!(path.dump(), vec!["x=1 step=NE h=1", "x=2 step=SE h=0"]);
    }
}
