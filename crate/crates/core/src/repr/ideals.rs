//! Degreewise comparison of the associated graded ideal `gr I(Z)` with the
//! explicit generating sets, replacing any Gröbner computation.
//!
//! Variables `x_{ij}` are numbered row-major: `x₁₁, …, x₁m, x₂₁, …`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_integer::binomial;
use num_traits::{One, Zero};

use super::linalg::{rational, Echelon, Rational, SparseVec};
use super::oracle::{oracle_hilbert, EvaluationSpace};
use crate::error::{domain, Result};
use crate::loci::{enumerate_involutions, Cell, Locus};
use crate::report::Report;

/// Exponent vector over the board variables.
pub type Monomial = Vec<u32>;

/// All exponent vectors of total degree `deg` in `nvars` variables, in
/// graded-lex order (`x₁^deg` first).
pub fn exponent_vectors(nvars: usize, deg: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill_exponents(0, deg as u32, &mut cur, &mut out);
    out
}

fn fill_exponents(var: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
    if var == cur.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if var + 1 == cur.len() {
        cur[var] = left;
        out.push(cur.clone());
        cur[var] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[var] = e;
        fill_exponents(var + 1, left - e, cur, out);
    }
    cur[var] = 0;
}

/// A polynomial in the variables of an `rows × cols` board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    rows: usize,
    cols: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Form {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Form { rows, cols, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.rows * self.cols
    }

    fn index(&self, (i, j): Cell) -> usize {
        (i - 1) * self.cols + (j - 1)
    }

    /// The monomial `Π_{c ∈ cells} x_c` (with repetition).
    pub fn monomial(rows: usize, cols: usize, cells: &[Cell]) -> Self {
        let mut f = Form::zero(rows, cols);
        let mut exps = vec![0u32; rows * cols];
        for &c in cells {
            exps[f.index(c)] += 1;
        }
        f.terms.insert(exps, Rational::one());
        f
    }

    pub fn var(rows: usize, cols: usize, cell: Cell) -> Self {
        Self::monomial(rows, cols, &[cell])
    }

    pub fn sum_of(rows: usize, cols: usize, cells: impl IntoIterator<Item = Cell>) -> Self {
        let mut f = Form::zero(rows, cols);
        for c in cells {
            f = f.add(&Form::var(rows, cols, c));
        }
        f
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn combine(&self, other: &Form, sign: &Rational) -> Form {
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            let e = out.terms.entry(mono.clone()).or_insert_with(Rational::zero);
            *e += sign * c;
            if e.is_zero() {
                out.terms.remove(mono);
            }
        }
        out
    }

    pub fn add(&self, other: &Form) -> Form {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.combine(other, &-Rational::one())
    }

    pub fn mul(&self, other: &Form) -> Form {
        let mut out = Form::zero(self.rows, self.cols);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mono: Monomial = a.iter().zip(b).map(|(p, q)| p + q).collect();
                let e = out.terms.entry(mono.clone()).or_insert_with(Rational::zero);
                *e += x * y;
                if e.is_zero() {
                    out.terms.remove(&mono);
                }
            }
        }
        out
    }

    /// The common degree of all terms, or `None` if the form is zero or
    /// inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>() as usize);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Cells carrying a positive exponent in `mono`.
    fn support(&self, mono: &Monomial) -> Vec<Cell> {
        mono.iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(k, _)| (k / self.cols + 1, k % self.cols + 1))
            .collect()
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // x₁₁-heavy terms first
        for (k, (mono, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < Rational::zero();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = if negative { -c.clone() } else { c.clone() };
            let constant = mono.iter().all(|&e| e == 0);
            if !mag.is_one() || constant {
                write!(f, "{mag}")?;
            }
            for (v, &e) in mono.iter().enumerate() {
                if e > 0 {
                    write!(f, "x{}{}", v / self.cols + 1, v % self.cols + 1)?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Dimension of the degree-`deg` piece of the ideal generated by the
/// homogeneous forms `gens` in `nvars` variables.
pub fn ideal_degree_dim(gens: &[Form], deg: usize, nvars: usize) -> usize {
    let basis = exponent_vectors(nvars, deg);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut ech = Echelon::new();
    let mut multipliers: HashMap<usize, Vec<Monomial>> = HashMap::new();
    for g in gens {
        let Some(e) = g.homogeneous_degree() else { continue };
        if e > deg {
            continue;
        }
        let mults = multipliers.entry(deg - e).or_insert_with(|| exponent_vectors(nvars, deg - e));
        for u in mults.iter() {
            if ech.rank() == basis.len() {
                return ech.rank();
            }
            let row: SparseVec = g
                .terms()
                .map(|(mono, c)| {
                    let prod: Monomial = mono.iter().zip(u).map(|(p, q)| p + q).collect();
                    (index[&prod], c.clone())
                })
                .collect();
            ech.insert(row);
        }
    }
    ech.rank()
}

fn monomial_count(nvars: usize, deg: usize) -> usize {
    if nvars == 0 {
        return usize::from(deg == 0);
    }
    binomial(nvars + deg - 1, deg)
}

/// `dim (gr I(Z))_deg`.
pub fn gr_ideal_dim(locus: &Locus, deg: usize) -> usize {
    let (rows, cols) = locus.board();
    monomial_count(rows * cols, deg) - oracle_hilbert(locus, deg)[deg]
}

fn member_in(space: &mut EvaluationSpace, form: &Form) -> Result<bool> {
    if form.is_zero() {
        return Ok(true);
    }
    let Some(d) = form.homogeneous_degree() else {
        return domain(format!("{form} is not homogeneous"));
    };
    let v = space.eval_terms(form.terms().map(|(mono, c)| (form.support(mono), c)));
    if d == 0 {
        return Ok(v.is_empty());
    }
    Ok(space.filtration(d - 1).contains(&v))
}

/// Whether the homogeneous `form` lies in `gr I(Z)`: its evaluation agrees
/// on the locus with that of some lower-degree polynomial.
pub fn gr_ideal_member(form: &Form, locus: &Locus) -> Result<bool> {
    member_in(&mut EvaluationSpace::new(locus), form)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn line_products(rows: usize, cols: usize, out: &mut Vec<(String, Form)>) {
    for i in 1..=rows {
        for j in 1..=cols {
            for j2 in j..=cols {
                out.push((format!("row-product x{i}{j}*x{i}{j2}"), Form::monomial(rows, cols, &[(i, j), (i, j2)])));
            }
        }
    }
    for j in 1..=cols {
        for i in 1..=rows {
            for i2 in i..=rows {
                out.push((format!("col-product x{i}{j}*x{i2}{j}"), Form::monomial(rows, cols, &[(i, j), (i2, j)])));
            }
        }
    }
}

fn row_sum(rows: usize, cols: usize, i: usize) -> Form {
    Form::sum_of(rows, cols, (1..=cols).map(|j| (i, j)))
}

fn col_sum(rows: usize, cols: usize, j: usize) -> Form {
    Form::sum_of(rows, cols, (1..=rows).map(|i| (i, j)))
}

fn product(rows: usize, cols: usize, factors: impl Iterator<Item = Form>) -> Form {
    factors.fold(Form::monomial(rows, cols, &[]), |acc, f| acc.mul(&f))
}

/// Generators of `I^{(r)}_{n,m}` of degree at most `maxdeg`, with labels.
pub fn rook_ideal_generators(n: usize, m: usize, r: usize, maxdeg: usize) -> Vec<(String, Form)> {
    let mut out = vec![(
        "sum-of-variables".to_string(),
        Form::sum_of(n, m, (1..=n).flat_map(|i| (1..=m).map(move |j| (i, j)))),
    )];
    line_products(n, m, &mut out);
    let k = n + 1 - r;
    if k <= maxdeg {
        for rows in k_subsets(n, k) {
            out.push((format!("row-sums {rows:?}"), product(n, m, rows.iter().map(|&i| row_sum(n, m, i)))));
        }
    }
    let k = m + 1 - r;
    if k <= maxdeg {
        for cols in k_subsets(m, k) {
            out.push((format!("col-sums {cols:?}"), product(n, m, cols.iter().map(|&j| col_sum(n, m, j)))));
        }
    }
    for size in r + 1..=maxdeg.min(n).min(m) {
        for support in super::oracle::rook_supports(n, m, size).into_iter().filter(|s| s.len() == size) {
            out.push((format!("rook-monomial {support:?}"), Form::monomial(n, m, &support)));
        }
    }
    out.retain(|(_, f)| f.homogeneous_degree().is_some_and(|d| d <= maxdeg));
    out
}

/// Generators of `I^{(a)}_n` of degree at most `maxdeg`, with labels.
pub fn involution_ideal_generators(n: usize, a: usize, maxdeg: usize) -> Vec<(String, Form)> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push((format!("row-sum {i}"), row_sum(n, n, i)));
        out.push((format!("col-sum {i}"), col_sum(n, n, i)));
    }
    line_products(n, n, &mut out);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((format!("symmetric x{i}{j}-x{j}{i}"), Form::var(n, n, (i, j)).sub(&Form::var(n, n, (j, i)))));
        }
    }
    out.push(("diagonal-sum".to_string(), Form::sum_of(n, n, (1..=n).map(|i| (i, i)))));
    if a < n {
        for s in k_subsets(n, a + 1) {
            let cells: Vec<Cell> = s.iter().map(|&i| (i, i)).collect();
            out.push((format!("diagonal-product {s:?}"), Form::monomial(n, n, &cells)));
        }
    }
    for fewer in 0..a {
        for w in enumerate_involutions(n, fewer) {
            if w.pairs().len() <= maxdeg {
                out.push((format!("involution-monomial {w}"), Form::monomial(n, n, w.pairs())));
            }
        }
    }
    out.retain(|(_, f)| f.homogeneous_degree().is_some_and(|d| d <= maxdeg));
    out
}

fn verify_generated(locus: &Locus, gens: Vec<(String, Form)>, dmax: usize, tag: &str) -> Report {
    let mut report = Report::new();
    let mut space = EvaluationSpace::new(locus);
    let mut failed = Vec::new();
    for (label, g) in &gens {
        match member_in(&mut space, g) {
            Ok(true) => {}
            Ok(false) => failed.push(label.clone()),
            Err(e) => failed.push(format!("{label}: {e}")),
        }
    }
    let detail = if failed.is_empty() {
        format!("{tag} generators={}", gens.len())
    } else {
        format!("{tag} outside={}", failed.join("; "))
    };
    report.push("ideal-containment", failed.is_empty(), detail);
    let (rows, cols) = locus.board();
    let forms: Vec<Form> = gens.into_iter().map(|(_, f)| f).collect();
    let hilb = oracle_hilbert(locus, dmax);
    for d in 0..=dmax {
        let explicit = ideal_degree_dim(&forms, d, rows * cols);
        let graded = monomial_count(rows * cols, d) - hilb[d];
        report.push(
            "ideal-dimension",
            explicit == graded,
            format!("{tag} d={d} generated={explicit} gr={graded}"),
        );
    }
    report
}

/// `gr I(Z_{n,m,r}) = I^{(r)}_{n,m}` in degrees `≤ dmax`.
pub fn verify_ideal_equality(n: usize, m: usize, r: usize, dmax: usize) -> Result<Report> {
    if r > n.min(m) {
        return domain(format!("need r ≤ min(n,m); got n={n}, m={m}, r={r}"));
    }
    let gens = rook_ideal_generators(n, m, r, dmax);
    Ok(verify_generated(&Locus::Rook { n, m, r }, gens, dmax, &format!("n={n} m={m} r={r}")))
}

/// `gr I(M_{n,a}) = I^{(a)}_n` in degrees `≤ dmax`.
pub fn verify_involution_ideal(n: usize, a: usize, dmax: usize) -> Result<Report> {
    if a > n || (n - a) % 2 != 0 {
        return domain(format!("need a ≤ n with a ≡ n (mod 2); got n={n}, a={a}"));
    }
    let gens = involution_ideal_generators(n, a, dmax);
    Ok(verify_generated(&Locus::Involution { n, a }, gens, dmax, &format!("n={n} a={a}")))
}

/// Evaluation of a form at a point, for direct spot checks.
pub fn eval_form(form: &Form, point: &[Cell]) -> Rational {
    let mut total = rational(0);
    for (mono, c) in form.terms() {
        if form.support(mono).iter().all(|cell| point.contains(cell)) {
            total += c;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_enumeration() {
        assert_eq!(exponent_vectors(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(exponent_vectors(4, 3).len(), 20);
        assert_eq!(exponent_vectors(0, 0), vec![Vec::<u32>::new()]);
        assert!(exponent_vectors(0, 1).is_empty());
    }

    #[test]
    fn degree_dims() {
        let x11 = Form::var(2, 2, (1, 1));
        assert_eq!(ideal_degree_dim(&[x11], 1, 4), 1);
        assert_eq!(ideal_degree_dim(&[], 2, 4), 0);
        let gens: Vec<Form> = rook_ideal_generators(2, 2, 1, 2).into_iter().map(|(_, f)| f).collect();
        assert_eq!(ideal_degree_dim(&gens, 2, 4), 10);
    }

    #[test]
    fn memberships() {
        let z = Locus::Rook { n: 2, m: 2, r: 1 };
        let all = Form::sum_of(2, 2, [(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert!(gr_ideal_member(&all, &z).unwrap());
        assert!(gr_ideal_member(&Form::monomial(2, 2, &[(1, 1), (1, 2)]), &z).unwrap());
        assert!(!gr_ideal_member(&Form::var(2, 2, (1, 1)), &z).unwrap());
        let inhom = Form::var(2, 2, (1, 1)).add(&Form::monomial(2, 2, &[]));
        assert!(gr_ideal_member(&inhom, &z).is_err());
        assert_eq!(gr_ideal_dim(&z, 1), 1);
        assert_eq!(gr_ideal_dim(&z, 2), 10);
    }

    #[test]
    fn equality_examples() {
        assert!(verify_ideal_equality(2, 2, 1, 3).unwrap().passed());
        assert!(verify_ideal_equality(3, 3, 2, 3).unwrap().passed());
        assert!(verify_involution_ideal(3, 1, 3).unwrap().passed());
    }

    #[test]
    fn forms_render() {
        let f = Form::var(2, 2, (1, 2)).sub(&Form::var(2, 2, (2, 1)));
        assert_eq!(f.to_string(), "x12 - x21");
        assert_eq!(eval_form(&f, &[(1, 2)]), rational(1));
        assert_eq!(Form::zero(1, 1).to_string(), "0");
    }
}
