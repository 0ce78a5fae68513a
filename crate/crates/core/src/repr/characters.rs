//! Irreducible characters of `S_n` and `S_n × S_m`, and Frobenius images of
//! class functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::linalg::Rational;
use crate::error::{domain, Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{DoublySchurExpansion, QPoly, SchurExpansion};

/// A class function on `S_n`, keyed by cycle type.
pub type ClassFunction = BTreeMap<Partition, Rational>;
/// A class function on `S_n × S_m`, keyed by pairs of cycle types.
pub type PairClassFunction = BTreeMap<(Partition, Partition), Rational>;

/// `z_λ = Π i^{m_i} m_i!`.
pub fn z_lambda(lam: &Partition) -> BigUint {
    let mut mult: BTreeMap<usize, u32> = BTreeMap::new();
    for &p in lam.parts() {
        *mult.entry(p).or_default() += 1;
    }
    let mut z = BigUint::one();
    for (i, k) in mult {
        z *= BigUint::from(i).pow(k);
        for j in 1..=k {
            z *= BigUint::from(j);
        }
    }
    z
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Conjugacy classes of `S_n` with their sizes `n!/z_λ`.
pub fn class_table(n: usize) -> Vec<(Partition, BigUint)> {
    let nf = factorial(n);
    partitions_of(n)
        .into_iter()
        .map(|lam| {
            let size = &nf / z_lambda(&lam);
            (lam, size)
        })
        .collect()
}

/// Conjugacy classes of `S_n × S_m`.
pub fn product_class_table(n: usize, m: usize) -> Vec<((Partition, Partition), BigUint)> {
    let right = class_table(m);
    class_table(n)
        .into_iter()
        .flat_map(|(a, sa)| {
            right
                .iter()
                .map(move |(b, sb)| ((a.clone(), b.clone()), &sa * sb))
        })
        .collect()
}

/// Memoized Murnaghan–Nakayama evaluation on beta-sets.
#[derive(Debug, Default)]
pub struct CharacterTable {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ` at the class of cycle type `cls`.
    pub fn value(&mut self, lam: &Partition, cls: &Partition) -> Result<BigInt> {
        if lam.size() != cls.size() {
            return domain(format!("|{lam}| ≠ |{cls}|"));
        }
        let len = lam.len();
        let beta: Vec<usize> = (0..len).map(|i| lam.part(i) + (len - 1 - i)).collect();
        Ok(BigInt::from(self.eval(beta, cls.parts().to_vec())))
    }

    fn eval(&mut self, beta: Vec<usize>, cycles: Vec<usize>) -> i64 {
        let Some((&k, rest)) = cycles.split_first() else {
            return 1;
        };
        let key = (beta, cycles.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let beta = &key.0;
        let mut total = 0;
        for (idx, &b) in beta.iter().enumerate() {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            // sign: beads strictly between b − k and b
            let between = beta.iter().filter(|&&c| c > b - k && c < b).count();
            let mut next = beta.clone();
            next[idx] = b - k;
            next.sort_unstable_by(|x, y| y.cmp(x));
            let v = self.eval(next, rest.to_vec());
            total += if between % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ^λ(cls)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lam: &Partition, cls: &Partition) -> Result<BigInt> {
    CharacterTable::new().value(lam, cls)
}

fn integral(x: Rational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::Consistency(format!("non-integral multiplicity {x} for {}", what())))
    }
}

/// Character table of `S_n`: irreducibles and classes both in canonical
/// partition order.
#[derive(Debug, Clone)]
pub struct IrrepTable {
    pub n: usize,
    pub classes: Vec<Partition>,
    pub sizes: Vec<BigInt>,
    /// `values[λ][c] = χ^λ(class c)`.
    pub values: Vec<Vec<BigInt>>,
}

impl IrrepTable {
    pub fn new(n: usize) -> Self {
        let mut mn = CharacterTable::new();
        let (classes, sizes): (Vec<_>, Vec<_>) = class_table(n).into_iter().map(|(c, s)| (c, BigInt::from(s))).unzip();
        let values = partitions_of(n)
            .iter()
            .map(|lam| classes.iter().map(|c| mn.value(lam, c).expect("sizes agree")).collect())
            .collect();
        IrrepTable { n, classes, sizes, values }
    }

    pub fn irreps(&self) -> Vec<Partition> {
        partitions_of(self.n)
    }

    fn order(&self) -> BigInt {
        BigInt::from(factorial(self.n))
    }
}

/// Clears denominators of a class function: returns integer values and the
/// common denominator.
fn integer_values<K: Ord>(chi: &BTreeMap<K, Rational>, keys: &[K]) -> Result<(Vec<BigInt>, BigInt)>
where
    K: fmt::Debug,
{
    let mut denom = BigInt::one();
    for k in keys {
        let Some(v) = chi.get(k) else {
            return domain(format!("class function missing class {k:?}"));
        };
        denom = num_integer::Integer::lcm(&denom, v.denom());
    }
    let vals = keys
        .iter()
        .map(|k| {
            let v = &chi[k];
            v.numer() * (&denom / v.denom())
        })
        .collect();
    Ok((vals, denom))
}

/// Multiplicities `⟨χ, χ^λ⟩` of a class function on `S_n`.
pub fn frobenius_from_character(chi: &ClassFunction, n: usize) -> Result<SchurExpansion> {
    let table = IrrepTable::new(n);
    let (vals, denom) = integer_values(chi, &table.classes)?;
    let order = table.order() * denom;
    let mut out = SchurExpansion::zero(n);
    for (lam, row) in table.irreps().into_iter().zip(&table.values) {
        let mut acc = BigInt::zero();
        for ((v, size), x) in vals.iter().zip(&table.sizes).zip(row) {
            acc += v * size * x;
        }
        let c = integral(Rational::new(acc, order.clone()), || lam.to_string())?;
        if !c.is_zero() {
            out.add_term(lam, &QPoly::monomial(0, c))?;
        }
    }
    Ok(out)
}

/// Multiplicities `⟨χ, χ^λ × χ^μ⟩` of a class function on `S_n × S_m`.
pub fn frobenius_from_pair_character(chi: &PairClassFunction, n: usize, m: usize) -> Result<DoublySchurExpansion> {
    let left = IrrepTable::new(n);
    let right = IrrepTable::new(m);
    frobenius_with_tables(chi, &left, &right)
}

/// As [`frobenius_from_pair_character`], reusing prebuilt tables.
pub fn frobenius_with_tables(chi: &PairClassFunction, left: &IrrepTable, right: &IrrepTable) -> Result<DoublySchurExpansion> {
    let keys: Vec<(Partition, Partition)> = left
        .classes
        .iter()
        .flat_map(|a| right.classes.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let (vals, denom) = integer_values(chi, &keys)?;
    let (ca, cb) = (left.classes.len(), right.classes.len());
    let order = left.order() * right.order() * denom;
    let mut out = DoublySchurExpansion::zero(left.n, right.n);
    for (lam, lrow) in left.irreps().into_iter().zip(&left.values) {
        // separate the sum: first over left classes for each right class
        let partial: Vec<BigInt> = (0..cb)
            .map(|b| {
                (0..ca)
                    .map(|a| &vals[a * cb + b] * &left.sizes[a] * &lrow[a])
                    .sum()
            })
            .collect();
        for (mu, rrow) in right.irreps().into_iter().zip(&right.values) {
            let acc: BigInt = (0..cb).map(|b| &partial[b] * &right.sizes[b] * &rrow[b]).sum();
            if acc.is_zero() {
                continue;
            }
            let c = integral(Rational::new(acc, order.clone()), || format!("({lam}, {mu})"))?;
            out.add_term(lam.clone(), mu.clone(), &QPoly::monomial(0, c))?;
        }
    }
    Ok(out)
}

/// Character of the ungraded module `Σ c_{λμ} V^λ ⊗ V^μ` (coefficients
/// evaluated at `q = 1`).
pub fn pair_character_of(f: &DoublySchurExpansion) -> Result<PairClassFunction> {
    let (n, m) = f.degrees();
    Ok(pair_character_with_tables(f, &IrrepTable::new(n), &IrrepTable::new(m)))
}

pub fn pair_character_with_tables(f: &DoublySchurExpansion, left: &IrrepTable, right: &IrrepTable) -> PairClassFunction {
    let li: BTreeMap<Partition, usize> = left.irreps().into_iter().enumerate().map(|(k, p)| (p, k)).collect();
    let ri: BTreeMap<Partition, usize> = right.irreps().into_iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut out = PairClassFunction::new();
    for (a, ca) in left.classes.iter().enumerate() {
        for (b, cb) in right.classes.iter().enumerate() {
            let mut v = BigInt::zero();
            for ((lam, mu), c) in f.terms() {
                v += c.eval_one() * &left.values[li[lam]][a] * &right.values[ri[mu]][b];
            }
            out.insert((ca.clone(), cb.clone()), Rational::from_integer(v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::sf;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn mn_examples() {
        for n in 0..=6 {
            for cls in partitions_of(n) {
                assert_eq!(mn_character(&Partition::row(n), &cls).unwrap(), BigInt::one());
                let sign = if (n - cls.len()) % 2 == 0 { 1 } else { -1 };
                let col = Partition::row(n).conjugate();
                assert_eq!(mn_character(&col, &cls).unwrap(), BigInt::from(sign));
            }
        }
        assert_eq!(mn_character(&p("2,1"), &p("1,1,1")).unwrap(), BigInt::from(2));
        assert_eq!(mn_character(&p("2,1"), &p("3")).unwrap(), BigInt::from(-1));
        assert!(mn_character(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn dimensions_and_orthogonality() {
        for n in 0..=7 {
            let classes = class_table(n);
            let total: BigUint = classes.iter().map(|(_, s)| s.clone()).sum();
            assert_eq!(total, factorial(n));
            let ident = Partition::new(vec![1; n]).unwrap();
            let mut table = CharacterTable::new();
            let irreps = partitions_of(n);
            for lam in &irreps {
                let dim = table.value(lam, &ident).unwrap();
                assert_eq!(dim, BigInt::from(lam.hook_dimension()));
            }
            // column orthogonality: Σ_λ χ^λ(c)² = z_c
            for (cls, _) in &classes {
                let s: BigInt = irreps.iter().map(|lam| table.value(lam, cls).unwrap().pow(2)).sum();
                assert_eq!(s, BigInt::from(z_lambda(cls)));
            }
        }
    }

    #[test]
    fn regular_and_trivial() {
        let mut reg = ClassFunction::new();
        for (cls, _) in class_table(3) {
            let v = if cls == p("1,1,1") { 6 } else { 0 };
            reg.insert(cls, Rational::from_integer(v.into()));
        }
        let f = frobenius_from_character(&reg, 3).unwrap();
        let mut want = SchurExpansion::zero(3);
        want.add_term(p("3"), &QPoly::one()).unwrap();
        want.add_term(p("2,1"), &QPoly::monomial(0, 2)).unwrap();
        want.add_term(p("1,1,1"), &QPoly::one()).unwrap();
        assert_eq!(f, want);
        let triv: ClassFunction = class_table(4).into_iter().map(|(c, _)| (c, Rational::one())).collect();
        assert_eq!(frobenius_from_character(&triv, 4).unwrap(), SchurExpansion::schur(p("4")));
        let half: ClassFunction = class_table(2).into_iter().map(|(c, _)| (c, Rational::new(1.into(), 2.into()))).collect();
        assert!(frobenius_from_character(&half, 2).is_err());
    }

    #[test]
    fn permutation_character_of_rooks() {
        // fixed points of (g, h) on Z_{2,2,1}
        let mut chi = PairClassFunction::new();
        for ((a, b), _) in product_class_table(2, 2) {
            let fixed = if a == p("1,1") && b == p("1,1") { 4 } else { 0 };
            chi.insert((a, b), Rational::from_integer(fixed.into()));
        }
        let f = frobenius_from_pair_character(&chi, 2, 2).unwrap();
        assert_eq!(f, sf(2, 2, 1).unwrap());
        assert_eq!(pair_character_of(&f).unwrap(), chi);
    }
}
