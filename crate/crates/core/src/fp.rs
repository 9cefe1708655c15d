//! Prime-field arithmetic, vectors and multisets of `F_p^n`, and the row
//! reduction that every other module builds on.
//!
//! Vectors are indexed into dense tables with a mixed-radix encoding where
//! coordinate 0 is the most significant digit, so `(a_0, ..., a_{n-1})` maps
//! to `a_0 p^{n-1} + ... + a_{n-1}`. Group-ring tables, coset bitsets and the
//! vector enumerator all share this order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size caps shared by every exhaustive routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `p^n` for dense group-ring tables and vector enumeration.
    pub max_ring_size: u64,
    /// Largest group order accepted by subgroup and cover searches.
    pub max_group_order: u64,
    /// Largest plain enumeration (twist assignments, coefficient tuples).
    pub max_enumeration: u64,
    /// Largest prime for exhaustive arithmetic-set minimization.
    pub max_exhaustive_prime: u32,
    /// Iteration budget for randomized searches.
    pub search_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ring_size: 10_000_000,
            max_group_order: 16,
            max_enumeration: 10_000_000,
            max_exhaustive_prime: 31,
            search_budget: 200_000,
        }
    }
}

impl Limits {
    /// Checks `p^n` against the ring cap and returns it as a table length.
    pub fn ring_size(&self, p: PrimeModulus, n: usize) -> Result<usize> {
        let size = checked_pow(p.get() as u128, n);
        match size {
            Some(s) if s <= self.max_ring_size as u128 => Ok(s as usize),
            Some(s) => Err(Error::cap("ring size p^n", s, self.max_ring_size as u128)),
            None => Err(Error::cap(
                "ring size p^n",
                u128::MAX,
                self.max_ring_size as u128,
            )),
        }
    }

    pub(crate) fn enumeration(&self, what: &'static str, base: u128, exp: usize) -> Result<u128> {
        match checked_pow(base, exp) {
            Some(s) if s <= self.max_enumeration as u128 => Ok(s),
            Some(s) => Err(Error::cap(what, s, self.max_enumeration as u128)),
            None => Err(Error::cap(what, u128::MAX, self.max_enumeration as u128)),
        }
    }
}

pub(crate) fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// A prime modulus `p`, verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.0 as i64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero mod p.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.0));
        self.pow(a, self.0 as u64 - 2)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A vector of `F_p^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVector {
    p: PrimeModulus,
    coords: Vec<u32>,
}

/// Serialized as its coordinate list.
impl Serialize for FpVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

impl FpVector {
    pub fn new(p: PrimeModulus, coords: Vec<u32>) -> Result<Self> {
        if let Some(&c) = coords.iter().find(|&&c| c >= p.get()) {
            return Err(Error::InvalidInput(format!(
                "coordinate {c} is not reduced mod {p}"
            )));
        }
        Ok(FpVector { p, coords })
    }

    /// Builds a vector from arbitrary integers, reducing each mod p.
    pub fn from_ints(p: PrimeModulus, coords: &[i64]) -> Self {
        FpVector {
            p,
            coords: coords.iter().map(|&c| p.reduce(c)).collect(),
        }
    }

    pub fn zero(p: PrimeModulus, n: usize) -> Self {
        FpVector {
            p,
            coords: vec![0; n],
        }
    }

    /// The standard basis vector `e_i`.
    pub fn unit(p: PrimeModulus, n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i] = 1 % p.get();
        FpVector { p, coords }
    }

    /// Decodes a mixed-radix index (coordinate 0 most significant).
    pub fn from_index(p: PrimeModulus, n: usize, mut index: usize) -> Self {
        let q = p.get() as usize;
        let mut coords = vec![0u32; n];
        for c in coords.iter_mut().rev() {
            *c = (index % q) as u32;
            index /= q;
        }
        FpVector { p, coords }
    }

    /// Mixed-radix index of this vector (coordinate 0 most significant).
    pub fn index(&self) -> usize {
        let q = self.p.get() as usize;
        self.coords
            .iter()
            .fold(0usize, |acc, &c| acc * q + c as usize)
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &FpVector) -> FpVector {
        debug_assert_eq!(self.dim(), other.dim());
        let p = self.p;
        FpVector {
            p,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FpVector) -> FpVector {
        debug_assert_eq!(self.dim(), other.dim());
        let p = self.p;
        FpVector {
            p,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| p.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, a: u32) -> FpVector {
        let p = self.p;
        FpVector {
            p,
            coords: self.coords.iter().map(|&c| p.mul(c, a)).collect(),
        }
    }

    /// `self + a * other`
    pub fn add_scaled(&self, other: &FpVector, a: u32) -> FpVector {
        let p = self.p;
        FpVector {
            p,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&x, &y)| p.add(x, p.mul(a, y)))
                .collect(),
        }
    }

    pub fn dot(&self, other: &FpVector) -> u32 {
        let p = self.p;
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(0, |acc, (&a, &b)| p.add(acc, p.mul(a, b)))
    }
}

impl fmt::Display for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A multiset of vectors of `F_p^n`; multiplicity is by repetition.
///
/// Serializes as `{"p":5,"n":2,"vectors":[[1,0],[0,1],[1,1]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MultisetRepr", into = "MultisetRepr")]
pub struct FpMultiset {
    p: PrimeModulus,
    n: usize,
    entries: Vec<FpVector>,
}

#[derive(Serialize, Deserialize)]
struct MultisetRepr {
    p: u64,
    n: usize,
    vectors: Vec<Vec<i64>>,
}

impl TryFrom<MultisetRepr> for FpMultiset {
    type Error = Error;

    fn try_from(repr: MultisetRepr) -> Result<Self> {
        let p = PrimeModulus::new(repr.p)?;
        let entries = repr
            .vectors
            .iter()
            .map(|v| parse_coords(p, v).and_then(|c| FpVector::new(p, c)))
            .collect::<Result<Vec<_>>>()?;
        FpMultiset::new(p, repr.n, entries)
    }
}

impl From<FpMultiset> for MultisetRepr {
    fn from(m: FpMultiset) -> Self {
        MultisetRepr {
            p: m.p.get() as u64,
            n: m.n,
            vectors: m
                .entries
                .iter()
                .map(|v| v.coords.iter().map(|&c| c as i64).collect())
                .collect(),
        }
    }
}

/// Validates raw integer coordinates as residues in `[0, p)`.
pub fn parse_coords(p: PrimeModulus, raw: &[i64]) -> Result<Vec<u32>> {
    raw.iter()
        .map(|&c| {
            if c < 0 || c >= p.get() as i64 {
                Err(Error::InvalidInput(format!(
                    "coordinate {c} is not in [0, {p})"
                )))
            } else {
                Ok(c as u32)
            }
        })
        .collect()
}

impl FpMultiset {
    pub fn new(p: PrimeModulus, n: usize, entries: Vec<FpVector>) -> Result<Self> {
        for v in &entries {
            if v.p != p {
                return Err(Error::ModulusMismatch {
                    expected: p.get(),
                    found: v.p.get(),
                });
            }
            if v.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.dim(),
                });
            }
        }
        Ok(FpMultiset { p, n, entries })
    }

    pub fn empty(p: PrimeModulus, n: usize) -> Self {
        FpMultiset {
            p,
            n,
            entries: Vec::new(),
        }
    }

    /// Convenience constructor from integer rows, reducing mod p.
    pub fn from_rows(p: PrimeModulus, n: usize, rows: &[&[i64]]) -> Result<Self> {
        let entries = rows
            .iter()
            .map(|r| {
                if r.len() != n {
                    Err(Error::DimensionMismatch {
                        expected: n,
                        found: r.len(),
                    })
                } else {
                    Ok(FpVector::from_ints(p, r))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FpMultiset { p, n, entries })
    }

    /// `count` copies of `v`.
    pub fn repeated(v: &FpVector, count: usize) -> Self {
        FpMultiset {
            p: v.p,
            n: v.dim(),
            entries: vec![v.clone(); count],
        }
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Size counted with multiplicity.
    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn entries(&self) -> &[FpVector] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FpVector> {
        self.entries.iter()
    }

    pub fn push(&mut self, v: FpVector) -> Result<()> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.dim(),
            });
        }
        if v.p != self.p {
            return Err(Error::ModulusMismatch {
                expected: self.p.get(),
                found: v.p.get(),
            });
        }
        self.entries.push(v);
        Ok(())
    }

    /// The sub-multiset picked out by `indices`, in the given order.
    pub fn select(&self, indices: &[usize]) -> FpMultiset {
        FpMultiset {
            p: self.p,
            n: self.n,
            entries: indices.iter().map(|&i| self.entries[i].clone()).collect(),
        }
    }

    /// This multiset with entry `index` removed.
    pub fn without(&self, index: usize) -> FpMultiset {
        let mut entries = self.entries.clone();
        entries.remove(index);
        FpMultiset {
            p: self.p,
            n: self.n,
            entries,
        }
    }

    /// Concatenation as multisets.
    pub fn union(&self, other: &FpMultiset) -> Result<FpMultiset> {
        let mut out = self.clone();
        for v in other.iter() {
            out.push(v.clone())?;
        }
        Ok(out)
    }

    /// Number of distinct vectors.
    pub fn distinct_count(&self) -> usize {
        let mut v: Vec<&FpVector> = self.entries.iter().collect();
        v.sort();
        v.dedup();
        v.len()
    }

    /// `sum_i a_i v_i` for coefficients aligned with the entries.
    pub fn combination(&self, coeffs: &[u32]) -> FpVector {
        debug_assert_eq!(coeffs.len(), self.len());
        self.entries
            .iter()
            .zip(coeffs)
            .fold(FpVector::zero(self.p, self.n), |acc, (v, &a)| {
                acc.add_scaled(v, a)
            })
    }
}

impl<'a> IntoIterator for &'a FpMultiset {
    type Item = &'a FpVector;
    type IntoIter = std::slice::Iter<'a, FpVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// Reduced row echelon form of a list of rows.
///
/// Pivot columns are taken left to right; within a column the first
/// remaining row with a nonzero entry is the pivot row.
#[derive(Debug, Clone)]
pub(crate) struct RowEchelon {
    pub rows: Vec<Vec<u32>>,
    pub pivots: Vec<usize>,
}

pub(crate) fn row_echelon(
    p: PrimeModulus,
    n: usize,
    input: impl IntoIterator<Item = Vec<u32>>,
) -> RowEchelon {
    let mut rows: Vec<Vec<u32>> = input.into_iter().collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = p.inv(rows[rank][col]);
        for c in rows[rank].iter_mut() {
            *c = p.mul(*c, inv);
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = p.sub(*x, p.mul(f, y));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    RowEchelon { rows, pivots }
}

/// Rank of the rows of `V` computed by elimination mod p.
pub fn span_dimension(v: &FpMultiset) -> usize {
    rank_of(v.p, v.n, v.iter())
}

pub(crate) fn rank_of<'a>(
    p: PrimeModulus,
    n: usize,
    vs: impl IntoIterator<Item = &'a FpVector>,
) -> usize {
    row_echelon(p, n, vs.into_iter().map(|v| v.coords.clone()))
        .pivots
        .len()
}

/// Splitting of `F_p^n` as `S ⊕ T` with `T = <V>`.
///
/// `T` is stored as its reduced echelon basis. The complement `S` is the
/// span of the standard basis vectors at the non-pivot columns, so `x_S` is
/// just `x - x_T` read off at those columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanDecomposition {
    p: PrimeModulus,
    n: usize,
    basis: Vec<FpVector>,
    pivots: Vec<usize>,
    complement: Vec<usize>,
}

impl SpanDecomposition {
    /// Reduced echelon basis of `T`.
    pub fn basis_t(&self) -> &[FpVector] {
        &self.basis
    }

    pub fn dim_t(&self) -> usize {
        self.basis.len()
    }

    pub fn dim_s(&self) -> usize {
        self.complement.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Columns that carry the `S` coordinates.
    pub fn complement_columns(&self) -> &[usize] {
        &self.complement
    }

    /// Component of `x` in `T`.
    pub fn project_t(&self, x: &FpVector) -> FpVector {
        self.basis
            .iter()
            .zip(&self.pivots)
            .fold(FpVector::zero(self.p, self.n), |acc, (b, &col)| {
                acc.add_scaled(b, x.coords[col])
            })
    }

    /// Returns `(x_S, x_T)`; `x_S` has `dim_s()` coordinates, `x_T` lives in `F_p^n`.
    pub fn project(&self, x: &FpVector) -> (FpVector, FpVector) {
        let x_t = self.project_t(x);
        let rest = x.sub(&x_t);
        let x_s = FpVector {
            p: self.p,
            coords: self.complement.iter().map(|&c| rest.coords[c]).collect(),
        };
        (x_s, x_t)
    }

    /// Quotient coordinates `x_S` only.
    pub fn project_s(&self, x: &FpVector) -> FpVector {
        self.project(x).0
    }

    pub fn reassemble(&self, x_s: &FpVector, x_t: &FpVector) -> Result<FpVector> {
        if x_s.dim() != self.dim_s() {
            return Err(Error::DimensionMismatch {
                expected: self.dim_s(),
                found: x_s.dim(),
            });
        }
        if x_t.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x_t.dim(),
            });
        }
        if self.project_t(x_t) != *x_t {
            return Err(Error::InvalidInput("x_T does not lie in T".into()));
        }
        let mut out = x_t.clone();
        for (&col, &c) in self.complement.iter().zip(&x_s.coords) {
            out.coords[col] = self.p.add(out.coords[col], c);
        }
        Ok(out)
    }

    /// Whether `x ∈ T`.
    pub fn contains(&self, x: &FpVector) -> bool {
        self.project_s(x).is_zero()
    }
}

/// Splits `F_p^n` along `T = <V>`.
pub fn quotient_split(v: &FpMultiset) -> SpanDecomposition {
    let ech = row_echelon(v.p, v.n, v.iter().map(|x| x.coords.clone()));
    let complement = (0..v.n).filter(|c| !ech.pivots.contains(c)).collect();
    let basis = ech
        .rows
        .into_iter()
        .map(|coords| FpVector { p: v.p, coords })
        .collect();
    SpanDecomposition {
        p: v.p,
        n: v.n,
        basis,
        pivots: ech.pivots,
        complement,
    }
}

/// Replaces each entry `v` by `a_v v`; every `a_v` must be nonzero.
pub fn scale_multiset(v: &FpMultiset, scalars: &[u32]) -> Result<FpMultiset> {
    if scalars.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: v.len(),
            found: scalars.len(),
        });
    }
    let p = v.p;
    if let Some(i) = scalars.iter().position(|&a| a % p.get() == 0) {
        return Err(Error::InvalidInput(format!(
            "scalar for entry {i} is zero mod {p}"
        )));
    }
    let entries = v
        .iter()
        .zip(scalars)
        .map(|(x, &a)| x.scale(a % p.get()))
        .collect();
    Ok(FpMultiset { p, n: v.n, entries })
}

/// Finds coefficients `a` with `sum a_i entries_i = x`, or `None` if `x`
/// is outside the span.
///
/// Entries are taken as pivots greedily in order; coefficients of the
/// remaining entries are 0.
pub fn solve_combination(v: &FpMultiset, x: &FpVector) -> Option<Vec<u32>> {
    let p = v.p;
    let m = v.len();
    // rows of the augmented n x (m+1) system
    let mut rows: Vec<Vec<u32>> = (0..v.n)
        .map(|i| {
            let mut row: Vec<u32> = v.iter().map(|e| e.coords[i]).collect();
            row.push(x.coords[i]);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = p.inv(rows[rank][col]);
        for c in rows[rank].iter_mut() {
            *c = p.mul(*c, inv);
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (a, &b) in row.iter_mut().zip(&pivot_row) {
                    *a = p.sub(*a, p.mul(f, b));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|row| row[m] != 0) {
        return None;
    }
    let mut coeffs = vec![0u32; m];
    for (r, &col) in pivots.iter().enumerate() {
        coeffs[col] = rows[r][m];
    }
    Some(coeffs)
}

/// Lexicographic enumeration of `F_p^n`, coordinate 0 most significant.
#[derive(Debug, Clone)]
pub struct VectorIter {
    p: PrimeModulus,
    n: usize,
    next: usize,
    end: usize,
}

impl Iterator for VectorIter {
    type Item = FpVector;

    fn next(&mut self) -> Option<FpVector> {
        if self.next >= self.end {
            return None;
        }
        let v = FpVector::from_index(self.p, self.n, self.next);
        self.next += 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.end - self.next;
        (left, Some(left))
    }
}

impl ExactSizeIterator for VectorIter {}

pub fn enumerate_vectors(p: PrimeModulus, n: usize, limits: &Limits) -> Result<VectorIter> {
    let end = limits.ring_size(p, n)?;
    Ok(VectorIter { p, n, next: 0, end })
}

/// `true` iff `rows` (an `n x n` matrix) is invertible mod p.
pub fn is_invertible(p: PrimeModulus, rows: &[FpVector]) -> bool {
    let n = rows.len();
    rows.iter().all(|r| r.dim() == n) && rank_of(p, n, rows) == n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn primality() {
        assert!(PrimeModulus::new(2).is_ok());
        assert!(PrimeModulus::new(199).is_ok());
        assert_eq!(PrimeModulus::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeModulus::new(91), Err(Error::NotPrime(91)));
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn field_ops() {
        let p = pm(7);
        assert_eq!(p.sub(2, 5), 4);
        assert_eq!(p.neg(3), 4);
        assert_eq!(p.reduce(-1), 6);
        for a in 1..7 {
            assert_eq!(p.mul(a, p.inv(a)), 1);
        }
    }

    #[test]
    fn span_dimension_examples() {
        assert_eq!(span_dimension(&FpMultiset::empty(pm(5), 2)), 0);
        let v = FpMultiset::from_rows(pm(2), 2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(span_dimension(&v), 2);
        let v = FpMultiset::from_rows(pm(5), 2, &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(span_dimension(&v), 1);
    }

    #[test]
    fn quotient_split_examples() {
        let p = pm(3);
        let full = FpMultiset::from_rows(p, 2, &[&[1, 1], &[0, 2]]).unwrap();
        let d = quotient_split(&full);
        assert_eq!((d.dim_t(), d.dim_s()), (2, 0));
        let x = FpVector::from_ints(p, &[2, 1]);
        assert_eq!(d.project(&x).0.dim(), 0);

        let d = quotient_split(&FpMultiset::empty(p, 3));
        let x = FpVector::from_ints(p, &[2, 1, 2]);
        let (xs, xt) = d.project(&x);
        assert!(xt.is_zero());
        assert_eq!(xs, x);

        let v = FpMultiset::from_rows(p, 3, &[&[1, 0, 0]]).unwrap();
        let d = quotient_split(&v);
        assert_eq!(d.dim_t(), 1);
        let (xs, xt) = d.project(&x);
        assert_eq!(xt, FpVector::from_ints(p, &[2, 0, 0]));
        assert_eq!(xs, FpVector::from_ints(p, &[1, 2]));
        assert_eq!(d.reassemble(&xs, &xt).unwrap(), x);
    }

    #[test]
    fn reassemble_rejects_foreign_t_component() {
        let p = pm(3);
        let d = quotient_split(&FpMultiset::from_rows(p, 2, &[&[1, 0]]).unwrap());
        let bad_t = FpVector::from_ints(p, &[0, 1]);
        assert!(d.reassemble(&FpVector::from_ints(p, &[0]), &bad_t).is_err());
    }

    #[test]
    fn scale_examples() {
        let p = pm(5);
        let v = FpMultiset::from_rows(p, 2, &[&[1, 1]]).unwrap();
        assert_eq!(scale_multiset(&v, &[1]).unwrap(), v);
        let s = scale_multiset(&v, &[3]).unwrap();
        assert_eq!(s.entries()[0], FpVector::from_ints(p, &[3, 3]));
        assert!(matches!(
            scale_multiset(&v, &[0]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            scale_multiset(&v, &[5]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn enumeration_order() {
        let lim = Limits::default();
        let got: Vec<Vec<u32>> = enumerate_vectors(pm(2), 2, &lim)
            .unwrap()
            .map(|v| v.coords().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let got: Vec<Vec<u32>> = enumerate_vectors(pm(3), 1, &lim)
            .unwrap()
            .map(|v| v.coords().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0], vec![1], vec![2]]);
        let all: Vec<FpVector> = enumerate_vectors(pm(5), 3, &lim).unwrap().collect();
        assert_eq!(all.len(), 125);
        assert_eq!(all[0].coords(), &[0, 0, 0]);
        assert_eq!(all[124].coords(), &[4, 4, 4]);
        for (i, v) in all.iter().enumerate() {
            assert_eq!(v.index(), i);
        }
    }

    #[test]
    fn enumeration_cap() {
        let lim = Limits {
            max_ring_size: 100,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_vectors(pm(5), 3, &lim),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_vectors(pm(5), 2, &lim).is_ok());
    }

    #[test]
    fn solve_uses_leading_independent_entries() {
        let p = pm(5);
        let v = FpMultiset::from_rows(p, 2, &[&[1, 0], &[2, 0], &[0, 1]]).unwrap();
        let x = FpVector::from_ints(p, &[3, 4]);
        let a = solve_combination(&v, &x).unwrap();
        assert_eq!(a, vec![3, 0, 4]);
        assert_eq!(v.combination(&a), x);
        let line = FpMultiset::from_rows(p, 2, &[&[1, 2]]).unwrap();
        assert!(solve_combination(&line, &FpVector::from_ints(p, &[0, 1])).is_none());
    }

    #[test]
    fn multiset_json_format() {
        let m: FpMultiset =
            serde_json::from_str(r#"{"p":5,"n":2,"vectors":[[1,0],[0,1],[1,1]]}"#).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"p":5,"n":2,"vectors":[[1,0],[0,1],[1,1]]}"#
        );
        assert!(serde_json::from_str::<FpMultiset>(r#"{"p":6,"n":1,"vectors":[]}"#).is_err());
        assert!(serde_json::from_str::<FpMultiset>(r#"{"p":5,"n":2,"vectors":[[1]]}"#).is_err());
        assert!(serde_json::from_str::<FpMultiset>(r#"{"p":5,"n":1,"vectors":[[7]]}"#).is_err());
    }
}
