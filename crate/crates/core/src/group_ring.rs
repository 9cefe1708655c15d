//! Dense elements of the group rings `F_p[F_p^n]` and `Z[λ][F_p^n]`.
//!
//! An element `sum_v r_v g^v` is a table of `p^n` coefficients indexed by
//! the mixed-radix encoding of `v`. Multiplication is convolution. The
//! products that matter here are all powers of binomials `1 - λ^t g^v`, and
//! multiplying by one binomial is a single shifted subtraction over the
//! table, so `prod_v (1 - g^v)^r` costs `O(|V| · r · p^n)`.

use serde::Serialize;

use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::fp::{FpMultiset, FpVector, Limits, PrimeModulus};

/// `table[i]` is the index of `x_i + v`.
fn translation_table(p: PrimeModulus, n: usize, v: &FpVector) -> Vec<usize> {
    let q = p.get() as usize;
    let size = q.pow(n as u32);
    let mut table = Vec::with_capacity(size);
    let mut digits = vec![0usize; n];
    for _ in 0..size {
        let idx = digits
            .iter()
            .zip(v.coords())
            .fold(0usize, |acc, (&d, &c)| acc * q + (d + c as usize) % q);
        table.push(idx);
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    table
}

fn check_r(p: PrimeModulus, r: u32) -> Result<()> {
    if r == 0 || r >= p.get() {
        return Err(Error::InvalidInput(format!(
            "r = {r} is outside [1, {}]",
            p.get() - 1
        )));
    }
    Ok(())
}

/// An element of `F_p[F_p^n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingFp {
    p: PrimeModulus,
    n: usize,
    coeffs: Vec<u32>,
}

impl GroupRingFp {
    pub fn zero(p: PrimeModulus, n: usize, limits: &Limits) -> Result<Self> {
        let size = limits.ring_size(p, n)?;
        Ok(GroupRingFp {
            p,
            n,
            coeffs: vec![0; size],
        })
    }

    pub fn one(p: PrimeModulus, n: usize, limits: &Limits) -> Result<Self> {
        Self::monomial(&FpVector::zero(p, n), 1, limits)
    }

    /// `c · g^v`
    pub fn monomial(v: &FpVector, c: u32, limits: &Limits) -> Result<Self> {
        let mut out = Self::zero(v.modulus(), v.dim(), limits)?;
        out.coeffs[v.index()] = c % v.modulus().get();
        Ok(out)
    }

    pub fn from_coeffs(p: PrimeModulus, n: usize, coeffs: Vec<u32>) -> Result<Self> {
        let size = (p.get() as usize).pow(n as u32);
        if coeffs.len() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: coeffs.len(),
            });
        }
        if coeffs.iter().any(|&c| c >= p.get()) {
            return Err(Error::InvalidInput("coefficient not reduced mod p".into()));
        }
        Ok(GroupRingFp { p, n, coeffs })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Coefficient table in mixed-radix order.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, v: &FpVector) -> u32 {
        self.coeffs[v.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Nonzero `(index, coefficient)` pairs, for debugging output.
    pub fn debug_dump(&self) -> Vec<(usize, u32)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }

    pub fn add(&self, other: &GroupRingFp) -> GroupRingFp {
        let p = self.p;
        GroupRingFp {
            p,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &GroupRingFp) -> GroupRingFp {
        let p = self.p;
        GroupRingFp {
            p,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| p.sub(a, b))
                .collect(),
        }
    }

    /// General convolution, `O(p^{2n})`.
    pub fn mul(&self, other: &GroupRingFp) -> GroupRingFp {
        let p = self.p;
        let mut out = vec![0u32; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let shift = translation_table(p, self.n, &FpVector::from_index(p, self.n, i));
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    let k = shift[j];
                    out[k] = p.add(out[k], p.mul(a, b));
                }
            }
        }
        GroupRingFp {
            p,
            n: self.n,
            coeffs: out,
        }
    }

    /// `self · (1 - g^v)^r`
    pub fn mul_binomial_pow(&self, v: &FpVector, r: u32) -> GroupRingFp {
        let p = self.p;
        // back[x] = index of x - v
        let back = translation_table(p, self.n, &FpVector::zero(p, self.n).sub(v));
        let mut cur = self.coeffs.clone();
        let mut next = vec![0u32; cur.len()];
        for _ in 0..r {
            for (x, slot) in next.iter_mut().enumerate() {
                *slot = p.sub(cur[x], cur[back[x]]);
            }
            std::mem::swap(&mut cur, &mut next);
        }
        GroupRingFp {
            p,
            n: self.n,
            coeffs: cur,
        }
    }

    pub fn pow(&self, exp: u32) -> GroupRingFp {
        let mut acc = GroupRingFp {
            p: self.p,
            n: self.n,
            coeffs: vec![0; self.coeffs.len()],
        };
        acc.coeffs[0] = 1;
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

/// `prod_{v ∈ V} (1 - g^v)^r` in `F_p[F_p^n]`; the empty product is 1.
pub fn binomial_product_fp(v: &FpMultiset, r: u32, limits: &Limits) -> Result<GroupRingFp> {
    check_r(v.modulus(), r)?;
    let mut acc = GroupRingFp::one(v.modulus(), v.dim(), limits)?;
    for x in v {
        acc = acc.mul_binomial_pow(x, r);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Whether `V` is (r, F_p)-vanishing.
pub fn is_fp_vanishing(v: &FpMultiset, r: u32, limits: &Limits) -> Result<bool> {
    Ok(binomial_product_fp(v, r, limits)?.is_zero())
}

/// Vanishing, and no single entry can be dropped while staying vanishing.
///
/// Supersets of a vanishing multiset are vanishing, so single removals
/// decide irredundance.
pub fn is_fp_irredundant(v: &FpMultiset, r: u32, limits: &Limits) -> Result<bool> {
    if !is_fp_vanishing(v, r, limits)? {
        return Ok(false);
    }
    for i in 0..v.len() {
        if is_fp_vanishing(&v.without(i), r, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Indices (increasing) of an (r, F_p)-irredundant sub-multiset of `V`.
///
/// Entries are offered for removal from the last to the first; an entry is
/// dropped whenever the rest still vanishes. One pass suffices because the
/// survivors stay irredundant as the set shrinks.
pub fn extract_irredundant_indices(v: &FpMultiset, r: u32, limits: &Limits) -> Result<Vec<usize>> {
    if !is_fp_vanishing(v, r, limits)? {
        return Err(Error::Precondition("multiset is not vanishing".into()));
    }
    let mut keep: Vec<usize> = (0..v.len()).collect();
    for pos in (0..keep.len()).rev() {
        let mut trial = keep.clone();
        trial.remove(pos);
        if is_fp_vanishing(&v.select(&trial), r, limits)? {
            keep = trial;
        }
    }
    Ok(keep)
}

pub fn extract_irredundant_fp(v: &FpMultiset, r: u32, limits: &Limits) -> Result<FpMultiset> {
    let keep = extract_irredundant_indices(v, r, limits)?;
    Ok(v.select(&keep))
}

/// Exponents `t_v` attached to the entries of a multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct TwistAssignment(Vec<u32>);

impl TwistAssignment {
    pub fn new(p: PrimeModulus, t: Vec<u32>) -> Result<Self> {
        if t.iter().any(|&x| x >= p.get()) {
            return Err(Error::InvalidInput("twist not reduced mod p".into()));
        }
        Ok(TwistAssignment(t))
    }

    pub fn zeros(len: usize) -> Self {
        TwistAssignment(vec![0; len])
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn without(&self, index: usize) -> TwistAssignment {
        let mut t = self.0.clone();
        t.remove(index);
        TwistAssignment(t)
    }
}

/// An element of `Z[λ][F_p^n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingCyc {
    p: PrimeModulus,
    n: usize,
    coeffs: Vec<CyclotomicInt>,
}

impl GroupRingCyc {
    pub fn zero(p: PrimeModulus, n: usize, limits: &Limits) -> Result<Self> {
        let size = limits.ring_size(p, n)?;
        Ok(GroupRingCyc {
            p,
            n,
            coeffs: vec![CyclotomicInt::zero(p); size],
        })
    }

    pub fn one(p: PrimeModulus, n: usize, limits: &Limits) -> Result<Self> {
        Self::monomial(&FpVector::zero(p, n), CyclotomicInt::one(p), limits)
    }

    /// `c · g^v`
    pub fn monomial(v: &FpVector, c: CyclotomicInt, limits: &Limits) -> Result<Self> {
        let mut out = Self::zero(v.modulus(), v.dim(), limits)?;
        out.coeffs[v.index()] = c;
        Ok(out)
    }

    /// `1 - λ^t g^v`
    pub fn twisted_binomial(v: &FpVector, t: u32, limits: &Limits) -> Result<Self> {
        let p = v.modulus();
        let mut out = Self::one(p, v.dim(), limits)?;
        let idx = v.index();
        let term = CyclotomicInt::lambda_pow(p, t as u64);
        out.coeffs[idx].sub_assign(&term);
        Ok(out)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[CyclotomicInt] {
        &self.coeffs
    }

    pub fn coeff(&self, v: &FpVector) -> &CyclotomicInt {
        &self.coeffs[v.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CyclotomicInt::is_zero)
    }

    /// Nonzero `(index, coefficient)` pairs, for debugging output.
    pub fn debug_dump(&self) -> Vec<(usize, String)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.to_string()))
            .collect()
    }

    pub fn add(&self, other: &GroupRingCyc) -> GroupRingCyc {
        GroupRingCyc {
            p: self.p,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// General convolution, `O(p^{2n})` coefficient products.
    pub fn mul(&self, other: &GroupRingCyc) -> GroupRingCyc {
        let p = self.p;
        let mut out = vec![CyclotomicInt::zero(p); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let shift = translation_table(p, self.n, &FpVector::from_index(p, self.n, i));
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[shift[j]].add_assign(&a.mul(b));
                }
            }
        }
        GroupRingCyc {
            p,
            n: self.n,
            coeffs: out,
        }
    }

    /// `self · (1 - λ^t g^v)^r`
    pub fn mul_twisted_binomial_pow(&self, v: &FpVector, t: u32, r: u32) -> GroupRingCyc {
        let p = self.p;
        let back = translation_table(p, self.n, &FpVector::zero(p, self.n).sub(v));
        let mut cur = self.coeffs.clone();
        for _ in 0..r {
            let next: Vec<CyclotomicInt> = (0..cur.len())
                .map(|x| {
                    let mut c = cur[x].clone();
                    let mut shifted = CyclotomicInt::zero(p);
                    shifted.add_lambda_multiple(&cur[back[x]], t as u64);
                    c.sub_assign(&shifted);
                    c
                })
                .collect();
            cur = next;
        }
        GroupRingCyc {
            p,
            n: self.n,
            coeffs: cur,
        }
    }

    /// `F(h*)(x) = sum_v λ^{<x,v>} h*(v)` for every `x`, in mixed-radix order.
    pub fn fourier_transform(&self) -> Vec<CyclotomicInt> {
        let p = self.p;
        let support: Vec<(FpVector, &CyclotomicInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (FpVector::from_index(p, self.n, i), c))
            .collect();
        (0..self.coeffs.len())
            .map(|xi| {
                let x = FpVector::from_index(p, self.n, xi);
                let mut acc = CyclotomicInt::zero(p);
                for (v, c) in &support {
                    acc.add_lambda_multiple(c, x.dot(v) as u64);
                }
                acc
            })
            .collect()
    }
}

/// `prod_{v ∈ V} (1 - λ^{t_v} g^v)^r` over `Z[λ]`; the empty product is 1.
pub fn binomial_product_cyc(
    v: &FpMultiset,
    t: &TwistAssignment,
    r: u32,
    limits: &Limits,
) -> Result<GroupRingCyc> {
    check_r(v.modulus(), r)?;
    if t.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: v.len(),
            found: t.len(),
        });
    }
    let mut acc = GroupRingCyc::one(v.modulus(), v.dim(), limits)?;
    for (x, &tv) in v.iter().zip(t.values()) {
        acc = acc.mul_twisted_binomial_pow(x, tv, r);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Points where the Fourier transform of `h*` vanishes.
pub fn fourier_zero_set(h: &GroupRingCyc) -> Vec<FpVector> {
    h.fourier_transform()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_zero())
        .map(|(i, _)| FpVector::from_index(h.p, h.n, i))
        .collect()
}

/// Lexicographically least twist with `prod (1 - λ^{t_v} g^v)^r = 0`,
/// found by exact products over `Z[λ]`.
///
/// The search is a depth-first walk over `t_0, t_1, ...` that reuses the
/// prefix product at every level.
pub fn is_c_vanishing(v: &FpMultiset, r: u32, limits: &Limits) -> Result<Option<TwistAssignment>> {
    check_r(v.modulus(), r)?;
    limits.enumeration(
        "twist assignments p^|V|",
        v.modulus().get() as u128,
        v.len(),
    )?;
    if v.is_empty() {
        return Ok(None);
    }
    let root = GroupRingCyc::one(v.modulus(), v.dim(), limits)?;
    let mut t = Vec::with_capacity(v.len());
    Ok(twist_search(v, r, &root, &mut t).map(TwistAssignment))
}

fn twist_search(
    v: &FpMultiset,
    r: u32,
    prefix: &GroupRingCyc,
    t: &mut Vec<u32>,
) -> Option<Vec<u32>> {
    let depth = t.len();
    if depth == v.len() {
        return prefix.is_zero().then(|| t.clone());
    }
    let p = v.modulus().get();
    for tv in 0..p {
        let next = prefix.mul_twisted_binomial_pow(&v.entries()[depth], tv, r);
        t.push(tv);
        // once zero, every completion is zero; fill the rest with 0
        if next.is_zero() {
            t.resize(v.len(), 0);
            return Some(t.clone());
        }
        let found = twist_search(v, r, &next, t);
        t.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Whether the product with the given twist is zero while dropping any
/// single factor (with its twist) leaves a nonzero product.
pub fn is_c_irredundant_with(
    v: &FpMultiset,
    t: &TwistAssignment,
    r: u32,
    limits: &Limits,
) -> Result<bool> {
    if !binomial_product_cyc(v, t, r, limits)?.is_zero() {
        return Ok(false);
    }
    for i in 0..v.len() {
        if binomial_product_cyc(&v.without(i), &t.without(i), r, limits)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lexicographically least twist witnessing (r, C)-irredundance of `V`.
pub fn c_irredundant_witness(
    v: &FpMultiset,
    r: u32,
    limits: &Limits,
) -> Result<Option<TwistAssignment>> {
    check_r(v.modulus(), r)?;
    let total = limits.enumeration(
        "twist assignments p^|V|",
        v.modulus().get() as u128,
        v.len(),
    )?;
    if v.is_empty() {
        return Ok(None);
    }
    let p = v.modulus().get() as u128;
    for code in 0..total {
        let mut t = vec![0u32; v.len()];
        let mut c = code;
        for slot in t.iter_mut().rev() {
            *slot = (c % p) as u32;
            c /= p;
        }
        let t = TwistAssignment(t);
        if is_c_irredundant_with(v, &t, r, limits)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn p_copies_vanish() {
        for p in [2u64, 3, 5, 7] {
            for n in 1..=2 {
                let e1 = FpVector::unit(pm(p), n, 0);
                let v = FpMultiset::repeated(&e1, p as usize);
                assert!(binomial_product_fp(&v, 1, &lim()).unwrap().is_zero());
                let short = FpMultiset::repeated(&e1, p as usize - 1);
                assert!(!is_fp_vanishing(&short, 1, &lim()).unwrap());
            }
        }
    }

    #[test]
    fn single_binomial() {
        let p = pm(5);
        let e1 = FpVector::unit(p, 2, 0);
        let h = binomial_product_fp(&FpMultiset::repeated(&e1, 1), 1, &lim()).unwrap();
        assert_eq!(h.debug_dump(), vec![(0, 1), (e1.index(), 4)]);
        for p in [3u64, 5, 7] {
            let v = FpMultiset::from_rows(pm(p), 2, &[&[1, 2]]).unwrap();
            assert!(!is_fp_vanishing(&v, 1, &lim()).unwrap());
        }
    }

    #[test]
    fn p_minus_one_copies_give_all_ones() {
        // direct expansion: (1 - g)^4 = sum_i C(4,i) (-1)^i g^i ≡ sum_i g^i mod 5
        let p = pm(5);
        let e1 = FpVector::unit(p, 1, 0);
        let h = binomial_product_fp(&FpMultiset::repeated(&e1, 4), 1, &lim()).unwrap();
        let binom = [1i64, 4, 6, 4, 1];
        let expected: Vec<u32> = (0..5)
            .map(|i| p.reduce(binom[i] * if i % 2 == 0 { 1 } else { -1 }))
            .collect();
        assert_eq!(expected, vec![1, 1, 1, 1, 1]);
        assert_eq!(h.coeffs(), expected.as_slice());
    }

    #[test]
    fn cap_is_enforced() {
        let small = Limits {
            max_ring_size: 10,
            ..Limits::default()
        };
        let v = FpMultiset::repeated(&FpVector::unit(pm(5), 2, 0), 1);
        assert!(matches!(
            binomial_product_fp(&v, 1, &small),
            Err(Error::CapExceeded { .. })
        ));
        assert!(binomial_product_fp(&v, 5, &lim()).is_err());
    }

    #[test]
    fn extraction_examples() {
        let p = pm(5);
        let v = FpVector::from_ints(p, &[1, 0]);
        let u = FpVector::from_ints(p, &[0, 1]);
        let mut m = FpMultiset::repeated(&v, 5);
        m.push(u).unwrap();
        let got = extract_irredundant_fp(&m, 1, &lim()).unwrap();
        assert_eq!(got, FpMultiset::repeated(&v, 5));
        for i in 0..got.len() {
            assert!(!is_fp_vanishing(&got.without(i), 1, &lim()).unwrap());
        }

        let doubled = FpMultiset::repeated(&v, 10);
        assert_eq!(
            extract_irredundant_fp(&doubled, 1, &lim()).unwrap(),
            FpMultiset::repeated(&v, 5)
        );

        let already = FpMultiset::repeated(&v, 5);
        assert_eq!(
            extract_irredundant_fp(&already, 1, &lim()).unwrap(),
            already
        );

        let not_vanishing = FpMultiset::repeated(&v, 4);
        assert!(matches!(
            extract_irredundant_fp(&not_vanishing, 1, &lim()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn cyclotomic_product_examples() {
        let p = pm(5);
        let v = FpMultiset::from_rows(p, 2, &[&[1, 3]]).unwrap();
        let h = binomial_product_cyc(&v, &TwistAssignment::zeros(1), 1, &lim()).unwrap();
        let mut expected = GroupRingCyc::one(p, 2, &lim()).unwrap();
        expected.coeffs[v.entries()[0].index()] = CyclotomicInt::from_int(p, -1);
        assert_eq!(h, expected);

        // λ = -1 for p = 2: (1 - g)(1 + g) = 1 - g^2 = 0
        let p2 = pm(2);
        let v = FpMultiset::from_rows(p2, 1, &[&[1], &[1]]).unwrap();
        let t = TwistAssignment::new(p2, vec![0, 1]).unwrap();
        assert!(binomial_product_cyc(&v, &t, 1, &lim()).unwrap().is_zero());

        let p3 = pm(3);
        let v = FpMultiset::from_rows(p3, 1, &[&[1], &[1], &[1]]).unwrap();
        let t = TwistAssignment::new(p3, vec![0, 1, 2]).unwrap();
        assert!(binomial_product_cyc(&v, &t, 1, &lim()).unwrap().is_zero());
        let t = TwistAssignment::new(p3, vec![0, 1, 1]).unwrap();
        assert!(!binomial_product_cyc(&v, &t, 1, &lim()).unwrap().is_zero());
    }

    #[test]
    fn c_vanishing_examples() {
        let p3 = pm(3);
        let v = FpMultiset::from_rows(p3, 1, &[&[1], &[1], &[1]]).unwrap();
        let t = is_c_vanishing(&v, 1, &lim())
            .unwrap()
            .expect("three lines cover F_3");
        assert_eq!(t.values(), &[0, 1, 2]);

        for p in [3u64, 5, 7] {
            let q = pm(p);
            let rows: Vec<Vec<i64>> = (1..p as i64).map(|a| vec![a]).collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let v = FpMultiset::from_rows(q, 1, &refs).unwrap();
            assert!(
                is_c_vanishing(&v, 1, &lim()).unwrap().is_none(),
                "p - 1 points cannot cover F_{p}"
            );
        }
        assert!(is_c_vanishing(&FpMultiset::empty(p3, 2), 1, &lim())
            .unwrap()
            .is_none());
    }

    #[test]
    fn fourier_of_binomial_is_a_hyperplane() {
        let p = pm(5);
        let v = FpVector::from_ints(p, &[2, 3]);
        for t in 0..5u32 {
            let h = GroupRingCyc::twisted_binomial(&v, t, &lim()).unwrap();
            let zeros = fourier_zero_set(&h);
            let expected: Vec<FpVector> = crate::fp::enumerate_vectors(p, 2, &lim())
                .unwrap()
                .filter(|x| x.dot(&v) == p.neg(t))
                .collect();
            assert_eq!(zeros, expected);
        }
        assert!(fourier_zero_set(&GroupRingCyc::one(p, 2, &lim()).unwrap()).is_empty());
    }

    #[test]
    fn irredundance_follows_asymmetric_definition() {
        // {e1, e1, e1} over F_3 with t = (0,1,2) covers irredundantly; with a
        // fourth copy, no twist makes all four needed
        let p = pm(3);
        let v = FpMultiset::from_rows(p, 1, &[&[1], &[1], &[1]]).unwrap();
        let t = TwistAssignment::new(p, vec![0, 1, 2]).unwrap();
        assert!(is_c_irredundant_with(&v, &t, 1, &lim()).unwrap());
        let mut w = v.clone();
        w.push(FpVector::from_ints(p, &[1])).unwrap();
        assert!(is_c_vanishing(&w, 1, &lim()).unwrap().is_some());
        assert!(c_irredundant_witness(&w, 1, &lim()).unwrap().is_none());
    }
}
