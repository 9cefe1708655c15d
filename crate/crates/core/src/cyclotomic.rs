//! Exact elements of `Z[λ]`, `λ = e^{2πi/p}`.
//!
//! Elements are stored in the power basis `λ^0, ..., λ^{p-2}`. Arithmetic is
//! carried out on length-`p` coefficient vectors modulo `x^p - 1` and then
//! reduced with `λ^{p-1} = -(1 + λ + ... + λ^{p-2})`, so the zero test is a
//! plain coefficient check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::fp::PrimeModulus;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    p: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(p: PrimeModulus) -> Self {
        CyclotomicInt {
            p: p.get(),
            coeffs: vec![BigInt::zero(); p.get() as usize - 1],
        }
    }

    pub fn one(p: PrimeModulus) -> Self {
        Self::from_int(p, 1)
    }

    pub fn from_int(p: PrimeModulus, c: i64) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = BigInt::from(c);
        out
    }

    /// `λ^t`
    pub fn lambda_pow(p: PrimeModulus, t: u64) -> Self {
        let mut wide = vec![BigInt::zero(); p.get() as usize];
        wide[(t % p.get() as u64) as usize] = BigInt::one();
        Self::from_wide(p.get(), wide)
    }

    /// Canonical form of `sum_j c_j λ^j` for `j` in `[0, p)`.
    pub fn from_wide(p: u32, mut wide: Vec<BigInt>) -> Self {
        debug_assert_eq!(wide.len(), p as usize);
        let top = wide.pop().unwrap_or_default();
        if !top.is_zero() {
            for c in wide.iter_mut() {
                *c -= &top;
            }
        }
        CyclotomicInt { p, coeffs: wide }
    }

    fn to_wide(&self) -> Vec<BigInt> {
        let mut wide = self.coeffs.clone();
        wide.push(BigInt::zero());
        wide
    }

    /// Power-basis coefficients `c_0, ..., c_{p-2}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add_assign(&mut self, other: &CyclotomicInt) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn sub_assign(&mut self, other: &CyclotomicInt) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
    }

    pub fn add(&self, other: &CyclotomicInt) -> CyclotomicInt {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &CyclotomicInt) -> CyclotomicInt {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn neg(&self) -> CyclotomicInt {
        CyclotomicInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// `self · λ^t`, a cyclic shift of the wide representation.
    pub fn mul_lambda_pow(&self, t: u64) -> CyclotomicInt {
        let p = self.p as usize;
        let t = (t % self.p as u64) as usize;
        if t == 0 {
            return self.clone();
        }
        let wide = self.to_wide();
        let mut shifted = vec![BigInt::zero(); p];
        for (j, c) in wide.into_iter().enumerate() {
            shifted[(j + t) % p] = c;
        }
        Self::from_wide(self.p, shifted)
    }

    /// `self += λ^t · other` without materialising the product.
    pub fn add_lambda_multiple(&mut self, other: &CyclotomicInt, t: u64) {
        let p = self.p as usize;
        let t = (t % self.p as u64) as usize;
        // coefficient j of other lands on (j + t) mod p; index p-1 is folded back
        let fold = (p - 1 + p - t) % p; // j with j + t ≡ p - 1
        let folded = if fold < p - 1 {
            other.coeffs[fold].clone()
        } else {
            BigInt::zero()
        };
        for (j, c) in other.coeffs.iter().enumerate() {
            let k = (j + t) % p;
            if k < p - 1 {
                self.coeffs[k] += c;
            }
        }
        if !folded.is_zero() {
            for c in self.coeffs.iter_mut() {
                *c -= &folded;
            }
        }
    }

    pub fn mul(&self, other: &CyclotomicInt) -> CyclotomicInt {
        let p = self.p as usize;
        let mut wide = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                wide[(i + j) % p] += a * b;
            }
        }
        Self::from_wide(self.p, wide)
    }

    pub fn pow(&self, exp: u32) -> CyclotomicInt {
        let mut acc = CyclotomicInt {
            p: self.p,
            coeffs: vec![BigInt::zero(); self.coeffs.len()],
        };
        acc.coeffs[0] = BigInt::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}·λ^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn minimal_polynomial_relation() {
        for p in [2u64, 3, 5, 7] {
            let q = pm(p);
            let mut sum = CyclotomicInt::zero(q);
            for t in 0..p {
                sum.add_assign(&CyclotomicInt::lambda_pow(q, t));
            }
            assert!(sum.is_zero(), "1 + λ + ... + λ^(p-1) = 0 for p = {p}");
            assert_eq!(CyclotomicInt::lambda_pow(q, p), CyclotomicInt::one(q));
        }
    }

    #[test]
    fn p_two_is_plain_integers() {
        let q = pm(2);
        assert_eq!(
            CyclotomicInt::lambda_pow(q, 1),
            CyclotomicInt::from_int(q, -1)
        );
    }

    #[test]
    fn one_minus_lambda_is_not_zero_but_its_norm_is_p() {
        let q = pm(5);
        let x = CyclotomicInt::one(q).sub(&CyclotomicInt::lambda_pow(q, 1));
        assert!(!x.is_zero());
        // product of (1 - λ^j) over j = 1..p-1 equals p
        let mut prod = CyclotomicInt::one(q);
        for j in 1..5 {
            prod = prod.mul(&CyclotomicInt::one(q).sub(&CyclotomicInt::lambda_pow(q, j)));
        }
        assert_eq!(prod, CyclotomicInt::from_int(q, 5));
    }

    #[test]
    fn shift_matches_multiplication() {
        let q = pm(7);
        let x = CyclotomicInt::from_wide(7, (0..7).map(|j| BigInt::from(j * j - 3)).collect());
        for t in 0..9 {
            let expected = x.mul(&CyclotomicInt::lambda_pow(q, t));
            assert_eq!(x.mul_lambda_pow(t), expected);
            let mut acc = CyclotomicInt::from_int(q, 2);
            acc.add_lambda_multiple(&x, t);
            assert_eq!(acc, CyclotomicInt::from_int(q, 2).add(&expected));
        }
    }
}
