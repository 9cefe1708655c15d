//! Vectors `x` with every coordinate of every `M_i x` in a prescribed set.
//!
//! When no such `x` exists, the forbidden values `t ∉ X_{i,j}` give affine
//! hyperplanes `<x, v_{i,j}> = t` that cover `F_p^n`; an irredundant part of
//! that family is returned as a certificate.

use num_bigint::BigUint;
use rand::Rng;
use serde::Serialize;

use crate::arithmetic::{find_small_arithmetic_set, min_arithmetic_set};
use crate::covers::HyperplaneCoverInstance;
use crate::error::{Error, Result};
use crate::fp::{
    enumerate_vectors, is_invertible, span_dimension, FpMultiset, FpVector, Limits, PrimeModulus,
};

/// Invertible `M_1..M_k` (as rows) with allowed sets `X_{i,j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChoiceSystem {
    p: PrimeModulus,
    n: usize,
    matrices: Vec<Vec<FpVector>>,
    choices: Vec<Vec<Vec<u32>>>,
}

impl ChoiceSystem {
    pub fn new(
        p: PrimeModulus,
        n: usize,
        matrices: Vec<Vec<FpVector>>,
        choices: Vec<Vec<Vec<u32>>>,
    ) -> Result<Self> {
        if choices.len() != matrices.len() {
            return Err(Error::DimensionMismatch {
                expected: matrices.len(),
                found: choices.len(),
            });
        }
        for (m, x) in matrices.iter().zip(&choices) {
            if m.len() != n || m.iter().any(|row| row.dim() != n || row.modulus() != p) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.len(),
                });
            }
            if !is_invertible(p, m) {
                return Err(Error::InvalidInput("matrix is not invertible".into()));
            }
            if x.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: x.len(),
                });
            }
        }
        let mut choices = choices;
        for set in choices.iter_mut().flatten() {
            if set.iter().any(|&t| t >= p.get()) {
                return Err(Error::InvalidInput("choice value not reduced mod p".into()));
            }
            set.sort_unstable();
            set.dedup();
        }
        Ok(ChoiceSystem {
            p,
            n,
            matrices,
            choices,
        })
    }

    /// Every `X_{i,j} = F_p^*`.
    pub fn nonzero(p: PrimeModulus, n: usize, matrices: Vec<Vec<FpVector>>) -> Result<Self> {
        let all: Vec<u32> = (1..p.get()).collect();
        let choices = vec![vec![all; n]; matrices.len()];
        Self::new(p, n, matrices, choices)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[Vec<FpVector>] {
        &self.matrices
    }

    pub fn choices(&self) -> &[Vec<Vec<u32>>] {
        &self.choices
    }

    /// `r` with `|X_{i,j}| = p - r` for all `i, j`, if the sizes agree and
    /// `r >= 1`.
    pub fn uniform_r(&self) -> Option<u32> {
        let mut sizes = self.choices.iter().flatten().map(Vec::len);
        let first = sizes.next()?;
        (first < self.p.get() as usize && sizes.all(|s| s == first))
            .then(|| self.p.get() - first as u32)
    }

    pub fn satisfies(&self, x: &FpVector) -> bool {
        self.matrices.iter().zip(&self.choices).all(|(m, xs)| {
            m.iter()
                .zip(xs)
                .all(|(row, allowed)| allowed.binary_search(&row.dot(x)).is_ok())
        })
    }
}

/// Lexicographically least `x` with `(M_i x)(j) ∈ X_{i,j}` for all `i, j`.
pub fn find_witness(s: &ChoiceSystem, limits: &Limits) -> Result<Option<FpVector>> {
    Ok(enumerate_vectors(s.p, s.n, limits)?.find(|x| s.satisfies(x)))
}

/// Forbidden hyperplanes `<x, v_{i,j}> = t` for the triples in `J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverCertificate {
    triples: Vec<(usize, usize, u32)>,
    instance: HyperplaneCoverInstance,
}

impl CoverCertificate {
    /// `(i, j, t)` with `t ∉ X_{i,j}`.
    pub fn triples(&self) -> &[(usize, usize, u32)] {
        &self.triples
    }

    /// The hyperplanes as an instance; offsets are stored negated.
    pub fn instance(&self) -> &HyperplaneCoverInstance {
        &self.instance
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// `dim <v_{i,j} : (i,j,t) ∈ J>`
    pub fn span_dim(&self) -> usize {
        let v = FpMultiset::new(
            self.instance.modulus(),
            self.instance.dim(),
            self.instance.normals().to_vec(),
        )
        .expect("normals share p and n");
        span_dimension(&v)
    }

    /// Re-derives the hyperplanes from `S` and checks they form an
    /// irredundant cover.
    pub fn verify(&self, s: &ChoiceSystem, limits: &Limits) -> Result<bool> {
        for (k, &(i, j, t)) in self.triples.iter().enumerate() {
            if i >= s.k() || j >= s.n || s.choices[i][j].binary_search(&t).is_ok() {
                return Ok(false);
            }
            if self.instance.normals()[k] != s.matrices[i][j]
                || self.instance.offsets()[k] != s.p.neg(t)
            {
                return Ok(false);
            }
        }
        self.instance.is_irredundant_cover(limits)
    }
}

/// Certificate that `S` has no witness.
pub fn failure_certificate(s: &ChoiceSystem, limits: &Limits) -> Result<CoverCertificate> {
    if find_witness(s, limits)?.is_some() {
        return Err(Error::Precondition("the system has a witness".into()));
    }
    let mut triples = Vec::new();
    let mut normals = Vec::new();
    let mut offsets = Vec::new();
    for (i, (m, xs)) in s.matrices.iter().zip(&s.choices).enumerate() {
        for (j, (row, allowed)) in m.iter().zip(xs).enumerate() {
            for t in (0..s.p.get()).filter(|t| allowed.binary_search(t).is_err()) {
                triples.push((i, j, t));
                normals.push(row.clone());
                offsets.push(s.p.neg(t));
            }
        }
    }
    let full = HyperplaneCoverInstance::new(s.p, s.n, normals, offsets)?;
    let keep = full.irredundant_indices(limits)?;
    let cert = CoverCertificate {
        triples: keep.iter().map(|&i| triples[i]).collect(),
        instance: full.select(&keep),
    };
    if !cert.verify(s, limits)? {
        return Err(Error::Invariant("certificate failed its own check".into()));
    }
    Ok(cert)
}

/// `dim · k · r >= |J|`
pub fn check_pigeonhole_bound(cert: &CoverCertificate, k: usize, r: u32) -> bool {
    cert.span_dim() * k * r as usize >= cert.len()
}

/// `s^{kr} >= p`: a failure certificate can only exist when this holds.
pub fn check_contradiction_condition(cert: &CoverCertificate, k: usize, r: u32, s: u64) -> bool {
    !hypothesis_holds(cert.instance.modulus(), k, r, s)
}

/// `s^{kr} < p`
pub fn hypothesis_holds(p: PrimeModulus, k: usize, r: u32, s: u64) -> bool {
    BigUint::from(s).pow(k as u32 * r) < BigUint::from(p.get())
}

/// Size of the smallest arithmetic set when `p` is small enough to search
/// exhaustively, otherwise the size of a verified small one (an upper bound).
pub fn arithmetic_size(p: PrimeModulus, seed: u64, limits: &Limits) -> Result<usize> {
    if p.get() <= limits.max_exhaustive_prime {
        Ok(min_arithmetic_set(p, 1, limits)?.len())
    } else {
        Ok(find_small_arithmetic_set(p, seed, limits)?.len())
    }
}

/// A uniformly random invertible `n × n` matrix, by rejection.
pub fn random_invertible<R: Rng + ?Sized>(p: PrimeModulus, n: usize, rng: &mut R) -> Vec<FpVector> {
    loop {
        let rows: Vec<FpVector> = (0..n)
            .map(|_| {
                FpVector::new(p, (0..n).map(|_| rng.gen_range(0..p.get())).collect())
                    .expect("reduced")
            })
            .collect();
        if is_invertible(p, &rows) {
            return rows;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn identity(p: PrimeModulus, n: usize) -> Vec<FpVector> {
        (0..n).map(|i| FpVector::unit(p, n, i)).collect()
    }

    #[test]
    fn witness_examples() {
        let p = pm(5);
        let s = ChoiceSystem::nonzero(p, 3, vec![identity(p, 3)]).unwrap();
        assert_eq!(
            find_witness(&s, &lim()).unwrap().unwrap(),
            FpVector::from_ints(p, &[1, 1, 1])
        );
        assert_eq!(s.uniform_r(), Some(1));

        let s = ChoiceSystem::new(p, 1, vec![identity(p, 1)], vec![vec![vec![0]]]).unwrap();
        assert_eq!(
            find_witness(&s, &lim()).unwrap().unwrap(),
            FpVector::from_ints(p, &[0])
        );
    }

    #[test]
    fn singular_matrix_rejected() {
        let p = pm(3);
        let m = vec![
            FpVector::from_ints(p, &[1, 2]),
            FpVector::from_ints(p, &[2, 1]),
        ];
        assert!(ChoiceSystem::nonzero(p, 2, vec![m]).is_err());
    }

    #[test]
    fn certificate_examples() {
        let p = pm(2);
        let one = identity(p, 1);
        let s = ChoiceSystem::new(p, 1, vec![one.clone()], vec![vec![vec![0]]]).unwrap();
        assert!(matches!(
            failure_certificate(&s, &lim()),
            Err(Error::Precondition(_))
        ));

        let s = ChoiceSystem::new(
            p,
            1,
            vec![one.clone(), one],
            vec![vec![vec![0]], vec![vec![1]]],
        )
        .unwrap();
        assert!(find_witness(&s, &lim()).unwrap().is_none());
        let cert = failure_certificate(&s, &lim()).unwrap();
        assert_eq!(cert.triples(), &[(0, 0, 1), (1, 0, 0)]);
        assert!(cert.verify(&s, &lim()).unwrap());
        assert_eq!(cert.span_dim(), 1);
        assert!(check_pigeonhole_bound(&cert, 2, 1));
        assert!(check_contradiction_condition(&cert, 2, 1, 2));
    }

    #[test]
    fn witness_matches_a_second_scan() {
        let p = pm(7);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let ms = vec![
                random_invertible(p, 2, &mut rng),
                random_invertible(p, 2, &mut rng),
            ];
            let s = ChoiceSystem::nonzero(p, 2, ms.clone()).unwrap();
            let any = (0..49).any(|i| {
                let x = FpVector::from_index(p, 2, i);
                ms.iter().all(|m| m.iter().all(|row| row.dot(&x) != 0))
            });
            assert_eq!(find_witness(&s, &lim()).unwrap().is_some(), any);
        }
    }

    #[test]
    fn hypothesis_arithmetic() {
        assert!(hypothesis_holds(pm(17), 1, 1, 4));
        assert!(!hypothesis_holds(pm(13), 2, 1, 4));
        assert_eq!(arithmetic_size(pm(5), 0, &lim()).unwrap(), 4);
    }
}
