//! Representing vectors with coefficients from an arithmetic set.
//!
//! [`find_epsilon_relation`] finds a short signed relation among scaled
//! entries of an irredundant multiset, [`represent_in_set`] uses it to push
//! every coefficient of a representation into `A` one entry at a time, and
//! [`additive_basis_decompose`] recurses over quotient spaces to write any
//! vector over a union of bases.

use num_bigint::BigUint;
use serde::Serialize;

use crate::arithmetic::ArithmeticSet;
use crate::error::{Error, Result};
use crate::fp::{quotient_split, rank_of, solve_combination, FpMultiset, FpVector, Limits};
use crate::group_ring::{extract_irredundant_indices, is_fp_irredundant, is_fp_vanishing};

/// A signed relation `ε_w b_w w = sum_{v != w} ε_v b_v v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpsilonRelation {
    w: usize,
    /// One entry per element of `V`; entry `w` holds `ε_w`.
    epsilons: Vec<i32>,
    scaling: Vec<u32>,
}

impl EpsilonRelation {
    /// Checks the identity before accepting the relation.
    pub fn new(
        v: &FpMultiset,
        w: usize,
        epsilons: Vec<i32>,
        scaling: Vec<u32>,
        r: u32,
    ) -> Result<Self> {
        if epsilons.len() != v.len() || scaling.len() != v.len() || w >= v.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                found: epsilons.len(),
            });
        }
        let r = r as i32;
        if !(1..=r).contains(&epsilons[w]) || epsilons.iter().any(|e| !(-r..=r).contains(e)) {
            return Err(Error::Invariant("epsilon out of range".into()));
        }
        let p = v.modulus();
        let mut lhs = FpVector::zero(p, v.dim());
        let mut rhs = FpVector::zero(p, v.dim());
        for (i, x) in v.iter().enumerate() {
            let c = p.mul(p.reduce(epsilons[i] as i64), scaling[i]);
            if i == w {
                lhs = lhs.add_scaled(x, c);
            } else {
                rhs = rhs.add_scaled(x, c);
            }
        }
        if lhs != rhs {
            return Err(Error::Invariant("epsilon relation does not hold".into()));
        }
        Ok(EpsilonRelation {
            w,
            epsilons,
            scaling,
        })
    }

    pub fn distinguished(&self) -> usize {
        self.w
    }

    pub fn epsilon_w(&self) -> u32 {
        self.epsilons[self.w] as u32
    }

    pub fn epsilons(&self) -> &[i32] {
        &self.epsilons
    }

    pub fn scaling(&self) -> &[u32] {
        &self.scaling
    }
}

/// `0, 1, -1, 2, -2, ..., r, -r`
fn epsilon_order(r: u32) -> impl Iterator<Item = i32> {
    std::iter::once(0).chain((1..=r as i32).flat_map(|e| [e, -e]))
}

/// Finds `ε` with `ε_w ∈ [1, r]`, `ε_v ∈ [-r, r]` and
/// `ε_w b_w w = sum_{v != w} ε_v b_v v`.
///
/// Sums `sum ε_v b_v v` over a growing prefix of `V \ {w}` are tracked in a
/// table of `p^n` cells. Each cell records the layer that first reached it
/// and the epsilon used there; later layers never overwrite, so backtracking
/// yields zeros for the skipped entries.
pub fn find_epsilon_relation(
    v: &FpMultiset,
    r: u32,
    scaling: &[u32],
    w: usize,
    limits: &Limits,
) -> Result<EpsilonRelation> {
    let p = v.modulus();
    let n = v.dim();
    if w >= v.len() || scaling.len() != v.len() {
        return Err(Error::InvalidInput(
            "distinguished entry or scaling does not match V".into(),
        ));
    }
    if r == 0 || r >= p.get() {
        return Err(Error::InvalidInput(format!(
            "r = {r} is outside [1, {}]",
            p.get() - 1
        )));
    }
    if scaling.iter().any(|&b| b % p.get() == 0) {
        return Err(Error::InvalidInput("scaling must be nonzero mod p".into()));
    }
    let size = limits.ring_size(p, n)?;
    let others: Vec<usize> = (0..v.len()).filter(|&i| i != w).collect();
    // reached[y] = (layer, epsilon) of first arrival; layer 0 is the empty sum
    let mut reached: Vec<Option<(usize, i32)>> = vec![None; size];
    reached[0] = Some((0, 0));
    let mut frontier: Vec<usize> = vec![0];
    for (layer, &i) in others.iter().enumerate() {
        let step = v.entries()[i].scale(scaling[i]);
        let mut added = Vec::new();
        for &y in &frontier {
            let base = FpVector::from_index(p, n, y);
            for e in epsilon_order(r) {
                let z = base.add_scaled(&step, p.reduce(e as i64)).index();
                if reached[z].is_none() {
                    reached[z] = Some((layer + 1, e));
                    added.push(z);
                }
            }
        }
        frontier.extend(added);
    }

    let ww = v.entries()[w].scale(scaling[w]);
    for ew in 1..=r {
        let target = ww.scale(ew % p.get());
        let Some(_) = reached[target.index()] else {
            continue;
        };
        let mut epsilons = vec![0i32; v.len()];
        epsilons[w] = ew as i32;
        let mut y = target;
        while let Some((layer, e)) = reached[y.index()] {
            if layer == 0 {
                break;
            }
            let i = others[layer - 1];
            epsilons[i] = e;
            y = y.sub(&v.entries()[i].scale(p.mul(scaling[i], p.reduce(e as i64))));
        }
        return EpsilonRelation::new(v, w, epsilons, scaling.to_vec(), r);
    }
    Err(Error::Precondition(
        "no epsilon relation exists; V is not irredundant".into(),
    ))
}

/// `x = sum_v a_v v`, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representation {
    target: FpVector,
    coefficients: Vec<u32>,
    /// Descent steps taken to reach this representation.
    iterations: usize,
}

impl Representation {
    pub fn new(
        target: FpVector,
        v: &FpMultiset,
        coefficients: Vec<u32>,
        iterations: usize,
    ) -> Result<Self> {
        if coefficients.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                found: coefficients.len(),
            });
        }
        if v.combination(&coefficients) != target {
            return Err(Error::Invariant(
                "representation does not sum to its target".into(),
            ));
        }
        Ok(Representation {
            target,
            coefficients,
            iterations,
        })
    }

    pub fn target(&self) -> &FpVector {
        &self.target
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coefficients
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }
}

/// Writes `x ∈ <V>` as `sum a_v v` with every `a_v ∈ A`.
///
/// Starts from an eliminated representation and repeatedly repairs the
/// first coefficient outside `A`. Each step applies an epsilon relation
/// whose scalings keep in-`A` coefficients inside `A` and move the repaired
/// one into it, so the number of bad coefficients drops every time.
pub fn represent_in_set(
    x: &FpVector,
    v: &FpMultiset,
    a: &ArithmeticSet,
    r: u32,
    limits: &Limits,
) -> Result<Representation> {
    let p = v.modulus();
    if a.modulus() != p {
        return Err(Error::ModulusMismatch {
            expected: p.get(),
            found: a.modulus().get(),
        });
    }
    if x.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: v.dim(),
            found: x.dim(),
        });
    }
    if a.r() < r || !a.recheck() {
        return Err(Error::Precondition(format!("A is not {r}-arithmetic")));
    }
    if !is_fp_vanishing(v, r, limits)? {
        return Err(Error::Precondition("V is not vanishing".into()));
    }
    if !is_fp_irredundant(v, r, limits)? {
        return Err(Error::Precondition("V is not irredundant".into()));
    }
    let mut coeffs = solve_combination(v, x)
        .ok_or_else(|| Error::Precondition("x is not in the span of V".into()))?;

    let outside = |c: &[u32]| c.iter().filter(|&&c| !a.contains(c)).count();
    let mut bad = outside(&coeffs);
    let mut iterations = 0;
    while let Some(w) = coeffs.iter().position(|&c| !a.contains(c)) {
        let scaling: Vec<u32> = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                if a.contains(c) || i == w {
                    a.witness(c)
                } else {
                    1
                }
            })
            .collect();
        let rel = find_epsilon_relation(v, r, &scaling, w, limits)?;
        for (i, c) in coeffs.iter_mut().enumerate() {
            let step = p.mul(p.reduce(rel.epsilons()[i] as i64), scaling[i]);
            *c = if i == w {
                p.add(*c, step)
            } else {
                p.sub(*c, step)
            };
        }
        iterations += 1;
        let now = outside(&coeffs);
        if now >= bad {
            return Err(Error::Invariant(format!(
                "descent did not progress ({bad} -> {now})"
            )));
        }
        bad = now;
    }
    Representation::new(x.clone(), v, coeffs, iterations)
}

/// Writes `w` over the union of `bases` with every coefficient in `A`.
///
/// Coefficients follow the concatenated order of the bases. At least
/// `⌈p/r⌉` bases are required.
pub fn additive_basis_decompose(
    w: &FpVector,
    bases: &[FpMultiset],
    a: &ArithmeticSet,
    r: u32,
    limits: &Limits,
) -> Result<Representation> {
    let p = w.modulus();
    let n = w.dim();
    if a.modulus() != p {
        return Err(Error::ModulusMismatch {
            expected: p.get(),
            found: a.modulus().get(),
        });
    }
    if a.is_empty() || a.r() < r || !a.recheck() {
        return Err(Error::Precondition(format!("A is not {r}-arithmetic")));
    }
    let need = p.get().div_ceil(r) as usize;
    if bases.len() < need {
        return Err(Error::Precondition(format!(
            "need at least {need} bases, got {}",
            bases.len()
        )));
    }
    let mut vecs = Vec::new();
    let mut groups = Vec::new();
    for basis in bases {
        if basis.modulus() != p || basis.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: basis.dim(),
            });
        }
        if basis.len() != n || rank_of(p, n, basis.iter()) != n {
            return Err(Error::Precondition(
                "a supplied basis is not a basis".into(),
            ));
        }
        groups.push((vecs.len()..vecs.len() + n).collect::<Vec<_>>());
        vecs.extend(basis.iter().cloned());
    }
    let union = FpMultiset::new(p, n, vecs.clone())?;
    let mut iterations = 0;
    let coeffs = decompose_rec(w, vecs, groups, a, r, need, limits, &mut iterations)?;
    Representation::new(w.clone(), &union, coeffs, iterations)
}

#[allow(clippy::too_many_arguments)]
fn decompose_rec(
    w: &FpVector,
    vecs: Vec<FpVector>,
    groups: Vec<Vec<usize>>,
    a: &ArithmeticSet,
    r: u32,
    need: usize,
    limits: &Limits,
    iterations: &mut usize,
) -> Result<Vec<u32>> {
    let p = w.modulus();
    let n = w.dim();
    if n == 0 {
        return Ok(vec![a.elements()[0]; vecs.len()]);
    }
    if groups.len() < need {
        return Err(Error::Invariant(format!(
            "only {} bases survive the projection",
            groups.len()
        )));
    }
    let all = FpMultiset::new(p, n, vecs.clone())?;
    if !is_fp_vanishing(&all, r, limits)? {
        return Err(Error::Invariant("union of bases is not vanishing".into()));
    }
    let core = extract_irredundant_indices(&all, r, limits)?;
    let v = all.select(&core);
    let split = quotient_split(&v);
    let m = split.dim_s();

    let rest: Vec<usize> = (0..vecs.len()).filter(|i| !core.contains(i)).collect();
    let position = |i: usize| rest.iter().position(|&j| j == i);
    let projected: Vec<FpVector> = rest.iter().map(|&i| split.project_s(&vecs[i])).collect();
    let mut new_groups = Vec::new();
    for group in &groups {
        let mut chosen: Vec<usize> = Vec::new();
        for &i in group {
            let Some(k) = position(i) else { continue };
            let mut trial: Vec<&FpVector> = chosen.iter().map(|&c| &projected[c]).collect();
            trial.push(&projected[k]);
            if rank_of(p, m, trial) > chosen.len() {
                chosen.push(k);
            }
        }
        if chosen.len() != m {
            return Err(Error::Invariant(
                "a projected basis no longer spans the quotient".into(),
            ));
        }
        new_groups.push(chosen);
    }

    let sub = decompose_rec(
        &split.project_s(w),
        projected,
        new_groups,
        a,
        r,
        need,
        limits,
        iterations,
    )?;
    let mut residual = w.clone();
    for (&i, &alpha) in rest.iter().zip(&sub) {
        residual = residual.sub(&vecs[i].scale(alpha));
    }
    if !split.contains(&residual) {
        return Err(Error::Invariant(
            "residual left the irredundant span".into(),
        ));
    }
    let rep = represent_in_set(&residual, &v, a, r, limits)?;
    *iterations += rep.iterations();

    let mut coeffs = vec![0u32; vecs.len()];
    for (&i, &c) in core.iter().zip(rep.coefficients()) {
        coeffs[i] = c;
    }
    for (&i, &c) in rest.iter().zip(&sub) {
        coeffs[i] = c;
    }
    Ok(coeffs)
}

/// Whether some `a ∈ A^V` has `sum a_v v = x`, by a reachability sweep.
pub fn brute_force_representable(
    x: &FpVector,
    v: &FpMultiset,
    a: &[u32],
    limits: &Limits,
) -> Result<bool> {
    let p = v.modulus();
    let n = v.dim();
    let size = limits.ring_size(p, n)?;
    let mut reach = vec![false; size];
    reach[0] = true;
    for entry in v {
        let mut next = vec![false; size];
        for (y, _) in reach.iter().enumerate().filter(|(_, &on)| on) {
            let base = FpVector::from_index(p, n, y);
            for &c in a {
                next[base.add_scaled(entry, c % p.get()).index()] = true;
            }
        }
        reach = next;
    }
    Ok(reach[x.index()])
}

/// `s^|V| >= p^dim<V>`, the counting form of `|V| >= dim<V> · log p / log s`.
pub fn verify_size_bound(v: &FpMultiset, s: u64) -> bool {
    let dim = crate::fp::span_dimension(v) as u32;
    BigUint::from(s).pow(v.len() as u32) >= BigUint::from(v.modulus().get()).pow(dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::is_r_arithmetic;
    use crate::fp::PrimeModulus;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn set(p: u64, r: u32, elems: &[u32]) -> ArithmeticSet {
        is_r_arithmetic(elems, r, pm(p))
            .unwrap()
            .into_set()
            .unwrap()
    }

    #[test]
    fn epsilon_relation_examples() {
        let p = pm(5);
        let v = FpMultiset::repeated(&FpVector::from_ints(p, &[1]), 5);
        let rel = find_epsilon_relation(&v, 1, &[1; 5], 0, &lim()).unwrap();
        assert_eq!(rel.epsilons(), &[1, 1, 0, 0, 0]);

        let p2 = pm(2);
        let v = FpMultiset::from_rows(p2, 2, &[&[1, 0], &[1, 0], &[0, 1], &[0, 1]]).unwrap();
        let rel = find_epsilon_relation(&v, 1, &[1; 4], 0, &lim()).unwrap();
        assert_eq!(rel.epsilon_w(), 1);
        assert_eq!(&rel.epsilons()[1..], &[1, 0, 0]);
    }

    #[test]
    fn epsilon_relation_reports_non_irredundant_input() {
        let p = pm(5);
        let v = FpMultiset::from_rows(p, 2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(matches!(
            find_epsilon_relation(&v, 1, &[1, 1], 0, &lim()),
            Err(Error::Precondition(_))
        ));
        assert!(find_epsilon_relation(&v, 1, &[0, 1], 0, &lim()).is_err());
    }

    #[test]
    fn relation_constructor_rejects_false_identity() {
        let p = pm(5);
        let v = FpMultiset::repeated(&FpVector::from_ints(p, &[1]), 2);
        assert!(EpsilonRelation::new(&v, 0, vec![1, 2], vec![1, 1], 2).is_err());
        assert!(EpsilonRelation::new(&v, 0, vec![1, 1], vec![1, 1], 1).is_ok());
    }

    #[test]
    fn five_copies_over_nonzero_residues() {
        let p = pm(5);
        let v = FpMultiset::repeated(&FpVector::from_ints(p, &[1]), 5);
        let a = set(5, 1, &[1, 2, 3, 4]);
        for x in 0..5 {
            let x = FpVector::from_ints(p, &[x]);
            let rep = represent_in_set(&x, &v, &a, 1, &lim()).unwrap();
            assert!(rep.coefficients().iter().all(|&c| a.contains(c)));
            assert!(brute_force_representable(&x, &v, a.elements(), &lim()).unwrap());
        }
    }

    #[test]
    fn no_descent_when_elimination_already_lands_in_a() {
        let p = pm(5);
        let v = FpMultiset::repeated(&FpVector::from_ints(p, &[1]), 5);
        let a = set(5, 4, &[0, 1, 2, 3, 4]);
        let rep = represent_in_set(&FpVector::from_ints(p, &[3]), &v, &a, 1, &lim()).unwrap();
        assert_eq!(rep.iterations(), 0);
        assert_eq!(rep.coefficients(), &[3, 0, 0, 0, 0]);
    }

    #[test]
    fn nonzero_coefficients_mod_11() {
        let p = pm(11);
        let a = set(11, 4, &(1..11).collect::<Vec<_>>());
        // (1 - g)^{4·3} vanishes over F_11 but (1 - g)^{4·2} does not
        let v = FpMultiset::repeated(&FpVector::from_ints(p, &[1, 0]), 3);
        assert!(is_fp_irredundant(&v, 4, &lim()).unwrap());
        for x in 0..11 {
            let x = FpVector::from_ints(p, &[x, 0]);
            let rep = represent_in_set(&x, &v, &a, 4, &lim()).unwrap();
            assert!(rep.coefficients().iter().all(|&c| c != 0));
        }
    }

    #[test]
    fn represent_rejects_bad_input() {
        let p = pm(5);
        let v = FpMultiset::repeated(&FpVector::from_ints(p, &[1, 0]), 5);
        let a = set(5, 1, &[1, 2, 3, 4]);
        let outside = FpVector::from_ints(p, &[0, 1]);
        assert!(matches!(
            represent_in_set(&outside, &v, &a, 1, &lim()),
            Err(Error::Precondition(_))
        ));
        let short = FpMultiset::repeated(&FpVector::from_ints(p, &[1, 0]), 4);
        assert!(represent_in_set(&FpVector::zero(p, 2), &short, &a, 1, &lim()).is_err());
    }

    #[test]
    fn decompose_over_copies_of_a_basis() {
        let p = pm(5);
        let basis = FpMultiset::from_rows(p, 1, &[&[1]]).unwrap();
        let bases = vec![basis; 5];
        let a = set(5, 1, &[1, 2, 3, 4]);
        for x in 0..5 {
            let w = FpVector::from_ints(p, &[x]);
            let rep = additive_basis_decompose(&w, &bases, &a, 1, &lim()).unwrap();
            assert!(rep.coefficients().iter().all(|&c| a.contains(c)));
        }
        assert!(
            additive_basis_decompose(&FpVector::zero(p, 1), &bases[..4], &a, 1, &lim()).is_err()
        );
    }

    #[test]
    fn decompose_in_dimension_zero() {
        let p = pm(5);
        let a = set(5, 1, &[1, 2, 3, 4]);
        let bases = vec![FpMultiset::empty(p, 0); 5];
        let rep = additive_basis_decompose(&FpVector::zero(p, 0), &bases, &a, 1, &lim()).unwrap();
        assert!(rep.coefficients().is_empty());
    }

    #[test]
    fn decompose_in_the_plane_mod_11() {
        let p = pm(11);
        let a = set(11, 4, &(1..11).collect::<Vec<_>>());
        let bases = vec![
            FpMultiset::from_rows(p, 2, &[&[1, 0], &[0, 1]]).unwrap(),
            FpMultiset::from_rows(p, 2, &[&[1, 1], &[1, 2]]).unwrap(),
            FpMultiset::from_rows(p, 2, &[&[3, 7], &[5, 0]]).unwrap(),
        ];
        for w in crate::fp::enumerate_vectors(p, 2, &lim()).unwrap() {
            let rep = additive_basis_decompose(&w, &bases, &a, 4, &lim()).unwrap();
            assert!(rep.coefficients().iter().all(|&c| c != 0));
        }
    }

    #[test]
    fn brute_force_examples() {
        let p = pm(7);
        let v = FpMultiset::from_rows(p, 1, &[&[1]]).unwrap();
        assert!(
            brute_force_representable(&FpVector::from_ints(p, &[1]), &v, &[1], &lim()).unwrap()
        );
        assert!(
            !brute_force_representable(&FpVector::from_ints(p, &[2]), &v, &[1], &lim()).unwrap()
        );
        let all: Vec<u32> = (0..7).collect();
        let span = FpMultiset::from_rows(p, 2, &[&[1, 2], &[0, 3]]).unwrap();
        for x in crate::fp::enumerate_vectors(p, 2, &lim()).unwrap() {
            assert!(brute_force_representable(&x, &span, &all, &lim()).unwrap());
        }
    }

    #[test]
    fn size_bound() {
        let p = pm(5);
        let v = FpMultiset::repeated(&FpVector::from_ints(p, &[1, 0]), 5);
        assert!(verify_size_bound(&v, 4));
        assert!(verify_size_bound(&v, 2));
        let basis = FpMultiset::from_rows(p, 2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(verify_size_bound(&basis, 5));
        assert!(!verify_size_bound(&basis, 4));
    }
}
