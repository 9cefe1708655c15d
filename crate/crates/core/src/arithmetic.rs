//! r-arithmetic subsets of `F_p`.
//!
//! `A` is r-arithmetic when every `a ∈ A` has a step `b ≠ 0` with
//! `a + ib ∈ A` for `i ∈ [-r, r]`, and every `a ∉ A` has a step `b ≠ 0` with
//! `a + ib ∈ A` for `i ∈ [1, r]`. With `r = 1` the second clause holds for
//! any nonempty `A`, and these are the balanced sets: every element is the
//! middle of a 3-term progression inside `A`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::{Limits, PrimeModulus};

/// A verified r-arithmetic set together with one witness step per residue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArithmeticSet {
    p: PrimeModulus,
    r: u32,
    elements: Vec<u32>,
    /// `witnesses[a]` is the step used for residue `a`.
    witnesses: Vec<u32>,
}

/// Outcome of [`is_r_arithmetic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithmeticVerdict {
    Arithmetic(ArithmeticSet),
    /// A residue with no valid step.
    Fails {
        element: u32,
    },
}

impl ArithmeticVerdict {
    pub fn is_arithmetic(&self) -> bool {
        matches!(self, ArithmeticVerdict::Arithmetic(_))
    }

    pub fn into_set(self) -> Option<ArithmeticSet> {
        match self {
            ArithmeticVerdict::Arithmetic(s) => Some(s),
            ArithmeticVerdict::Fails { .. } => None,
        }
    }
}

impl ArithmeticSet {
    /// Builds the set from caller-supplied witnesses, checking each one.
    pub fn with_witnesses(
        p: PrimeModulus,
        r: u32,
        elements: &[u32],
        witnesses: &[u32],
    ) -> Result<Self> {
        let member = membership(p, r, elements)?;
        if witnesses.len() != p.get() as usize {
            return Err(Error::DimensionMismatch {
                expected: p.get() as usize,
                found: witnesses.len(),
            });
        }
        for a in 0..p.get() {
            let b = witnesses[a as usize];
            if b >= p.get() || !step_works(p, r, &member, a, b) {
                return Err(Error::InvalidInput(format!(
                    "step {b} is not a witness for {a}"
                )));
            }
        }
        Ok(ArithmeticSet {
            p,
            r,
            elements: sorted_elements(&member),
            witnesses: witnesses.to_vec(),
        })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: u32) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    /// The stored step for residue `a`.
    pub fn witness(&self, a: u32) -> u32 {
        self.witnesses[a as usize]
    }

    pub fn witnesses(&self) -> &[u32] {
        &self.witnesses
    }

    /// Re-runs the definition against the stored witness table.
    pub fn recheck(&self) -> bool {
        let Ok(member) = membership(self.p, self.r, &self.elements) else {
            return false;
        };
        (0..self.p.get())
            .all(|a| step_works(self.p, self.r, &member, a, self.witnesses[a as usize]))
    }
}

fn membership(p: PrimeModulus, r: u32, elements: &[u32]) -> Result<Vec<bool>> {
    if r == 0 || r >= p.get() {
        return Err(Error::InvalidInput(format!(
            "r = {r} is outside [1, {}]",
            p.get() - 1
        )));
    }
    let mut member = vec![false; p.get() as usize];
    for &a in elements {
        if a >= p.get() {
            return Err(Error::InvalidInput(format!(
                "element {a} is not reduced mod {p}"
            )));
        }
        if std::mem::replace(&mut member[a as usize], true) {
            return Err(Error::InvalidInput(format!("element {a} is repeated")));
        }
    }
    Ok(member)
}

fn sorted_elements(member: &[bool]) -> Vec<u32> {
    member
        .iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(a, _)| a as u32)
        .collect()
}

fn step_works(p: PrimeModulus, r: u32, member: &[bool], a: u32, b: u32) -> bool {
    let q = p.get() as u64;
    let at = |i: i64| member[((a as i64 + i * b as i64).rem_euclid(q as i64)) as usize];
    if b == 0 {
        return false;
    }
    if member[a as usize] {
        (1..=r as i64).all(|i| at(i) && at(-i))
    } else {
        (1..=r as i64).all(at)
    }
}

/// Smallest valid step for `a`, trying steps in increasing order.
fn first_step(p: PrimeModulus, r: u32, member: &[bool], a: u32) -> Option<u32> {
    (1..p.get()).find(|&b| step_works(p, r, member, a, b))
}

/// Checks the r-arithmetic conditions for every residue of `F_p`.
pub fn is_r_arithmetic(elements: &[u32], r: u32, p: PrimeModulus) -> Result<ArithmeticVerdict> {
    let member = membership(p, r, elements)?;
    Ok(verdict(p, r, &member))
}

fn verdict(p: PrimeModulus, r: u32, member: &[bool]) -> ArithmeticVerdict {
    let mut witnesses = Vec::with_capacity(p.get() as usize);
    for a in 0..p.get() {
        match first_step(p, r, member, a) {
            Some(b) => witnesses.push(b),
            None => return ArithmeticVerdict::Fails { element: a },
        }
    }
    ArithmeticVerdict::Arithmetic(ArithmeticSet {
        p,
        r,
        elements: sorted_elements(member),
        witnesses,
    })
}

/// Counts residues with no valid step; `O(p · |A| · r)`.
///
/// Any valid step `b` puts `a - b` (for members) or `a + b` (for
/// non-members) into `A`, so only steps `±(x - a)` with `x ∈ A` are tried.
fn failure_count(p: PrimeModulus, r: u32, member: &[bool], elements: &[u32]) -> usize {
    let q = p.get() as i64;
    let at = |a: u32, b: i64, i: i64| member[((a as i64 + i * b).rem_euclid(q)) as usize];
    (0..p.get())
        .filter(|&a| {
            let ok = if member[a as usize] {
                elements.iter().filter(|&&x| x != a).any(|&x| {
                    let b = (a as i64 - x as i64).rem_euclid(q);
                    (1..=r as i64).all(|i| at(a, b, i) && at(a, b, -i))
                })
            } else {
                elements.iter().any(|&x| {
                    let b = (x as i64 - a as i64).rem_euclid(q);
                    (1..=r as i64).all(|i| at(a, b, i))
                })
            };
            !ok
        })
        .count()
}

/// `⌈1 + log₂ p⌉`, the smallest `m` with `2^(m-1) ≥ p`.
///
/// No arithmetic set of `F_p` is smaller than this.
pub fn size_lower_bound(p: PrimeModulus) -> usize {
    let mut m = 1usize;
    while (1u128 << (m - 1)) < p.get() as u128 {
        m += 1;
    }
    m
}

/// `2⌊log₂ p⌋`
pub fn doubling_bound(p: PrimeModulus) -> usize {
    2 * (31 - p.get().leading_zeros()) as usize
}

/// Exhaustive search for a smallest r-arithmetic set.
///
/// Sizes are tried upward from [`size_lower_bound`]. Every translate of an
/// arithmetic set is arithmetic, so at each size only sets containing 0 are
/// enumerated; they precede all other sets of that size lexicographically,
/// so the first hit is the lexicographically least minimum set.
pub fn min_arithmetic_set(p: PrimeModulus, r: u32, limits: &Limits) -> Result<ArithmeticSet> {
    if p.get() > limits.max_exhaustive_prime {
        return Err(Error::cap(
            "exhaustive arithmetic-set prime",
            p.get() as u128,
            limits.max_exhaustive_prime as u128,
        ));
    }
    membership(p, r, &[])?;
    let q = p.get() as usize;
    for size in size_lower_bound(p).min(q)..=q {
        let mut member = vec![false; q];
        member[0] = true;
        let mut chosen: Vec<u32> = Vec::with_capacity(size);
        chosen.push(0);
        if let Some(set) = search_size(p, r, &mut member, &mut chosen, 1, size) {
            return Ok(set);
        }
    }
    Err(Error::Invariant(format!(
        "F_{p} itself failed the arithmetic check"
    )))
}

fn search_size(
    p: PrimeModulus,
    r: u32,
    member: &mut Vec<bool>,
    chosen: &mut Vec<u32>,
    next: u32,
    size: usize,
) -> Option<ArithmeticSet> {
    if chosen.len() == size {
        if failure_count_early(p, r, member, chosen) {
            return verdict(p, r, member).into_set();
        }
        return None;
    }
    let remaining = size - chosen.len();
    for a in next..=(p.get() - remaining as u32) {
        member[a as usize] = true;
        chosen.push(a);
        let found = search_size(p, r, member, chosen, a + 1, size);
        chosen.pop();
        member[a as usize] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// `true` iff no residue fails; stops at the first failure.
fn failure_count_early(p: PrimeModulus, r: u32, member: &[bool], elements: &[u32]) -> bool {
    let q = p.get() as i64;
    let at = |a: u32, b: i64, i: i64| member[((a as i64 + i * b).rem_euclid(q)) as usize];
    // members first: they fail far more often
    elements.iter().all(|&a| {
        elements.iter().filter(|&&x| x != a).any(|&x| {
            let b = (a as i64 - x as i64).rem_euclid(q);
            (1..=r as i64).all(|i| at(a, b, i) && at(a, b, -i))
        })
    }) && (0..p.get()).filter(|&a| !member[a as usize]).all(|a| {
        elements.iter().any(|&x| {
            let b = (x as i64 - a as i64).rem_euclid(q);
            (1..=r as i64).all(|i| at(a, b, i))
        })
    })
}

/// Seeded randomized search for an arithmetic set (`r = 1`) of size at most
/// `2⌊log₂ p⌋`.
///
/// Starts from signed doubling families `{±c·2^i}` and repairs them by local
/// search on the number of failing residues. Every returned set has passed
/// [`is_r_arithmetic`]; running out of budget is an error.
pub fn find_small_arithmetic_set(
    p: PrimeModulus,
    seed: u64,
    limits: &Limits,
) -> Result<ArithmeticSet> {
    if p.get() < 5 {
        return Err(Error::Precondition(format!("p = {p} is below 5")));
    }
    let target = doubling_bound(p);
    let q = p.get();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (q as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut evaluations: u64 = 0;
    let budget = limits.search_budget.max(1);

    while evaluations < budget {
        let mut member = vec![false; q as usize];
        let mut elements = doubling_start(p, target, &mut rng);
        for &a in &elements {
            member[a as usize] = true;
        }
        let mut cost = failure_count(p, 1, &member, &elements);
        evaluations += 1;
        let mut stale = 0u32;
        while cost > 0 && evaluations < budget && stale < 40 * q {
            let out_pos = rng.gen_range(0..elements.len());
            let incoming = rng.gen_range(0..q);
            if member[incoming as usize] {
                continue;
            }
            let outgoing = elements[out_pos];
            member[outgoing as usize] = false;
            member[incoming as usize] = true;
            elements[out_pos] = incoming;
            let next = failure_count(p, 1, &member, &elements);
            evaluations += 1;
            if next <= cost {
                stale = if next < cost { 0 } else { stale + 1 };
                cost = next;
            } else {
                member[incoming as usize] = false;
                member[outgoing as usize] = true;
                elements[out_pos] = outgoing;
                stale += 1;
            }
        }
        if cost == 0 {
            elements.sort_unstable();
            if let ArithmeticVerdict::Arithmetic(set) = is_r_arithmetic(&elements, 1, p)? {
                debug_assert!(set.len() <= target);
                return Ok(set);
            }
            return Err(Error::Invariant(
                "local search accepted a set the verifier rejects".into(),
            ));
        }
    }
    Err(Error::SearchFailed(format!(
        "no arithmetic set of size {target} in F_{p} within {budget} evaluations"
    )))
}

/// A random dilate and window of `{±2^i}`, padded or trimmed to `target`.
fn doubling_start(p: PrimeModulus, target: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let q = p.get();
    let c = rng.gen_range(1..q);
    let shift = rng.gen_range(0..q - 1) as u64;
    let mut member = vec![false; q as usize];
    let mut out = Vec::with_capacity(target);
    let mut i = 0u64;
    while out.len() < target && i < q as u64 {
        let x = p.mul(c, p.pow(2, shift + i));
        for y in [x, p.neg(x)] {
            if out.len() < target && !member[y as usize] {
                member[y as usize] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    let mut rest: Vec<u32> = (0..q).filter(|&a| !member[a as usize]).collect();
    rest.shuffle(rng);
    out.extend(rest.into_iter().take(target - out.len()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn nonzero_residues_are_four_arithmetic_mod_11() {
        let a: Vec<u32> = (1..11).collect();
        let v = is_r_arithmetic(&a, 4, pm(11)).unwrap();
        let set = v.into_set().expect("F_11^* is 4-arithmetic");
        assert!(set.recheck());
    }

    #[test]
    fn whole_field_and_empty_set() {
        for p in [2u64, 3, 5, 7] {
            let q = pm(p);
            let all: Vec<u32> = (0..p as u32).collect();
            for r in 1..p as u32 {
                assert!(is_r_arithmetic(&all, r, q).unwrap().is_arithmetic());
                assert!(!is_r_arithmetic(&[], r, q).unwrap().is_arithmetic());
            }
        }
    }

    #[test]
    fn failing_element_is_reported() {
        // 0 ∉ {1} is fine with step 1, but 1 is not the middle of any progression
        match is_r_arithmetic(&[1], 1, pm(5)).unwrap() {
            ArithmeticVerdict::Fails { element } => assert_eq!(element, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(is_r_arithmetic(&[1, 1], 1, pm(5)).is_err());
        assert!(is_r_arithmetic(&[7], 1, pm(5)).is_err());
        assert!(is_r_arithmetic(&[1], 0, pm(5)).is_err());
        assert!(is_r_arithmetic(&[1], 5, pm(5)).is_err());
    }

    #[test]
    fn explicit_witnesses_for_nonzero_residues() {
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let q = pm(p);
            let r = (p as u32 - 3) / 2;
            let elements: Vec<u32> = (1..p as u32).collect();
            let witnesses: Vec<u32> = (0..p as u32)
                .map(|a| if a == 0 { 1 } else { q.mul(2, a) })
                .collect();
            let set = ArithmeticSet::with_witnesses(q, r, &elements, &witnesses).unwrap();
            assert!(set.recheck());
        }
        let bad = ArithmeticSet::with_witnesses(pm(5), 1, &[1, 2, 3, 4], &[1, 1, 1, 1, 1]);
        assert!(bad.is_err());
    }

    #[test]
    fn minimum_sizes_small_primes() {
        let lim = Limits::default();
        assert_eq!(
            min_arithmetic_set(pm(2), 1, &lim).unwrap().elements(),
            &[0, 1]
        );
        assert_eq!(min_arithmetic_set(pm(3), 1, &lim).unwrap().len(), 3);
        let s5 = min_arithmetic_set(pm(5), 1, &lim).unwrap();
        assert_eq!(s5.len(), 4);
        assert!(is_r_arithmetic(&[1, 2, 3, 4], 1, pm(5))
            .unwrap()
            .is_arithmetic());
        assert_eq!(min_arithmetic_set(pm(7), 1, &lim).unwrap().len(), 5);
    }

    #[test]
    fn min_respects_cap() {
        let lim = Limits {
            max_exhaustive_prime: 7,
            ..Limits::default()
        };
        assert!(matches!(
            min_arithmetic_set(pm(11), 1, &lim),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn bounds() {
        assert_eq!(size_lower_bound(pm(2)), 2);
        assert_eq!(size_lower_bound(pm(3)), 3);
        assert_eq!(size_lower_bound(pm(5)), 4);
        assert_eq!(size_lower_bound(pm(17)), 6);
        assert_eq!(doubling_bound(pm(5)), 4);
        assert_eq!(doubling_bound(pm(7)), 4);
        assert_eq!(doubling_bound(pm(101)), 12);
    }

    #[test]
    fn small_set_search() {
        let lim = Limits::default();
        let s = find_small_arithmetic_set(pm(5), 1, &lim).unwrap();
        assert!(s.len() <= 4 && s.recheck());
        let s = find_small_arithmetic_set(pm(101), 1, &lim).unwrap();
        assert!(s.len() <= 12 && s.recheck());
        assert!(matches!(
            find_small_arithmetic_set(pm(3), 1, &lim),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn search_fails_loudly_when_target_is_below_minimum() {
        // the minimum for p = 7 is 5 > 2⌊log₂7⌋ = 4
        let lim = Limits {
            search_budget: 5_000,
            ..Limits::default()
        };
        assert!(matches!(
            find_small_arithmetic_set(pm(7), 1, &lim),
            Err(Error::SearchFailed(_))
        ));
    }
}
