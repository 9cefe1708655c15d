//! Finite abelian groups `Z_{d_1} ⊕ ... ⊕ Z_{d_m}` and their subgroups.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::{is_prime, Limits};

/// A subset of a small group as a bitset over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    size: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(size: usize) -> Self {
        ElementSet {
            size,
            words: vec![0; size.div_ceil(64)],
        }
    }

    pub fn full(size: usize) -> Self {
        let mut s = Self::empty(size);
        for i in 0..size {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(size: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(size);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.size
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.size
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn first_missing(&self) -> Option<usize> {
        (0..self.size).find(|&i| !self.contains(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(|&i| self.contains(i))
    }
}

/// `Z_{d_1} ⊕ ... ⊕ Z_{d_m}` with every `d_i` a prime power.
///
/// Elements are indexed mixed-radix with factor 0 most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    factors: Vec<u32>,
    #[serde(skip)]
    order: usize,
}

fn prime_power_base(d: u32) -> Option<u32> {
    let q = (2..=d).find(|q| d.is_multiple_of(*q))?;
    let mut x = d;
    while x.is_multiple_of(q) {
        x /= q;
    }
    (x == 1 && is_prime(q as u64)).then_some(q)
}

impl AbelianGroup {
    pub fn new(factors: Vec<u32>, limits: &Limits) -> Result<Self> {
        if let Some(&d) = factors.iter().find(|&&d| prime_power_base(d).is_none()) {
            return Err(Error::InvalidInput(format!(
                "cyclic factor {d} is not a prime power"
            )));
        }
        let order = factors
            .iter()
            .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
            .unwrap_or(u128::MAX);
        if order > limits.max_group_order as u128 {
            return Err(Error::cap(
                "group order",
                order,
                limits.max_group_order as u128,
            ));
        }
        Ok(AbelianGroup {
            factors,
            order: order as usize,
        })
    }

    /// `F_p^n` as `Z_p^n`.
    pub fn elementary(p: u32, n: usize, limits: &Limits) -> Result<Self> {
        Self::new(vec![p; n], limits)
    }

    /// Every abelian group of the given order up to isomorphism, each as a
    /// list of prime-power factors (primes ascending, exponents descending).
    pub fn all_of_order(order: u32) -> Vec<Vec<u32>> {
        let mut primes = Vec::new();
        let mut m = order;
        let mut q = 2;
        while m > 1 {
            let mut e = 0;
            while m.is_multiple_of(q) {
                m /= q;
                e += 1;
            }
            if e > 0 {
                primes.push((q, e));
            }
            q += 1;
        }
        let mut out = vec![Vec::new()];
        for (q, e) in primes {
            let mut next = Vec::new();
            for part in partitions(e, e) {
                for prefix in &out {
                    let mut f: Vec<u32> = prefix.clone();
                    f.extend(part.iter().map(|&k| q.pow(k)));
                    next.push(f);
                }
            }
            out = next;
        }
        out
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// All factors equal to one prime.
    pub fn is_elementary_abelian(&self) -> bool {
        !self.factors.is_empty()
            && self
                .factors
                .iter()
                .all(|&d| d == self.factors[0] && is_prime(d as u64))
    }

    pub fn prime_divisors(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self
            .factors
            .iter()
            .filter_map(|&d| prime_power_base(d))
            .collect();
        set.into_iter().collect()
    }

    pub fn coords(&self, mut i: usize) -> Vec<u32> {
        let mut c = vec![0; self.factors.len()];
        for (slot, &d) in c.iter_mut().zip(&self.factors).rev() {
            *slot = (i % d as usize) as u32;
            i /= d as usize;
        }
        c
    }

    /// Index of an element given by (unreduced) coordinates.
    pub fn index(&self, coords: &[i64]) -> Result<usize> {
        if coords.len() != self.factors.len() {
            return Err(Error::DimensionMismatch {
                expected: self.factors.len(),
                found: coords.len(),
            });
        }
        Ok(coords
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&c, &d)| {
                acc * d as usize + c.rem_euclid(d as i64) as usize
            }))
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut idx = 0;
        let mut stride = 1;
        let (mut a, mut b) = (a, b);
        for &d in self.factors.iter().rev() {
            let d = d as usize;
            idx += (a % d + b % d) % d * stride;
            stride *= d;
            a /= d;
            b /= d;
        }
        idx
    }

    pub fn neg(&self, a: usize) -> usize {
        let mut idx = 0;
        let mut stride = 1;
        let mut a = a;
        for &d in self.factors.iter().rev() {
            let d = d as usize;
            idx += (d - a % d) % d * stride;
            stride *= d;
            a /= d;
        }
        idx
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::generated(self, &[])
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: ElementSet::full(self.order),
            gens: Subgroup::canonical_gens(self, &ElementSet::full(self.order)),
        }
    }

    /// Every subgroup, sorted by order and then by element set.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut seen: BTreeSet<ElementSet> = BTreeSet::new();
        let trivial = self.trivial_subgroup();
        seen.insert(trivial.elements.clone());
        let mut queue = vec![trivial.elements];
        while let Some(h) = queue.pop() {
            for g in 0..self.order {
                if h.contains(g) {
                    continue;
                }
                let k = closure_with(self, &h, g);
                if seen.insert(k.clone()) {
                    queue.push(k);
                }
            }
        }
        let mut out: Vec<Subgroup> = seen
            .into_iter()
            .map(|elements| Subgroup {
                gens: Subgroup::canonical_gens(self, &elements),
                elements,
            })
            .collect();
        out.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements.cmp(&b.elements))
        });
        out
    }

    /// Proper subgroups contained in no other proper subgroup.
    pub fn maximal_subgroups(&self) -> Vec<Subgroup> {
        let all = self.subgroups();
        let proper: Vec<&Subgroup> = all.iter().filter(|h| h.order() < self.order).collect();
        proper
            .iter()
            .filter(|h| {
                !proper
                    .iter()
                    .any(|k| k.order() > h.order() && h.elements.is_subset(&k.elements))
            })
            .map(|h| (*h).clone())
            .collect()
    }

    /// Intersection of all maximal subgroups (the whole group if there are none).
    pub fn frattini(&self) -> Subgroup {
        let mut acc = ElementSet::full(self.order);
        for h in self.maximal_subgroups() {
            acc.intersect_with(&h.elements);
        }
        Subgroup::from_elements(self, acc)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z_{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Partitions of `n` into parts of size at most `max`, parts descending.
fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `H + <g>`
fn closure_with(group: &AbelianGroup, h: &ElementSet, g: usize) -> ElementSet {
    let mut out = h.clone();
    let mut multiple = g;
    while multiple != 0 {
        for x in h.iter() {
            out.insert(group.add(x, multiple));
        }
        multiple = group.add(multiple, g);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: ElementSet,
    gens: Vec<usize>,
}

impl Subgroup {
    pub fn generated(group: &AbelianGroup, gens: &[usize]) -> Subgroup {
        let mut h = ElementSet::from_indices(group.order(), [0]);
        for &g in gens {
            if !h.contains(g) {
                h = closure_with(group, &h, g);
            }
        }
        Subgroup {
            gens: Self::canonical_gens(group, &h),
            elements: h,
        }
    }

    /// Wraps a set already known to be a subgroup.
    pub(crate) fn from_elements(group: &AbelianGroup, elements: ElementSet) -> Subgroup {
        Subgroup {
            gens: Self::canonical_gens(group, &elements),
            elements,
        }
    }

    /// Greedy generators: each element in increasing order that is not yet
    /// generated by the earlier ones.
    fn canonical_gens(group: &AbelianGroup, elements: &ElementSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut h = ElementSet::from_indices(group.order(), [0]);
        for g in elements.iter() {
            if !h.contains(g) {
                h = closure_with(group, &h, g);
                gens.push(g);
            }
        }
        gens
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn intersect(&self, group: &AbelianGroup, other: &Subgroup) -> Subgroup {
        let mut e = self.elements.clone();
        e.intersect_with(&other.elements);
        Subgroup::from_elements(group, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(f: &[u32]) -> AbelianGroup {
        AbelianGroup::new(f.to_vec(), &Limits::default()).unwrap()
    }

    #[test]
    fn arithmetic_and_validation() {
        let g = group(&[4, 2]);
        assert_eq!(g.order(), 8);
        let a = g.index(&[3, 1]).unwrap();
        let b = g.index(&[2, 1]).unwrap();
        assert_eq!(g.coords(g.add(a, b)), vec![1, 0]);
        assert_eq!(g.add(a, g.neg(a)), 0);
        assert!(AbelianGroup::new(vec![6], &Limits::default()).is_err());
        assert!(matches!(
            AbelianGroup::new(vec![2; 5], &Limits::default()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn subgroup_counts() {
        // Z_2^2 has 5 subgroups, Z_4 has 3, Z_2^3 has 16, Z_2^4 has 67
        assert_eq!(group(&[2, 2]).subgroups().len(), 5);
        assert_eq!(group(&[4]).subgroups().len(), 3);
        assert_eq!(group(&[2, 2, 2]).subgroups().len(), 16);
        assert_eq!(group(&[2, 2, 2, 2]).subgroups().len(), 67);
        assert_eq!(group(&[3, 3]).maximal_subgroups().len(), 4);
    }

    #[test]
    fn frattini_examples() {
        let z4 = group(&[4]);
        assert_eq!(
            z4.frattini().elements().iter().collect::<Vec<_>>(),
            vec![0, 2]
        );
        assert!(group(&[2, 2]).frattini().is_trivial());
        assert_eq!(group(&[4, 2]).frattini().order(), 2);
    }

    #[test]
    fn groups_of_small_order() {
        assert_eq!(AbelianGroup::all_of_order(16).len(), 5);
        assert_eq!(
            AbelianGroup::all_of_order(12),
            vec![vec![4, 3], vec![2, 2, 3]]
        );
        assert_eq!(AbelianGroup::all_of_order(1), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn canonical_generators() {
        let g = group(&[2, 2]);
        let h = Subgroup::generated(&g, &[3, 1]);
        assert_eq!(h.gens(), &[1, 2]);
        assert_eq!(h.order(), 4);
    }
}
