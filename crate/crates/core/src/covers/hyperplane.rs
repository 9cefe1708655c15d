//! Affine hyperplane families in `F_p^n` and their link to twisted
//! binomial products.
//!
//! Hyperplane `i` is `{x : <x, v_i> = -t_i}`. With this sign the family
//! `(v_i, t_i)` covers `F_p^n` exactly when `prod (1 - λ^{t_i} g^{v_i})`
//! vanishes, so an instance and a twisted multiset are the same data.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::{span_dimension, FpMultiset, FpVector, Limits, PrimeModulus};
use crate::group_ring::TwistAssignment;

use super::cover::{Coset, CosetCover};
use super::group::{AbelianGroup, ElementSet, Subgroup};
use super::search::for_each_irredundant_cover;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperplaneCoverInstance {
    p: PrimeModulus,
    n: usize,
    normals: Vec<FpVector>,
    offsets: Vec<u32>,
}

impl HyperplaneCoverInstance {
    pub fn new(
        p: PrimeModulus,
        n: usize,
        normals: Vec<FpVector>,
        offsets: Vec<u32>,
    ) -> Result<Self> {
        if normals.len() != offsets.len() {
            return Err(Error::DimensionMismatch {
                expected: normals.len(),
                found: offsets.len(),
            });
        }
        for v in &normals {
            if v.modulus() != p || v.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.dim(),
                });
            }
            if v.is_zero() {
                return Err(Error::InvalidInput("hyperplane normal is zero".into()));
            }
        }
        if offsets.iter().any(|&t| t >= p.get()) {
            return Err(Error::InvalidInput("offset not reduced mod p".into()));
        }
        Ok(HyperplaneCoverInstance {
            p,
            n,
            normals,
            offsets,
        })
    }

    /// Reads entries of `V` as normals and the twist as offsets.
    pub fn from_multiset(v: &FpMultiset, t: &TwistAssignment) -> Result<Self> {
        Self::new(
            v.modulus(),
            v.dim(),
            v.entries().to_vec(),
            t.values().to_vec(),
        )
    }

    pub fn to_multiset(&self) -> (FpMultiset, TwistAssignment) {
        let v =
            FpMultiset::new(self.p, self.n, self.normals.clone()).expect("normals share p and n");
        (
            v,
            TwistAssignment::new(self.p, self.offsets.clone()).expect("offsets are reduced"),
        )
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[FpVector] {
        &self.normals
    }

    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    /// Points of hyperplane `i`, indexed mixed-radix.
    pub fn points(&self, i: usize, limits: &Limits) -> Result<ElementSet> {
        let size = limits.ring_size(self.p, self.n)?;
        let target = self.p.neg(self.offsets[i]);
        Ok(ElementSet::from_indices(
            size,
            (0..size).filter(|&x| {
                FpVector::from_index(self.p, self.n, x).dot(&self.normals[i]) == target
            }),
        ))
    }

    fn point_sets(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        (0..self.len()).map(|i| self.points(i, limits)).collect()
    }

    fn covers_without(sets: &[ElementSet], skip: Option<usize>, size: usize) -> bool {
        let mut acc = ElementSet::empty(size);
        for (i, s) in sets.iter().enumerate() {
            if Some(i) != skip {
                acc.union_with(s);
            }
        }
        acc.is_full()
    }

    pub fn is_cover(&self, limits: &Limits) -> Result<bool> {
        let size = limits.ring_size(self.p, self.n)?;
        Ok(Self::covers_without(&self.point_sets(limits)?, None, size))
    }

    pub fn is_irredundant_cover(&self, limits: &Limits) -> Result<bool> {
        let size = limits.ring_size(self.p, self.n)?;
        let sets = self.point_sets(limits)?;
        Ok(Self::covers_without(&sets, None, size)
            && (0..sets.len()).all(|i| !Self::covers_without(&sets, Some(i), size)))
    }

    /// Indices of the hyperplanes kept after dropping, from the last to the
    /// first, every hyperplane the rest can do without.
    pub fn irredundant_indices(&self, limits: &Limits) -> Result<Vec<usize>> {
        let size = limits.ring_size(self.p, self.n)?;
        let mut sets = self.point_sets(limits)?;
        if !Self::covers_without(&sets, None, size) {
            return Err(Error::Precondition("hyperplanes do not cover".into()));
        }
        let mut keep: Vec<usize> = (0..sets.len()).collect();
        for i in (0..sets.len()).rev() {
            let pos = keep.iter().position(|&k| k == i).expect("kept index");
            if Self::covers_without(&sets, Some(pos), size) {
                sets.remove(pos);
                keep.remove(pos);
            }
        }
        Ok(keep)
    }

    pub fn select(&self, indices: &[usize]) -> HyperplaneCoverInstance {
        HyperplaneCoverInstance {
            p: self.p,
            n: self.n,
            normals: indices.iter().map(|&i| self.normals[i].clone()).collect(),
            offsets: indices.iter().map(|&i| self.offsets[i]).collect(),
        }
    }

    /// Codimension of the intersection of the linear hyperplanes `<x, v_i> = 0`.
    pub fn codim(&self) -> usize {
        let v =
            FpMultiset::new(self.p, self.n, self.normals.clone()).expect("normals share p and n");
        span_dimension(&v)
    }

    /// `p^codim <= s^k`, the counting form of `codim <= k log s / log p`.
    pub fn check_codim_bound(&self, s: u64, limits: &Limits) -> Result<bool> {
        if !self.is_irredundant_cover(limits)? {
            return Err(Error::Precondition(
                "hyperplanes do not form an irredundant cover".into(),
            ));
        }
        Ok(BigUint::from(self.p.get()).pow(self.codim() as u32)
            <= BigUint::from(s).pow(self.len() as u32))
    }

    /// The same family as cosets of maximal subgroups of `Z_p^n`.
    pub fn to_coset_cover(&self, limits: &Limits) -> Result<CosetCover> {
        let group = AbelianGroup::elementary(self.p.get(), self.n, limits)?;
        let mut cosets = Vec::with_capacity(self.len());
        for (i, v) in self.normals.iter().enumerate() {
            let kernel = ElementSet::from_indices(
                group.order(),
                (0..group.order()).filter(|&x| FpVector::from_index(self.p, self.n, x).dot(v) == 0),
            );
            let pts = self.points(i, limits)?;
            let rep = pts
                .iter()
                .next()
                .ok_or_else(|| Error::Invariant("empty hyperplane".into()))?;
            cosets.push(Coset::new(
                &group,
                Subgroup::from_elements(&group, kernel),
                rep,
            )?);
        }
        CosetCover::new(group, cosets)
    }
}

/// Every affine hyperplane of `F_p^n`: normals with leading coordinate 1 in
/// increasing index order, offsets ascending.
pub fn all_hyperplanes(
    p: PrimeModulus,
    n: usize,
    limits: &Limits,
) -> Result<(Vec<FpVector>, Vec<u32>)> {
    let size = limits.ring_size(p, n)?;
    let mut normals = Vec::new();
    let mut offsets = Vec::new();
    for i in 1..size {
        let v = FpVector::from_index(p, n, i);
        if v.coords().iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        for t in 0..p.get() {
            normals.push(v.clone());
            offsets.push(t);
        }
    }
    Ok((normals, offsets))
}

/// Visits every irredundant cover of `F_p^n` by affine hyperplanes.
pub fn for_each_hyperplane_cover(
    p: PrimeModulus,
    n: usize,
    limits: &Limits,
    mut visit: impl FnMut(HyperplaneCoverInstance) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    let (normals, offsets) = all_hyperplanes(p, n, limits)?;
    let all = HyperplaneCoverInstance::new(p, n, normals.clone(), offsets.clone())?;
    let blocks = all.point_sets(limits)?;
    let size = limits.ring_size(p, n)?;
    Ok(for_each_irredundant_cover(
        size,
        &blocks,
        blocks.len(),
        |idx| {
            let inst = HyperplaneCoverInstance {
                p,
                n,
                normals: idx.iter().map(|&i| normals[i].clone()).collect(),
                offsets: idx.iter().map(|&i| offsets[i]).collect(),
            };
            visit(inst)
        },
    ))
}

/// Lexicographically least twist for which the sets `{x : <x, v> = -t_v}`
/// cover `F_p^n`. A zero entry contributes everything when its twist is 0
/// and nothing otherwise.
pub fn c_vanishing_by_cover(v: &FpMultiset, limits: &Limits) -> Result<Option<TwistAssignment>> {
    let p = v.modulus();
    let size = limits.ring_size(p, v.dim())?;
    limits.enumeration("twist assignments p^|V|", p.get() as u128, v.len())?;
    if v.is_empty() {
        return Ok(None);
    }
    let dots: Vec<Vec<u32>> = v
        .iter()
        .map(|e| {
            (0..size)
                .map(|x| FpVector::from_index(p, v.dim(), x).dot(e))
                .collect()
        })
        .collect();
    let mut t = Vec::with_capacity(v.len());
    Ok(cover_search(p, &dots, &ElementSet::empty(size), &mut t)
        .map(|t| TwistAssignment::new(p, t).expect("reduced")))
}

fn cover_search(
    p: PrimeModulus,
    dots: &[Vec<u32>],
    covered: &ElementSet,
    t: &mut Vec<u32>,
) -> Option<Vec<u32>> {
    let depth = t.len();
    if depth == dots.len() {
        return None;
    }
    for tv in 0..p.get() {
        let target = p.neg(tv);
        let mut next = covered.clone();
        for (x, &d) in dots[depth].iter().enumerate() {
            if d == target {
                next.insert(x);
            }
        }
        t.push(tv);
        if next.is_full() {
            t.resize(dots.len(), 0);
            return Some(t.clone());
        }
        let found = cover_search(p, dots, &next, t);
        t.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_ring::binomial_product_cyc;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn round_trip_and_zero_normal() {
        let p = pm(3);
        let v = FpMultiset::from_rows(p, 2, &[&[1, 2], &[0, 1]]).unwrap();
        let t = TwistAssignment::new(p, vec![2, 0]).unwrap();
        let inst = HyperplaneCoverInstance::from_multiset(&v, &t).unwrap();
        assert_eq!(inst.to_multiset(), (v, t));
        let z = FpMultiset::from_rows(p, 2, &[&[0, 0]]).unwrap();
        assert!(HyperplaneCoverInstance::from_multiset(&z, &TwistAssignment::zeros(1)).is_err());
    }

    #[test]
    fn parallel_lines_cover_and_match_the_product() {
        let p = pm(3);
        let normal = FpVector::from_ints(p, &[1, 1]);
        let cover =
            HyperplaneCoverInstance::new(p, 2, vec![normal.clone(); 3], vec![0, 1, 2]).unwrap();
        assert!(cover.is_irredundant_cover(&lim()).unwrap());
        let (v, t) = cover.to_multiset();
        assert!(binomial_product_cyc(&v, &t, 1, &lim()).unwrap().is_zero());

        let short = HyperplaneCoverInstance::new(p, 2, vec![normal; 2], vec![0, 1]).unwrap();
        assert!(!short.is_cover(&lim()).unwrap());
        let (v, t) = short.to_multiset();
        assert!(!binomial_product_cyc(&v, &t, 1, &lim()).unwrap().is_zero());
    }

    #[test]
    fn codim_bound() {
        let p = pm(2);
        let mut found = 0;
        let _ = for_each_hyperplane_cover(p, 2, &lim(), |inst| {
            assert!(inst.check_codim_bound(2, &lim()).unwrap());
            found += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert!(found > 0);
        let single =
            HyperplaneCoverInstance::new(p, 2, vec![FpVector::from_ints(p, &[1, 0])], vec![0])
                .unwrap();
        assert!(matches!(
            single.check_codim_bound(2, &lim()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn coset_view_agrees() {
        let p = pm(2);
        let inst = HyperplaneCoverInstance::new(
            p,
            2,
            vec![
                FpVector::from_ints(p, &[1, 0]),
                FpVector::from_ints(p, &[0, 1]),
                FpVector::from_ints(p, &[1, 1]),
            ],
            vec![0, 0, 0],
        )
        .unwrap();
        let cover = inst.to_coset_cover(&lim()).unwrap();
        assert_eq!(
            cover.is_irredundant_cover(),
            inst.is_irredundant_cover(&lim()).unwrap()
        );
        assert_eq!(cover.intersection_index(), 1 << inst.codim());
    }

    #[test]
    fn cover_search_examples() {
        let p = pm(3);
        let v = FpMultiset::from_rows(p, 1, &[&[1], &[1], &[1]]).unwrap();
        assert_eq!(
            c_vanishing_by_cover(&v, &lim()).unwrap().unwrap().values(),
            &[0, 1, 2]
        );
        let z = FpMultiset::from_rows(p, 1, &[&[0], &[1]]).unwrap();
        assert_eq!(
            c_vanishing_by_cover(&z, &lim()).unwrap().unwrap().values(),
            &[0, 0]
        );
    }
}
