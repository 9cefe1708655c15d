//! Exhaustive search over irredundant covers.
//!
//! Covers are built by repeatedly taking the smallest uncovered element and
//! branching over the candidate blocks that contain it. Once a block has been
//! tried at a node it is forbidden in the later sibling branches, so every
//! family is produced exactly once. A branch dies as soon as some chosen block
//! has no element that only it covers, since adding blocks never restores
//! one; every complete family reached is therefore irredundant.

use std::ops::ControlFlow;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::fp::Limits;

use super::cover::{Coset, CosetCover};
use super::group::{AbelianGroup, ElementSet, Subgroup};

struct Search<'a, F> {
    blocks: &'a [ElementSet],
    containing: Vec<Vec<usize>>,
    max_block: usize,
    max_k: usize,
    count: Vec<u32>,
    uncovered: usize,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Search<'_, F> {
    fn has_private(&self, b: usize) -> bool {
        self.blocks[b].iter().any(|e| self.count[e] == 1)
    }

    fn place(&mut self, b: usize, delta: i32) {
        for e in self.blocks[b].iter() {
            let before = self.count[e];
            self.count[e] = (before as i32 + delta) as u32;
            match (before, self.count[e]) {
                (0, 1) => self.uncovered -= 1,
                (1, 0) => self.uncovered += 1,
                _ => {}
            }
        }
    }

    fn run(&mut self) -> ControlFlow<()> {
        if self.uncovered == 0 {
            return (self.visit)(&self.chosen);
        }
        let room = self.max_k - self.chosen.len();
        if room == 0 || room * self.max_block < self.uncovered {
            return ControlFlow::Continue(());
        }
        let x = (0..self.count.len())
            .find(|&e| self.count[e] == 0)
            .unwrap_or(0);
        let options = self.containing[x].clone();
        let mut marked = Vec::new();
        let mut flow = ControlFlow::Continue(());
        for b in options {
            if self.forbidden[b] {
                continue;
            }
            self.place(b, 1);
            if self.chosen.iter().all(|&c| self.has_private(c)) {
                self.chosen.push(b);
                flow = self.run();
                self.chosen.pop();
            }
            self.place(b, -1);
            if flow.is_break() {
                break;
            }
            self.forbidden[b] = true;
            marked.push(b);
        }
        for b in marked {
            self.forbidden[b] = false;
        }
        flow
    }
}

/// Calls `visit` with the block indices (in choice order) of every
/// irredundant cover of `0..universe` by at most `max_k` of the `blocks`.
/// Returns `Break` if the visitor stopped early.
pub fn for_each_irredundant_cover(
    universe: usize,
    blocks: &[ElementSet],
    max_k: usize,
    visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let mut containing = vec![Vec::new(); universe];
    for (b, block) in blocks.iter().enumerate() {
        for e in block.iter() {
            containing[e].push(b);
        }
    }
    let mut search = Search {
        blocks,
        containing,
        max_block: blocks.iter().map(ElementSet::len).max().unwrap_or(0),
        max_k,
        count: vec![0; universe],
        uncovered: universe,
        forbidden: vec![false; blocks.len()],
        chosen: Vec::new(),
        visit,
    };
    search.run()
}

/// All cosets of the given subgroups; larger subgroups first, then by
/// representative.
pub fn coset_candidates(group: &AbelianGroup, subgroups: &[Subgroup]) -> Vec<Coset> {
    let mut subs: Vec<&Subgroup> = subgroups.iter().collect();
    subs.sort_by(|a, b| {
        b.order()
            .cmp(&a.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    let mut out = Vec::new();
    for h in subs {
        let mut seen = ElementSet::empty(group.order());
        for x in 0..group.order() {
            if seen.contains(x) {
                continue;
            }
            let Ok(c) = Coset::new(group, h.clone(), x) else {
                continue;
            };
            seen.union_with(c.elements());
            out.push(c);
        }
    }
    out
}

/// Visits every irredundant coset cover of `group` with at most `max_k`
/// cosets, drawing from all cosets of all subgroups.
pub fn for_each_coset_cover(
    group: &AbelianGroup,
    max_k: usize,
    visit: impl FnMut(CosetCover) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let candidates = coset_candidates(group, &group.subgroups());
    visit_covers(group, &candidates, max_k, visit)
}

fn visit_covers(
    group: &AbelianGroup,
    candidates: &[Coset],
    max_k: usize,
    mut visit: impl FnMut(CosetCover) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let blocks: Vec<ElementSet> = candidates.iter().map(|c| c.elements().clone()).collect();
    for_each_irredundant_cover(group.order(), &blocks, max_k, |idx| {
        let cosets = idx.iter().map(|&i| candidates[i].clone()).collect();
        match CosetCover::new(group.clone(), cosets) {
            Ok(cover) => visit(cover),
            Err(_) => ControlFlow::Break(()),
        }
    })
}

/// Smallest irredundant cover from `candidates` whose subgroups meet
/// trivially, by iterative deepening on the size.
fn least_trivial_cover(
    group: &AbelianGroup,
    candidates: &[Coset],
    max_k: usize,
) -> Option<CosetCover> {
    for k in 1..=max_k {
        let mut found = None;
        let _ = visit_covers(group, candidates, k, |cover| {
            if cover.len() == k && cover.intersection_subgroup().is_trivial() {
                found = Some(cover);
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// `φ(A)`: the least size of an irredundant coset cover with trivial
/// subgroup intersection, with a witness.
pub fn phi_exact(group: &AbelianGroup, limits: &Limits) -> Result<(usize, CosetCover)> {
    check_order(group, limits)?;
    let subgroups: Vec<Subgroup> = group
        .subgroups()
        .into_iter()
        .filter(|h| group.is_trivial() || h.order() < group.order())
        .collect();
    let candidates = coset_candidates(group, &subgroups);
    let cover = least_trivial_cover(group, &candidates, group.order())
        .ok_or_else(|| Error::Invariant("singleton cover was not found".into()))?;
    Ok((cover.len(), cover))
}

/// `φ(p, n)`: the least size of an efficient cover of `F_p^n`.
pub fn phi_pn_maximal(p: u32, n: usize, limits: &Limits) -> Result<(usize, CosetCover)> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let group = AbelianGroup::elementary(p, n, limits)?;
    if !group.is_elementary_abelian() {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let candidates = coset_candidates(&group, &group.maximal_subgroups());
    let cover = least_trivial_cover(&group, &candidates, group.order()).ok_or_else(|| {
        Error::Invariant("no efficient cover of an elementary abelian group".into())
    })?;
    Ok((cover.len(), cover))
}

/// Some efficient cover of `group`, if one exists.
pub fn find_efficient_cover(group: &AbelianGroup, limits: &Limits) -> Result<Option<CosetCover>> {
    check_order(group, limits)?;
    let candidates = coset_candidates(group, &group.maximal_subgroups());
    let mut found = None;
    let _ = visit_covers(group, &candidates, candidates.len(), |cover| {
        if cover.intersection_subgroup().is_trivial() {
            found = Some(cover);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    Ok(found)
}

/// `s^φ >= p^n`, the counting form of `φ >= n log p / log s`.
pub fn check_phi_bound(phi: usize, p: u32, n: usize, s: u64) -> bool {
    BigUint::from(s).pow(phi as u32) >= BigUint::from(p).pow(n as u32)
}

fn check_order(group: &AbelianGroup, limits: &Limits) -> Result<()> {
    if group.order() as u64 > limits.max_group_order {
        return Err(Error::cap(
            "group order",
            group.order() as u128,
            limits.max_group_order as u128,
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn group(f: &[u32]) -> AbelianGroup {
        AbelianGroup::new(f.to_vec(), &lim()).unwrap()
    }

    #[test]
    fn phi_of_small_groups() {
        for p in [2u32, 3, 5] {
            assert_eq!(phi_exact(&group(&[p]), &lim()).unwrap().0, p as usize);
        }
        let (k, witness) = phi_exact(&group(&[2, 2]), &lim()).unwrap();
        assert_eq!(k, 3);
        assert!(witness.is_irredundant_cover());
        assert!(witness.intersection_subgroup().is_trivial());
        assert_eq!(phi_exact(&group(&[]), &lim()).unwrap().0, 1);
    }

    #[test]
    fn phi_pn_examples() {
        assert_eq!(phi_pn_maximal(2, 1, &lim()).unwrap().0, 2);
        let (k, w) = phi_pn_maximal(2, 2, &lim()).unwrap();
        assert_eq!(k, 3);
        assert!(w.is_efficient());
        assert!(check_phi_bound(3, 2, 2, 2));
        assert!(!check_phi_bound(1, 2, 2, 2));
    }

    #[test]
    fn cyclic_four_has_no_efficient_cover() {
        let z4 = group(&[4]);
        assert!(!z4.frattini().is_trivial());
        assert!(find_efficient_cover(&z4, &lim()).unwrap().is_none());
        assert!(find_efficient_cover(&group(&[2, 2]), &lim())
            .unwrap()
            .unwrap()
            .is_efficient());
    }

    #[test]
    fn subcover_claim_on_small_groups() {
        for f in [vec![2, 2], vec![4]] {
            let g = group(&f);
            let mut seen = 0;
            let _ = for_each_coset_cover(&g, 4, |c| {
                assert!(c.is_irredundant_cover());
                assert!(c.check_subcover_claim().unwrap());
                seen += 1;
                ControlFlow::Continue(())
            });
            assert!(seen > 0);
        }
    }

    #[test]
    fn enumeration_is_exact_on_a_tiny_universe() {
        // blocks {0}, {1}, {0,1}: irredundant covers are {0,1} and {{0},{1}}
        let blocks = vec![
            ElementSet::from_indices(2, [0]),
            ElementSet::from_indices(2, [1]),
            ElementSet::from_indices(2, [0, 1]),
        ];
        let mut got = Vec::new();
        let _ = for_each_irredundant_cover(2, &blocks, 3, |idx| {
            let mut v = idx.to_vec();
            v.sort();
            got.push(v);
            ControlFlow::Continue(())
        });
        got.sort();
        assert_eq!(got, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn group_cap() {
        let big = Limits {
            max_group_order: 8,
            ..lim()
        };
        assert!(phi_exact(&group(&[2, 2, 2, 2]), &big).is_err());
    }
}
