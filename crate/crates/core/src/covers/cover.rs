//! Coset families and the queries asked of them.

use crate::error::{Error, Result};

use super::group::{AbelianGroup, ElementSet, Subgroup};

/// `H + x`, stored with the least element as representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coset {
    subgroup: Subgroup,
    rep: usize,
    elements: ElementSet,
}

impl Coset {
    pub fn new(group: &AbelianGroup, subgroup: Subgroup, x: usize) -> Result<Self> {
        if x >= group.order() || subgroup.elements().universe() != group.order() {
            return Err(Error::InvalidInput(
                "coset does not belong to this group".into(),
            ));
        }
        let elements = ElementSet::from_indices(
            group.order(),
            subgroup.elements().iter().map(|h| group.add(h, x)),
        );
        let rep = elements.iter().next().unwrap_or(0);
        Ok(Coset {
            subgroup,
            rep,
            elements,
        })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn rep(&self) -> usize {
        self.rep
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetCover {
    group: AbelianGroup,
    cosets: Vec<Coset>,
}

impl CosetCover {
    pub fn new(group: AbelianGroup, cosets: Vec<Coset>) -> Result<Self> {
        if cosets
            .iter()
            .any(|c| c.elements.universe() != group.order())
        {
            return Err(Error::InvalidInput(
                "coset does not belong to this group".into(),
            ));
        }
        Ok(CosetCover { group, cosets })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    fn covers_with(&self, skip: Option<usize>) -> bool {
        let mut acc = ElementSet::empty(self.group.order());
        for (i, c) in self.cosets.iter().enumerate() {
            if Some(i) != skip {
                acc.union_with(&c.elements);
            }
        }
        acc.is_full()
    }

    pub fn is_cover(&self) -> bool {
        self.covers_with(None)
    }

    /// A cover from which no single coset can be dropped.
    ///
    /// Subfamilies of a non-cover are non-covers, so single removals decide it.
    pub fn is_irredundant_cover(&self) -> bool {
        self.is_cover() && (0..self.cosets.len()).all(|i| !self.covers_with(Some(i)))
    }

    /// Drops cosets from the last to the first whenever the rest still covers.
    pub fn shrink_to_irredundant(&self) -> Result<CosetCover> {
        if !self.is_cover() {
            return Err(Error::Precondition(
                "family does not cover the group".into(),
            ));
        }
        let mut out = self.clone();
        for i in (0..out.cosets.len()).rev() {
            if out.covers_with(Some(i)) {
                out.cosets.remove(i);
            }
        }
        Ok(out)
    }

    /// `∩ H_i`, the whole group for an empty family.
    pub fn intersection_subgroup(&self) -> Subgroup {
        self.intersection_except(None)
    }

    fn intersection_except(&self, skip: Option<usize>) -> Subgroup {
        let mut acc = ElementSet::full(self.group.order());
        for (i, c) in self.cosets.iter().enumerate() {
            if Some(i) != skip {
                acc.intersect_with(c.subgroup.elements());
            }
        }
        Subgroup::from_elements(&self.group, acc)
    }

    /// `|A : ∩ H_i|`
    pub fn intersection_index(&self) -> usize {
        self.group.order() / self.intersection_subgroup().order()
    }

    /// Whether dropping any one subgroup leaves the intersection unchanged.
    pub fn check_subcover_claim(&self) -> Result<bool> {
        if !self.is_irredundant_cover() {
            return Err(Error::Precondition("not an irredundant cover".into()));
        }
        let all = self.intersection_subgroup();
        Ok((0..self.cosets.len()).all(|j| self.intersection_except(Some(j)) == all))
    }

    /// Irredundant, trivial intersection, every subgroup maximal.
    pub fn is_efficient(&self) -> bool {
        if !self.is_irredundant_cover() || !self.intersection_subgroup().is_trivial() {
            return false;
        }
        let maximal = self.group.maximal_subgroups();
        self.cosets.iter().all(|c| maximal.contains(&c.subgroup))
    }
}

pub fn index(group: &AbelianGroup, h: &Subgroup) -> usize {
    group.order() / h.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Limits;

    fn group(f: &[u32]) -> AbelianGroup {
        AbelianGroup::new(f.to_vec(), &Limits::default()).unwrap()
    }

    fn klein_three_cover() -> CosetCover {
        let g = group(&[2, 2]);
        let order_two: Vec<Subgroup> = g
            .subgroups()
            .into_iter()
            .filter(|h| h.order() == 2)
            .collect();
        assert_eq!(order_two.len(), 3);
        // {0,1}, {1,3}, {1,2}: each keeps one private point
        let cosets = vec![
            Coset::new(&g, order_two[0].clone(), 0).unwrap(),
            Coset::new(&g, order_two[1].clone(), 1).unwrap(),
            Coset::new(&g, order_two[2].clone(), 2).unwrap(),
        ];
        CosetCover::new(g, cosets).unwrap()
    }

    #[test]
    fn whole_group_cover() {
        let g = group(&[3]);
        let c = CosetCover::new(g.clone(), vec![Coset::new(&g, g.whole(), 0).unwrap()]).unwrap();
        assert!(c.is_irredundant_cover());
        assert_eq!(c.intersection_index(), 1);
        assert!(c.check_subcover_claim().unwrap());
        assert!(!c.is_efficient());
    }

    #[test]
    fn singleton_cover() {
        let g = group(&[2, 2]);
        let cosets = (0..4)
            .map(|x| Coset::new(&g, g.trivial_subgroup(), x).unwrap())
            .collect();
        let c = CosetCover::new(g, cosets).unwrap();
        assert!(c.is_irredundant_cover());
        assert_eq!(c.intersection_index(), 4);
        assert!(c.check_subcover_claim().unwrap());
    }

    #[test]
    fn klein_cover() {
        let c = klein_three_cover();
        assert!(c.is_cover());
        assert!(c.is_irredundant_cover());
        assert!(c.intersection_subgroup().is_trivial());
        assert_eq!(c.intersection_index(), 4);
        assert!(c.check_subcover_claim().unwrap());
        assert!(c.is_efficient());
    }

    #[test]
    fn shrinking() {
        let c = klein_three_cover();
        assert_eq!(c.shrink_to_irredundant().unwrap(), c);
        let mut dup = c.cosets().to_vec();
        dup.push(dup[1].clone());
        let padded = CosetCover::new(c.group().clone(), dup).unwrap();
        assert!(!padded.is_irredundant_cover());
        assert_eq!(padded.shrink_to_irredundant().unwrap(), c);
        let partial = CosetCover::new(c.group().clone(), c.cosets()[..2].to_vec()).unwrap();
        assert!(partial.shrink_to_irredundant().is_err());
        assert!(partial.check_subcover_claim().is_err());
    }
}
