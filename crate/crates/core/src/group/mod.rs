//! Permutation groups given by generators.
//!
//! A [`PermutationGroup`] builds its stabilizer chain eagerly when it is
//! constructed and is immutable afterwards; clones share the chain.

mod blocks;
pub(crate) mod chain;
mod coset;
mod lattice;
mod perm;
mod products;
mod search;
mod series;
pub(crate) mod table;
pub(crate) use lattice::{normal_subgroups_in, radical_in};

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

pub use blocks::BlockSystem;
pub use coset::CosetAction;
pub use lattice::SubgroupClass;
pub use perm::Permutation;
pub use products::{tuple_coords, tuple_index};
pub use search::are_conjugate;
pub use table::{ElementSet, ElementTable, TableSubgroup};

use crate::error::{Error, Result};
use chain::StabChain;

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: BigUint,
}

/// A permutation group on `0..degree` with its stabilizer chain.
#[derive(Clone)]
pub struct PermutationGroup {
    inner: Arc<Inner>,
}

impl PermutationGroup {
    /// Builds `⟨gens⟩`. The list must be nonempty and of uniform degree.
    pub fn new(gens: Vec<Permutation>) -> Result<Self> {
        let first = gens.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        if degree == 0 {
            return Err(Error::Zero);
        }
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        Ok(Self::build(degree, gens, &[]))
    }

    /// Parses cycle-notation generators.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self> {
        let perms = gens
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        if perms.is_empty() {
            return Ok(Self::trivial(degree));
        }
        Self::new(perms)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::build(degree, vec![Permutation::identity(degree)], &[])
    }

    /// Same as `new` for generators already known to share `degree`; an empty
    /// list yields the trivial group.
    pub(crate) fn from_gens(degree: usize, gens: Vec<Permutation>) -> Self {
        if gens.is_empty() {
            return Self::trivial(degree);
        }
        Self::build(degree, gens, &[])
    }

    fn build(degree: usize, generators: Vec<Permutation>, prefix: &[usize]) -> Self {
        let chain = StabChain::build(degree, &generators, prefix);
        let order = chain.order();
        PermutationGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                chain,
                order,
            }),
        }
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    /// Generators with identities and duplicates removed, sorted by image list.
    pub fn sorted_generators(&self) -> Vec<Permutation> {
        let mut gens: Vec<Permutation> = self
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        gens.sort();
        gens.dedup();
        gens
    }

    pub fn order(&self) -> &BigUint {
        &self.inner.order
    }

    /// The order as `u64`, or a bound error naming `what`.
    pub fn order_u64(&self, what: &'static str, limit: u64) -> Result<u64> {
        match self.order().to_u64() {
            Some(o) if o <= limit => Ok(o),
            _ => Err(Error::bound(what, limit, self.order())),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order().is_one()
    }

    pub fn base(&self) -> Vec<usize> {
        self.inner.chain.base()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.inner.chain.strong_generators()
    }

    /// Lengths of the basic orbits, level by level.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.inner.chain.levels().iter().map(|l| l.orbit().len()).collect()
    }

    pub(crate) fn chain(&self) -> &StabChain {
        &self.inner.chain
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: p.degree(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.inner.chain.contains(p))
    }

    /// Membership for permutations already known to have the right degree.
    pub(crate) fn has(&self, p: &Permutation) -> bool {
        self.inner.chain.contains(p)
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.has(g))
    }

    /// Same degree, mutual containment.
    pub fn same_group(&self, other: &PermutationGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree()];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            for g in self.generators() {
                let q = g.image(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// The orbit partition, each orbit sorted, orbits ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let orbit = self.orbit(start).expect("in range");
            for &p in &orbit {
                seen[p] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).map(|o| o.len() == self.degree()).unwrap_or(false)
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && *self.order() == BigUint::from(self.degree())
    }

    /// Every point stabilizer is trivial.
    pub fn is_semiregular(&self) -> bool {
        self.orbits()
            .iter()
            .all(|o| BigUint::from(o.len()) == *self.order())
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.degree() {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree(),
            });
        }
        Ok(())
    }

    /// Pointwise stabilizer of `points`, computed through a chain whose base
    /// begins with those points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermutationGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let mut prefix: Vec<usize> = Vec::new();
        for &p in points {
            if !prefix.contains(&p) {
                prefix.push(p);
            }
        }
        if prefix.is_empty() {
            return Ok(self.clone());
        }
        let chain = StabChain::build(self.degree(), self.strong_generators(), &prefix);
        let gens = chain.stabilizer_generators(prefix.len());
        Ok(PermutationGroup::from_gens(self.degree(), gens))
    }

    pub fn point_stabilizer(&self, v: usize) -> Result<SubgroupHandle> {
        let stab = self.pointwise_stabilizer(&[v])?;
        Ok(SubgroupHandle::trusted(self.clone(), stab))
    }

    pub fn as_subgroup(&self) -> SubgroupHandle {
        SubgroupHandle::trusted(self.clone(), self.clone())
    }

    /// All elements in stabilizer-chain transversal order.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            chain: &self.inner.chain,
            next: 0,
            total: self.order().to_u64().unwrap_or(u64::MAX),
        }
    }

    /// Elements, refusing groups larger than `limit`.
    pub fn element_list(&self, limit: u64) -> Result<Vec<Permutation>> {
        self.order_u64("element enumeration", limit)?;
        Ok(self.elements().collect())
    }

    /// Transversal-order index of `p`, if it is a member.
    pub fn element_rank(&self, p: &Permutation) -> Option<u64> {
        if p.degree() != self.degree() {
            return None;
        }
        self.inner.chain.rank(p)
    }

    /// Subgroup generated by this group's generators and `extra`.
    pub fn join(&self, extra: &[Permutation]) -> PermutationGroup {
        let mut gens = self.generators().to_vec();
        gens.extend(extra.iter().cloned());
        PermutationGroup::from_gens(self.degree(), gens)
    }

    /// Conjugate subgroup `g⁻¹ G g` (with `g` from any overgroup).
    pub fn conjugate(&self, g: &Permutation) -> PermutationGroup {
        let gens = self.generators().iter().map(|x| x.conjugate_by(g)).collect();
        PermutationGroup::from_gens(self.degree(), gens)
    }

    /// Points moved by at least one generator.
    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.degree())
            .filter(|&p| self.generators().iter().any(|g| !g.fixes(p)))
            .collect()
    }
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermutationGroup(degree {}, order {}, gens [", self.degree(), self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

/// Iterator over group elements in transversal order.
pub struct Elements<'a> {
    chain: &'a StabChain,
    next: u64,
    total: u64,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.next >= self.total {
            return None;
        }
        let g = self.chain.element_at(self.next);
        self.next += 1;
        Some(g)
    }
}

/// A subgroup of a fixed parent group.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    parent: PermutationGroup,
    group: PermutationGroup,
}

impl SubgroupHandle {
    /// Checks that every generator lies in `parent`.
    pub fn new(parent: &PermutationGroup, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if !parent.contains(g)? {
                return Err(Error::NotContained(format!("{g} is not in the parent group")));
            }
        }
        let group = PermutationGroup::from_gens(parent.degree(), gens);
        Ok(SubgroupHandle {
            parent: parent.clone(),
            group,
        })
    }

    pub(crate) fn trusted(parent: PermutationGroup, group: PermutationGroup) -> Self {
        debug_assert!(group.is_subgroup_of(&parent));
        SubgroupHandle { parent, group }
    }

    pub fn parent(&self) -> &PermutationGroup {
        &self.parent
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn into_group(self) -> PermutationGroup {
        self.group
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    pub fn order(&self) -> &BigUint {
        self.group.order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.group.contains(p)
    }

    pub fn same_subgroup(&self, other: &SubgroupHandle) -> bool {
        self.group.same_group(&other.group)
    }

    /// `H^g = g⁻¹ H g`; `g` must lie in the parent.
    pub fn conjugate(&self, g: &Permutation) -> Result<SubgroupHandle> {
        if !self.parent.contains(g)? {
            return Err(Error::NotContained(format!("{g} is not in the parent group")));
        }
        Ok(SubgroupHandle {
            parent: self.parent.clone(),
            group: self.group.conjugate(g),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(deg: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::from_cycles(deg, gens).unwrap()
    }

    #[test]
    fn orders_of_small_groups() {
        assert_eq!(*g(4, &["(1 2)", "(1 2 3 4)"]).order(), BigUint::from(24u32));
        assert_eq!(*g(5, &["(1 2 3)", "(3 4 5)"]).order(), BigUint::from(60u32));
        assert!(g(3, &["()"]).is_trivial());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(PermutationGroup::new(vec![]).unwrap_err(), Error::EmptyGenerators);
        let err = PermutationGroup::new(vec![Permutation::identity(3), Permutation::identity(4)]);
        assert_eq!(err.unwrap_err(), Error::DegreeMismatch { expected: 3, found: 4 });
    }

    #[test]
    fn membership() {
        let s4 = g(4, &["(1 2)", "(1 2 3 4)"]);
        assert!(s4.contains(&Permutation::parse("(1 3)", 4).unwrap()).unwrap());
        let c3 = g(3, &["(1 2 3)"]);
        assert!(!c3.contains(&Permutation::parse("(1 2)", 3).unwrap()).unwrap());
        assert!(c3.contains(&Permutation::identity(3)).unwrap());
        assert!(matches!(
            c3.contains(&Permutation::identity(4)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn orbits_and_regularity() {
        let c5 = g(5, &["(1 2 3 4 5)"]);
        assert!(c5.is_regular());
        let v = g(6, &["(1 2)(3 4)"]);
        assert_eq!(v.orbits(), vec![vec![0, 1], vec![2, 3], vec![4], vec![5]]);
        let s4 = g(4, &["(1 2)", "(1 2 3 4)"]);
        assert!(s4.is_transitive());
        assert!(!s4.is_regular());
    }

    #[test]
    fn point_stabilizers() {
        let s4 = g(4, &["(1 2)", "(1 2 3 4)"]);
        let st = s4.point_stabilizer(3).unwrap();
        assert_eq!(*st.order(), BigUint::from(6u32));
        assert!(st.generators().iter().all(|x| x.fixes(3)));
        let c5 = g(5, &["(1 2 3 4 5)"]);
        assert!(c5.point_stabilizer(2).unwrap().group().is_trivial());
        let d10 = g(5, &["(1 2 3 4 5)", "(2 5)(3 4)"]);
        assert_eq!(*d10.point_stabilizer(1).unwrap().order(), BigUint::from(2u32));
        assert!(matches!(d10.point_stabilizer(5), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn subgroup_handle_rejects_outsiders() {
        let a4 = g(4, &["(1 2 3)", "(2 3 4)"]);
        let t = Permutation::parse("(1 2)", 4).unwrap();
        assert!(matches!(SubgroupHandle::new(&a4, vec![t]), Err(Error::NotContained(_))));
    }

    #[test]
    fn element_enumeration_matches_order() {
        let s4 = g(4, &["(1 2)", "(1 2 3 4)"]);
        let els: BTreeSet<Permutation> = s4.elements().collect();
        assert_eq!(els.len(), 24);
        for (i, e) in s4.elements().enumerate() {
            assert_eq!(s4.element_rank(&e), Some(i as u64));
        }
    }
}
