//! Multiplication tables for small groups and subgroups stored as element
//! bitsets.

use std::collections::{HashMap, HashSet};

use super::{Permutation, PermutationGroup};
use crate::config::Bounds;
use crate::error::{Error, Result};

/// A set of element indices of an [`ElementTable`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    #[inline]
    pub fn insert(&mut self, i: u32) -> bool {
        let (w, b) = ((i / 64) as usize, i % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        self.words[(i / 64) as usize] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some(wi as u32 * 64 + b)
            })
        })
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= b);
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a |= b);
    }
}

/// A subgroup of a tabulated group: its elements and a generating set.
#[derive(Clone, Debug)]
pub struct TableSubgroup {
    pub elements: ElementSet,
    pub gens: Vec<u32>,
}

impl TableSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// All elements of a small group, in stabilizer-chain transversal order,
/// with a full multiplication table.
pub struct ElementTable {
    group: PermutationGroup,
    elements: Vec<Permutation>,
    index: HashMap<Vec<u32>, u32>,
    mul: Vec<u16>,
    inv: Vec<u32>,
    gen_idx: Vec<u32>,
}

impl ElementTable {
    pub fn new(group: &PermutationGroup, bounds: &Bounds) -> Result<Self> {
        let limit = bounds.element_table.min(u16::MAX as u64);
        let n = group.order_u64("element table", limit)? as usize;
        let elements: Vec<Permutation> = group.elements().collect();
        let index: HashMap<Vec<u32>, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.images().to_vec(), i as u32))
            .collect();
        let gens = group.sorted_generators();
        let gen_idx: Vec<u32> = gens.iter().map(|g| index[g.images()]).collect();
        // right multiplication by generators
        let rmul: Vec<Vec<u32>> = elements
            .iter()
            .map(|e| gens.iter().map(|g| index[e.then(g).images()]).collect())
            .collect();
        // BFS spanning tree: order[k] = parent * gens[via]
        let mut tree: Vec<(u32, u32, u32)> = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let identity = index[group.identity().images()];
        seen[identity as usize] = true;
        let mut queue = vec![identity];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            for (s, &c) in rmul[p as usize].iter().enumerate() {
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    queue.push(c);
                    tree.push((c, p, s as u32));
                }
            }
            head += 1;
        }
        debug_assert_eq!(queue.len(), n);
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            let row = a * n;
            mul[row + identity as usize] = a as u16;
            for &(c, p, s) in &tree {
                let ap = mul[row + p as usize] as usize;
                mul[row + c as usize] = rmul[ap][s as usize] as u16;
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] as u32 == identity {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        Ok(ElementTable {
            group: group.clone(),
            elements,
            index,
            mul,
            inv,
            gen_idx,
        })
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p.images()).copied()
    }

    pub fn identity(&self) -> u32 {
        self.index[self.group.identity().images()]
    }

    /// Indices of the sorted generators of the group.
    pub fn generator_indices(&self) -> &[u32] {
        &self.gen_idx
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.elements.len() + b as usize] as u32
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `g⁻¹ a g`
    #[inline]
    pub fn conj(&self, a: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn element_order(&self, a: u32) -> usize {
        let id = self.identity();
        let mut x = a;
        let mut k = 1;
        while x != id {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> TableSubgroup {
        let id = self.identity();
        let gens: Vec<u32> = gens.iter().copied().filter(|&g| g != id).collect();
        let mut set = ElementSet::empty(self.len());
        set.insert(id);
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let e = queue[head];
            for &g in &gens {
                let c = self.mul(e, g);
                if set.insert(c) {
                    queue.push(c);
                }
            }
            head += 1;
        }
        TableSubgroup { elements: set, gens }
    }

    pub fn trivial(&self) -> TableSubgroup {
        self.closure(&[])
    }

    pub fn whole(&self) -> TableSubgroup {
        self.closure(&self.gen_idx.clone())
    }

    /// Smallest subgroup of `within` containing `seeds` and normalized by
    /// `within`.
    pub fn normal_closure(&self, within: &TableSubgroup, seeds: &[u32]) -> TableSubgroup {
        let mut gens: Vec<u32> = seeds.to_vec();
        let mut sub = self.closure(&gens);
        let mut i = 0;
        while i < gens.len() {
            for &w in &within.gens {
                let c = self.conj(gens[i], w);
                if !sub.elements.contains(c) {
                    gens.push(c);
                    sub = self.closure(&gens);
                }
            }
            i += 1;
        }
        sub
    }

    pub fn derived(&self, sub: &TableSubgroup) -> TableSubgroup {
        let mut comms = Vec::new();
        for (i, &a) in sub.gens.iter().enumerate() {
            for &b in &sub.gens[i + 1..] {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                comms.push(c);
            }
        }
        self.normal_closure(sub, &comms)
    }

    pub fn perfect_core(&self, sub: &TableSubgroup) -> TableSubgroup {
        let mut cur = sub.clone();
        loop {
            let next = self.derived(&cur);
            if next.order() == cur.order() {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_solvable(&self, sub: &TableSubgroup) -> bool {
        self.perfect_core(sub).order() == 1
    }

    pub fn is_perfect(&self, sub: &TableSubgroup) -> bool {
        self.derived(sub).order() == sub.order()
    }

    pub fn is_normal_in(&self, sub: &TableSubgroup, over: &TableSubgroup) -> bool {
        over.gens
            .iter()
            .all(|&g| sub.gens.iter().all(|&s| sub.elements.contains(self.conj(s, g))))
    }

    /// Conjugacy classes of elements of the whole group, each sorted, ordered
    /// by least member (the identity class first).
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            seen[start as usize] = true;
            let mut class = vec![start];
            let mut head = 0;
            while head < class.len() {
                let e = class[head];
                for &g in &self.gen_idx {
                    let c = self.conj(e, g);
                    if !seen[c as usize] {
                        seen[c as usize] = true;
                        class.push(c);
                    }
                }
                head += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (c[0] != self.identity(), c[0]));
        classes
    }

    /// Image of a subset under conjugation by `g`.
    pub fn conjugate_set(&self, set: &ElementSet, g: u32) -> ElementSet {
        let mut out = ElementSet::empty(self.len());
        for e in set.iter() {
            out.insert(self.conj(e, g));
        }
        out
    }

    /// Every conjugate of `sub` under the whole group, the first one being
    /// `sub` itself.
    pub fn conjugates(&self, sub: &ElementSet) -> Vec<ElementSet> {
        let mut seen: HashSet<ElementSet> = HashSet::new();
        seen.insert(sub.clone());
        let mut out = vec![sub.clone()];
        let mut head = 0;
        while head < out.len() {
            for &g in &self.gen_idx {
                let c = self.conjugate_set(&out[head], g);
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
            head += 1;
        }
        out
    }

    /// Converts a table subgroup back to a permutation group.
    pub fn to_group(&self, sub: &TableSubgroup) -> PermutationGroup {
        let gens = sub.gens.iter().map(|&g| self.element(g).clone()).collect();
        PermutationGroup::from_gens(self.group.degree(), gens)
    }

    /// Table form of a subgroup given by permutations.
    pub fn subgroup_of(&self, grp: &PermutationGroup) -> Result<TableSubgroup> {
        let gens = grp
            .generators()
            .iter()
            .map(|g| {
                self.index_of(g)
                    .ok_or_else(|| Error::NotContained(format!("{g} is not in the tabulated group")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(self.closure(&gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_table() {
        let s4 = PermutationGroup::from_cycles(4, &["(1 2)", "(1 2 3 4)"]).unwrap();
        let t = ElementTable::new(&s4, &Bounds::default()).unwrap();
        assert_eq!(t.len(), 24);
        for a in 0..24u32 {
            for b in 0..24u32 {
                let p = t.element(a).then(t.element(b));
                assert_eq!(t.index_of(&p), Some(t.mul(a, b)));
            }
            assert_eq!(t.mul(a, t.inv(a)), t.identity());
        }
        let sizes: Vec<usize> = t.conjugacy_classes().iter().map(Vec::len).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 3, 6, 6, 8]);
        assert_eq!(sizes[0], 1);
        assert!(t.is_solvable(&t.whole()));
        assert_eq!(t.derived(&t.whole()).order(), 12);
    }

    #[test]
    fn table_bound() {
        let s8 = PermutationGroup::from_cycles(8, &["(1 2)", "(1 2 3 4 5 6 7 8)"]).unwrap();
        assert!(matches!(
            ElementTable::new(&s8, &Bounds::default()),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn element_set_ops() {
        let mut a = ElementSet::empty(130);
        assert!(a.insert(3));
        assert!(!a.insert(3));
        a.insert(129);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![3, 129]);
        let mut b = ElementSet::empty(130);
        b.insert(129);
        assert!(b.is_subset(&a));
        b.union_with(&a);
        assert_eq!(b.len(), 2);
        b.intersect_with(&ElementSet::empty(130));
        assert!(b.is_empty());
    }
}
