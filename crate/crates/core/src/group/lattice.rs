//! Subgroup lattices of small groups: normal subgroups, radical, socle and
//! conjugacy classes of subgroups.

use std::collections::HashSet;

use super::table::{ElementSet, ElementTable, TableSubgroup};
use super::{PermutationGroup, SubgroupHandle};
use crate::config::Bounds;
use crate::error::Result;

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: SubgroupHandle,
    /// Number of conjugates.
    pub class_size: usize,
    /// The intersection of all conjugates is trivial.
    pub core_free: bool,
}

/// Canonical form of a subgroup up to conjugacy: the least element set
/// among its conjugates.
pub(crate) struct Canonical {
    pub key: ElementSet,
    pub class_size: usize,
    pub core: ElementSet,
}

pub(crate) fn canonical(table: &ElementTable, set: &ElementSet) -> Canonical {
    let conjugates = table.conjugates(set);
    let mut core = set.clone();
    for c in &conjugates {
        core.intersect_with(c);
    }
    let class_size = conjugates.len();
    let key = conjugates.into_iter().min().expect("nonempty");
    Canonical { key, class_size, core }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub(crate) fn normal_subgroups_in(table: &ElementTable) -> Vec<TableSubgroup> {
    let whole = table.whole();
    let closures: Vec<TableSubgroup> = table
        .conjugacy_classes()
        .into_iter()
        .skip(1)
        .map(|class| table.normal_closure(&whole, &class[..1]))
        .collect();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut normals = vec![table.trivial()];
    seen.insert(normals[0].elements.clone());
    let mut head = 0;
    while head < normals.len() {
        for c in &closures {
            if c.elements.is_subset(&normals[head].elements) {
                continue;
            }
            let mut gens = normals[head].gens.clone();
            gens.extend_from_slice(&c.gens);
            let joined = table.closure(&gens);
            if seen.insert(joined.elements.clone()) {
                normals.push(joined);
            }
        }
        head += 1;
    }
    normals.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    normals
}

/// Largest solvable normal subgroup.
pub(crate) fn radical_in(table: &ElementTable, normals: &[TableSubgroup]) -> TableSubgroup {
    normals
        .iter()
        .filter(|n| table.is_solvable(n))
        .max_by_key(|n| n.order())
        .cloned()
        .expect("trivial subgroup is solvable")
}

pub(crate) fn socle_in(table: &ElementTable, normals: &[TableSubgroup]) -> TableSubgroup {
    let nontrivial: Vec<&TableSubgroup> = normals.iter().filter(|n| n.order() > 1).collect();
    let mut gens = Vec::new();
    for n in &nontrivial {
        let minimal = !nontrivial
            .iter()
            .any(|m| m.order() < n.order() && m.elements.is_subset(&n.elements));
        if minimal {
            gens.extend_from_slice(&n.gens);
        }
    }
    table.closure(&gens)
}

/// Nontrivial perfect subgroups generated by two elements, one per
/// conjugacy class.
fn perfect_seeds(table: &ElementTable) -> Vec<TableSubgroup> {
    let whole = table.whole();
    let residual = table.perfect_core(&whole);
    if residual.order() == 1 {
        return Vec::new();
    }
    let id = table.identity();
    let mut keys: HashSet<ElementSet> = HashSet::new();
    let mut seeds = Vec::new();
    for class in table.conjugacy_classes() {
        let x = class[0];
        if x == id || !residual.elements.contains(x) {
            continue;
        }
        let mut skip = table.closure(&[x]).elements;
        for y in residual.elements.iter() {
            if skip.contains(y) {
                continue;
            }
            let v = table.closure(&[x, y]);
            if table.is_solvable(&v) {
                // ⟨x, y'⟩ ≤ v is solvable for every y' in v
                skip.union_with(&v.elements);
                continue;
            }
            if !table.is_perfect(&v) {
                continue;
            }
            let c = canonical(table, &v.elements);
            if keys.insert(c.key) {
                seeds.push(v);
            }
        }
    }
    seeds
}

/// Representatives of the conjugacy classes of subgroups, by cyclic
/// extension from the trivial group and from perfect seeds.
pub(crate) fn subgroup_classes_in(table: &ElementTable) -> Vec<(TableSubgroup, Canonical)> {
    let mut found: Vec<(TableSubgroup, Canonical)> = Vec::new();
    let mut keys: HashSet<ElementSet> = HashSet::new();
    let mut push = |sub: TableSubgroup, found: &mut Vec<(TableSubgroup, Canonical)>| {
        let c = canonical(table, &sub.elements);
        if keys.insert(c.key.clone()) {
            found.push((sub, c));
        }
    };
    push(table.trivial(), &mut found);
    for s in perfect_seeds(table) {
        push(s, &mut found);
    }
    let n = table.len() as u32;
    let mut head = 0;
    while head < found.len() {
        let u = found[head].0.clone();
        let mut done = u.elements.clone();
        for x in 0..n {
            if done.contains(x) {
                continue;
            }
            let normalizes = u.gens.iter().all(|&s| u.elements.contains(table.conj(s, x)));
            if !normalizes {
                continue;
            }
            // smallest k > 0 with x^k ∈ U
            let mut k = 1;
            let mut p = x;
            while !u.elements.contains(p) {
                p = table.mul(p, x);
                k += 1;
            }
            if !is_prime(k) {
                continue;
            }
            let mut gens = u.gens.clone();
            gens.push(x);
            let v = table.closure(&gens);
            done.union_with(&v.elements);
            push(v, &mut found);
        }
        head += 1;
    }
    found.sort_by(|a, b| {
        a.0.order()
            .cmp(&b.0.order())
            .then_with(|| a.1.key.cmp(&b.1.key))
    });
    found
}

impl PermutationGroup {
    fn table_for(&self, limit: u64, bounds: &Bounds) -> Result<ElementTable> {
        self.order_u64("subgroup lattice", limit)?;
        ElementTable::new(self, bounds)
    }

    pub fn normal_subgroups(&self, bounds: &Bounds) -> Result<Vec<SubgroupHandle>> {
        let table = self.table_for(bounds.normal_order, bounds)?;
        Ok(normal_subgroups_in(&table)
            .iter()
            .map(|s| SubgroupHandle::trusted(self.clone(), table.to_group(s)))
            .collect())
    }

    /// `Rad(G)`, the largest solvable normal subgroup.
    pub fn solvable_radical(&self, bounds: &Bounds) -> Result<SubgroupHandle> {
        let table = self.table_for(bounds.normal_order, bounds)?;
        let normals = normal_subgroups_in(&table);
        let r = radical_in(&table, &normals);
        Ok(SubgroupHandle::trusted(self.clone(), table.to_group(&r)))
    }

    /// Product of the minimal normal subgroups.
    pub fn socle(&self, bounds: &Bounds) -> Result<SubgroupHandle> {
        let table = self.table_for(bounds.normal_order, bounds)?;
        let normals = normal_subgroups_in(&table);
        let s = socle_in(&table, &normals);
        Ok(SubgroupHandle::trusted(self.clone(), table.to_group(&s)))
    }

    /// One representative per conjugacy class of subgroups, ordered by order.
    pub fn subgroups_up_to_conjugacy(&self, bounds: &Bounds) -> Result<Vec<SubgroupHandle>> {
        Ok(self
            .subgroup_classes(bounds)?
            .into_iter()
            .map(|c| c.representative)
            .collect())
    }

    pub fn subgroup_classes(&self, bounds: &Bounds) -> Result<Vec<SubgroupClass>> {
        let table = self.table_for(bounds.subgroup_order, bounds)?;
        Ok(subgroup_classes_in(&table)
            .into_iter()
            .map(|(sub, c)| SubgroupClass {
                representative: SubgroupHandle::trusted(self.clone(), table.to_group(&sub)),
                class_size: c.class_size,
                core_free: c.core.len() == 1,
            })
            .collect())
    }

    /// Nonabelian simple: perfect and every non-identity element has normal
    /// closure equal to the whole group.
    pub fn is_nonabelian_simple(&self, bounds: &Bounds) -> Result<bool> {
        if self.is_trivial() || !self.is_perfect() {
            return Ok(false);
        }
        self.order_u64("simplicity check", bounds.enumeration)?;
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for x in self.elements() {
            if x.is_identity() || seen.contains(x.images()) {
                continue;
            }
            // mark the conjugacy class of x
            let mut class = vec![x.clone()];
            seen.insert(x.images().to_vec());
            let mut head = 0;
            while head < class.len() {
                for g in self.generators() {
                    let c = class[head].conjugate_by(g);
                    if seen.insert(c.images().to_vec()) {
                        class.push(c);
                    }
                }
                head += 1;
            }
            if self.normal_closure(&[x]).order() != self.order() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
