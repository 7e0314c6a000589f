//! Bounded searches: intersections, centralizers and conjugating elements.

use num_integer::Integer;
use num_traits::One;

use super::{Permutation, PermutationGroup, SubgroupHandle};
use crate::config::Bounds;
use crate::error::{Error, Result};

/// Adds members of `candidates` to a growing subgroup; each insertion at
/// least doubles the order, so only a handful of chain rebuilds happen.
fn generate_from(degree: usize, candidates: impl Iterator<Item = Permutation>) -> PermutationGroup {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermutationGroup::trivial(degree);
    for c in candidates {
        if !current.has(&c) {
            gens.push(c);
            current = PermutationGroup::from_gens(degree, gens.clone());
        }
    }
    current
}

/// `A ∩ B` by enumerating the smaller group and sifting in the larger one.
pub(crate) fn intersect_groups(a: &PermutationGroup, b: &PermutationGroup, limit: u64) -> Result<PermutationGroup> {
    let degree = a.degree();
    if a.order().gcd(b.order()).is_one() {
        return Ok(PermutationGroup::trivial(degree));
    }
    if a.is_subgroup_of(b) {
        return Ok(a.clone());
    }
    if b.is_subgroup_of(a) {
        return Ok(b.clone());
    }
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    small.order_u64("intersection enumeration", limit)?;
    Ok(generate_from(degree, small.elements().filter(|e| large.has(e))))
}

fn same_parent(a: &SubgroupHandle, b: &SubgroupHandle) -> Result<()> {
    if !a.parent().same_group(b.parent()) {
        return Err(Error::Precondition("subgroups have different parents".into()));
    }
    Ok(())
}

impl SubgroupHandle {
    /// Exact `A ∩ B`; the smaller factor is enumerated within
    /// `bounds.enumeration`.
    pub fn intersection(&self, other: &SubgroupHandle, bounds: &Bounds) -> Result<SubgroupHandle> {
        same_parent(self, other)?;
        let g = intersect_groups(self.group(), other.group(), bounds.enumeration)?;
        Ok(SubgroupHandle::trusted(self.parent().clone(), g))
    }
}

impl PermutationGroup {
    /// `C_G(H)` by scanning the elements of `G`.
    pub fn centralizer(&self, h: &PermutationGroup, bounds: &Bounds) -> Result<SubgroupHandle> {
        if h.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: h.degree(),
            });
        }
        self.order_u64("centralizer enumeration", bounds.enumeration)?;
        let hg = h.generators();
        let c = generate_from(
            self.degree(),
            self.elements()
                .filter(|x| hg.iter().all(|y| x.then(y) == y.then(x))),
        );
        Ok(SubgroupHandle::trusted(self.clone(), c))
    }

    /// Whether `self = AB`, tested as `|A|·|B| = |self|·|A ∩ B|`.
    pub fn check_factorization(
        &self,
        a: &PermutationGroup,
        b: &PermutationGroup,
        bounds: &Bounds,
    ) -> Result<bool> {
        for f in [a, b] {
            if !f.is_subgroup_of(self) {
                return Err(Error::NotContained("factor is not a subgroup of the group".into()));
            }
        }
        let lhs = a.order() * b.order();
        let total = self.order();
        // |A ∩ B| ≥ 1, so a product below |H| settles it without intersecting
        if lhs < *total || (lhs.clone() % total) != num_bigint::BigUint::from(0u32) {
            return Ok(false);
        }
        let i = intersect_groups(a, b, bounds.enumeration)?;
        Ok(lhs == total * i.order())
    }

    /// Some `x ∈ G` with `A^x = B`, `None` when no such element exists.
    ///
    /// Depth-first search over base images of `G` in ascending order, so the
    /// transporter returned has the lexicographically least base image.
    /// Partial images are pruned by requiring the orbit structure of `A`
    /// at each base point to match that of `B` at its image.
    pub fn conjugating_element(
        &self,
        a: &PermutationGroup,
        b: &PermutationGroup,
        bounds: &Bounds,
    ) -> Result<Option<Permutation>> {
        for grp in [a, b] {
            if grp.degree() != self.degree() {
                return Err(Error::DegreeMismatch {
                    expected: self.degree(),
                    found: grp.degree(),
                });
            }
        }
        if a.order() != b.order() {
            return Ok(None);
        }
        let orbit_id = |grp: &PermutationGroup| {
            let mut id = vec![0usize; grp.degree()];
            let mut sizes = Vec::new();
            for (k, o) in grp.orbits().into_iter().enumerate() {
                for &p in &o {
                    id[p] = k;
                }
                sizes.push(o.len());
            }
            (id, sizes)
        };
        let (a_id, a_sizes) = orbit_id(a);
        let (b_id, b_sizes) = orbit_id(b);
        let mut sa = a_sizes.clone();
        let mut sb = b_sizes.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(None);
        }
        let search = Transporter {
            group: self,
            a,
            b,
            a_id: &a_id,
            a_sizes: &a_sizes,
            b_id: &b_id,
            b_sizes: &b_sizes,
            limit: bounds.transporter_nodes,
            nodes: 0,
            images: Vec::new(),
        };
        search.run()
    }
}

struct Transporter<'a> {
    group: &'a PermutationGroup,
    a: &'a PermutationGroup,
    b: &'a PermutationGroup,
    a_id: &'a [usize],
    a_sizes: &'a [usize],
    b_id: &'a [usize],
    b_sizes: &'a [usize],
    limit: u64,
    nodes: u64,
    /// `(base point, image)` pairs fixed so far.
    images: Vec<(usize, usize)>,
}

impl Transporter<'_> {
    fn run(mut self) -> Result<Option<Permutation>> {
        let id = self.group.identity();
        self.descend(0, id)
    }

    fn consistent(&self, base: usize, image: usize) -> bool {
        if self.a_sizes[self.a_id[base]] != self.b_sizes[self.b_id[image]] {
            return false;
        }
        self.images.iter().all(|&(p, q)| {
            (self.a_id[p] == self.a_id[base]) == (self.b_id[q] == self.b_id[image])
        })
    }

    /// `suffix` is `u_{l-1} ⋯ u_0`; candidates extend it on the left.
    fn descend(&mut self, level: usize, suffix: Permutation) -> Result<Option<Permutation>> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::NodeLimit { limit: self.limit });
        }
        let levels = self.group.chain().levels();
        if level == levels.len() {
            let ok = self
                .a
                .generators()
                .iter()
                .all(|x| self.b.has(&x.conjugate_by(&suffix)));
            return Ok(ok.then_some(suffix));
        }
        let lvl = &levels[level];
        let mut cands: Vec<(usize, usize)> = lvl
            .orbit()
            .iter()
            .enumerate()
            .map(|(i, &d)| (suffix.image(d as usize), i))
            .collect();
        cands.sort_unstable();
        for (img, idx) in cands {
            if !self.consistent(lvl.base, img) {
                continue;
            }
            let next = lvl.transversal(idx).then(&suffix);
            self.images.push((lvl.base, img));
            let found = self.descend(level + 1, next)?;
            self.images.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Free-function form of [`PermutationGroup::conjugating_element`].
pub fn are_conjugate(
    g: &PermutationGroup,
    a: &PermutationGroup,
    b: &PermutationGroup,
    bounds: &Bounds,
) -> Result<Option<Permutation>> {
    g.conjugating_element(a, b, bounds)
}
