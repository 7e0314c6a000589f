use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{Permutation, PermutationGroup, SubgroupHandle};
use crate::config::Bounds;
use crate::error::{Error, Result};

/// The element of the right coset `Hx` whose images of `H`'s base points are
/// lexicographically least. Two elements lie in the same right coset exactly
/// when their canonical elements coincide.
pub(crate) fn canonical_coset_element(h: &PermutationGroup, x: &Permutation) -> Permutation {
    let mut z = x.clone();
    for lvl in h.chain().levels() {
        let (idx, _) = lvl
            .orbit()
            .iter()
            .enumerate()
            .min_by_key(|(_, &d)| z.image(d as usize))
            .expect("orbit contains the base point");
        if idx != 0 {
            z = lvl.transversal(idx).then(&z);
        }
    }
    z
}

/// `G` acting by right multiplication on the right cosets of `H`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    subgroup: PermutationGroup,
    /// Sorted, deduplicated generators of `G`.
    source_generators: Vec<Permutation>,
    /// Image of each source generator on coset labels.
    generator_images: Vec<Permutation>,
    /// Representative `r_j` with label `j` standing for `H r_j`; `r_0 = 1`.
    representatives: Vec<Permutation>,
    lookup: HashMap<Vec<u32>, u32>,
    image: PermutationGroup,
}

impl CosetAction {
    pub fn image(&self) -> &PermutationGroup {
        &self.image
    }

    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    pub fn source_generators(&self) -> &[Permutation] {
        &self.source_generators
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    /// Label of the coset `Hx`.
    pub fn label_of(&self, x: &Permutation) -> Option<usize> {
        let key = canonical_coset_element(&self.subgroup, x);
        self.lookup.get(key.images()).map(|&l| l as usize)
    }

    /// The permutation of coset labels induced by `g`.
    pub fn act(&self, g: &Permutation) -> Option<Permutation> {
        let img = self
            .representatives
            .iter()
            .map(|r| self.label_of(&r.then(g)).map(|l| l as u32))
            .collect::<Option<Vec<u32>>>()?;
        Permutation::from_images(img).ok()
    }
}

impl PermutationGroup {
    pub(crate) fn canonical_coset_element(&self, x: &Permutation) -> Permutation {
        canonical_coset_element(self, x)
    }

    /// Index `[G : H]` as an exact integer.
    pub fn index_of(&self, h: &PermutationGroup) -> BigUint {
        self.order() / h.order()
    }

    /// Right-multiplication action on right cosets of `h`, labelled by a
    /// breadth-first walk from `H·1` (label 0) over the sorted generators.
    pub fn action_on_cosets(&self, h: &SubgroupHandle, bounds: &Bounds) -> Result<CosetAction> {
        if !h.group().is_subgroup_of(self) {
            return Err(Error::NotContained("subgroup is not contained in the group".into()));
        }
        let index = self.index_of(h.group());
        match index.to_u64() {
            Some(i) if i <= bounds.coset_index => {}
            _ => return Err(Error::bound("coset index", bounds.coset_index, &index)),
        }
        let sub = h.group().clone();
        let gens = self.sorted_generators();
        let mut reps = vec![self.identity()];
        let mut lookup: HashMap<Vec<u32>, u32> = HashMap::new();
        lookup.insert(canonical_coset_element(&sub, &reps[0]).images().to_vec(), 0);
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut head = 0;
        while head < reps.len() {
            for (gi, s) in gens.iter().enumerate() {
                let y = reps[head].then(s);
                let key = canonical_coset_element(&sub, &y).images().to_vec();
                let next = reps.len() as u32;
                let label = *lookup.entry(key).or_insert_with(|| {
                    reps.push(y);
                    next
                });
                images[gi].push(label);
            }
            head += 1;
        }
        debug_assert_eq!(BigUint::from(reps.len()), index);
        let generator_images: Vec<Permutation> = images
            .into_iter()
            .map(Permutation::from_images_unchecked)
            .collect();
        let image = PermutationGroup::from_gens(reps.len(), generator_images.clone());
        Ok(CosetAction {
            subgroup: sub,
            source_generators: gens,
            generator_images,
            representatives: reps,
            lookup,
            image,
        })
    }

    /// Largest normal subgroup of `self` inside `h` (kernel of the coset action).
    pub fn core_of(&self, h: &PermutationGroup) -> PermutationGroup {
        let mut core = h.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for g in self.generators() {
                if !core.generators().iter().all(|x| core.has(&x.conjugate_by(g))) {
                    // core ∩ core^g
                    let conj = core.conjugate(g);
                    core = super::search::intersect_groups(&core, &conj, u64::MAX)
                        .expect("unbounded intersection");
                    changed = true;
                }
            }
        }
        core
    }
}
