use super::{Permutation, PermutationGroup, SubgroupHandle};

fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    // [a, b] = a⁻¹ b⁻¹ a b
    a.inverse().then(&b.inverse()).then(a).then(b)
}

impl PermutationGroup {
    /// Smallest normal subgroup of `self` containing `gens`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> PermutationGroup {
        let mut ngens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut closure = PermutationGroup::from_gens(self.degree(), ngens.clone());
        let mut i = 0;
        while i < ngens.len() {
            for g in self.generators() {
                let c = ngens[i].conjugate_by(g);
                if !closure.has(&c) {
                    ngens.push(c);
                    closure = PermutationGroup::from_gens(self.degree(), ngens.clone());
                }
            }
            i += 1;
        }
        closure
    }

    pub fn is_normal_in(&self, overgroup: &PermutationGroup) -> bool {
        self.is_subgroup_of(overgroup)
            && overgroup
                .generators()
                .iter()
                .all(|g| self.generators().iter().all(|x| self.has(&x.conjugate_by(g))))
    }

    pub fn derived_subgroup(&self) -> PermutationGroup {
        let gens = self.generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = commutator(a, b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// `G ≥ G' ≥ G'' ≥ …`, stopping at the first repeated term (included once).
    pub fn derived_series(&self) -> Vec<SubgroupHandle> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
            .into_iter()
            .map(|g| SubgroupHandle::trusted(self.clone(), g))
            .collect()
    }

    /// Terminal term of the derived series.
    pub fn perfect_core(&self) -> SubgroupHandle {
        self.derived_series().pop().expect("nonempty")
    }

    pub fn is_solvable(&self) -> bool {
        self.perfect_core().group().is_trivial()
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }
}
