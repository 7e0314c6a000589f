//! Stabilizer chains built by the deterministic Schreier–Sims algorithm.

use num_bigint::BigUint;

use super::perm::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;

/// Transversal elements are cached explicitly while `orbit * degree` stays
/// below this many entries; larger levels walk the Schreier tree instead.
const CACHE_ENTRIES: usize = 1 << 20;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base: usize,
    pub(crate) gens: Vec<Permutation>,
    orbit: Vec<u32>,
    pos: Vec<u32>,
    /// For orbit index `i > 0`: `(parent index, generator index)` with
    /// `orbit[parent]^gens[gen] == orbit[i]`.
    tree: Vec<(u32, u32)>,
    inv_gens: Vec<Permutation>,
    /// Cached `u_i⁻¹` where `base^u_i == orbit[i]`.
    inv_cache: Option<Vec<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut lvl = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            pos: vec![NOT_IN_ORBIT; degree],
            tree: Vec::new(),
            inv_gens: Vec::new(),
            inv_cache: None,
        };
        lvl.rebuild();
        lvl
    }

    fn rebuild(&mut self) {
        let degree = self.pos.len();
        self.pos.iter_mut().for_each(|p| *p = NOT_IN_ORBIT);
        self.orbit.clear();
        self.tree.clear();
        self.inv_gens = self.gens.iter().map(Permutation::inverse).collect();
        self.orbit.push(self.base as u32);
        self.tree.push((0, u32::MAX));
        self.pos[self.base] = 0;
        let mut head = 0;
        while head < self.orbit.len() {
            let pt = self.orbit[head] as usize;
            for (gi, g) in self.gens.iter().enumerate() {
                let img = g.image(pt);
                if self.pos[img] == NOT_IN_ORBIT {
                    self.pos[img] = self.orbit.len() as u32;
                    self.orbit.push(img as u32);
                    self.tree.push((head as u32, gi as u32));
                }
            }
            head += 1;
        }
        self.inv_cache = None;
        if self.orbit.len().saturating_mul(degree) <= CACHE_ENTRIES {
            let mut cache: Vec<Permutation> = Vec::with_capacity(self.orbit.len());
            cache.push(Permutation::identity(degree));
            for i in 1..self.orbit.len() {
                let (parent, gi) = self.tree[i];
                // u_i = u_parent * g, so u_i⁻¹ = g⁻¹ * u_parent⁻¹
                let inv = self.inv_gens[gi as usize].then(&cache[parent as usize]);
                cache.push(inv);
            }
            self.inv_cache = Some(cache);
        }
    }

    pub(crate) fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    #[inline]
    pub(crate) fn position(&self, point: usize) -> Option<usize> {
        match self.pos[point] {
            NOT_IN_ORBIT => None,
            p => Some(p as usize),
        }
    }

    /// Returns `g * u_i⁻¹`.
    fn strip_with(&self, g: &Permutation, idx: usize) -> Permutation {
        if let Some(cache) = &self.inv_cache {
            return g.then(&cache[idx]);
        }
        let mut out = g.clone();
        let mut i = idx;
        while i != 0 {
            let (parent, gi) = self.tree[i];
            out = out.then(&self.inv_gens[gi as usize]);
            i = parent as usize;
        }
        out
    }

    /// The transversal element `u_i` with `base^u_i == orbit[i]`.
    pub(crate) fn transversal(&self, idx: usize) -> Permutation {
        if let Some(cache) = &self.inv_cache {
            return cache[idx].inverse();
        }
        let mut path = Vec::new();
        let mut i = idx;
        while i != 0 {
            let (parent, gi) = self.tree[i];
            path.push(gi as usize);
            i = parent as usize;
        }
        let mut u = Permutation::identity(self.pos.len());
        for &gi in path.iter().rev() {
            u = u.then(&self.gens[gi]);
        }
        u
    }
}

/// A base and strong generating set with basic orbits and transversals.
#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds the chain for `⟨gens⟩`. The base starts with `prefix`; further
    /// base points are the smallest point moved by the element that forces a
    /// new level.
    pub(crate) fn build(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        let mut gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        gens.sort();
        gens.dedup();
        for g in &gens {
            if chain.levels.iter().all(|l| g.fixes(l.base)) {
                let b = g.first_moved().expect("non-identity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        for m in 0..chain.levels.len() {
            let bases: Vec<usize> = chain.levels[..m].iter().map(|l| l.base).collect();
            let lvl_gens: Vec<Permutation> = gens
                .iter()
                .filter(|g| bases.iter().all(|&b| g.fixes(b)))
                .cloned()
                .collect();
            chain.levels[m].gens = lvl_gens;
            chain.levels[m].rebuild();
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let l = i as usize;
            match self.find_failing_schreier_generator(l) {
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let b = h.first_moved().expect("non-identity residue");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for m in l + 1..=j {
                        self.levels[m].gens.push(h.clone());
                        self.levels[m].rebuild();
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn find_failing_schreier_generator(&self, l: usize) -> Option<(Permutation, usize)> {
        let lvl = &self.levels[l];
        for (idx, &beta) in lvl.orbit.iter().enumerate() {
            let u_beta = lvl.transversal(idx);
            for s in &lvl.gens {
                let gamma = s.image(beta as usize);
                let gidx = lvl.position(gamma).expect("orbit closed");
                let h = lvl.strip_with(&u_beta.then(s), gidx);
                if h.is_identity() {
                    continue;
                }
                let (res, j) = self.sift_from(h, l + 1);
                if j < self.levels.len() || !res.is_identity() {
                    return Some((res, j));
                }
            }
        }
        None
    }

    /// Sifts `g` starting at level `start`; returns the residue and the level
    /// where sifting stopped (`len` when it passed every level).
    pub(crate) fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, lvl) in self.levels.iter().enumerate().skip(start) {
            let beta = g.image(lvl.base);
            match lvl.position(beta) {
                Some(idx) => g = lvl.strip_with(&g, idx),
                None => return (g, l),
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        let (res, j) = self.sift_from(g.clone(), 0);
        j == self.levels.len() && res.is_identity()
    }

    pub(crate) fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub(crate) fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Generators of the pointwise stabilizer of the first `depth` base points.
    pub(crate) fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        if depth < self.levels.len() {
            self.levels[depth].gens.clone()
        } else {
            Vec::new()
        }
    }

    /// Every strong generator (level 0 holds all of them).
    pub(crate) fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Index of `g` in transversal order, where the coordinate at level 0 is
    /// the most significant digit. `None` when `g` is not a member.
    pub(crate) fn rank(&self, g: &Permutation) -> Option<u64> {
        let mut rank: u64 = 0;
        let mut g = g.clone();
        for lvl in &self.levels {
            let idx = lvl.position(g.image(lvl.base))?;
            rank = rank * lvl.orbit.len() as u64 + idx as u64;
            g = lvl.strip_with(&g, idx);
        }
        g.is_identity().then_some(rank)
    }

    /// Inverse of [`StabChain::rank`].
    pub(crate) fn element_at(&self, mut rank: u64) -> Permutation {
        let mut digits = vec![0usize; self.levels.len()];
        for (l, lvl) in self.levels.iter().enumerate().rev() {
            let len = lvl.orbit.len() as u64;
            digits[l] = (rank % len) as usize;
            rank /= len;
        }
        // g = u_{k-1} ... u_1 u_0
        let mut g = Permutation::identity(self.degree);
        for (l, lvl) in self.levels.iter().enumerate().rev() {
            g = g.then(&lvl.transversal(digits[l]));
        }
        g
    }
}
