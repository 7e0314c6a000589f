use super::PermutationGroup;
use crate::error::{Error, Result};

/// A partition of the domain into cells of equal size that the group
/// permutes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    /// Cells sorted internally and ordered by least element.
    pub blocks: Vec<Vec<usize>>,
    /// Singletons or a single block.
    pub trivial: bool,
}

impl BlockSystem {
    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl PermutationGroup {
    fn require_transitive(&self) -> Result<()> {
        if !self.is_transitive() {
            return Err(Error::Precondition("group is not transitive".into()));
        }
        Ok(())
    }

    /// The finest block system in which `a` and `b` share a block.
    pub fn minimal_block_system(&self, a: usize, b: usize) -> Result<BlockSystem> {
        self.require_transitive()?;
        let n = self.degree();
        for p in [a, b] {
            if p >= n {
                return Err(Error::PointOutOfRange { point: p, degree: n });
            }
        }
        let mut uf = UnionFind::new(n);
        let mut queue = Vec::new();
        if uf.union(a, b) {
            queue.push((a, b));
        }
        while let Some((x, y)) = queue.pop() {
            for g in self.generators() {
                let (gx, gy) = (g.image(x), g.image(y));
                if uf.union(gx, gy) {
                    queue.push((gx, gy));
                }
            }
        }
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
        for p in 0..n {
            let r = uf.find(p);
            cells[r].push(p);
        }
        let blocks: Vec<Vec<usize>> = cells.into_iter().filter(|c| !c.is_empty()).collect();
        let trivial = blocks.len() == 1 || blocks.len() == n;
        Ok(BlockSystem { blocks, trivial })
    }

    pub fn is_primitive(&self) -> Result<bool> {
        self.require_transitive()?;
        let n = self.degree();
        // Every block system is generated by a pair containing 0.
        for b in 1..n {
            if !self.minimal_block_system(0, b)?.trivial {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All nontrivial minimal block systems reachable from seed pairs through
    /// point 0, deduplicated.
    pub fn nontrivial_block_systems(&self) -> Result<Vec<BlockSystem>> {
        self.require_transitive()?;
        let mut out: Vec<BlockSystem> = Vec::new();
        for b in 1..self.degree() {
            let sys = self.minimal_block_system(0, b)?;
            if !sys.trivial && !out.contains(&sys) {
                out.push(sys);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(deg: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::from_cycles(deg, gens).unwrap()
    }

    #[test]
    fn cyclic_six_is_imprimitive() {
        let c6 = g(6, &["(1 2 3 4 5 6)"]);
        assert!(!c6.is_primitive().unwrap());
        let sizes: Vec<usize> = c6
            .nontrivial_block_systems()
            .unwrap()
            .iter()
            .map(BlockSystem::block_size)
            .collect();
        assert!(sizes.contains(&2));
        assert!(sizes.contains(&3));
    }

    #[test]
    fn dihedral_prime_degree_is_primitive() {
        assert!(g(5, &["(1 2 3 4 5)", "(2 5)(3 4)"]).is_primitive().unwrap());
    }

    #[test]
    fn cyclic_four_blocks() {
        let c4 = g(4, &["(1 2 3 4)"]);
        let sys = c4.minimal_block_system(0, 2).unwrap();
        assert_eq!(sys.blocks, vec![vec![0, 2], vec![1, 3]]);
        assert!(!sys.trivial);
    }

    #[test]
    fn intransitive_is_rejected() {
        let v = g(4, &["(1 2)"]);
        assert!(matches!(v.is_primitive(), Err(Error::Precondition(_))));
    }

    #[test]
    fn blocks_are_invariant() {
        let grp = g(8, &["(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"]);
        for sys in grp.nontrivial_block_systems().unwrap() {
            for gen in grp.generators() {
                for blk in &sys.blocks {
                    let mut img: Vec<usize> = blk.iter().map(|&p| gen.image(p)).collect();
                    img.sort_unstable();
                    assert!(sys.blocks.contains(&img));
                }
            }
        }
    }
}
