//! Explicit digraphs: irreflexive, antisymmetric arc relations on `0..n`.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::group::{tuple_coords, tuple_index};

/// A digraph with sorted out-neighbor lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<Vec<u32>>,
    arcs: usize,
}

/// Outcome of [`Digraph::valency_profile`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Valency {
    /// Every vertex has in- and out-degree `k`.
    Regular(usize),
    /// The first vertex whose degrees differ from vertex 0's out-degree.
    Irregular {
        vertex: usize,
        out_degree: usize,
        in_degree: usize,
    },
}

/// An s-arc `(v_0, …, v_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SArc(pub Vec<usize>);

impl SArc {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn s(&self) -> usize {
        self.0.len() - 1
    }
}

impl Digraph {
    /// Validates and deduplicates an arc list.
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Zero);
        }
        let mut out: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            out[u].push(v as u32);
        }
        Self::from_out_lists(out)
    }

    /// Validates per-vertex out-neighbor lists (any order, duplicates allowed).
    pub fn from_out_lists(mut out: Vec<Vec<u32>>) -> Result<Self> {
        let n = out.len();
        if n == 0 {
            return Err(Error::Zero);
        }
        let mut arcs = 0;
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if let Some(&v) = list.iter().find(|&&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange { vertex: v as usize, n });
            }
            if list.binary_search(&(u as u32)).is_ok() {
                return Err(Error::SelfLoop(u));
            }
            arcs += list.len();
        }
        for u in 0..n {
            for &v in &out[u] {
                if (v as usize) > u && out[v as usize].binary_search(&(u as u32)).is_ok() {
                    return Err(Error::SymmetricPair(u, v as usize));
                }
            }
        }
        Ok(Digraph { out, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[u32] {
        &self.out[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.out.len() && self.out[u].binary_search(&(v as u32)).is_ok()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v as usize)))
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for (_, v) in self.arcs() {
            deg[v] += 1;
        }
        deg
    }

    pub fn in_neighbors(&self) -> Vec<Vec<u32>> {
        let mut inn = vec![Vec::new(); self.vertex_count()];
        for (u, v) in self.arcs() {
            inn[v].push(u as u32);
        }
        inn
    }

    pub fn valency_profile(&self) -> Valency {
        let k = self.out[0].len();
        let ins = self.in_degrees();
        for (v, &d) in ins.iter().enumerate() {
            let o = self.out[v].len();
            if o != k || d != k {
                return Valency::Irregular {
                    vertex: v,
                    out_degree: o,
                    in_degree: d,
                };
            }
        }
        Valency::Regular(k)
    }

    /// `k` when the digraph is `k`-regular.
    pub fn valency(&self) -> Option<usize> {
        match self.valency_profile() {
            Valency::Regular(k) => Some(k),
            Valency::Irregular { .. } => None,
        }
    }

    /// Number of s-arcs, exactly, by dynamic programming over walk ends.
    pub fn count_s_arcs(&self, s: usize) -> BigUint {
        let n = self.vertex_count();
        let mut ends: Vec<BigUint> = vec![BigUint::from(1u32); n];
        for _ in 0..s {
            let mut next = vec![BigUint::zero(); n];
            for (u, v) in self.arcs() {
                next[v] += &ends[u];
            }
            ends = next;
        }
        ends.into_iter().sum()
    }

    /// Every s-arc in lexicographic order, refusing more than
    /// `bounds.s_arcs` of them.
    pub fn enumerate_s_arcs(&self, s: usize, bounds: &Bounds) -> Result<Vec<SArc>> {
        let count = self.count_s_arcs(s);
        match count.to_u64() {
            Some(c) if c <= bounds.s_arcs => {}
            _ => return Err(Error::bound("s-arc enumeration", bounds.s_arcs, count)),
        }
        let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
        let mut walk = Vec::with_capacity(s + 1);
        for v in 0..self.vertex_count() {
            walk.push(v);
            self.extend_walks(&mut walk, s, &mut out);
            walk.pop();
        }
        Ok(out)
    }

    fn extend_walks(&self, walk: &mut Vec<usize>, s: usize, out: &mut Vec<SArc>) {
        if walk.len() == s + 1 {
            out.push(SArc(walk.clone()));
            return;
        }
        let last = *walk.last().expect("nonempty walk");
        for &w in &self.out[last] {
            walk.push(w as usize);
            self.extend_walks(walk, s, out);
            walk.pop();
        }
    }

    pub fn is_s_arc(&self, walk: &[usize]) -> bool {
        !walk.is_empty()
            && walk.iter().all(|&v| v < self.vertex_count())
            && walk.windows(2).all(|w| self.has_arc(w[0], w[1]))
    }

    fn reach(&self, adj: &[Vec<u32>]) -> usize {
        let mut seen = vec![false; self.vertex_count()];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v as usize);
                }
            }
        }
        count
    }

    pub fn is_strongly_connected(&self) -> bool {
        let n = self.vertex_count();
        self.reach(&self.out) == n && self.reach(&self.in_neighbors()) == n
    }

    /// Connected as an undirected graph.
    pub fn is_weakly_connected(&self) -> bool {
        let mut adj = self.in_neighbors();
        for (u, list) in adj.iter_mut().enumerate() {
            list.extend_from_slice(&self.out[u]);
        }
        self.reach(&adj) == self.vertex_count()
    }

    pub fn is_directed_cycle(&self) -> bool {
        self.valency() == Some(1) && self.is_strongly_connected()
    }

    /// `Γ × Σ`, vertex `(u, v)` encoded as `u·|V(Σ)| + v`.
    pub fn direct_product(&self, other: &Digraph, bounds: &Bounds) -> Result<Digraph> {
        let (a, b) = (self.vertex_count() as u64, other.vertex_count() as u64);
        let n = a.saturating_mul(b);
        if n > bounds.digraph_vertices {
            return Err(Error::bound("product digraph vertices", bounds.digraph_vertices, n));
        }
        let arcs = (self.arcs as u64).saturating_mul(other.arcs as u64);
        if arcs > bounds.digraph_arcs {
            return Err(Error::bound("product digraph arcs", bounds.digraph_arcs, arcs));
        }
        let b = b as usize;
        let mut out = vec![Vec::new(); n as usize];
        for (u1, l1) in self.out.iter().enumerate() {
            for (v1, l2) in other.out.iter().enumerate() {
                let list = &mut out[u1 * b + v1];
                for &u2 in l1 {
                    for &v2 in l2 {
                        list.push(u2 * b as u32 + v2);
                    }
                }
            }
        }
        Ok(Digraph { out, arcs: arcs as usize })
    }

    /// `Σ^m`, tuples encoded row-major with the first coordinate most
    /// significant.
    pub fn power(&self, m: usize, bounds: &Bounds) -> Result<Digraph> {
        if m == 0 {
            return Err(Error::Zero);
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.direct_product(self, bounds)?;
        }
        Ok(acc)
    }

    /// Image of the arc set under a vertex permutation given by images.
    pub fn permuted_arcs(&self, images: &[u32]) -> HashSet<(u32, u32)> {
        self.arcs()
            .map(|(u, v)| (images[u], images[v]))
            .collect()
    }

    /// `"n m"` then one `"u v"` line per arc, 0-based, lexicographic.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.vertex_count(), self.arc_count());
        for (u, v) in self.arcs() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Digraph> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Format("empty edge list".into()))?;
        let nums = |line: &str| -> Result<(usize, usize)> {
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
                _ => Err(Error::Format(format!("expected two integers, got {line:?}"))),
            }
        };
        let (n, m) = nums(header)?;
        let arcs = lines.map(nums).collect::<Result<Vec<_>>>()?;
        if arcs.len() != m {
            return Err(Error::Format(format!("header announces {m} arcs, found {}", arcs.len())));
        }
        Digraph::new(n, &arcs)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{}\" {{\n", name.replace('"', "'"));
        for v in 0..self.vertex_count() {
            let _ = writeln!(s, "  {v};");
        }
        for (u, v) in self.arcs() {
            let _ = writeln!(s, "  {u} -> {v};");
        }
        s.push_str("}\n");
        s
    }

    /// Directed cycle `0 → 1 → ⋯ → n−1 → 0`, for `n ≥ 3`.
    pub fn directed_cycle(n: usize) -> Result<Digraph> {
        if n < 3 {
            return Err(Error::Precondition("a directed cycle needs at least 3 vertices".into()));
        }
        let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::new(n, &arcs)
    }
}

/// Coordinates of a vertex of `Σ^m`.
pub fn power_coords(vertex: usize, base: usize, m: usize) -> Vec<usize> {
    tuple_coords(vertex, base, m)
}

/// Vertex of `Σ^m` with the given coordinates.
pub fn power_vertex(coords: &[usize], base: usize) -> usize {
    tuple_index(coords, base)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).is_ok());
        assert_eq!(Digraph::new(2, &[(0, 1), (1, 0)]), Err(Error::SymmetricPair(0, 1)));
        assert_eq!(Digraph::new(1, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Digraph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        let d = Digraph::new(3, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(d.arc_count(), 1);
    }

    #[test]
    fn valencies() {
        assert_eq!(Digraph::directed_cycle(5).unwrap().valency_profile(), Valency::Regular(1));
        let d = Digraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            d.valency_profile(),
            Valency::Irregular {
                vertex: 0,
                out_degree: 1,
                in_degree: 0
            }
        );
    }

    #[test]
    fn s_arcs() {
        let b = Bounds::default();
        let c7 = Digraph::directed_cycle(7).unwrap();
        for s in 0..6 {
            assert_eq!(c7.count_s_arcs(s), BigUint::from(7u32));
            assert_eq!(c7.enumerate_s_arcs(s, &b).unwrap().len(), 7);
        }
        let path = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.enumerate_s_arcs(2, &b).unwrap(), vec![SArc(vec![0, 1, 2])]);
        assert_eq!(path.enumerate_s_arcs(0, &b).unwrap().len(), 3);
        let tight = Bounds { s_arcs: 3, ..b };
        assert!(c7.enumerate_s_arcs(1, &tight).is_err());
    }

    #[test]
    fn connectivity_and_products() {
        let b = Bounds::default();
        let two = Digraph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two.is_strongly_connected());
        let c3 = Digraph::directed_cycle(3).unwrap();
        let c5 = Digraph::directed_cycle(5).unwrap();
        let p = c3.direct_product(&c5, &b).unwrap();
        assert_eq!(p.vertex_count(), 15);
        assert!(p.is_directed_cycle());
        assert_eq!(c5.power(1, &b).unwrap(), c5);
        assert!(c3.has_arc(0, 1));
        assert!(p.has_arc(0, 5 + 1));
    }

    #[test]
    fn text_formats() {
        let d = Digraph::new(3, &[(2, 0), (0, 1)]).unwrap();
        let text = d.to_edge_list();
        assert_eq!(text, "3 2\n0 1\n2 0\n");
        assert_eq!(Digraph::parse_edge_list(&text).unwrap(), d);
        assert!(Digraph::parse_edge_list("2 1\n0 x\n").is_err());
        assert!(d.to_dot("g").contains("2 -> 0;"));
    }
}
