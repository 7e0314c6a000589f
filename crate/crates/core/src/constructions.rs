//! Coset digraphs, Cayley digraphs, diagonal coset digraphs, the symbolic
//! certificate for `Γ(T)` and product-action embeddings.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::config::Bounds;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::group::{CosetAction, Permutation, PermutationGroup, SubgroupHandle};
use crate::symmetry::DigraphAction;

/// The data `(G, H, g)` of a coset digraph `Cos(G, H, g)`, with `g ∈ G∖H`
/// and `g⁻¹ ∉ HgH` checked on construction.
#[derive(Clone, Debug)]
pub struct CosetDigraphSpec {
    group: PermutationGroup,
    subgroup: SubgroupHandle,
    g: Permutation,
    /// Canonical elements of the right cosets inside `HgH`, in BFS order
    /// from `Hg`.
    double_coset: Vec<Permutation>,
}

impl CosetDigraphSpec {
    pub fn new(group: &PermutationGroup, subgroup: &SubgroupHandle, g: &Permutation) -> Result<Self> {
        if !group.contains(g)? {
            return Err(Error::NotContained(format!("{g} is not in G")));
        }
        if !subgroup.group().is_subgroup_of(group) {
            return Err(Error::NotContained("H is not a subgroup of G".into()));
        }
        let h = subgroup.group();
        if h.has(g) {
            return Err(Error::InvalidSpec(format!("g = {g} lies in H")));
        }
        let double_coset = double_coset_cosets(h, g);
        let inv_key = h.canonical_coset_element(&g.inverse());
        if double_coset.contains(&inv_key) {
            return Err(Error::InvalidSpec(format!("g^-1 lies in HgH for g = {g}")));
        }
        Ok(CosetDigraphSpec {
            group: group.clone(),
            subgroup: subgroup.clone(),
            g: g.clone(),
            double_coset,
        })
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &SubgroupHandle {
        &self.subgroup
    }

    pub fn g(&self) -> &Permutation {
        &self.g
    }

    /// `|HgH| / |H|`
    pub fn valency(&self) -> usize {
        self.double_coset.len()
    }

    /// `[G : H]`
    pub fn index(&self) -> BigUint {
        self.group.index_of(self.subgroup.group())
    }

    /// Materializes `Cos(G, H, g)` with `H·1` as vertex 0, together with the
    /// coset action of `G`.
    pub fn build(&self, bounds: &Bounds) -> Result<CosetDigraph> {
        let action = self.group.action_on_cosets(&self.subgroup, bounds)?;
        let n = action.index();
        let arcs_total = (n as u64).saturating_mul(self.valency() as u64);
        if arcs_total > bounds.digraph_arcs {
            return Err(Error::bound("coset digraph arcs", bounds.digraph_arcs, arcs_total));
        }
        if n as u64 > bounds.digraph_vertices {
            return Err(Error::bound("coset digraph vertices", bounds.digraph_vertices, n));
        }
        let gens = action.generator_images();
        let mut out: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut seen: HashSet<(u32, u32)> = HashSet::new();
        let mut queue: Vec<(u32, u32)> = Vec::new();
        for rep in &self.double_coset {
            let w = action.label_of(rep).expect("coset of G") as u32;
            if seen.insert((0, w)) {
                queue.push((0, w));
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let (u, v) = queue[head];
            out[u as usize].push(v);
            for s in gens {
                let arc = (s.image(u as usize) as u32, s.image(v as usize) as u32);
                if seen.insert(arc) {
                    queue.push(arc);
                }
            }
            head += 1;
        }
        let digraph = Digraph::from_out_lists(out)?;
        let act = DigraphAction::bind(digraph, action.image().clone())?;
        Ok(CosetDigraph { action: act, cosets: action })
    }

    /// The canonical 2-arc `(Hg⁻¹, H, Hg)` as coset representatives.
    pub fn canonical_two_arc(&self) -> [Permutation; 3] {
        [self.g.inverse(), self.group.identity(), self.g.clone()]
    }
}

/// A materialized coset digraph and the coset action it came from.
#[derive(Clone, Debug)]
pub struct CosetDigraph {
    pub action: DigraphAction,
    pub cosets: CosetAction,
}

impl CosetDigraph {
    pub fn digraph(&self) -> &Digraph {
        self.action.digraph()
    }

    /// Vertex labels of the canonical 2-arc `(Hg⁻¹, H, Hg)`.
    pub fn canonical_two_arc(&self, spec: &CosetDigraphSpec) -> [usize; 3] {
        spec.canonical_two_arc()
            .map(|x| self.cosets.label_of(&x).expect("coset of G"))
    }
}

/// One valid spec per double coset `HgH`, with `g` the first element of the
/// double coset in transversal order. `Cos(G, H, g)` depends only on `HgH`.
pub fn coset_digraph_specs(
    group: &PermutationGroup,
    subgroup: &SubgroupHandle,
    bounds: &Bounds,
) -> Result<Vec<CosetDigraphSpec>> {
    let h = subgroup.group();
    let mut covered: HashSet<Permutation> = HashSet::new();
    let mut out = Vec::new();
    for x in group.element_list(bounds.enumeration)? {
        if covered.contains(&h.canonical_coset_element(&x)) {
            continue;
        }
        covered.extend(double_coset_cosets(h, &x));
        match CosetDigraphSpec::new(group, subgroup, &x) {
            Ok(spec) => out.push(spec),
            Err(Error::InvalidSpec(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Canonical representatives of the right cosets `Hgh`, `h ∈ H`.
fn double_coset_cosets(h: &PermutationGroup, g: &Permutation) -> Vec<Permutation> {
    let start = h.canonical_coset_element(g);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(start.clone());
    let mut out = vec![start];
    let mut head = 0;
    while head < out.len() {
        for s in h.generators() {
            let y = h.canonical_coset_element(&out[head].then(s));
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        head += 1;
    }
    out
}

/// `Cay(R, S)`: vertices are the elements of `R` in transversal order,
/// `x → y` iff `yx⁻¹ ∈ S`, with `R` acting by right multiplication.
pub fn cayley_digraph(r: &PermutationGroup, s: &[Permutation], bounds: &Bounds) -> Result<DigraphAction> {
    let n = r.order_u64("Cayley digraph vertices", bounds.digraph_vertices)? as usize;
    let mut conn: Vec<Permutation> = Vec::new();
    for x in s {
        if !r.contains(x)? {
            return Err(Error::NotContained(format!("{x} is not in R")));
        }
        if x.is_identity() {
            return Err(Error::InvalidSpec("the identity lies in S".into()));
        }
        if !conn.contains(x) {
            conn.push(x.clone());
        }
    }
    for x in &conn {
        if conn.contains(&x.inverse()) {
            return Err(Error::InvalidSpec(format!("{x} and its inverse both lie in S")));
        }
    }
    let arcs_total = (n as u64).saturating_mul(conn.len() as u64);
    if arcs_total > bounds.digraph_arcs {
        return Err(Error::bound("Cayley digraph arcs", bounds.digraph_arcs, arcs_total));
    }
    let elements: Vec<Permutation> = r.elements().collect();
    let rank = |p: &Permutation| r.element_rank(p).expect("member of R") as u32;
    let out: Vec<Vec<u32>> = elements
        .iter()
        .map(|x| conn.iter().map(|c| rank(&c.then(x))).collect())
        .collect();
    let digraph = Digraph::from_out_lists(out)?;
    let gens: Vec<Permutation> = r
        .sorted_generators()
        .iter()
        .map(|g| {
            let img = elements.iter().map(|x| rank(&x.then(g))).collect();
            Permutation::from_images(img).expect("right multiplication is a bijection")
        })
        .collect();
    let action = PermutationGroup::new(if gens.is_empty() {
        vec![Permutation::identity(n)]
    } else {
        gens
    })?;
    DigraphAction::bind(digraph, action)
}

/// `Cos(T^k, D, g)` with `D` the diagonal and `g = (g_1, …, g_k)`.
pub fn diagonal_coset_digraph(
    t: &PermutationGroup,
    parts: &[Permutation],
    bounds: &Bounds,
) -> Result<(CosetDigraphSpec, CosetDigraph)> {
    let k = parts.len();
    if k < 2 {
        return Err(Error::Precondition("diagonal construction needs k >= 2".into()));
    }
    for p in parts {
        if !t.contains(p)? {
            return Err(Error::NotContained(format!("{p} is not in T")));
        }
    }
    let index = t.order().pow(k as u32 - 1);
    if index > BigUint::from(bounds.coset_index) {
        return Err(Error::bound("coset index", bounds.coset_index, index));
    }
    let spec = diagonal_spec(t, parts)?;
    let built = spec.build(bounds)?;
    Ok((spec, built))
}

/// The spec `(T^k, D, g)` without materializing the digraph.
pub fn diagonal_spec(t: &PermutationGroup, parts: &[Permutation]) -> Result<CosetDigraphSpec> {
    let k = parts.len();
    if k < 2 {
        return Err(Error::Precondition("diagonal construction needs k >= 2".into()));
    }
    let big = t.direct_power(k);
    let diag = SubgroupHandle::new(&big, t.diagonal_subgroup(k).generators().to_vec())?;
    let g = t.tuple_element(parts);
    CosetDigraphSpec::new(&big, &diag, &g)
}

/// Symbolic record of `Γ(T) = Cos(T^k, D, g)` with `k = |T|` and
/// `g = (t_1, …, t_k)`, and of the Cayley witness `R = T^{k−1} × 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaCertificate {
    pub t_order: u64,
    pub k: u64,
    /// `|T|^{k−1}`
    pub vertex_count: BigUint,
    pub valency: u64,
    pub intersection_rd_trivial: bool,
    pub product_rd_order: BigUint,
    pub product_rd_is_g: bool,
    pub diag_self_intersection_order: u64,
    /// `g ∉ D`
    pub irreflexive: bool,
    /// `g⁻¹ ∉ DgD`
    pub antisymmetric: bool,
}

/// Certificate for `Γ(T)` with `t_1, …, t_k` in transversal order.
pub fn gamma_certificate(t: &PermutationGroup, bounds: &Bounds) -> Result<GammaCertificate> {
    let order = t.order_u64("Γ(T) element enumeration", bounds.enumeration)?;
    let elements = t.element_list(order)?;
    gamma_certificate_with_order(t, &elements, bounds)
}

/// Certificate for `Γ(T)` with `g = (t_1, …, t_k)` taken from `elements`,
/// which must list every element of `T` once.
pub fn gamma_certificate_with_order(
    t: &PermutationGroup,
    elements: &[Permutation],
    bounds: &Bounds,
) -> Result<GammaCertificate> {
    let n = t.order_u64("Γ(T) element enumeration", bounds.enumeration)?;
    if t.is_abelian() {
        return Err(Error::Precondition("T is abelian".into()));
    }
    if !t.is_nonabelian_simple(bounds)? {
        return Err(Error::Precondition("T is not simple".into()));
    }
    let mut seen = HashSet::new();
    for e in elements {
        if !t.contains(e)? || !seen.insert(e.images().to_vec()) {
            return Err(Error::Precondition("enumeration repeats or leaves T".into()));
        }
    }
    if seen.len() as u64 != n {
        return Err(Error::Precondition("enumeration misses elements of T".into()));
    }
    let k = n;
    let t_order = BigUint::from(n);
    let vertex_count = t_order.pow(n as u32 - 1);
    // (s, …, s) ∈ R = T^{k−1} × 1 forces s = 1
    let rd_meet = elements.iter().filter(|s| s.is_identity()).count() as u64;
    let intersection_rd_trivial = rd_meet == 1;
    let product_rd_order = t_order.pow(n as u32 - 1) * &t_order / BigUint::from(rd_meet);
    let product_rd_is_g = intersection_rd_trivial && product_rd_order == t_order.pow(n as u32);
    // (s, …, s)^g ∈ D iff s^{t_i} is the same for every i
    let diag = elements
        .iter()
        .filter(|s| {
            let first = s.conjugate_by(&elements[0]);
            elements[1..].iter().all(|ti| s.conjugate_by(ti) == first)
        })
        .count() as u64;
    let valency = n / diag;
    let irreflexive = elements.windows(2).any(|w| w[0] != w[1]);
    // g⁻¹ = a g b for a, b ∈ T; the first coordinate determines b from a
    let inv: Vec<Permutation> = elements.iter().map(Permutation::inverse).collect();
    let antisymmetric = !elements.iter().any(|a| {
        let b = elements[0].inverse().then(&a.inverse()).then(&inv[0]);
        elements
            .iter()
            .zip(&inv)
            .all(|(ti, ti_inv)| a.then(ti).then(&b) == *ti_inv)
    });
    Ok(GammaCertificate {
        t_order: n,
        k,
        vertex_count,
        valency,
        intersection_rd_trivial,
        product_rd_order,
        product_rd_is_g,
        diag_self_intersection_order: diag,
        irreflexive,
        antisymmetric,
    })
}

/// `(Σ^m, G ≀ Sym(m))` in product action; `G` must act on `Σ` by
/// automorphisms.
pub fn product_action_digraph(
    sigma: &Digraph,
    g: &PermutationGroup,
    m: usize,
    bounds: &Bounds,
) -> Result<DigraphAction> {
    let base = DigraphAction::bind(sigma.clone(), g.clone())?;
    if m == 1 {
        return Ok(base);
    }
    let power = sigma.power(m, bounds)?;
    let wreath = g.wreath_product_action(m, bounds)?;
    DigraphAction::bind(power, wreath)
}
