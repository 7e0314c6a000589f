//! Groups acting on digraphs: s-arc-transitivity, stabilizer data for
//! 2-arcs, the coset 2-arc criterion, regular subgroups and the checks
//! built on them.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{factorize_big, half_exponent_divisor, is_prime, p_part, FactoredInteger};
use crate::config::Bounds;
use crate::constructions::CosetDigraphSpec;
use crate::digraph::{Digraph, SArc};
use crate::error::{Error, Result};
use crate::group::{ElementTable, Permutation, PermutationGroup, SubgroupHandle};

/// Outcome of a checked claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Vacuous,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
            Status::Vacuous => "vacuous",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Answer to "is `G` transitive on s-arcs"; digraphs without s-arcs get
/// their own value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Transitivity {
    Yes,
    No,
    Vacuous,
}

impl Transitivity {
    pub fn holds(self) -> bool {
        self == Transitivity::Yes
    }
}

/// A digraph together with a group of automorphisms of it.
#[derive(Clone, Debug)]
pub struct DigraphAction {
    digraph: Digraph,
    group: PermutationGroup,
}

impl DigraphAction {
    /// Checks that every generator of `group` maps arcs to arcs.
    pub fn bind(digraph: Digraph, group: PermutationGroup) -> Result<Self> {
        if group.degree() != digraph.vertex_count() {
            return Err(Error::DegreeMismatch {
                expected: digraph.vertex_count(),
                found: group.degree(),
            });
        }
        for (i, g) in group.generators().iter().enumerate() {
            if let Some((u, v)) = digraph.arcs().find(|&(u, v)| !digraph.has_arc(g.image(u), g.image(v))) {
                return Err(Error::NotAutomorphism {
                    generator: i,
                    from: u,
                    to: v,
                });
            }
        }
        Ok(DigraphAction { digraph, group })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.group.is_transitive()
    }

    /// Whether the s-arcs form a single orbit.
    ///
    /// Up to `bounds.s_arcs` s-arcs the orbit of the first one is traced
    /// explicitly; beyond that the orbit length `|G : G_(v_0,…,v_s)|` is
    /// compared with the exact count.
    pub fn is_s_arc_transitive(&self, s: usize, bounds: &Bounds) -> Result<Transitivity> {
        let count = self.digraph.count_s_arcs(s);
        if count.is_zero() {
            return Ok(Transitivity::Vacuous);
        }
        if !self.is_vertex_transitive() {
            return Ok(Transitivity::No);
        }
        let explicit = count.to_u64().is_some_and(|c| c <= bounds.s_arcs);
        let yes = if explicit {
            self.s_arc_orbit_length(s, bounds)? as u64 == count.to_u64().expect("small")
        } else {
            let first = self.first_s_arc(s).expect("count is positive");
            let stab = self.group.pointwise_stabilizer(first.vertices())?;
            self.group.order() / stab.order() == count
        };
        Ok(if yes { Transitivity::Yes } else { Transitivity::No })
    }

    /// Lexicographically first s-arc.
    fn first_s_arc(&self, s: usize) -> Option<SArc> {
        // an s-arc exists from v iff a walk of length s leaves v
        let n = self.digraph.vertex_count();
        let mut alive = vec![true; n];
        let mut live_at: Vec<Vec<bool>> = vec![alive.clone()];
        for _ in 0..s {
            alive = (0..n)
                .map(|v| self.digraph.out_neighbors(v).iter().any(|&w| alive[w as usize]))
                .collect();
            live_at.push(alive.clone());
        }
        let mut v = (0..n).find(|&v| live_at[s][v])?;
        let mut walk = vec![v];
        for rem in (0..s).rev() {
            v = *self
                .digraph
                .out_neighbors(v)
                .iter()
                .find(|&&w| live_at[rem][w as usize])? as usize;
            walk.push(v);
        }
        Some(SArc(walk))
    }

    /// Size of the orbit of the first s-arc, by breadth-first search over
    /// the enumerated s-arcs.
    pub fn s_arc_orbit_length(&self, s: usize, bounds: &Bounds) -> Result<usize> {
        let arcs = self.digraph.enumerate_s_arcs(s, bounds)?;
        if arcs.is_empty() {
            return Ok(0);
        }
        let mut seen = vec![false; arcs.len()];
        seen[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let a = &arcs[queue[head]];
            for g in self.group.generators() {
                let img = SArc(a.vertices().iter().map(|&v| g.image(v)).collect());
                let j = arcs.binary_search(&img).expect("automorphisms map s-arcs to s-arcs");
                if !seen[j] {
                    seen[j] = true;
                    queue.push(j);
                }
            }
            head += 1;
        }
        Ok(queue.len())
    }

    /// `G_v`, `G_{uv}` and `G_{vw}` for a 2-arc `u → v → w`.
    pub fn two_arc_stabilizer_data(&self, two_arc: &SArc) -> Result<TwoArcStabilizerData> {
        let w = two_arc.vertices();
        if w.len() != 3 || !self.digraph.is_s_arc(w) {
            return Err(Error::Precondition(format!("{w:?} is not a 2-arc")));
        }
        let (u, v, x) = (w[0], w[1], w[2]);
        let handle = |pts: &[usize]| -> Result<SubgroupHandle> {
            let st = self.group.pointwise_stabilizer(pts)?;
            Ok(SubgroupHandle::trusted(self.group.clone(), st))
        };
        let gv = handle(&[v])?;
        let guv = handle(&[u, v])?;
        let gvw = handle(&[v, x])?;
        Ok(TwoArcStabilizerData {
            two_arc: two_arc.clone(),
            gv_order: factorize_big(gv.order())?,
            guv_order: factorize_big(guv.order())?,
            gvw_order: factorize_big(gvw.order())?,
            gv,
            guv,
            gvw,
        })
    }

    /// Regular subgroup of the acting group, if one exists.
    pub fn is_cayley(&self, bounds: &Bounds) -> Result<Option<SubgroupHandle>> {
        self.group.find_regular_subgroup(bounds)
    }
}

/// Stabilizers along a 2-arc `u → v → w`.
#[derive(Clone, Debug)]
pub struct TwoArcStabilizerData {
    pub two_arc: SArc,
    pub gv: SubgroupHandle,
    pub guv: SubgroupHandle,
    pub gvw: SubgroupHandle,
    pub gv_order: FactoredInteger,
    pub guv_order: FactoredInteger,
    pub gvw_order: FactoredInteger,
}

/// One clause of a checked statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub status: Status,
    pub witness: String,
}

impl Clause {
    fn new(status: Status, witness: impl Into<String>) -> Self {
        Clause {
            status,
            witness: witness.into(),
        }
    }
}

/// Clauses (a), (b), (c) of the 2-arc stabilizer lemma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFactnReport {
    pub a: Clause,
    pub b: Clause,
    pub c: Clause,
}

impl PrimeFactnReport {
    pub fn clauses(&self) -> [(&'static str, &Clause); 3] {
        [("a", &self.a), ("b", &self.b), ("c", &self.c)]
    }
}

/// Checks, for a connected `(G, 2)`-arc-transitive digraph:
/// (a) `G_v = G_{uv} G_{vw}`;
/// (b) `|G_{uv}| = |G_{vw}|` is divisible by `∏ p_i^{⌈f_i/2⌉}` where
/// `|G_v| = ∏ p_i^{f_i}`;
/// (c) `G_{uv}` and `G_{vw}` are conjugate in `G` but not in `G_v`.
///
/// Clause (c) is not applicable when `G_{uv} = G_{vw}`.
pub fn verify_lemma_prime_factn(
    action: &DigraphAction,
    data: &TwoArcStabilizerData,
    bounds: &Bounds,
) -> Result<PrimeFactnReport> {
    let na = |why: &str| Clause::new(Status::NotApplicable, why);
    if !action.digraph().is_strongly_connected() {
        let c = na("digraph is not connected");
        return Ok(PrimeFactnReport { a: c.clone(), b: c.clone(), c });
    }
    if action.is_s_arc_transitive(2, bounds)? != Transitivity::Yes {
        let c = na("action is not 2-arc-transitive");
        return Ok(PrimeFactnReport { a: c.clone(), b: c.clone(), c });
    }
    let (gv, guv, gvw) = (data.gv.group(), data.guv.group(), data.gvw.group());
    let fact = gv.check_factorization(guv, gvw, bounds)?;
    let a = Clause::new(
        Status::from_bool(fact),
        format!("|Gv|={} |Guv|={} |Gvw|={}", gv.order(), guv.order(), gvw.order()),
    );
    let divisor = half_exponent_divisor(&data.gv_order);
    let equal = guv.order() == gvw.order();
    let divides = guv.order().is_multiple_of(&divisor);
    let b = Clause::new(
        Status::from_bool(equal && divides),
        format!("|Gv|={} divisor={} |Guv|={}", data.gv_order, divisor, guv.order()),
    );
    let c = if guv.same_group(gvw) {
        na("Guv = Gvw")
    } else {
        let in_g = action.group().conjugating_element(guv, gvw, bounds)?;
        let in_gv = gv.conjugating_element(guv, gvw, bounds)?;
        let ok = in_g.is_some() && in_gv.is_none();
        let witness = match &in_g {
            Some(x) => format!("conjugate in G by {x}; conjugate in Gv: {}", in_gv.is_some()),
            None => "not conjugate in G".to_string(),
        };
        Clause::new(Status::from_bool(ok), witness)
    };
    Ok(PrimeFactnReport { a, b, c })
}

/// The stabilizers along the canonical 2-arc `(Hg⁻¹, H, Hg)`:
/// `(H, H ∩ H^{g⁻¹}, H ∩ H^g)`.
pub fn canonical_two_arc_stabilizers(
    spec: &CosetDigraphSpec,
    bounds: &Bounds,
) -> Result<(SubgroupHandle, SubgroupHandle, SubgroupHandle)> {
    let h = spec.subgroup();
    let g = spec.g();
    let a = h.intersection(&h.conjugate(&g.inverse())?, bounds)?;
    let b = h.intersection(&h.conjugate(g)?, bounds)?;
    Ok((h.clone(), a, b))
}

/// `H = (H ∩ H^{g⁻¹})(H ∩ H^g)`, evaluated inside `G` without building the
/// digraph.
pub fn coset_two_arc_criterion(spec: &CosetDigraphSpec, bounds: &Bounds) -> Result<bool> {
    let (h, a, b) = canonical_two_arc_stabilizers(spec, bounds)?;
    h.group().check_factorization(a.group(), b.group(), bounds)
}

impl PermutationGroup {
    /// A subgroup of order `degree` acting regularly, or `None` after an
    /// exhaustive search.
    ///
    /// Candidates are the fixed-point-free elements whose order divides the
    /// degree, ordered by element order (descending) and then transversal
    /// rank. Up to conjugacy a regular subgroup `R` contains a class
    /// representative `x` of maximal order in `R`, and no element of a class
    /// whose representative was searched before. Starting from `⟨x⟩`, each
    /// further generator is the first candidate of `R` not yet generated, so
    /// every candidate skipped on the way must stay outside `R`.
    pub fn find_regular_subgroup(&self, bounds: &Bounds) -> Result<Option<SubgroupHandle>> {
        let n = self.degree();
        if !self.is_transitive() || !self.order().is_multiple_of(&BigUint::from(n)) {
            return Ok(None);
        }
        if n == 1 {
            return Ok(Some(SubgroupHandle::trusted(self.clone(), self.clone())));
        }
        let mut cands: Vec<(u64, Permutation)> = self
            .element_list(bounds.enumeration)?
            .into_iter()
            .filter(|x| !x.is_identity() && x.is_fixed_point_free())
            .filter_map(|x| {
                let o = x.order().to_u64()?;
                (n as u64).is_multiple_of(o).then_some((o, x))
            })
            .collect();
        // stable sort keeps rank order within each element order
        cands.sort_by_key(|c| std::cmp::Reverse(c.0));
        let (orders, cands): (Vec<u64>, Vec<Permutation>) = cands.into_iter().unzip();
        let index: HashMap<Permutation, usize> =
            cands.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        let (reps, class) = conjugacy_classes(&cands, &index, self.generators());
        let mut search = RegularSearch {
            n,
            cands: &cands,
            class: &class,
            floor: 0,
            orders: &orders,
            index: &index,
            nodes: 0,
            limit: bounds.regular_nodes,
            excluded: vec![false; cands.len()],
            trail: Vec::new(),
        };
        for rep in reps {
            search.tick()?;
            search.floor = rep;
            let start = PermutationGroup::new(vec![cands[rep].clone()])?;
            let found = if orders[rep] == n as u64 {
                Some(start)
            } else {
                search.descend(&start, &[cands[rep].clone()], 0, orders[rep])?
            };
            if let Some(r) = found {
                return Ok(Some(SubgroupHandle::trusted(self.clone(), r)));
            }
        }
        Ok(None)
    }
}

/// Conjugacy classes of `cands`, which is closed under conjugation by
/// `gens`: the first index of each class, and the first index of the class
/// of each candidate.
fn conjugacy_classes(
    cands: &[Permutation],
    index: &HashMap<Permutation, usize>,
    gens: &[Permutation],
) -> (Vec<usize>, Vec<usize>) {
    let mut class = vec![usize::MAX; cands.len()];
    let mut reps = Vec::new();
    for i in 0..cands.len() {
        if class[i] != usize::MAX {
            continue;
        }
        class[i] = i;
        reps.push(i);
        let mut queue = vec![i];
        while let Some(j) = queue.pop() {
            for s in gens {
                let k = index[&cands[j].conjugate_by(s)];
                if class[k] == usize::MAX {
                    class[k] = i;
                    queue.push(k);
                }
            }
        }
    }
    (reps, class)
}

struct RegularSearch<'a> {
    n: usize,
    cands: &'a [Permutation],
    class: &'a [usize],
    /// Classes before this representative hold no element of a regular
    /// subgroup.
    floor: usize,
    orders: &'a [u64],
    index: &'a HashMap<Permutation, usize>,
    nodes: u64,
    limit: u64,
    excluded: Vec<bool>,
    trail: Vec<usize>,
}

impl RegularSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::NodeLimit { limit: self.limit });
        }
        Ok(())
    }

    fn undo(&mut self, mark: usize) {
        for i in self.trail.drain(mark..) {
            self.excluded[i] = false;
        }
    }

    /// Whether candidate `j` may still lie in the subgroup being built.
    fn allowed(&self, j: usize, max_order: u64) -> bool {
        !self.excluded[j] && self.orders[j] <= max_order && self.class[j] >= self.floor
    }

    /// Semiregular, of order dividing `n`, with every nonidentity element
    /// an allowed candidate.
    fn admissible(&self, k: &PermutationGroup, max_order: u64) -> bool {
        if !k.order().to_usize().is_some_and(|o| self.n.is_multiple_of(o)) || !k.is_semiregular() {
            return false;
        }
        k.elements().all(|y| match self.index.get(&y) {
            Some(&j) => self.allowed(j, max_order),
            None => y.is_identity(),
        })
    }

    fn descend(
        &mut self,
        k: &PermutationGroup,
        gens: &[Permutation],
        start: usize,
        max_order: u64,
    ) -> Result<Option<PermutationGroup>> {
        let mark = self.trail.len();
        let members: Vec<Permutation> = k.elements().collect();
        for i in start..self.cands.len() {
            let x = &self.cands[i];
            if !self.allowed(i, max_order) || k.has(x) {
                continue;
            }
            // every kx lies in the new subgroup
            let viable = members.iter().all(|m| {
                self.index
                    .get(&m.then(x))
                    .is_some_and(|&j| self.allowed(j, max_order))
            });
            if viable {
                self.tick()?;
                let mut next_gens = gens.to_vec();
                next_gens.push(x.clone());
                let next = PermutationGroup::new(next_gens.clone())?;
                if self.admissible(&next, max_order) {
                    if next.order().to_usize() == Some(self.n) {
                        self.undo(mark);
                        return Ok(Some(next));
                    }
                    if let Some(r) = self.descend(&next, &next_gens, i + 1, max_order)? {
                        self.undo(mark);
                        return Ok(Some(r));
                    }
                }
            }
            // any later choice leaves x out of the subgroup
            self.excluded[i] = true;
            self.trail.push(i);
        }
        self.undo(mark);
        Ok(None)
    }
}

/// Outcome of the valency lemma for vertex-primitive arc-transitive
/// digraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemValOutcome {
    /// A directed cycle of the given prime length.
    PrimeCycle(usize),
    /// Valency at least 3.
    ValencyAtLeast3(usize),
    /// Neither, with the valency found.
    Counterexample(Option<usize>),
    NotApplicable(String),
}

impl LemValOutcome {
    pub fn status(&self) -> Status {
        match self {
            LemValOutcome::PrimeCycle(_) | LemValOutcome::ValencyAtLeast3(_) => Status::Pass,
            LemValOutcome::Counterexample(_) => Status::Fail,
            LemValOutcome::NotApplicable(_) => Status::NotApplicable,
        }
    }
}

/// Every vertex-primitive 1-arc-transitive digraph is a directed cycle of
/// prime length or has valency at least 3.
pub fn lemma_val_check(action: &DigraphAction, bounds: &Bounds) -> Result<LemValOutcome> {
    let g = action.group();
    if !g.is_transitive() || !g.is_primitive()? {
        return Ok(LemValOutcome::NotApplicable("action is not vertex-primitive".into()));
    }
    if action.is_s_arc_transitive(1, bounds)? != Transitivity::Yes {
        return Ok(LemValOutcome::NotApplicable("action is not arc-transitive".into()));
    }
    let d = action.digraph();
    let n = d.vertex_count();
    Ok(match d.valency() {
        Some(1) if d.is_directed_cycle() && is_prime(n as u64) => LemValOutcome::PrimeCycle(n),
        Some(k) if k >= 3 => LemValOutcome::ValencyAtLeast3(k),
        other => LemValOutcome::Counterexample(other),
    })
}

/// Digraphs of the non-self-paired orbitals of `G` on ordered pairs of
/// distinct points, ordered by the least pair `(0, v)` they contain.
pub fn orbital_digraphs(g: &PermutationGroup, bounds: &Bounds) -> Result<Vec<DigraphAction>> {
    let n = g.degree();
    let pairs = (n as u64).saturating_mul(n as u64);
    if pairs > bounds.digraph_arcs {
        return Err(Error::bound("orbital pairs", bounds.digraph_arcs, pairs));
    }
    let mut orbit_of = vec![usize::MAX; n * n];
    let mut orbitals: Vec<Vec<(usize, usize)>> = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || orbit_of[u * n + v] != usize::MAX {
                continue;
            }
            let id = orbitals.len();
            orbit_of[u * n + v] = id;
            let mut orbit = vec![(u, v)];
            let mut head = 0;
            while head < orbit.len() {
                let (a, b) = orbit[head];
                for s in g.generators() {
                    let (x, y) = (s.image(a), s.image(b));
                    if orbit_of[x * n + y] == usize::MAX {
                        orbit_of[x * n + y] = id;
                        orbit.push((x, y));
                    }
                }
                head += 1;
            }
            orbitals.push(orbit);
        }
    }
    let mut out = Vec::new();
    for orbit in &orbitals {
        let (u, v) = orbit[0];
        if orbit_of[v * n + u] == orbit_of[u * n + v] {
            continue;
        }
        let d = Digraph::new(n, orbit)?;
        out.push(DigraphAction::bind(d, g.clone())?);
    }
    Ok(out)
}

/// Data for one subgroup `Y` in the hypothesis of the regular-subgroup
/// lemma.
#[derive(Clone, Debug)]
pub struct RglrEntry {
    pub subgroup: SubgroupHandle,
    pub core_free: bool,
    pub radical_order: BigUint,
    /// `|(Y/Rad(Y))^{(∞)}| = |Y^{(∞)}| / |Y^{(∞)} ∩ Rad(Y)|`
    pub quotient_core_order: BigUint,
    pub quotient_core_simple: bool,
    /// `(Y/Rad(Y))^{(∞)}` is nonabelian simple of order greater than `|V|`.
    pub condition_a: bool,
    /// Some prime `p` of `|G|` with `|Q|_p = |G|_p = |V|_p`.
    pub condition_b: Option<u64>,
}

impl RglrEntry {
    pub fn satisfied(&self) -> bool {
        self.condition_a && self.condition_b.is_some()
    }
}

/// Evaluation of the regular-subgroup lemma's hypothesis for `G`.
#[derive(Clone, Debug)]
pub struct RglrHypothesisReport {
    /// Transitive core-free subgroups up to conjugacy, then `G` itself.
    pub entries: Vec<RglrEntry>,
    /// Every transitive core-free `Y` satisfies (a) and (b); true when there
    /// is none.
    pub holds_core_free: bool,
    /// The same over the core-free subgroups together with `G`.
    pub holds: bool,
    /// The same over every transitive subgroup up to conjugacy.
    pub holds_all_transitive: bool,
}

/// `(|Q|, Q nonabelian simple)` for `Q = (Y/Rad(Y))^{(∞)}`.
pub fn quotient_perfect_core(y: &PermutationGroup, bounds: &Bounds) -> Result<(BigUint, bool, BigUint)> {
    let table = ElementTable::new(y, bounds)?;
    let normals = crate::group::normal_subgroups_in(&table);
    let rad = crate::group::radical_in(&table, &normals);
    let p = table.perfect_core(&table.whole());
    let mut k = p.elements.clone();
    k.intersect_with(&rad.elements);
    let q_order = p.order() / k.len();
    let simple = q_order > 1 && {
        // only K = P ∩ Rad(Y) and P itself may be normal in P above K
        let p_table = ElementTable::new(&table.to_group(&p), bounds)?;
        let k_gens: Vec<u32> = k
            .iter()
            .map(|i| p_table.index_of(table.element(i)).expect("K lies in P"))
            .collect();
        let kernel = p_table.closure(&k_gens);
        crate::group::normal_subgroups_in(&p_table)
            .iter()
            .filter(|n| kernel.elements.is_subset(&n.elements))
            .count()
            == 2
    };
    Ok((BigUint::from(q_order), simple, BigUint::from(rad.order())))
}

fn rglr_entry(
    g: &PermutationGroup,
    y: SubgroupHandle,
    core_free: bool,
    bounds: &Bounds,
) -> Result<RglrEntry> {
    let (q, simple, rad) = quotient_perfect_core(y.group(), bounds)?;
    let v = g.degree() as u64;
    let condition_a = simple && q > BigUint::from(v);
    let q64 = q.to_u64().expect("small");
    let g64 = g.order().to_u64().expect("small");
    let mut condition_b = None;
    for p in crate::arith::prime_divisors(g64)? {
        let gp = p_part(g64, p)?;
        if p_part(q64, p)? == gp && p_part(v, p)? == gp {
            condition_b = Some(p);
            break;
        }
    }
    Ok(RglrEntry {
        subgroup: y,
        core_free,
        radical_order: rad,
        quotient_core_order: q,
        quotient_core_simple: simple,
        condition_a,
        condition_b,
    })
}

/// Evaluates conditions (a) and (b) on each transitive core-free subgroup
/// of `G` and on `G` itself.
pub fn lemma_rglr_hypothesis_check(g: &PermutationGroup, bounds: &Bounds) -> Result<RglrHypothesisReport> {
    let classes = g.subgroup_classes(bounds)?;
    let mut entries = Vec::new();
    let mut holds_all_transitive = true;
    for class in classes {
        let y = class.representative;
        if !y.group().is_transitive() {
            continue;
        }
        let is_whole = y.order() == g.order();
        if class.core_free || is_whole {
            let e = rglr_entry(g, y, class.core_free, bounds)?;
            holds_all_transitive &= e.satisfied();
            entries.push(e);
        } else {
            holds_all_transitive &= rglr_entry(g, y, false, bounds)?.satisfied();
        }
    }
    let holds_core_free = entries.iter().filter(|e| e.core_free).all(RglrEntry::satisfied);
    let holds = entries.iter().all(RglrEntry::satisfied);
    Ok(RglrHypothesisReport {
        entries,
        holds_core_free,
        holds,
        holds_all_transitive,
    })
}

/// Regular-subgroup search in `G ≀ Sym(m)` in product action.
#[derive(Clone, Debug)]
pub struct RglrBruteForce {
    pub hypothesis: RglrHypothesisReport,
    pub regular: Option<SubgroupHandle>,
}

impl RglrBruteForce {
    /// A regular subgroup found while the hypothesis holds contradicts the
    /// lemma.
    pub fn consistent(&self) -> bool {
        !(self.hypothesis.holds && self.regular.is_some())
    }
}

pub fn lemma_rglr_brute_force(g: &PermutationGroup, m: usize, bounds: &Bounds) -> Result<RglrBruteForce> {
    if m < 2 {
        return Err(Error::Precondition("the wreath product needs m >= 2".into()));
    }
    let hypothesis = lemma_rglr_hypothesis_check(g, bounds)?;
    let w = g.wreath_product_action(m, bounds)?;
    let regular = w.find_regular_subgroup(bounds)?;
    Ok(RglrBruteForce { hypothesis, regular })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cayley_digraph;

    fn g(deg: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::from_cycles(deg, gens).unwrap()
    }

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn c5() -> DigraphAction {
        DigraphAction::bind(Digraph::directed_cycle(5).unwrap(), g(5, &["(1 2 3 4 5)"])).unwrap()
    }

    fn f21_spec() -> CosetDigraphSpec {
        let f21 = g(7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]);
        let z3 = SubgroupHandle::new(&f21, vec![perm("(2 3 5)(4 7 6)", 7)]).unwrap();
        f21.elements()
            .find_map(|x| CosetDigraphSpec::new(&f21, &z3, &x).ok())
            .unwrap()
    }

    #[test]
    fn binding() {
        let d = Digraph::directed_cycle(5).unwrap();
        assert!(DigraphAction::bind(d.clone(), g(5, &["(2 5)(3 4)"])).is_err());
        assert!(DigraphAction::bind(d, PermutationGroup::trivial(5)).is_ok());
    }

    #[test]
    fn cycles_are_s_arc_transitive() {
        let a = c5();
        for s in 0..=6 {
            assert_eq!(a.is_s_arc_transitive(s, &Bounds::default()).unwrap(), Transitivity::Yes);
        }
        let tight = Bounds {
            s_arcs: 1,
            ..Bounds::default()
        };
        assert_eq!(a.is_s_arc_transitive(3, &tight).unwrap(), Transitivity::Yes);
    }

    #[test]
    fn vacuous_when_no_s_arcs() {
        let d = Digraph::new(3, &[(0, 1)]).unwrap();
        let a = DigraphAction::bind(d, PermutationGroup::trivial(3)).unwrap();
        assert_eq!(a.is_s_arc_transitive(2, &Bounds::default()).unwrap(), Transitivity::Vacuous);
    }

    #[test]
    fn f21_coset_digraph() {
        let b = Bounds::default();
        let spec = f21_spec();
        let built = spec.build(&b).unwrap();
        let a = &built.action;
        assert_eq!(a.is_s_arc_transitive(1, &b).unwrap(), Transitivity::Yes);
        assert_eq!(a.is_s_arc_transitive(2, &b).unwrap(), Transitivity::No);
        assert!(!coset_two_arc_criterion(&spec, &b).unwrap());
        let [u, v, w] = built.canonical_two_arc(&spec);
        let data = a.two_arc_stabilizer_data(&SArc(vec![u, v, w])).unwrap();
        assert_eq!(data.gv.order(), &BigUint::from(3u32));
        assert!(data.guv.group().is_trivial() && data.gvw.group().is_trivial());
        assert_eq!(
            lemma_val_check(a, &b).unwrap(),
            LemValOutcome::ValencyAtLeast3(3)
        );
    }

    #[test]
    fn cycle_lemma_reports() {
        let b = Bounds::default();
        let a = c5();
        let data = a.two_arc_stabilizer_data(&SArc(vec![0, 1, 2])).unwrap();
        let r = verify_lemma_prime_factn(&a, &data, &b).unwrap();
        assert_eq!(r.a.status, Status::Pass);
        assert_eq!(r.b.status, Status::Pass);
        assert_eq!(r.c.status, Status::NotApplicable);
        assert_eq!(lemma_val_check(&a, &b).unwrap(), LemValOutcome::PrimeCycle(5));
        assert!(a.two_arc_stabilizer_data(&SArc(vec![0, 2, 3])).is_err());
    }

    #[test]
    fn regular_subgroups() {
        let b = Bounds::default();
        let a4 = g(4, &["(1 2 3)", "(2 3 4)"]);
        let r = a4.find_regular_subgroup(&b).unwrap().unwrap();
        assert_eq!(r.order(), &BigUint::from(4u32));
        assert!(r.group().is_regular());
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        let w = s3.wreath_product_action(2, &b).unwrap();
        let r = w.find_regular_subgroup(&b).unwrap().unwrap();
        assert!(r.group().is_regular() && r.order() == &BigUint::from(9u32));
        // PSL(2,5) on 6 points has no subgroup of order 6
        let psl = g(6, &["(1 2 3 4 5)", "(1 6)(2 5)"]);
        if psl.order() == &BigUint::from(60u32) {
            assert!(psl.find_regular_subgroup(&b).unwrap().is_none());
        }
        let cay = cayley_digraph(&g(5, &["(1 2 3 4 5)"]), &[perm("(1 2 3 4 5)", 5)], &b).unwrap();
        assert!(cay.is_cayley(&b).unwrap().is_some());
    }

    #[test]
    fn regular_search_node_limit() {
        let b = Bounds {
            regular_nodes: 1,
            ..Bounds::default()
        };
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        let w = s3.wreath_product_action(2, &b).unwrap();
        assert!(matches!(w.find_regular_subgroup(&b), Err(Error::NodeLimit { .. })));
    }

    #[test]
    fn orbitals_of_f21() {
        let f21 = g(7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]);
        let ds = orbital_digraphs(&f21, &Bounds::default()).unwrap();
        assert_eq!(ds.len(), 2);
        for d in &ds {
            assert_eq!(d.digraph().valency(), Some(3));
        }
    }

    #[test]
    fn rglr_hypothesis_examples() {
        let b = Bounds::default();
        let s5 = g(5, &["(1 2)", "(1 2 3 4 5)"]);
        let r = lemma_rglr_hypothesis_check(&s5, &b).unwrap();
        assert!(!r.holds);
        let c5 = r
            .entries
            .iter()
            .find(|e| e.subgroup.order() == &BigUint::from(5u32))
            .unwrap();
        assert!(c5.core_free && !c5.condition_a);
        let a5 = g(5, &["(1 2 3)", "(3 4 5)"]);
        let r = lemma_rglr_hypothesis_check(&a5, &b).unwrap();
        let core_free: Vec<u64> = r
            .entries
            .iter()
            .filter(|e| e.core_free)
            .map(|e| e.subgroup.order().to_u64().unwrap())
            .collect();
        assert_eq!(core_free, vec![5, 10]);
        assert!(!r.holds);
        let whole = r.entries.last().unwrap();
        assert!(whole.condition_a);
        assert_eq!(whole.quotient_core_order, BigUint::from(60u32));
    }

    #[test]
    fn rglr_brute_force_small() {
        let b = Bounds::default();
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        let r = lemma_rglr_brute_force(&s3, 2, &b).unwrap();
        assert!(!r.hypothesis.holds);
        assert!(r.regular.is_some() && r.consistent());
    }
}
