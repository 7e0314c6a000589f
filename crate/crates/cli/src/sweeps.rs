//! Exhaustive sweeps over the bundled catalogs.

use std::collections::HashSet;

use dgsym::catalog::{bundled_groups, primitive_groups, NamedGroup};
use dgsym::constructions::coset_digraph_specs;
use dgsym::symmetry::{
    coset_two_arc_criterion, lemma_rglr_brute_force, lemma_val_check, orbital_digraphs,
    verify_lemma_prime_factn, LemValOutcome, PrimeFactnReport,
};
use dgsym::{Bounds, Error, SArc, Transitivity};
use num_bigint::BigUint;

/// Bundled groups with distinct names, catalog order.
pub fn distinct_groups() -> dgsym::Result<Vec<NamedGroup>> {
    let mut seen = HashSet::new();
    Ok(bundled_groups()?
        .into_iter()
        .filter(|g| seen.insert(g.name.clone()))
        .collect())
}

fn order_at_most(g: &NamedGroup, max: u64) -> bool {
    g.group.order() <= &BigUint::from(max)
}

/// One coset digraph `Cos(G, H, g)` from the criterion sweep.
#[derive(Clone, Debug)]
pub struct CriterionInstance {
    pub group: String,
    pub subgroup_order: BigUint,
    pub g: String,
    pub index: usize,
    pub valency: usize,
    pub criterion: bool,
    pub brute: Transitivity,
    pub connected: bool,
    /// Evaluated at the canonical 2-arc when `brute` is `Yes`.
    pub lemma: Option<PrimeFactnReport>,
}

impl CriterionInstance {
    pub fn agrees(&self) -> bool {
        self.criterion == (self.brute == Transitivity::Yes)
    }
}

#[derive(Clone, Debug, Default)]
pub struct CriterionSweep {
    pub groups: Vec<String>,
    pub instances: Vec<CriterionInstance>,
}

/// Every valid coset digraph over bundled groups of order at most
/// `max_order`, with `H` running over conjugacy class representatives of
/// index at most `max_index` and `g` over the double cosets `HgH`.
pub fn criterion_sweep(max_order: u64, max_index: u64, bounds: &Bounds) -> dgsym::Result<CriterionSweep> {
    let mut out = CriterionSweep::default();
    for named in distinct_groups()? {
        if !order_at_most(&named, max_order) {
            continue;
        }
        out.groups.push(named.name.clone());
        let g = &named.group;
        for h in g.subgroups_up_to_conjugacy(bounds)? {
            if g.index_of(h.group()) > BigUint::from(max_index) {
                continue;
            }
            for spec in coset_digraph_specs(g, &h, bounds)? {
                let built = spec.build(bounds)?;
                let action = &built.action;
                let brute = action.is_s_arc_transitive(2, bounds)?;
                let criterion = coset_two_arc_criterion(&spec, bounds)?;
                let lemma = if brute == Transitivity::Yes {
                    let arc = SArc(built.canonical_two_arc(&spec).to_vec());
                    let data = action.two_arc_stabilizer_data(&arc)?;
                    Some(verify_lemma_prime_factn(action, &data, bounds)?)
                } else {
                    None
                };
                out.instances.push(CriterionInstance {
                    group: named.name.clone(),
                    subgroup_order: h.order().clone(),
                    g: spec.g().to_string(),
                    index: built.digraph().vertex_count(),
                    valency: spec.valency(),
                    criterion,
                    brute,
                    connected: built.digraph().is_strongly_connected(),
                    lemma,
                });
            }
        }
    }
    Ok(out)
}

/// One orbital digraph of a primitive group.
#[derive(Clone, Debug)]
pub struct LemValRecord {
    pub group: String,
    pub degree: usize,
    pub valency: Option<usize>,
    pub outcome: LemValOutcome,
}

/// The valency lemma over every non-self-paired orbital digraph of every
/// bundled primitive group of degree at most `max_degree`.
pub fn lemval_census(max_degree: usize, bounds: &Bounds) -> dgsym::Result<(usize, Vec<LemValRecord>)> {
    let mut groups = 0;
    let mut out = Vec::new();
    for named in primitive_groups()? {
        if named.group.degree() > max_degree {
            continue;
        }
        groups += 1;
        for action in orbital_digraphs(&named.group, bounds)? {
            out.push(LemValRecord {
                group: named.name.clone(),
                degree: named.group.degree(),
                valency: action.digraph().valency(),
                outcome: lemma_val_check(&action, bounds)?,
            });
        }
    }
    Ok((groups, out))
}

/// Hypothesis check and regular-subgroup search in `G ≀ Sym(m)` for one
/// group.
#[derive(Clone, Debug)]
pub struct RglrRecord {
    pub group: String,
    pub degree: usize,
    pub hypothesis: bool,
    pub hypothesis_core_free: bool,
    pub hypothesis_all_transitive: bool,
    /// Order of the regular subgroup found, if any.
    pub regular: Option<BigUint>,
    pub consistent: bool,
}

#[derive(Clone, Debug, Default)]
pub struct RglrSweep {
    pub records: Vec<RglrRecord>,
    /// Groups left out because a bound was hit, with the reason.
    pub skipped: Vec<(String, String)>,
}

/// Transitive bundled groups with `degree^m ≤ max_points`.
pub fn rglr_sweep(m: usize, max_points: u64, bounds: &Bounds) -> dgsym::Result<RglrSweep> {
    let mut out = RglrSweep::default();
    for named in distinct_groups()? {
        let g = &named.group;
        let points = (g.degree() as u64).checked_pow(m as u32);
        if !g.is_transitive() || points.is_none_or(|p| p > max_points) {
            continue;
        }
        match lemma_rglr_brute_force(g, m, bounds) {
            Ok(r) => out.records.push(RglrRecord {
                group: named.name.clone(),
                degree: g.degree(),
                hypothesis: r.hypothesis.holds,
                hypothesis_core_free: r.hypothesis.holds_core_free,
                hypothesis_all_transitive: r.hypothesis.holds_all_transitive,
                regular: r.regular.as_ref().map(|h| h.order().clone()),
                consistent: r.consistent(),
            }),
            Err(e @ (Error::BoundExceeded { .. } | Error::NodeLimit { .. })) => {
                out.skipped.push((named.name.clone(), e.to_string()))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Regular-subgroup search against subgroup enumeration.
#[derive(Clone, Debug)]
pub struct RegularAgreement {
    pub group: String,
    pub search: Option<BigUint>,
    pub enumeration: bool,
}

/// For every bundled group of order at most `max_order`: does the search
/// find a regular subgroup exactly when some subgroup class is regular?
pub fn regular_search_agreement(max_order: u64, bounds: &Bounds) -> dgsym::Result<Vec<RegularAgreement>> {
    let mut out = Vec::new();
    for named in distinct_groups()? {
        if !order_at_most(&named, max_order) {
            continue;
        }
        let g = &named.group;
        let search = g.find_regular_subgroup(bounds)?;
        if let Some(r) = &search {
            if !r.group().is_regular() || !r.group().is_subgroup_of(g) {
                return Err(Error::Precondition(format!("{}: witness is not regular", named.name)));
            }
        }
        let enumeration = g
            .subgroups_up_to_conjugacy(bounds)?
            .iter()
            .any(|h| h.group().is_regular());
        out.push(RegularAgreement {
            group: named.name,
            search: search.map(|r| r.order().clone()),
            enumeration,
        });
    }
    Ok(out)
}
