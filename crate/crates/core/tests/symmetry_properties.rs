use std::collections::HashSet;

use dgsym::catalog::{bundled_groups, find, primitive_groups};
use dgsym::constructions::cayley_digraph;
use dgsym::symmetry::{lemma_val_check, orbital_digraphs, quotient_perfect_core, LemValOutcome};
use dgsym::{Bounds, Digraph, DigraphAction, Permutation, PermutationGroup, Transitivity};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn distinct(max_order: u64) -> Vec<(String, PermutationGroup)> {
    let mut seen = HashSet::new();
    bundled_groups()
        .unwrap()
        .into_iter()
        .filter(|g| g.group.order().to_u64().unwrap() <= max_order && seen.insert(g.name.clone()))
        .map(|g| (g.name, g.group))
        .collect()
}

/// Number of s-arcs in the orbit of the first one, by naive closure.
fn orbit_oracle(d: &Digraph, gens: &[Permutation], s: usize) -> Option<(usize, usize)> {
    let arcs = d.enumerate_s_arcs(s, &Bounds::default()).unwrap();
    let start = arcs.first()?.vertices().to_vec();
    let mut seen = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(a) = stack.pop() {
        for g in gens {
            let img: Vec<usize> = a.iter().map(|&v| g.image(v)).collect();
            if seen.insert(img.clone()) {
                stack.push(img);
            }
        }
    }
    Some((seen.len(), arcs.len()))
}

fn check_transitivity(action: &DigraphAction, max_s: usize) {
    let b = Bounds::default();
    let mut previous = Transitivity::Yes;
    for s in 0..=max_s {
        let t = action.is_s_arc_transitive(s, &b).unwrap();
        let expected = match orbit_oracle(action.digraph(), action.group().generators(), s) {
            None => Transitivity::Vacuous,
            Some((orbit, total)) if orbit == total => Transitivity::Yes,
            Some(_) => Transitivity::No,
        };
        assert_eq!(t, expected, "s = {s}");
        if t == Transitivity::Yes && s > 0 {
            assert_eq!(previous, Transitivity::Yes, "s-arc-transitive but not (s-1)-arc-transitive, s = {s}");
        }
        previous = t;
    }
}

#[test]
fn s_arc_transitivity_of_orbital_digraphs() {
    let b = Bounds::default();
    let mut checked = 0;
    for named in primitive_groups().unwrap() {
        if named.group.degree() > 10 {
            continue;
        }
        for action in orbital_digraphs(&named.group, &b).unwrap() {
            let d = action.digraph();
            let (orbit, total) = orbit_oracle(d, action.group().generators(), 1).unwrap();
            assert_eq!(orbit, total, "{}: orbital digraph with two arc orbits", named.name);
            for (u, v) in d.arcs() {
                assert!(!d.has_arc(v, u));
            }
            check_transitivity(&action, 3);
            checked += 1;
        }
    }
    assert!(checked > 10);
}

#[test]
fn s_arc_transitivity_of_cayley_digraphs() {
    let b = Bounds::default();
    for (name, r) in distinct(24) {
        let mut s: Vec<Permutation> = Vec::new();
        for x in r.elements() {
            if s.len() < 3 && !x.pow(2).is_identity() && !s.contains(&x.inverse()) {
                s.push(x);
            }
        }
        if s.is_empty() {
            continue;
        }
        let action = cayley_digraph(&r, &s, &b).unwrap();
        check_transitivity(&action, 2);
        // a regular group has one orbit on arcs only at valency 1
        let one = action.is_s_arc_transitive(1, &b).unwrap() == Transitivity::Yes;
        assert_eq!(one, s.len() == 1, "{name}");
    }
}

#[test]
fn valency_lemma_on_cycles() {
    let b = Bounds::default();
    for n in [3usize, 5, 7, 11] {
        let cycle = format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" "));
        let g = PermutationGroup::from_cycles(n, &[&cycle]).unwrap();
        let action = DigraphAction::bind(Digraph::directed_cycle(n).unwrap(), g).unwrap();
        assert_eq!(lemma_val_check(&action, &b).unwrap(), LemValOutcome::PrimeCycle(n));
    }
    let c6 = PermutationGroup::from_cycles(6, &["(1 2 3 4 5 6)"]).unwrap();
    let action = DigraphAction::bind(Digraph::directed_cycle(6).unwrap(), c6).unwrap();
    assert!(matches!(lemma_val_check(&action, &b).unwrap(), LemValOutcome::NotApplicable(_)));
}

/// `(|Q|, Q simple, |Rad(Y)|)` for `Q = (Y/Rad(Y))^(∞)`, with `Y/Rad(Y)`
/// realized by the action of `Y` on the cosets of its radical.
fn quotient_oracle(y: &PermutationGroup, b: &Bounds) -> (BigUint, bool, BigUint) {
    let rad = y
        .normal_subgroups(b)
        .unwrap()
        .into_iter()
        .filter(|n| n.group().is_solvable())
        .max_by(|a, c| a.order().cmp(c.order()))
        .unwrap();
    let quotient = y.action_on_cosets(&rad, b).unwrap();
    let image = quotient.image();
    assert_eq!(image.order() * rad.order(), *y.order());
    let core = image.perfect_core();
    let simple = core.order() > &BigUint::from(1u32) && core.group().is_nonabelian_simple(b).unwrap();
    (core.order().clone(), simple, rad.order().clone())
}

#[test]
fn radical_quotients_match_coset_actions() {
    let b = Bounds::default();
    let mut checked = 0;
    for (name, g) in distinct(500) {
        let mut subjects = vec![g.clone()];
        if *g.order() <= BigUint::from(120u32) {
            subjects.extend(
                g.subgroups_up_to_conjugacy(&b)
                    .unwrap()
                    .into_iter()
                    .filter(|h| h.group().is_transitive())
                    .map(|h| h.into_group()),
            );
        }
        for y in subjects {
            assert_eq!(quotient_perfect_core(&y, &b).unwrap(), quotient_oracle(&y, &b), "{name}, |Y| = {}", y.order());
            checked += 1;
        }
    }
    assert!(checked > 100, "{checked}");
}

/// Whether some subset of the group's elements forms a regular subgroup,
/// from the full list of subgroup classes.
fn has_regular_subgroup(g: &PermutationGroup) -> bool {
    g.subgroups_up_to_conjugacy(&Bounds::default())
        .unwrap()
        .iter()
        .any(|h| h.group().is_regular())
}

#[test]
fn known_regular_subgroups() {
    let b = Bounds::default();
    let a5 = find("A5").unwrap().group;
    let c5 = a5.find_regular_subgroup(&b).unwrap().unwrap();
    assert_eq!(*c5.order(), BigUint::from(5u32));
    let s4 = find("S4").unwrap().group;
    let r = s4.find_regular_subgroup(&b).unwrap().unwrap();
    assert!(r.group().is_regular());
    for name in ["PSL(2,5)", "A5 on pairs", "PSL(2,7)", "A6"] {
        let g = find(name).unwrap().group;
        assert_eq!(g.find_regular_subgroup(&b).unwrap().is_some(), has_regular_subgroup(&g), "{name}");
    }
    let tight = Bounds {
        regular_nodes: 1,
        ..Bounds::default()
    };
    let psl = find("PSL(2,9)").unwrap().group;
    assert!(psl.find_regular_subgroup(&b).unwrap().is_none());
    assert!(matches!(psl.find_regular_subgroup(&tight), Err(dgsym::Error::NodeLimit { .. })));
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn regular_search_agrees_with_enumeration(
        gens in (3usize..=8).prop_flat_map(|n| prop::collection::vec(perm_strategy(n), 1..=2))
    ) {
        let g = PermutationGroup::new(gens).unwrap();
        prop_assume!(g.is_transitive() && *g.order() <= BigUint::from(2000u32));
        let b = Bounds::default();
        let found = g.find_regular_subgroup(&b).unwrap();
        if let Some(r) = &found {
            prop_assert!(r.group().is_regular() && r.group().is_subgroup_of(&g));
        }
        prop_assert_eq!(found.is_some(), has_regular_subgroup(&g));
    }
}
