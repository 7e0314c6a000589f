use std::collections::{HashSet, VecDeque};

use dgsym::digraph::{power_coords, power_vertex};
use dgsym::{Bounds, Digraph, Error};
use num_bigint::BigUint;
use proptest::prelude::*;

/// A digraph on `2..=max_n` vertices: each pair gets no arc or one arc.
fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |choice| {
            let mut arcs = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    match choice[k] {
                        0 => arcs.push((u, v)),
                        1 => arcs.push((v, u)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            Digraph::new(n, &arcs).unwrap()
        })
    })
}

/// s-arcs by depth-first extension, no back-tracking step `v_{i+2} = v_i`.
fn walk_count(d: &Digraph, s: usize) -> usize {
    fn extend(d: &Digraph, walk: &mut Vec<usize>, s: usize) -> usize {
        if walk.len() == s + 1 {
            return 1;
        }
        let last = *walk.last().unwrap();
        let mut total = 0;
        for &w in d.out_neighbors(last) {
            let w = w as usize;
            if walk.len() >= 2 && walk[walk.len() - 2] == w {
                continue;
            }
            walk.push(w);
            total += extend(d, walk, s);
            walk.pop();
        }
        total
    }
    (0..d.vertex_count()).map(|v| extend(d, &mut vec![v], s)).sum()
}

fn reachable(d: &Digraph, reverse: bool) -> usize {
    let n = d.vertex_count();
    let arcs: Vec<(usize, usize)> = d.arcs().map(|(u, v)| if reverse { (v, u) } else { (u, v) }).collect();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &(u, v) in &arcs {
            if u == x && !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen.iter().filter(|&&b| b).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn s_arc_counts_match_enumeration(d in digraph_strategy(7), s in 0usize..5) {
        let b = Bounds::default();
        let listed = d.enumerate_s_arcs(s, &b).unwrap();
        prop_assert_eq!(d.count_s_arcs(s), BigUint::from(listed.len()));
        prop_assert_eq!(listed.len(), walk_count(&d, s));
        let distinct: HashSet<_> = listed.iter().collect();
        prop_assert_eq!(distinct.len(), listed.len());
        for arc in &listed {
            prop_assert_eq!(arc.s(), s);
            prop_assert!(d.is_s_arc(arc.vertices()));
        }
    }

    #[test]
    fn edge_list_round_trips(d in digraph_strategy(9)) {
        let text = d.to_edge_list();
        prop_assert_eq!(Digraph::parse_edge_list(&text).unwrap(), d.clone());
        let dot = d.to_dot("x");
        prop_assert_eq!(dot.matches("->").count(), d.arc_count());
    }

    #[test]
    fn strong_connectivity_matches_search(d in digraph_strategy(8)) {
        let n = d.vertex_count();
        let strong = reachable(&d, false) == n && reachable(&d, true) == n;
        prop_assert_eq!(d.is_strongly_connected(), strong);
        if strong {
            prop_assert!(d.is_weakly_connected());
        }
    }

    #[test]
    fn product_counts_multiply(x in digraph_strategy(5), y in digraph_strategy(5), s in 0usize..5) {
        let b = Bounds::default();
        let p = x.direct_product(&y, &b).unwrap();
        prop_assert_eq!(p.vertex_count(), x.vertex_count() * y.vertex_count());
        prop_assert_eq!(p.arc_count(), x.arc_count() * y.arc_count());
        prop_assert_eq!(p.count_s_arcs(s), x.count_s_arcs(s) * y.count_s_arcs(s));
        let m = y.vertex_count();
        for (u, v) in p.arcs() {
            prop_assert!(x.has_arc(u / m, v / m) && y.has_arc(u % m, v % m));
        }
    }

    #[test]
    fn power_coordinates(d in digraph_strategy(4), m in 1usize..4) {
        let b = Bounds::default();
        let n = d.vertex_count();
        let p = d.power(m, &b).unwrap();
        prop_assert_eq!(p.vertex_count(), n.pow(m as u32));
        prop_assert_eq!(p.count_s_arcs(2), d.count_s_arcs(2).pow(m as u32));
        for (u, v) in p.arcs() {
            let (cu, cv) = (power_coords(u, n, m), power_coords(v, n, m));
            prop_assert_eq!(power_vertex(&cu, n), u);
            for i in 0..m {
                prop_assert!(d.has_arc(cu[i], cv[i]));
            }
        }
    }
}

#[test]
fn rejects_loops_and_digons() {
    assert!(matches!(Digraph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    assert!(Digraph::new(3, &[(0, 1), (1, 0)]).is_err());
    assert!(Digraph::new(3, &[(0, 3)]).is_err());
    assert!(Digraph::new(0, &[]).is_err());
    assert!(Digraph::parse_edge_list("3 2\n0 1\n").is_err());
    assert!(Digraph::parse_edge_list("3 1\n0 x\n").is_err());
    let d = Digraph::new(3, &[(0, 1), (0, 1)]).unwrap();
    assert_eq!(d.arc_count(), 1);
}

#[test]
fn products_of_cycles() {
    let b = Bounds::default();
    for (a, c) in [(3, 4), (3, 5), (4, 6), (5, 5), (3, 7), (6, 9)] {
        let p = Digraph::directed_cycle(a)
            .unwrap()
            .direct_product(&Digraph::directed_cycle(c).unwrap(), &b)
            .unwrap();
        let coprime = num_integer::gcd(a, c) == 1;
        assert_eq!(p.is_directed_cycle(), coprime, "C{a} × C{c}");
        assert_eq!(p.valency(), Some(1));
        assert_eq!(p.count_s_arcs(3), BigUint::from(a * c));
    }
    assert!(Digraph::directed_cycle(2).is_err());
}

#[test]
fn bounds_are_enforced() {
    let b = Bounds {
        digraph_vertices: 10,
        ..Bounds::default()
    };
    let c = Digraph::directed_cycle(4).unwrap();
    assert!(matches!(c.direct_product(&c, &b), Err(Error::BoundExceeded { .. })));
    let b = Bounds {
        s_arcs: 5,
        ..Bounds::default()
    };
    assert!(c.enumerate_s_arcs(1, &b).is_ok());
    assert!(matches!(
        Digraph::directed_cycle(6).unwrap().enumerate_s_arcs(2, &b),
        Err(Error::BoundExceeded { .. })
    ));
}
