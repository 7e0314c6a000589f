//! Conjugacy classes of subgroups against a brute-force lattice: every
//! subgroup is a join of cyclic subgroups, so closing the cyclic subgroups
//! under pairwise joins yields all of them.

use std::collections::{BTreeSet, HashMap, HashSet};

use dgsym::catalog::bundled_groups;
use dgsym::group::{Permutation, PermutationGroup};
use dgsym::Bounds;
use num_traits::ToPrimitive;

type Set = Vec<u64>;

struct Oracle {
    elements: Vec<Permutation>,
    mul: Vec<u32>,
    conj: Vec<Vec<u32>>,
    identity: u32,
}

fn with(set: &Set, i: u32) -> bool {
    set[i as usize / 64] >> (i % 64) & 1 == 1
}

fn members(set: &Set) -> impl Iterator<Item = u32> + '_ {
    (0..set.len() as u32 * 64).filter(move |&i| with(set, i))
}

impl Oracle {
    fn new(g: &PermutationGroup) -> Self {
        let elements: Vec<Permutation> = g.elements().collect();
        let index: HashMap<&Permutation, u32> =
            elements.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let mul = elements
            .iter()
            .flat_map(|a| elements.iter().map(|b| index[&a.then(b)]).collect::<Vec<_>>())
            .collect();
        let conj = elements
            .iter()
            .map(|x| elements.iter().map(|a| index[&a.conjugate_by(x)]).collect())
            .collect();
        let identity = index[&Permutation::identity(g.degree())];
        Oracle {
            elements,
            mul,
            conj,
            identity,
        }
    }

    fn empty(&self) -> Set {
        vec![0; self.elements.len().div_ceil(64)]
    }

    fn closure(&self, gens: &[u32]) -> Set {
        let n = self.elements.len();
        let mut set = self.empty();
        set[self.identity as usize / 64] |= 1 << (self.identity % 64);
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.mul[x as usize * n + s as usize];
                if !with(&set, y) {
                    set[y as usize / 64] |= 1 << (y % 64);
                    queue.push(y);
                }
            }
        }
        set
    }

    fn all_subgroups(&self) -> HashSet<Set> {
        let mut cyclic: HashMap<Set, u32> = HashMap::new();
        for i in 0..self.elements.len() as u32 {
            cyclic.entry(self.closure(&[i])).or_insert(i);
        }
        let cyclic: Vec<(Set, u32)> = cyclic.into_iter().collect();
        let mut all: HashSet<Set> = cyclic.iter().map(|(s, _)| s.clone()).collect();
        let mut frontier: Vec<(Set, Vec<u32>)> = cyclic.iter().map(|(s, g)| (s.clone(), vec![*g])).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (s, gens) in &frontier {
                for (_, c) in &cyclic {
                    if with(s, *c) {
                        continue;
                    }
                    let mut g2 = gens.clone();
                    g2.push(*c);
                    let joined = self.closure(&g2);
                    if all.insert(joined.clone()) {
                        next.push((joined, g2));
                    }
                }
            }
            frontier = next;
        }
        all
    }

    fn conjugate(&self, set: &Set, x: usize) -> Set {
        let mut out = self.empty();
        for i in members(set) {
            let j = self.conj[x][i as usize];
            out[j as usize / 64] |= 1 << (j % 64);
        }
        out
    }

    fn class_of(&self, set: &Set) -> BTreeSet<Set> {
        (0..self.elements.len()).map(|x| self.conjugate(set, x)).collect()
    }

    /// Conjugacy classes of subgroups: least member ↦ class size.
    fn classes(&self) -> HashMap<Set, usize> {
        let mut done: HashSet<Set> = HashSet::new();
        let mut out = HashMap::new();
        for s in self.all_subgroups() {
            if done.contains(&s) {
                continue;
            }
            let class = self.class_of(&s);
            done.extend(class.iter().cloned());
            out.insert(class.iter().next().unwrap().clone(), class.len());
        }
        out
    }

    fn key_of(&self, h: &PermutationGroup) -> Set {
        let gens: Vec<u32> = h
            .generators()
            .iter()
            .map(|g| self.elements.iter().position(|e| e == g).unwrap() as u32)
            .collect();
        let set = self.closure(&gens);
        self.class_of(&set).into_iter().next().unwrap()
    }
}

#[test]
fn cyclic_extension_is_complete_up_to_order_400() {
    let b = Bounds::default();
    let mut checked = 0;
    for named in bundled_groups().unwrap() {
        let g = &named.group;
        if g.order().to_u64().unwrap() > 400 {
            continue;
        }
        let oracle = Oracle::new(g);
        let expected = oracle.classes();
        let classes = g.subgroup_classes(&b).unwrap();
        let mut got = HashMap::new();
        for c in &classes {
            let key = oracle.key_of(c.representative.group());
            assert!(
                got.insert(key, c.class_size).is_none(),
                "{}: two representatives of one class",
                named.name
            );
            let core = c
                .representative
                .group()
                .elements()
                .filter(|x| {
                    oracle
                        .elements
                        .iter()
                        .all(|y| c.representative.group().contains(&x.conjugate_by(y)).unwrap())
                })
                .count();
            assert_eq!(c.core_free, core == 1, "{}: core flag", named.name);
        }
        assert_eq!(got, expected, "{}: subgroup classes differ", named.name);
        checked += 1;
    }
    assert!(checked >= 40, "only {checked} groups checked");
}

#[test]
fn known_class_counts() {
    let b = Bounds::default();
    let counts = [("S4", 11), ("C6", 4), ("A5", 9), ("S5", 19), ("A4", 5), ("D8", 8), ("Q8", 6)];
    for (name, count) in counts {
        let g = dgsym::catalog::find(name).unwrap().group;
        assert_eq!(g.subgroups_up_to_conjugacy(&b).unwrap().len(), count, "{name}");
    }
}
