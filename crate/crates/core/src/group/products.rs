use super::{Permutation, PermutationGroup};
use crate::config::Bounds;
use crate::error::{Error, Result};

/// Row-major index of a coordinate tuple over an alphabet of size `n`; the
/// first coordinate is the most significant digit.
pub fn tuple_index(coords: &[usize], n: usize) -> usize {
    coords.iter().fold(0, |acc, &c| acc * n + c)
}

/// Inverse of [`tuple_index`].
pub fn tuple_coords(mut index: usize, n: usize, m: usize) -> Vec<usize> {
    let mut out = vec![0; m];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

pub(crate) fn checked_power(n: usize, m: usize, limit: u64, what: &'static str) -> Result<usize> {
    let mut total: u64 = 1;
    for _ in 0..m {
        total = total.saturating_mul(n as u64);
        if total > limit {
            return Err(Error::bound(what, limit, format!("{n}^{m}")));
        }
    }
    Ok(total as usize)
}

impl PermutationGroup {
    /// `G × H` acting on the disjoint union, `G` on the first `deg G` points.
    pub fn direct_product(&self, other: &PermutationGroup) -> PermutationGroup {
        let (a, b) = (self.degree(), other.degree());
        let mut gens = Vec::new();
        for g in self.generators() {
            let mut img: Vec<u32> = g.images().to_vec();
            img.extend((a..a + b).map(|p| p as u32));
            gens.push(Permutation::from_images_unchecked(img));
        }
        for h in other.generators() {
            let mut img: Vec<u32> = (0..a as u32).collect();
            img.extend(h.images().iter().map(|&p| p + a as u32));
            gens.push(Permutation::from_images_unchecked(img));
        }
        PermutationGroup::from_gens(a + b, gens)
    }

    /// `G^k` on `k` disjoint copies of the domain.
    pub fn direct_power(&self, k: usize) -> PermutationGroup {
        assert!(k >= 1, "direct power needs k >= 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.direct_product(self);
        }
        acc
    }

    /// The element `(t_1, …, t_k)` of `G^k` on `k` disjoint copies.
    pub fn tuple_element(&self, parts: &[Permutation]) -> Permutation {
        let n = self.degree();
        let mut img = Vec::with_capacity(n * parts.len());
        for (i, t) in parts.iter().enumerate() {
            img.extend(t.images().iter().map(|&p| p + (i * n) as u32));
        }
        Permutation::from_images_unchecked(img)
    }

    /// The diagonal `{(t, …, t)}` inside `G^k`.
    pub fn diagonal_subgroup(&self, k: usize) -> PermutationGroup {
        let gens = self
            .generators()
            .iter()
            .map(|g| self.tuple_element(&vec![g.clone(); k]))
            .collect();
        PermutationGroup::from_gens(self.degree() * k, gens)
    }

    /// `G ≀ Sym(m)` in product action on `V^m`, tuples indexed row-major.
    ///
    /// Generators: each generator of `G` acting in each coordinate, plus the
    /// adjacent coordinate transpositions.
    pub fn wreath_product_action(&self, m: usize, bounds: &Bounds) -> Result<PermutationGroup> {
        if m == 0 {
            return Err(Error::Zero);
        }
        if m == 1 {
            return Ok(self.clone());
        }
        let n = self.degree();
        let total = checked_power(n, m, bounds.digraph_vertices, "product-action domain")?;
        let mut gens = Vec::new();
        for i in 0..m {
            for g in self.generators() {
                gens.push(coordinate_action(total, n, m, |c| c[i] = g.image(c[i])));
            }
        }
        for i in 0..m - 1 {
            gens.push(coordinate_action(total, n, m, |c| c.swap(i, i + 1)));
        }
        Ok(PermutationGroup::from_gens(total, gens))
    }
}

fn coordinate_action(total: usize, n: usize, m: usize, f: impl Fn(&mut Vec<usize>)) -> Permutation {
    let img = (0..total)
        .map(|x| {
            let mut c = tuple_coords(x, n, m);
            f(&mut c);
            tuple_index(&c, n) as u32
        })
        .collect();
    Permutation::from_images_unchecked(img)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;

    use super::*;

    fn g(deg: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::from_cycles(deg, gens).unwrap()
    }

    #[test]
    fn wreath_orders() {
        let b = Bounds::default();
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        let w = s3.wreath_product_action(2, &b).unwrap();
        assert_eq!(w.degree(), 9);
        assert_eq!(*w.order(), BigUint::from(72u32));
        let z2 = g(2, &["(1 2)"]);
        let w = z2.wreath_product_action(2, &b).unwrap();
        assert_eq!((w.degree(), w.order().clone()), (4, BigUint::from(8u32)));
        let same = s3.wreath_product_action(1, &b).unwrap();
        assert!(same.same_group(&s3));
    }

    #[test]
    fn wreath_bound_is_enforced() {
        let b = Bounds {
            digraph_vertices: 100,
            ..Bounds::default()
        };
        let s5 = g(5, &["(1 2)", "(1 2 3 4 5)"]);
        assert!(matches!(
            s5.wreath_product_action(3, &b),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn direct_products() {
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        let a5 = g(5, &["(1 2 3)", "(3 4 5)"]);
        let p = s3.direct_product(&a5);
        assert_eq!(p.degree(), 8);
        assert_eq!(*p.order(), BigUint::from(360u32));
        let d = a5.diagonal_subgroup(3);
        assert_eq!(*d.order(), BigUint::from(60u32));
        assert!(d.is_subgroup_of(&a5.direct_power(3)));
    }

    #[test]
    fn tuple_encoding_round_trip() {
        for x in 0..125 {
            assert_eq!(tuple_index(&tuple_coords(x, 5, 3), 5), x);
        }
        assert_eq!(tuple_index(&[1, 2], 5), 7);
    }
}
