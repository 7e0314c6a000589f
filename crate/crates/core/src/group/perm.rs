use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection on the points `0..degree`.
///
/// Products compose left to right: `a.then(&b)` maps `i` to `b(a(i))`, so
/// points are acted on from the right. Conjugation follows the same
/// convention, `x^g = g⁻¹ x g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::NotBijection);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Parses 1-based cycle notation such as `"(1 2 3)(4 5)"`.
    ///
    /// Points may be separated by spaces or commas; `"()"` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::Parse("empty string".into()));
        }
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(Error::Parse(format!("nested '(' in {text:?}")));
            }
            let mut cycle = Vec::new();
            for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?}")))?;
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if used[p - 1] {
                    return Err(Error::RepeatedPoint { point: p });
                }
                used[p - 1] = true;
                cycle.push(p - 1);
            }
            for (k, &a) in cycle.iter().enumerate() {
                images[a] = cycle[(k + 1) % cycle.len()] as u32;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ self g`
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[j as usize];
        }
        Permutation { images: out }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let mut base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Lengths of all cycles, including fixed points, in ascending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.image(p);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> BigUint {
        let mut lens = self.cycle_type();
        lens.dedup();
        lens.into_iter()
            .fold(BigUint::from(1u32), |acc, l| acc.lcm(&BigUint::from(l)))
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.image(point) == point
    }

    /// Smallest moved point, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 != j)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut c = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                c.push(p);
                p = self.image(p);
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_three_cycle() {
        let p = Permutation::parse("(1 2 3)", 3).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
    }

    #[test]
    fn parse_identity() {
        let p = Permutation::parse("()", 5).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 5);
    }

    #[test]
    fn parse_disjoint_transpositions() {
        let p = Permutation::parse("(1 2)(3 4)", 5).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2, 4]);
        assert!(p.fixes(4));
    }

    #[test]
    fn parse_accepts_commas() {
        let a = Permutation::parse("(1,2,3)(4,5)", 5).unwrap();
        let b = Permutation::parse("(1 2 3) (4 5)", 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Permutation::parse("(1 2 1)", 3),
            Err(Error::RepeatedPoint { point: 1 })
        );
        assert_eq!(
            Permutation::parse("(1 2)(2 3)", 3),
            Err(Error::RepeatedPoint { point: 2 })
        );
        assert_eq!(
            Permutation::parse("(1 4)", 3),
            Err(Error::PointOutOfRange { point: 4, degree: 3 })
        );
        assert!(matches!(Permutation::parse("(1 2", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("1 2", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("(a)", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("", 3), Err(Error::Parse(_))));
    }

    #[test]
    fn display_round_trip() {
        let p = Permutation::parse("(1 5 3)(2 4)", 6).unwrap();
        assert_eq!(p.to_string(), "(1 5 3)(2 4)");
        assert_eq!(Permutation::parse(&p.to_string(), 6).unwrap(), p);
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn products_and_conjugation() {
        let a = Permutation::parse("(1 2)", 3).unwrap();
        let b = Permutation::parse("(2 3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).image(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
        let c = a.conjugate_by(&b);
        assert_eq!(c, b.inverse().then(&a).then(&b));
        assert_eq!(c.to_string(), "(1 3)");
        let r = Permutation::parse("(1 2 3 4 5 6)", 6).unwrap();
        assert_eq!(r.order(), BigUint::from(6u32));
        assert_eq!(r.pow(6), Permutation::identity(6));
        assert_eq!(r.pow(-1), r.inverse());
        assert_eq!(r.pow(2).order(), BigUint::from(3u32));
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert_eq!(Permutation::from_images(vec![0, 0]), Err(Error::NotBijection));
        assert_eq!(Permutation::from_images(vec![0, 2]), Err(Error::NotBijection));
    }
}
